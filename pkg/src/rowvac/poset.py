"""Antichain dynamics on finite ranked posets.

Elements of a poset are the integers ``0..size-1``.  Antichains are passed
around as sorted tuples of element indices; internally every subset is an
``int`` bitmask, which keeps the exhaustive sweeps over all antichains cheap.

The operators implemented here are the antichain toggles, the rank toggles,
rowmotion (and its inverse) and rowvacuation.  Nothing in this module knows
about root systems.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Antichain = tuple  # sorted tuple of element indices

OPERATORS = ("row", "rvac", "row_inv_rvac")


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, increasing."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


class RankedPoset:
    """A finite ranked poset on ``0..size-1``.

    Build it from its cover relations; the order relation is the transitive
    closure.  Raises ``ValueError`` when the relation has a cycle or admits
    no rank function (minimal elements at rank 0, covers raise rank by one).
    """

    def __init__(self, size: int, covers: Iterable[tuple[int, int]]):
        if size < 0:
            raise ValueError("poset size must be nonnegative")
        self.size = size
        cov = sorted(set((int(x), int(y)) for x, y in covers))
        for x, y in cov:
            if not (0 <= x < size and 0 <= y < size) or x == y:
                raise ValueError(f"bad cover pair {(x, y)}")
        lower = [[] for _ in range(size)]
        for x, y in cov:
            lower[y].append(x)

        # down[y] = mask of everything <= y, by DFS with cycle detection
        down = [None] * size
        state = [0] * size
        for root in range(size):
            if down[root] is not None:
                continue
            stack = [(root, iter(lower[root]))]
            state[root] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    m = 1 << node
                    for z in lower[node]:
                        m |= down[z]
                    down[node] = m
                    state[node] = 2
                    stack.pop()
                elif state[nxt] == 1:
                    raise ValueError("cover relation contains a cycle")
                elif state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(lower[nxt])))
        self.down: list[int] = down
        up = [0] * size
        for y in range(size):
            for x in bits(down[y]):
                up[x] |= 1 << y
        self.up: list[int] = up

        # keep only genuine covers
        self.covers = [
            (x, y) for x, y in cov
            if not any(z != x and (down[z] >> x) & 1 for z in lower[y])
        ]
        rank = [None] * size
        for y in sorted(range(size), key=lambda e: bin(down[e]).count("1")):
            below = [x for x, yy in self.covers if yy == y]
            if not below:
                rank[y] = 0
            else:
                rs = {rank[x] for x in below}
                if len(rs) != 1:
                    raise ValueError(f"poset is not ranked at element {y}")
                rank[y] = rs.pop() + 1
        self.rank: list[int] = rank
        self.max_rank = max(rank) if size else -1
        self.rank_masks = [0] * (self.max_rank + 1)
        for e, r in enumerate(rank):
            self.rank_masks[r] |= 1 << e
        self.full = (1 << size) - 1
        self.min_mask = self.rank_masks[0] if size else 0
        # elements comparable to e, other than e itself
        self.comparable = [(down[e] | up[e]) & ~(1 << e) for e in range(size)]
        self._strict_down = [down[e] & ~(1 << e) for e in range(size)]
        self._strict_up = [up[e] & ~(1 << e) for e in range(size)]

    @classmethod
    def from_relation(cls, size: int, leq) -> "RankedPoset":
        """Build from a predicate ``leq(x, y)`` that is already a partial order."""
        lt = [[x != y and leq(x, y) for y in range(size)] for x in range(size)]
        covers = [
            (x, y) for x in range(size) for y in range(size)
            if lt[x][y] and not any(lt[x][z] and lt[z][y] for z in range(size))
        ]
        return cls(size, covers)

    def __repr__(self):
        return f"RankedPoset(size={self.size}, max_rank={self.max_rank})"

    def leq(self, x: int, y: int) -> bool:
        return bool((self.down[y] >> x) & 1)

    def rank_of(self, x: int) -> int:
        return self.rank[x]

    def level(self, i: int) -> tuple[int, ...]:
        """The elements of rank ``i`` (empty outside ``0..max_rank``)."""
        if 0 <= i <= self.max_rank:
            return bits(self.rank_masks[i])
        return ()

    @property
    def minimal(self) -> tuple[int, ...]:
        return self.level(0)

    @property
    def maximal(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.size) if self._strict_up[e] == 0)

    def check(self, e: int) -> None:
        if not (isinstance(e, int) and 0 <= e < self.size):
            raise ValueError(f"element {e!r} out of range for poset of size {self.size}")

    def mask_of(self, A: Iterable[int]) -> int:
        m = 0
        for e in A:
            self.check(e)
            m |= 1 << e
        return m

    def is_antichain_mask(self, m: int) -> bool:
        rest = m
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            if self.comparable[e] & m:
                return False
            rest ^= low
        return True

    def is_antichain(self, A: Iterable[int]) -> bool:
        return self.is_antichain_mask(self.mask_of(A))

    def antichain(self, A: Iterable[int]) -> Antichain:
        """Canonicalise ``A``; raises ``ValueError`` if it is not an antichain."""
        m = self.mask_of(A)
        if not self.is_antichain_mask(m):
            raise ValueError(f"{sorted(A)} is not an antichain")
        return bits(m)

    # -- mask level operators -------------------------------------------------

    def toggle_mask(self, p: int, m: int) -> int:
        if (m >> p) & 1:
            return m & ~(1 << p)
        if self.comparable[p] & m:
            return m
        return m | (1 << p)

    def rank_toggle_mask(self, i: int, m: int) -> int:
        # same-rank elements are pairwise incomparable, so the toggles commute
        level = self.rank_masks[i]
        keep = m & ~level
        added = 0
        rest = level & ~m
        while rest:
            low = rest & -rest
            if not (self.comparable[low.bit_length() - 1] & keep):
                added |= low
            rest ^= low
        return keep | added

    def ideal_mask(self, m: int) -> int:
        out = 0
        while m:
            low = m & -m
            out |= self.down[low.bit_length() - 1]
            m ^= low
        return out

    def filter_mask(self, m: int) -> int:
        out = 0
        while m:
            low = m & -m
            out |= self.up[low.bit_length() - 1]
            m ^= low
        return out

    def minimal_of(self, m: int) -> int:
        out = 0
        rest = m
        while rest:
            low = rest & -rest
            if not (self._strict_down[low.bit_length() - 1] & m):
                out |= low
            rest ^= low
        return out

    def maximal_of(self, m: int) -> int:
        out = 0
        rest = m
        while rest:
            low = rest & -rest
            if not (self._strict_up[low.bit_length() - 1] & m):
                out |= low
            rest ^= low
        return out

    def row_mask(self, m: int) -> int:
        return self.minimal_of(self.full & ~self.ideal_mask(m))

    def row_inv_mask(self, m: int) -> int:
        return self.maximal_of(self.full & ~self.filter_mask(m))

    def rvac_mask(self, m: int) -> int:
        R = self.max_rank
        for k in range(R + 1):
            for i in range(k, R + 1):
                m = self.rank_toggle_mask(i, m)
        return m

    def apply_mask(self, op: str, m: int) -> int:
        if op == "row":
            return self.row_mask(m)
        if op == "row_inv":
            return self.row_inv_mask(m)
        if op == "rvac":
            return self.rvac_mask(m)
        if op == "row_inv_rvac":
            return self.row_inv_mask(self.rvac_mask(m))
        if op == "row_rvac":
            return self.row_mask(self.rvac_mask(m))
        raise ValueError(f"unknown operator {op!r}")

    def support_mask(self, m: int) -> int:
        return self.ideal_mask(m) & self.min_mask

    # -- enumeration ------------------------------------------------------------

    def antichain_masks(self) -> list[int]:
        """All antichains as masks, depth-first over elements in index order.

        The empty antichain comes first and every antichain precedes its
        extensions by larger indices.
        """
        out = []
        n = self.size
        comparable = self.comparable

        def rec(start: int, m: int, blocked: int) -> None:
            out.append(m)
            for e in range(start, n):
                if not (blocked >> e) & 1:
                    rec(e + 1, m | (1 << e), blocked | comparable[e])

        rec(0, 0, 0)
        return out

    def antichains(self) -> list[Antichain]:
        return [bits(m) for m in self.antichain_masks()]

    def subposet(self, mask: int) -> tuple["RankedPoset", tuple[int, ...]]:
        """Induced subposet on ``mask`` plus the embedding (new index -> old)."""
        emb = bits(mask)
        pos = {old: new for new, old in enumerate(emb)}
        covers = []
        for x, y in self.covers:
            if x in pos and y in pos:
                covers.append((pos[x], pos[y]))
        # covers of the subposet may be non-covers of P when mask is not convex;
        # recomputing from the restricted relation keeps this general
        sub = RankedPoset.from_relation(len(emb), lambda a, b: self.leq(emb[a], emb[b])) \
            if not _is_down_closed(self, mask) else RankedPoset(len(emb), covers)
        return sub, emb

    def is_linear_extension(self, ext: Sequence[int]) -> bool:
        if sorted(ext) != list(range(self.size)):
            return False
        seen = 0
        for e in ext:
            if self._strict_down[e] & ~seen:
                return False
            seen |= 1 << e
        return True

    def linear_extension(self) -> list[int]:
        return sorted(range(self.size), key=lambda e: (self.rank[e], e))

    def random_linear_extension(self, rng: random.Random) -> list[int]:
        placed = 0
        out = []
        avail = [e for e in range(self.size) if not self._strict_down[e]]
        while avail:
            e = avail.pop(rng.randrange(len(avail)))
            out.append(e)
            placed |= 1 << e
            for f in bits(self._strict_up[e]):
                if not (self._strict_down[f] & ~placed) and f not in avail:
                    avail.append(f)
        return out


def _is_down_closed(P: RankedPoset, mask: int) -> bool:
    return P.ideal_mask(mask) == mask


# -- tuple level API --------------------------------------------------------------


def _checked(P: RankedPoset, A: Iterable[int]) -> int:
    m = P.mask_of(A)
    if not P.is_antichain_mask(m):
        raise ValueError(f"{sorted(A)} is not an antichain")
    return m


def toggle(P: RankedPoset, p: int, A: Iterable[int]) -> Antichain:
    """Remove ``p`` from ``A`` if present, add it if that keeps an antichain."""
    P.check(p)
    return bits(P.toggle_mask(p, _checked(P, A)))


def rank_toggle(P: RankedPoset, i: int, A: Iterable[int]) -> Antichain:
    if not (isinstance(i, int) and 0 <= i <= P.max_rank):
        raise ValueError(f"rank {i!r} out of range 0..{P.max_rank}")
    return bits(P.rank_toggle_mask(i, _checked(P, A)))


def rowmotion(P: RankedPoset, A: Iterable[int]) -> Antichain:
    """Minimal elements of the complement of the order ideal generated by ``A``."""
    return bits(P.row_mask(_checked(P, A)))


def inverse_rowmotion(P: RankedPoset, A: Iterable[int]) -> Antichain:
    return bits(P.row_inv_mask(_checked(P, A)))


def rowmotion_via_toggles(P: RankedPoset, A: Iterable[int], ext: Sequence[int]) -> Antichain:
    """Apply the toggles along the linear extension ``ext``, first element first."""
    if not P.is_linear_extension(ext):
        raise ValueError("not a linear extension of the poset")
    m = _checked(P, A)
    for p in ext:
        m = P.toggle_mask(p, m)
    return bits(m)


def rowvacuation(P: RankedPoset, A: Iterable[int]) -> Antichain:
    """Rank toggles ``tau_k, ..., tau_R`` for ``k = 0, 1, ..., R`` in turn."""
    return bits(P.rvac_mask(_checked(P, A)))


def support(P: RankedPoset, A: Iterable[int]) -> tuple[int, ...]:
    """Minimal elements lying below some member of ``A``."""
    return bits(P.support_mask(_checked(P, A)))


def restrict_to_support(P: RankedPoset, X: Iterable[int]) -> tuple[RankedPoset, tuple[int, ...]]:
    """The subposet of elements lying above no minimal element outside ``X``.

    Returns the subposet and its embedding into ``P`` (new index -> old index).
    """
    xm = P.mask_of(X)
    if xm & ~P.min_mask:
        raise ValueError("X must consist of minimal elements")
    excluded = P.filter_mask(P.min_mask & ~xm)
    return P.subposet(P.full & ~excluded)


@dataclass(frozen=True)
class OrbitReport:
    orbit: tuple[Antichain, ...]
    operator_name: str
    average_cardinality: Fraction

    def __len__(self):
        return len(self.orbit)


def orbit(P: RankedPoset, A: Iterable[int], op: str = "row") -> OrbitReport:
    """Forward orbit of ``A`` under ``op`` (one of :data:`OPERATORS`)."""
    if op not in OPERATORS:
        raise ValueError(f"unknown operator {op!r}; expected one of {OPERATORS}")
    start = _checked(P, A)
    if not P.is_antichain_mask(start):
        raise ValueError("not an antichain")
    seen = {start}
    seq = [start]
    m = P.apply_mask(op, start)
    while m != start:
        if m in seen:  # pragma: no cover - impossible for a bijection
            raise RuntimeError("operator orbit does not close at its start")
        seen.add(m)
        seq.append(m)
        m = P.apply_mask(op, m)
    total = sum(bin(x).count("1") for x in seq)
    return OrbitReport(tuple(bits(x) for x in seq), op, Fraction(total, len(seq)))


def permutation_of(P: RankedPoset, op: str, masks: Sequence[int] | None = None) -> tuple[list[int], list[int]]:
    """``op`` tabulated on all antichains: returns (masks, images as indices)."""
    if masks is None:
        masks = P.antichain_masks()
    index = {m: k for k, m in enumerate(masks)}
    return list(masks), [index[P.apply_mask(op, m)] for m in masks]


def cycles_of(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = []
        k = s
        while not seen[k]:
            seen[k] = True
            cyc.append(k)
            k = perm[k]
        out.append(cyc)
    return out
