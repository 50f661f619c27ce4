"""Classical Weyl groups as (signed) permutation groups, and NC(W, c).

Elements are stored by their images of ``1..n``: ``w(i) = images[i-1]``, with
``w(-i) = -w(i)`` for the signed families.  Type ``A_r`` acts on ``[r+1]``.
Products compose right to left, ``(u * w)(i) = u(w(i))``.

Absolute length is the codimension of the fixed space.  For a signed
permutation the fixed space has one dimension per cycle of ``|w|`` whose sign
product is positive; in type A each cycle contributes one dimension of
``R^n`` and the sum-zero hyperplane loses one.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import factorial

import numpy as np

SIGNED = ("B", "C", "D")
DEFAULT_CAPACITY = 10**6


class CapacityError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class WeylElement:
    kind: str  # "A" or "S" (signed)
    images: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.images[i - 1]
        if self.kind == "A" or i == 0:
            raise ValueError(f"{i} is outside the domain")
        return -self.images[-i - 1]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.kind != other.kind or self.n != other.n:
            raise ValueError("elements of different groups")
        return WeylElement(self.kind, tuple(self(x) for x in other.images))

    def inverse(self) -> "WeylElement":
        out = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            if x > 0:
                out[x - 1] = i
            else:
                out[-x - 1] = -i
        return WeylElement(self.kind, tuple(out))

    @property
    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def domain(self) -> list[int]:
        pos = list(range(1, self.n + 1))
        return pos if self.kind == "A" else pos + [-i for i in pos]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles on the domain, each starting at its entry of least
        absolute value (positive first); cycles sorted the same way."""
        seen = set()
        out = []
        order = sorted(self.domain(), key=lambda x: (abs(x), x < 0))
        for s in order:
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            x = self(s)
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def fixed_space_dim(self) -> int:
        if self.kind == "A":
            return len(_abs_cycle_signs(self)) - 1
        return sum(1 for sign in _abs_cycle_signs(self) if sign > 0)

    def absolute_length(self) -> int:
        r = self.n - 1 if self.kind == "A" else self.n
        return r - self.fixed_space_dim()

    def matrix(self) -> np.ndarray:
        """Matrix on ``R^n`` sending ``e_i`` to ``sign * e_|w(i)|``."""
        m = np.zeros((self.n, self.n), dtype=int)
        for i, x in enumerate(self.images):
            m[abs(x) - 1, i] = 1 if x > 0 else -1
        return m

    def negatives(self) -> int:
        return sum(1 for x in self.images if x < 0)

    def __str__(self):
        return format_cycles(self)


def _abs_cycle_signs(w: WeylElement) -> list[int]:
    seen = [False] * w.n
    out = []
    for s in range(1, w.n + 1):
        if seen[s - 1]:
            continue
        sign = 1
        x = s
        while True:
            seen[x - 1] = True
            y = w(x)
            sign *= 1 if y > 0 else -1
            x = abs(y)
            if x == s:
                break
        out.append(sign)
    return out


def fixed_space_dim_numeric(w: WeylElement) -> int:
    """Fixed-space dimension by linear algebra, on the reflection representation."""
    m = w.matrix() - np.eye(w.n, dtype=int)
    if w.kind == "A":
        # restrict to the sum-zero hyperplane: basis e_i - e_{i+1}
        basis = np.zeros((w.n, w.n - 1), dtype=int)
        for i in range(w.n - 1):
            basis[i, i], basis[i + 1, i] = 1, -1
        return (w.n - 1) - int(np.linalg.matrix_rank(m @ basis)) if w.n > 1 else 0
    return w.n - int(np.linalg.matrix_rank(m))


def format_cycles(w: WeylElement, fixed_points: bool = False) -> str:
    """Cycle notation such as ``(1,10)(2,4,8)(3,9,7)``; ``e`` for the identity."""
    cyc = w.cycles()
    if fixed_points and w.kind == "A":
        moved = {x for c in cyc for x in c}
        cyc = sorted(cyc + [(i,) for i in range(1, w.n + 1) if i not in moved], key=lambda c: c[0])
    if not cyc:
        return "e"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int, signed: bool = False) -> WeylElement:
    """Inverse of :func:`format_cycles`.

    For signed permutations a cycle whose negative is not listed gets its
    negative added, so ``(2,4,-5)`` and ``(2,4,-5)(-2,-4,5)`` agree.
    Unicode minus signs are accepted.
    """
    s = text.replace("−", "-").replace(" ", "")
    if s in ("", "e", "()"):
        cycles = []
    else:
        if _CYCLE.sub("", s):
            raise ValueError(f"malformed cycle notation {text!r}")
        cycles = []
        for body in _CYCLE.findall(s):
            try:
                cycles.append([int(tok) for tok in body.split(",")])
            except ValueError:
                raise ValueError(f"malformed cycle ({body})") from None
    mapping = {}

    def put(a, b):
        if a in mapping and mapping[a] != b:
            raise ValueError(f"inconsistent image for {a}")
        mapping[a] = b

    for c in cycles:
        for x in c:
            if x == 0 or abs(x) > n or (x < 0 and not signed):
                raise ValueError(f"entry {x} out of range")
        if len(set(c)) != len(c):
            raise ValueError(f"repeated entry in cycle {tuple(c)}")
        for a, b in zip(c, c[1:] + c[:1]):
            put(a, b)
    if signed:
        for a, b in list(mapping.items()):
            put(-a, -b)
    images = tuple(mapping.get(i, i) for i in range(1, n + 1))
    w = WeylElement("S" if signed else "A", images)
    if sorted(abs(x) for x in images) != list(range(1, n + 1)):
        raise ValueError("not a permutation")
    for a, b in mapping.items():
        if w(a) != b:
            raise ValueError(f"cycles are not sign-symmetric at {a}")
    return w


def identity(kind: str, n: int) -> WeylElement:
    return WeylElement(kind, tuple(range(1, n + 1)))


def transposition_pair(n: int, a: int, b: int) -> WeylElement:
    """The signed element ``(a, b)(-a, -b)``; ``a``, ``b`` may be negative."""
    img = list(range(1, n + 1))

    def set_(x, y):
        if x > 0:
            img[x - 1] = y
        else:
            img[-x - 1] = -y

    set_(a, b)
    set_(b, a)
    return WeylElement("S", tuple(img))


def simple_reflection(family: str, rank: int, i: int) -> WeylElement:
    """``s_i`` for ``A_rank``, ``B_rank``, ``C_rank`` or ``D_rank``."""
    family = family.upper()
    if not (isinstance(i, int) and 1 <= i <= rank):
        raise ValueError(f"simple reflection index {i!r} out of range 1..{rank}")
    if family == "A":
        img = list(range(1, rank + 2))
        img[i - 1], img[i] = i + 1, i
        return WeylElement("A", tuple(img))
    if family not in SIGNED:
        raise ValueError(f"unsupported family {family!r}")
    n = rank
    if i < n:
        return transposition_pair(n, i, i + 1)
    if family == "D":
        return transposition_pair(n, n, -(n - 1))
    img = list(range(1, n + 1))
    img[n - 1] = -n
    return WeylElement("S", tuple(img))


def dynkin_edges(family: str, rank: int) -> list[tuple[int, int]]:
    e = [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        e = [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    return e


def bipartition(family: str, rank: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two-colouring ``(L, R)`` of the Dynkin diagram with ``1 in L``."""
    colour = {1: 0}
    adj = {i: [] for i in range(1, rank + 1)}
    for a, b in dynkin_edges(family, rank):
        adj[a].append(b)
        adj[b].append(a)
    queue = deque([1])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in colour:
                colour[b] = 1 - colour[a]
                queue.append(b)
    L = tuple(i for i in range(1, rank + 1) if colour[i] == 0)
    R = tuple(i for i in range(1, rank + 1) if colour[i] == 1)
    return L, R


def p_sequence(rank: int) -> list[int]:
    """Evens of ``[n]`` increasing then odds decreasing, ``n = rank + 1``."""
    n = rank + 1
    return [k for k in range(2, n + 1, 2)] + [k for k in range(n, 0, -1) if k % 2]


def q_sequence(rank: int) -> list[int]:
    """The four-block sequence ``q_1..q_{2n-2}`` for ``D_n``, ``n = rank``."""
    m = rank - 1
    evens = list(range(2, m + 1, 2))
    odds_down = [k for k in range(m, 0, -1) if k % 2]
    return evens + [-k for k in odds_down] + [-k for k in evens] + odds_down


class WeylGroup:
    """A classical Weyl group with its bipartite Coxeter element."""

    def __init__(self, family: str, rank: int, capacity: int = DEFAULT_CAPACITY):
        family = family.upper()
        if family not in ("A",) + SIGNED:
            raise ValueError(f"unsupported Weyl group family {family!r}")
        minimum = {"A": 1, "B": 2, "C": 2, "D": 4}[family]
        if rank < minimum:
            raise ValueError(f"{family} needs rank >= {minimum}")
        self.family = family
        self.rank = rank
        self.kind = "A" if family == "A" else "S"
        self.n = rank + 1 if family == "A" else rank
        self.capacity = capacity
        self.s = {i: simple_reflection(family, rank, i) for i in range(1, rank + 1)}
        self.L, self.R = bipartition(family, rank)
        self.e = identity(self.kind, self.n)
        self.c_L = self.product(self.L)
        self.c_R = self.product(self.R)
        self.c = self.c_L * self.c_R

    def __repr__(self):
        return f"WeylGroup({self.family}{self.rank})"

    def product(self, idx) -> WeylElement:
        w = self.e
        for i in idx:
            w = w * self.s[i]
        return w

    def coxeter(self, J=None) -> WeylElement:
        """Bipartite Coxeter element ``c_{L cap J} c_{R cap J}`` of ``W_J``."""
        if J is None:
            return self.c
        J = set(J)
        return self.product([i for i in self.L if i in J]) * self.product([i for i in self.R if i in J])

    @property
    def order(self) -> int:
        n = self.n
        if self.family == "A":
            return factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * factorial(n)
        return 2**n * factorial(n)

    def elements(self):
        if self.order > self.capacity:
            raise CapacityError(
                f"|W({self.family}{self.rank})| = {self.order} exceeds the capacity bound {self.capacity}")
        base = range(1, self.n + 1)
        for perm in itertools.permutations(base):
            if self.kind == "A":
                yield WeylElement("A", perm)
                continue
            for signs in itertools.product((1, -1), repeat=self.n):
                if self.family == "D" and signs.count(-1) % 2:
                    continue
                yield WeylElement("S", tuple(s * p for s, p in zip(signs, perm)))

    def contains(self, w: WeylElement) -> bool:
        if w.kind != self.kind or w.n != self.n:
            return False
        return self.family != "D" or w.negatives() % 2 == 0

    @cached_property
    def reflections(self) -> frozenset:
        """All conjugates of simple reflections, by closure."""
        found = set(self.s.values())
        todo = list(found)
        while todo:
            t = todo.pop()
            for s in self.s.values():
                u = s * t * s
                if u not in found:
                    found.add(u)
                    todo.append(u)
        return frozenset(found)

    def reflection_length_bfs(self) -> dict:
        """Shortest reflection-word length of every element, by BFS."""
        dist = {self.e: 0}
        queue = deque([self.e])
        T = sorted(self.reflections)
        while queue:
            w = queue.popleft()
            for t in T:
                u = w * t
                if u not in dist:
                    dist[u] = dist[w] + 1
                    queue.append(u)
        return dist

    def nc_lattice(self, J=None) -> "NoncrossingLattice":
        return NoncrossingLattice(self, J)


def bipartite_coxeter(family: str, rank: int) -> tuple[WeylElement, WeylElement, WeylElement]:
    W = WeylGroup(family, rank)
    return W.c, W.c_L, W.c_R


def absolute_length(w: WeylElement) -> int:
    return w.absolute_length()


def abs_leq(u: WeylElement, w: WeylElement) -> bool:
    """Absolute order: ``l(w) = l(u) + l(u^{-1} w)``."""
    return w.absolute_length() == u.absolute_length() + (u.inverse() * w).absolute_length()


class NoncrossingLattice:
    """The interval ``[e, c]`` in absolute order, ``c`` bipartite.

    With ``J`` given, the lattice of the parabolic subgroup ``W_J`` for its own
    bipartite Coxeter element, realised inside ``W``.
    """

    def __init__(self, group: WeylGroup, J=None):
        self.group = group
        self.J = tuple(sorted(J)) if J is not None else tuple(range(1, group.rank + 1))
        self.c = group.coxeter(self.J)
        self.c_L = group.product([i for i in group.L if i in self.J])
        self.c_R = group.product([i for i in group.R if i in self.J])
        self.rank = self.c.absolute_length()
        self.abs_length = {}
        elems = []
        for w in group.elements():
            lw = w.absolute_length()
            if lw + (w.inverse() * self.c).absolute_length() == self.rank:
                elems.append(w)
                self.abs_length[w] = lw
        self.elements = sorted(elems, key=lambda w: (self.abs_length[w], format_cycles(w)))
        self._set = frozenset(elems)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self._set

    def _check(self, w):
        if w not in self._set:
            raise ValueError(f"{w} is not in NC(W, c)")

    def leq(self, u, w) -> bool:
        self._check(u)
        self._check(w)
        return self.abs_length[w] == self.abs_length[u] + (u.inverse() * w).absolute_length()

    def rank_counts(self) -> list[int]:
        out = [0] * (self.rank + 1)
        for w in self.elements:
            out[self.abs_length[w]] += 1
        return out

    def kreweras(self, w) -> WeylElement:
        self._check(w)
        return self.c * w.inverse()

    def kreweras_inverse(self, w) -> WeylElement:
        self._check(w)
        return w.inverse() * self.c

    def flip(self, w) -> WeylElement:
        self._check(w)
        return self.c_L * w.inverse() * self.c_L.inverse()

    @cached_property
    def kreweras_order(self) -> int:
        k = 1
        perm = {w: self.kreweras(w) for w in self.elements}
        cur = dict(perm)
        while any(cur[w] != w for w in self.elements):
            cur = {w: perm[cur[w]] for w in self.elements}
            k += 1
        return k

    def covers(self) -> list[tuple[WeylElement, WeylElement]]:
        out = []
        for u in self.elements:
            for w in self.elements:
                if self.abs_length[w] == self.abs_length[u] + 1 and self.leq(u, w):
                    out.append((u, w))
        return out


def kreweras(L: NoncrossingLattice, w) -> WeylElement:
    return L.kreweras(w)


def flip(L: NoncrossingLattice, w) -> WeylElement:
    return L.flip(w)


def build_nc_lattice(family: str, rank: int, capacity: int = DEFAULT_CAPACITY) -> NoncrossingLattice:
    return NoncrossingLattice(WeylGroup(family, rank, capacity))
