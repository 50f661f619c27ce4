"""The nonnesting-to-noncrossing bijection Theta and its diagram models.

Diagrams live on ``2N`` evenly spaced circle vertices indexed ``0..2N-1``
clockwise.  Crossing tests and reflections are done on these indices only;
no floating point positions are involved.

* :func:`psi_diagram`, :func:`phi_diagram_A`, :func:`theta_A` give the
  explicit matching construction on ``Phi+(A_{n-1})``.
* :func:`hat`, :func:`xi_and_phi_D`, :func:`theta_D_partial` give the
  partial type D description for antichains with ``delta(A) != A``.
* :func:`theta_uniform` is the inductive construction valid for every
  classical type: rotate by rowmotion until the support drops, recurse on
  the parabolic, then undo the rotation with inverse Kreweras complements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import roots as rs
from .poset import bits
from .weyl import WeylElement, WeylGroup, p_sequence, q_sequence


@dataclass(frozen=True)
class MatchingDiagram:
    """Labelled circle vertices plus noncrossing chords.

    ``vertices[p]`` is the label ``(value, superscript)`` at position ``p``;
    chords are sorted position pairs.  ``markings`` is construction scratch
    and takes no part in equality.
    """

    vertices: tuple[tuple[int, int], ...]
    chords: frozenset
    markings: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def npos(self) -> int:
        return len(self.vertices)

    def partner(self, p: int) -> int | None:
        for a, b in self.chords:
            if a == p:
                return b
            if b == p:
                return a
        return None

    def unmatched(self) -> list[int]:
        used = {x for ch in self.chords for x in ch}
        return [p for p in range(self.npos) if p not in used]

    def is_noncrossing(self) -> bool:
        ch = sorted(self.chords)
        return not any(crosses(x, y) for k, x in enumerate(ch) for y in ch[k + 1:])

    def relabel(self, vertices) -> "MatchingDiagram":
        return MatchingDiagram(tuple(vertices), self.chords)

    def with_chords(self, chords) -> "MatchingDiagram":
        return MatchingDiagram(self.vertices, frozenset(_norm(a, b) for a, b in chords))

    def rotate180(self) -> "MatchingDiagram":
        half = self.npos // 2
        return self.with_chords(((a + half) % self.npos, (b + half) % self.npos) for a, b in self.chords)

    def labelled_chords(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Chords as label pairs, ``(1)`` endpoint first when there is one."""
        out = []
        for a, b in sorted(self.chords):
            la, lb = self.vertices[a], self.vertices[b]
            if la[1] == 0 and lb[1] == 1:
                la, lb = lb, la
            out.append((la, lb))
        return out

    def to_text(self) -> str:
        """One ``i^(s)-j^(t)`` chord per line."""
        return "\n".join(f"{a[0]}^({a[1]})-{b[0]}^({b[1]})" for a, b in self.labelled_chords())


def _norm(a, b):
    return (a, b) if a < b else (b, a)


def crosses(x, y) -> bool:
    """Chords cross iff exactly one endpoint of ``y`` lies strictly inside ``x``."""
    a, b = x
    c, d = y
    if len({a, b, c, d}) < 4:
        return False
    inside = lambda t: a < t < b
    return inside(c) != inside(d)


# -- type A -------------------------------------------------------------------------


def _require(P, family):
    if P.family != family:
        raise ValueError(f"expected a type {family} root poset, got {P.type_label}")


def psi_diagram(P: rs.RootPoset, A) -> MatchingDiagram:
    """Marker-and-chord diagram of an antichain of ``Phi+(A_{n-1})``.

    Vertices ``1^(0)..n^(0), n^(1)..1^(1)`` sit clockwise at positions
    ``0..2n-1``.  Marker ``i`` goes on ``j^(0)`` for each ``[i, j]`` in ``A``
    and on ``i^(1)`` otherwise; chord ``i`` joins marker ``i`` to the nearest
    free unmarked vertex, counterclockwise from a ``(0)`` vertex and clockwise
    from a ``(1)`` vertex.
    """
    _require(P, "A")
    A = P.base.antichain(A)
    n = P.rank_r + 1
    total = 2 * n
    ivs = P.intervals(A)
    lefts = {i for i, _ in ivs}
    marks = {}
    for i, j in ivs:
        marks[j - 1] = i
    for i in range(1, n + 1):
        if i not in lefts:
            marks[total - i] = i
    where = {v: p for p, v in marks.items()}
    used = set()
    chords = []
    for i in range(1, n + 1):
        p = where[i]
        step = -1 if p < n else 1
        q = p
        while True:
            q = (q + step) % total
            if q not in marks and q not in used:
                break
        used.add(q)
        chords.append(_norm(p, q))
    vertices = tuple((p + 1, 0) if p < n else (total - p, 1) for p in range(total))
    return MatchingDiagram(vertices, frozenset(chords), dict(marks))


def phi_labels(seq) -> tuple[tuple[int, int], ...]:
    out = []
    for v in seq:
        out += [(v, 0), (v, 1)]
    return tuple(out)


def phi_diagram_A(P: rs.RootPoset, A) -> MatchingDiagram:
    """``psi`` relabelled by the p-sequence: ``p_1^(0), p_1^(1), p_2^(0), ...``."""
    return psi_diagram(P, A).relabel(phi_labels(p_sequence(P.rank_r)))


def diagram_permutation(D: MatchingDiagram, n: int, kind: str = "A") -> dict[int, int]:
    """Read ``w(i) = j`` off every chord ``i^(1) -- j^(0)``."""
    out = {}
    for a, b in D.labelled_chords():
        if a[1] != 1 or b[1] != 0:
            raise ValueError("chord does not join a (1) vertex to a (0) vertex")
        out[a[0]] = b[0]
    return out


def theta_A(P: rs.RootPoset, A) -> WeylElement:
    """Theta on ``Phi+(A_{n-1})`` from the chords of ``phi_diagram_A``."""
    n = P.rank_r + 1
    w = diagram_permutation(phi_diagram_A(P, A), n)
    return WeylElement("A", tuple(w[i] for i in range(1, n + 1)))


def reflect_through_M(D: MatchingDiagram) -> MatchingDiagram:
    """Reflect chords across the diameter between positions 0 and 1.

    In every phi diagram those positions carry ``2^(0)`` and ``2^(1)``.
    """
    total = D.npos
    return D.with_chords(((1 - a) % total, (1 - b) % total) for a, b in D.chords)


# -- type D -------------------------------------------------------------------------


@dataclass(frozen=True)
class HatImage:
    source: tuple[int, ...]
    unfolded: tuple[int, ...]
    q_intersection: tuple[tuple[int, int], ...]
    result: tuple[int, ...]
    poset: rs.RootPoset = field(compare=False, repr=False)

    @property
    def k(self) -> int:
        return len(self.q_intersection)


def hat(P: rs.RootPoset, A) -> HatImage:
    """Fold ``A`` to ``C_{n-1}``, unfold to ``A_{2n-3}``, then chain up ``Q``.

    ``Q`` holds the intervals ``[i, j]`` with ``i <= n-1 < n <= j``; its members
    ``[i_1, j_1] < ... < [i_k, j_k]`` (lexicographic) in the unfolded set are
    replaced by ``[i_1, j_2], ..., [i_{k-1}, j_k]``.
    """
    _require(P, "D")
    A = P.base.antichain(A)
    if rs.delta_set(P, A) == A:
        raise ValueError("hat needs an antichain with delta(A) != A")
    n = P.rank_r
    C = rs.build_type_C(n - 1)
    PA = rs.build_type_A(2 * n - 3)
    unfolded = rs.iota(C, rs.gamma_set(P, A))
    ivs = PA.intervals(unfolded)
    inQ = [iv for iv in ivs if iv[0] <= n - 1 and iv[1] >= n]
    rest = [iv for iv in ivs if not (iv[0] <= n - 1 and iv[1] >= n)]
    chained = [(inQ[t][0], inQ[t + 1][1]) for t in range(len(inQ) - 1)]
    result = PA.from_intervals(rest + chained)
    return HatImage(A, tuple(unfolded), tuple(inQ), result, PA)


def hat_set(P: rs.RootPoset, A) -> tuple[int, ...]:
    return hat(P, A).result


def in_H(p: int, N: int) -> bool:
    """Same side of ``M^perp`` as position 0, on ``2N`` positions."""
    d = (2 * p - 1) % (4 * N)
    d = min(d, 4 * N - d)
    return d < N


def chord_span(ch, total) -> int:
    a, b = ch
    d = abs(a - b)
    return min(d, total - d)


def transverse_chords(D: MatchingDiagram) -> list[tuple[int, int]]:
    N = D.npos // 2
    return sorted(ch for ch in D.chords if in_H(ch[0], N) != in_H(ch[1], N))


def xi_and_phi_D(P: rs.RootPoset, A) -> MatchingDiagram:
    """``phi_{D_n}(A)``: drop the two central transverse chords of
    ``phi_{A_{2n-3}}(hat A)`` and relabel from position 0 by the q-sequence.

    The chords closest to the centre are the longest ones; ties go to the
    smaller position pair.
    """
    h = hat(P, A)
    DA = phi_diagram_A(h.poset, h.result)
    trans = transverse_chords(DA)
    if len(trans) < 2:
        raise AssertionError(f"fewer than two transverse chords for {A}")
    total = DA.npos
    drop = sorted(trans, key=lambda ch: (-chord_span(ch, total), ch))[:2]
    xi = DA.with_chords(ch for ch in DA.chords if ch not in drop)
    return xi.relabel(phi_labels(q_sequence(P.rank_r)))


@dataclass(frozen=True)
class PartialTheta:
    values: dict
    x: int
    y: int


def theta_D_partial(P: rs.RootPoset, A) -> PartialTheta:
    """The values of Theta fixed by ``phi_{D_n}(A)``, and ``x_A``, ``y_A``.

    ``Theta(A)(i) = j`` for each chord ``i^(1) -- j^(0)``; moreover
    ``Theta(A)({n, -n}) = {x, -x}`` and ``Theta(A)({y, -y}) = {n, -n}``.
    """
    D = xi_and_phi_D(P, A)
    vals = diagram_permutation(D, P.rank_r)
    free = [D.vertices[p] for p in D.unmatched()]
    xs = {abs(v) for v, s in free if s == 0}
    ys = {abs(v) for v, s in free if s == 1}
    if len(free) != 4 or len(xs) != 1 or len(ys) != 1:
        raise AssertionError(f"unexpected unmatched vertices {free}")
    return PartialTheta(vals, xs.pop(), ys.pop())


# -- uniform construction -----------------------------------------------------------


class ThetaUniform:
    """Memoised inductive Theta for one classical root poset."""

    def __init__(self, P: rs.RootPoset, group: WeylGroup | None = None):
        if P.family not in rs.CLASSICAL:
            raise ValueError(f"theta is implemented for classical types, not {P.type_label}")
        self.P = P
        self.W = group or WeylGroup(P.family, P.rank_r)
        self._par = {}
        self._memo = {}

    def parabolic(self, J: frozenset):
        if J not in self._par:
            sub, emb = self.P.parabolic(J)
            pos = {old: new for new, old in enumerate(emb)}
            simple_sub = {j: pos[self.P.simple[j - 1]] for j in J}
            self._par[J] = (sub, emb, pos, simple_sub, self.W.coxeter(J))
        return self._par[J]

    def __call__(self, A, J=None) -> WeylElement:
        J = frozenset(range(1, self.P.rank_r + 1)) if J is None else frozenset(J)
        return self._theta(J, tuple(sorted(A)))

    def _theta(self, J: frozenset, A: tuple) -> WeylElement:
        key = (J, A)
        if key in self._memo:
            return self._memo[key]
        if not J:
            if A:
                raise ValueError("nonempty antichain in the trivial parabolic")
            return self.W.e
        sub, emb, pos, simple_sub, cJ = self.parabolic(J)
        m = sub.mask_of(pos[x] for x in A)
        full_support = sub.min_mask
        k = 0
        while sub.support_mask(m) == full_support:
            m = sub.row_mask(m)
            k += 1
            if k > 2 * self.P.coxeter_h + 2:
                raise AssertionError("support never drops under rowmotion")
        inv = {v: j for j, v in simple_sub.items()}
        Jp = frozenset(inv[e] for e in bits(sub.support_mask(m)))
        Ap = tuple(sorted(emb[e] for e in bits(m)))
        w = self.W.product([i for i in self.W.L if i in J and i not in Jp]) * self._theta(Jp, Ap)
        for _ in range(k):
            w = w.inverse() * cJ  # inverse Kreweras complement in W_J
        self._memo[key] = w
        return w


_UNIFORM: dict[str, ThetaUniform] = {}


def theta_uniform(P: rs.RootPoset, A) -> WeylElement:
    if P.type_label not in _UNIFORM:
        _UNIFORM[P.type_label] = ThetaUniform(P)
    return _UNIFORM[P.type_label](A)
