"""Positive root posets of the finite crystallographic types.

Roots are generated from the Cartan matrix by the usual root-string closure,
then sorted by height so that element indices form a linear extension.  The
classical types also carry ambient coordinates (``e_i - e_j`` and friends)
and the distinguished subsets ``subset_L`` / ``subset_S`` used for the
long/short bookkeeping; the foldings ``eta``, ``iota``, ``delta`` and
``gamma`` relate types A, C and D.

Type A antichains can be written with intervals: the root ``e_i - e_j`` of
``A_{n-1}`` is the interval ``[i, j]`` of ``[n]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod

from .poset import RankedPoset, bits

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")


@dataclass(frozen=True)
class Root:
    coeffs: tuple[int, ...]
    ambient: tuple[int, ...] | None = None

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> dict:
        d = {"coeffs": list(self.coeffs)}
        if self.ambient is not None:
            d["ambient"] = list(self.ambient)
        return d


@dataclass(eq=False)
class RootPoset:
    """A positive root poset together with its root data.

    ``simple[i-1]`` is the element index of the simple root ``alpha_i``.
    ``subset_L``/``subset_S`` are ``None`` where they are not defined.
    """

    type_label: str
    family: str
    rank_r: int
    roots: tuple[Root, ...]
    base: RankedPoset
    simple: tuple[int, ...]
    coxeter_h: int
    neg_w0: tuple[int, ...]
    subset_L: frozenset | None = None
    subset_S: frozenset | None = None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {r.coeffs: k for k, r in enumerate(self.roots)}

    def __repr__(self):
        return f"RootPoset({self.type_label})"

    @property
    def size(self) -> int:
        return self.base.size

    def index_of(self, coeffs) -> int:
        try:
            return self._index[tuple(coeffs)]
        except KeyError:
            raise ValueError(f"{list(coeffs)} is not a positive root of {self.type_label}") from None

    def index_of_ambient(self, vec) -> int:
        vec = tuple(vec)
        for k, r in enumerate(self.roots):
            if r.ambient == vec:
                return k
        raise ValueError(f"{list(vec)} is not a positive root of {self.type_label}")

    def simple_index(self, e: int) -> int | None:
        """1-based simple-root number of element ``e``, or None."""
        try:
            return self.simple.index(e) + 1
        except ValueError:
            return None

    def support_indices(self, A) -> frozenset:
        """Simple-root numbers lying below some member of ``A``."""
        return frozenset(self.simple_index(e) for e in bits(self.base.support_mask(self.base.mask_of(A))))

    def parabolic(self, J) -> tuple[RankedPoset, tuple[int, ...]]:
        """Parabolic root poset for the simple-root numbers ``J``."""
        keep = {self.simple[j - 1] for j in J}
        drop = self.base.min_mask & ~sum(1 << e for e in keep)
        return self.base.subposet(self.base.full & ~self.base.filter_mask(drop))

    def label(self, e: int) -> str:
        """Human readable name of an element."""
        root = self.roots[e]
        if self.family == "A":
            return "[%d,%d]" % interval_of(root)
        if root.ambient is None:
            return "".join(map(str, root.coeffs))
        return _ambient_name(root.ambient)

    def interval(self, e: int) -> tuple[int, int]:
        if self.family != "A":
            raise ValueError("intervals only name type A roots")
        return interval_of(self.roots[e])

    def from_interval(self, i: int, j: int) -> int:
        if self.family != "A":
            raise ValueError("intervals only name type A roots")
        n = self.rank_r + 1
        if not (1 <= i < j <= n):
            raise ValueError(f"[{i},{j}] is not an interval of [{n}]")
        return self.index_of(tuple(1 if i <= k < j else 0 for k in range(1, n)))

    def intervals(self, A) -> list[tuple[int, int]]:
        return sorted(self.interval(e) for e in A)

    def from_intervals(self, ivs) -> tuple[int, ...]:
        return tuple(sorted(self.from_interval(i, j) for i, j in ivs))

    def map_elements(self, perm, A) -> tuple[int, ...]:
        return tuple(sorted(perm[e] for e in A))


def interval_of(root: Root) -> tuple[int, int]:
    c = root.coeffs
    i = next(k for k, v in enumerate(c) if v) + 1
    return i, i + sum(c)


def _ambient_name(v) -> str:
    terms = []
    for k, x in enumerate(v, start=1):
        if x == 0:
            continue
        coef = "" if abs(x) == 1 else str(abs(x))
        sign = "-" if x < 0 else "+"
        terms.append((sign, f"{coef}e{k}"))
    s = "".join(sg + t for sg, t in terms)
    return s[1:] if s.startswith("+") else s


# -- Cartan data ------------------------------------------------------------------


def _unit(n, i, scale=1):
    v = [0] * n
    v[i] = scale
    return v


def _simple_ambient(family: str, r: int) -> list[list[int]]:
    if family == "A":
        n = r + 1
        return [[(1 if k == i else -1 if k == i + 1 else 0) for k in range(n)] for i in range(r)]
    out = [[(1 if k == i else -1 if k == i + 1 else 0) for k in range(r)] for i in range(r - 1)]
    if family == "B":
        out.append(_unit(r, r - 1))
    elif family == "C":
        out.append(_unit(r, r - 1, 2))
    elif family == "D":
        last = [0] * r
        last[r - 2] = last[r - 1] = 1
        out.append(last)
    return out


def _gram_exceptional(label: str) -> list[list[int]]:
    # Bourbaki numbering; doubled inner products so everything is integral
    if label in ("E6", "E7", "E8"):
        r = int(label[1])
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, r)]
        g = [[0] * r for _ in range(r)]
        for i in range(r):
            g[i][i] = 2
        for a, b in edges:
            g[a - 1][b - 1] = g[b - 1][a - 1] = -1
        return g
    if label == "F4":
        return [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if label == "G2":
        return [[2, -3], [-3, 6]]
    raise ValueError(f"unknown exceptional type {label!r}")


def cartan_from_gram(g) -> list[list[int]]:
    """``a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``."""
    r = len(g)
    out = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            q = Fraction(2 * g[i][j], g[i][i])
            if q.denominator != 1:
                raise ValueError("Gram matrix does not give an integral Cartan matrix")
            out[i][j] = int(q)
    return out


def positive_roots(cartan) -> list[tuple[int, ...]]:
    """Simple-root coordinates of the positive roots, by root-string closure.

    For a root ``beta`` and simple root ``alpha_i`` the ``alpha_i``-string
    through ``beta`` runs from ``beta - p alpha_i`` to ``beta + q alpha_i`` with
    ``p - q = <beta, alpha_i^vee>``; ``beta + alpha_i`` is a root iff ``q > 0``.
    Heights are processed in increasing order so ``p`` is always known.
    """
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    layer = simple
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(r):
                p = 0
                while True:
                    v = list(beta)
                    v[i] -= p + 1
                    if tuple(v) in found:
                        p += 1
                    else:
                        break
                pairing = sum(cartan[i][j] * beta[j] for j in range(r))
                if p - pairing > 0:
                    v = list(beta)
                    v[i] += 1
                    v = tuple(v)
                    if v not in found:
                        nxt.add(v)
        found |= nxt
        layer = sorted(nxt)
    return sorted(found, key=lambda c: (sum(c), tuple(-x for x in c)))


def _neg_w0_simple(family: str, r: int) -> list[int]:
    """Diagram automorphism induced by ``-w_0`` on simple-root numbers."""
    ident = list(range(1, r + 1))
    if family == "A":
        return [r + 1 - i for i in ident]
    if family == "D" and r % 2 == 1:
        return ident[:-2] + [r, r - 1]
    if family == "E6":
        return [6, 2, 5, 4, 3, 1]
    return ident


def _build(family: str, r: int, gram, ambient_simple=None) -> tuple:
    cartan = cartan_from_gram(gram)
    coeffs = positive_roots(cartan)
    roots = []
    for c in coeffs:
        amb = None
        if ambient_simple is not None:
            amb = tuple(sum(c[i] * ambient_simple[i][k] for i in range(r))
                        for k in range(len(ambient_simple[0])))
        roots.append(Root(tuple(c), amb))
    index = {c: k for k, c in enumerate(coeffs)}
    covers = []
    for k, c in enumerate(coeffs):
        for i in range(r):
            v = list(c)
            v[i] += 1
            t = index.get(tuple(v))
            if t is not None:
                covers.append((k, t))
    base = RankedPoset(len(coeffs), covers)
    simple = tuple(index[tuple(int(i == j) for j in range(r))] for i in range(r))
    nsig = _neg_w0_simple(family, r)
    neg_w0 = []
    for c in coeffs:
        img = [0] * r
        for i in range(r):
            img[nsig[i] - 1] = c[i]
        neg_w0.append(index[tuple(img)])
    if (2 * len(coeffs)) % r:
        raise ArithmeticError("2 #Phi+ / r is not an integer")
    h = 2 * len(coeffs) // r
    if base.max_rank != h - 2 or len(base.maximal) != 1:
        raise ArithmeticError(f"{family}{r}: rank or highest root inconsistent with h={h}")
    return tuple(roots), base, simple, h, tuple(neg_w0)


def _gram_classical(family, r):
    amb = _simple_ambient(family, r)
    return [[sum(a * b for a, b in zip(x, y)) for y in amb] for x in amb], amb


@lru_cache(maxsize=None)
def build_type_A(n: int) -> RootPoset:
    """``Phi+(A_n)``: intervals ``[i, j]`` of ``[n+1]`` under containment."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("type A needs rank n >= 1")
    gram, amb = _gram_classical("A", n)
    roots, base, simple, h, neg = _build("A", n, gram, amb)
    N = n + 1
    P = RootPoset(f"A{n}", "A", n, roots, base, simple, h, neg)
    L = frozenset(P.from_interval(i, N + 1 - i) for i in range(1, N // 2 + 1))
    S = None
    if N % 2 == 0:
        m = N // 2
        S = frozenset(k for k in range(P.size) if P.interval(k)[0] == m or P.interval(k)[1] == m + 1)
    P.subset_L, P.subset_S = L, S
    return P


def _c_long(P: RootPoset) -> frozenset:
    return frozenset(k for k, r in enumerate(P.roots) if sum(x * x for x in r.ambient) == 4)


@lru_cache(maxsize=None)
def build_type_C(n: int) -> RootPoset:
    """``Phi+(C_n)``: ``e_i +- e_j`` and ``2 e_i``.

    ``subset_L`` is the set of long roots ``2 e_i``; ``subset_S`` is the chain
    ``{e_i + e_n : i < n} + {2 e_n}`` of roots with two preimages under the
    fold from ``D_{n+1}``.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError("type C needs rank n >= 2")
    gram, amb = _gram_classical("C", n)
    roots, base, simple, h, neg = _build("C", n, gram, amb)
    P = RootPoset(f"C{n}", "C", n, roots, base, simple, h, neg)
    P.subset_L = _c_long(P)
    S = set()
    for k, r in enumerate(P.roots):
        v = r.ambient
        if v[n - 1] == 2 or (v[n - 1] == 1 and sum(v) == 2 and min(v) >= 0):
            S.add(k)
    P.subset_S = frozenset(S)
    return P


def _b_to_c_ambient(v, n):
    """Poset isomorphism ``Phi+(B_n) -> Phi+(C_n)`` on ambient vectors."""
    nz = [(k, x) for k, x in enumerate(v) if x]
    if len(nz) == 1:  # short root e_i -> e_i + e_n
        i = nz[0][0]
        out = [0] * n
        out[i] += 1
        out[n - 1] += 1
        return tuple(out)
    (i, a), (j, b) = nz
    if b == -1:  # e_i - e_j unchanged
        return tuple(v)
    out = [0] * n  # e_i + e_j -> e_i + e_{j-1}
    out[i] += 1
    out[j - 1] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def build_type_B(n: int) -> RootPoset:
    """``Phi+(B_n)``, sharing element indices with ``build_type_C(n)``.

    The B roots are generated independently and matched to the C poset by
    an explicit isomorphism, which is checked relation by relation.
    ``subset_S`` holds the short roots ``e_i`` and ``subset_L`` the long ones.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError("type B needs rank n >= 2")
    C = build_type_C(n)
    gram, amb = _gram_classical("B", n)
    broots, bbase, _, h, _ = _build("B", n, gram, amb)
    to_c = [C.index_of_ambient(_b_to_c_ambient(r.ambient, n)) for r in broots]
    if sorted(to_c) != list(range(C.size)):
        raise ArithmeticError("B -> C root map is not a bijection")
    for x in range(bbase.size):
        for y in range(bbase.size):
            if bbase.leq(x, y) != C.base.leq(to_c[x], to_c[y]):
                raise ArithmeticError("B -> C root map is not a poset isomorphism")
    roots = [None] * C.size
    for k, t in enumerate(to_c):
        roots[t] = broots[k]
    P = RootPoset(f"B{n}", "B", n, tuple(roots), C.base, C.simple, h, C.neg_w0)
    short = frozenset(k for k, r in enumerate(P.roots) if sum(x * x for x in r.ambient) == 1)
    P.subset_S = short
    P.subset_L = frozenset(range(P.size)) - short
    return P


@lru_cache(maxsize=None)
def build_type_D(n: int) -> RootPoset:
    """``Phi+(D_n)``: ``e_i +- e_j`` with ``alpha_n = e_{n-1} + e_n``."""
    if not isinstance(n, int) or n < 4:
        raise ValueError("type D needs rank n >= 4")
    gram, amb = _gram_classical("D", n)
    roots, base, simple, h, neg = _build("D", n, gram, amb)
    P = RootPoset(f"D{n}", "D", n, roots, base, simple, h, neg)
    C = build_type_C(n - 1)
    g = gamma_map(P)
    P.subset_L = frozenset(k for k in range(P.size) if g[k] in C.subset_L)
    P.subset_S = frozenset(k for k in range(P.size) if g[k] in C.subset_S)
    return P


@lru_cache(maxsize=None)
def build_exceptional(label: str) -> RootPoset:
    label = label.upper()
    gram = _gram_exceptional(label)
    r = len(gram)
    fam = label if label == "E6" else label[0]
    roots, base, simple, h, neg = _build(fam, r, gram)
    return RootPoset(label, label[0], r, roots, base, simple, h, neg)


_LABEL = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


def build(type_label: str, rank: int | None = None) -> RootPoset:
    """Build from ``("D", 6)``, ``"D6"`` or ``"F4"``."""
    if rank is None:
        m = _LABEL.match(type_label)
        if not m:
            raise ValueError(f"cannot parse root system label {type_label!r}")
        fam, rank = m.group(1).upper(), int(m.group(2))
    else:
        fam = type_label.strip().upper()
        m = _LABEL.match(fam)
        if m:
            if int(m.group(2)) != rank:
                raise ValueError(f"label {type_label!r} disagrees with rank {rank}")
            fam = m.group(1).upper()
    if fam == "A":
        return build_type_A(rank)
    if fam == "B":
        return build_type_B(rank)
    if fam == "C":
        return build_type_C(rank)
    if fam == "D":
        return build_type_D(rank)
    label = f"{fam}{rank}"
    if label in EXCEPTIONAL:
        return build_exceptional(label)
    raise ValueError(f"unsupported root system {label}")


# -- automorphisms and folds -------------------------------------------------------


def eta(P: RootPoset, x: int) -> int:
    """Left-right reflection ``[i, j] -> [n+1-j, n+1-i]`` of a type A poset."""
    if P.family != "A":
        raise ValueError("eta is defined on type A root posets")
    n = P.rank_r + 1
    i, j = P.interval(x)
    return P.from_interval(n + 1 - j, n + 1 - i)


def eta_set(P: RootPoset, A) -> tuple[int, ...]:
    return tuple(sorted(eta(P, x) for x in A))


def delta(P: RootPoset, x: int) -> int:
    """Swap the roles of ``alpha_{n-1}`` and ``alpha_n`` in a type D root."""
    if P.family != "D":
        raise ValueError("delta is defined on type D root posets")
    c = list(P.roots[x].coeffs)
    c[-1], c[-2] = c[-2], c[-1]
    return P.index_of(c)


def delta_set(P: RootPoset, A) -> tuple[int, ...]:
    return tuple(sorted(delta(P, x) for x in A))


def _fold_a_to_c(n: int, a_amb) -> tuple[int, ...]:
    # e_k -> f_k (k <= n), e_k -> -f_{2n+1-k} (k > n)
    out = [0] * n
    for k, x in enumerate(a_amb, start=1):
        if k <= n:
            out[k - 1] += x
        else:
            out[2 * n - k] -= x
    return tuple(out)


def fold_A_to_C(PA: RootPoset) -> tuple[RootPoset, list[int]]:
    """The eta-quotient map ``Phi+(A_{2n-1}) -> Phi+(C_n)`` as an index list."""
    if PA.family != "A" or PA.rank_r % 2 == 0:
        raise ValueError("need a type A_{2n-1} root poset")
    n = (PA.rank_r + 1) // 2
    PC = build_type_C(n)
    return PC, [PC.index_of_ambient(_fold_a_to_c(n, r.ambient)) for r in PA.roots]


def iota(PC: RootPoset, S) -> tuple[int, ...]:
    """Unfold a subset of ``Phi+(C_n)`` into ``Phi+(A_{2n-1})``."""
    if PC.family != "C":
        raise ValueError("iota unfolds a type C root poset")
    PA = build_type_A(2 * PC.rank_r - 1)
    _, fold = fold_A_to_C(PA)
    S = set(S)
    return tuple(k for k in range(PA.size) if fold[k] in S)


def iota_inverse(PA: RootPoset, B) -> tuple[int, ...]:
    """Fold an eta-symmetric subset of ``Phi+(A_{2n-1})`` back to ``C_n``."""
    PC, fold = fold_A_to_C(PA)
    if set(eta_set(PA, B)) != set(B):
        raise ValueError("subset is not eta-symmetric")
    return tuple(sorted({fold[k] for k in B}))


def _gamma_ambient(n: int, v) -> tuple[int, ...]:
    # D_n -> C_{n-1}: e_i - e_j -> f_i - f_j, e_i +- e_n -> f_i + f_{n-1},
    # e_i + e_j -> f_i + f_{j-1} (j < n)
    nz = [(k + 1, x) for k, x in enumerate(v) if x]
    (i, _), (j, b) = nz
    out = [0] * (n - 1)
    if j == n:
        out[i - 1] += 1
        out[n - 2] += 1
    elif b == -1:
        out[i - 1], out[j - 1] = 1, -1
    else:
        out[i - 1] += 1
        out[j - 2] += 1
    return tuple(out)


def gamma_map(P: RootPoset) -> list[int]:
    """The delta-orbit quotient ``Phi+(D_n) -> Phi+(C_{n-1})`` as an index list."""
    if P.family != "D":
        raise ValueError("gamma is defined on type D root posets")
    C = build_type_C(P.rank_r - 1)
    return [C.index_of_ambient(_gamma_ambient(P.rank_r, r.ambient)) for r in P.roots]


def gamma(P: RootPoset) -> tuple[RootPoset, list[int], dict[int, tuple[int, ...]]]:
    """``(C_{n-1} poset, element map, preimage map)``."""
    C = build_type_C(P.rank_r - 1)
    g = gamma_map(P)
    pre = {a: tuple(k for k in range(P.size) if g[k] == a) for a in range(C.size)}
    return C, g, pre


def gamma_set(P: RootPoset, A) -> tuple[int, ...]:
    g = gamma_map(P)
    return tuple(sorted({g[x] for x in A}))


def gamma_preimage(P: RootPoset, B) -> tuple[int, ...]:
    g = gamma_map(P)
    B = set(B)
    return tuple(k for k in range(P.size) if g[k] in B)


# -- counting ------------------------------------------------------------------------


def degrees(P: RootPoset) -> list[int]:
    """Degrees of the Weyl group read off from the rank sizes of ``Phi+``.

    The number of roots of height ``k`` equals the number of exponents
    ``>= k``, so the exponents form the conjugate partition of the rank-size
    sequence; degrees are exponents plus one.
    """
    sizes = [len(P.base.level(i)) for i in range(P.base.max_rank + 1)]
    if any(a < b for a, b in zip(sizes, sizes[1:])):
        raise ArithmeticError(f"rank sizes {sizes} are not weakly decreasing")
    if sizes[0] != P.rank_r:
        raise ArithmeticError("rank 0 size differs from the number of simple roots")
    exps = sorted(sum(1 for s in sizes if s > j) for j in range(sizes[0]))
    degs = [e + 1 for e in exps]
    if sum(d - 1 for d in degs) != P.size or max(degs) != P.coxeter_h:
        raise ArithmeticError(f"degrees {degs} inconsistent with #Phi+ or h")
    return degs


def catalan(P: RootPoset) -> int:
    """``prod (d_i + h) / d_i`` in exact arithmetic."""
    degs = degrees(P)
    h = P.coxeter_h
    val = prod(Fraction(d + h, d) for d in degs)
    if val.denominator != 1:
        raise ArithmeticError(f"Catalan product {val} is not an integer")
    return int(val)


def narayana(P: RootPoset) -> list[int]:
    """Antichain counts by cardinality, ``k = 0..r``."""
    counts = [0] * (P.rank_r + 1)
    for m in P.base.antichain_masks():
        counts[bin(m).count("1")] += 1
    return counts


def catalan_reducible(parts) -> int:
    return prod(catalan(P) for P in parts)


def narayana_reducible(parts) -> list[int]:
    """Narayana vector of a product of root systems (convolution)."""
    out = [1]
    for P in parts:
        nv = narayana(P)
        new = [0] * (len(out) + len(nv) - 1)
        for a, x in enumerate(out):
            for b, y in enumerate(nv):
                new[a + b] += x * y
        out = new
    return out


# -- Type A closed form for rowvacuation --------------------------------------------


def lalanne_kreweras(n: int, intervals) -> list[tuple[int, int]]:
    """Rowvacuation on ``Phi+(A_{n-1})`` by the Lalanne-Kreweras index formula.

    With ``A = {[i_1, j_1], ..., [i_k, j_k]}``, the image has left ends
    ``[n-1] - {j_l - 1}`` and right ends ``{2..n} - {i_l + 1}``, paired in
    increasing order.
    """
    ivs = sorted(intervals)
    lefts = sorted(set(range(1, n)) - {j - 1 for _, j in ivs})
    rights = sorted(set(range(2, n + 1)) - {i + 1 for i, _ in ivs})
    if len(lefts) != len(rights):
        raise ValueError("input is not an antichain of intervals")
    return list(zip(lefts, rights))
