"""Exhaustive theorem-checking suites.

Every suite walks a full enumeration and returns a :class:`VerificationReport`
listing each violated identity as ``(input, expected, actual)`` strings.  A
suite passes iff that list is empty.
"""

from __future__ import annotations

import json
import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import bijection as bj
from . import roots as rs
from .poset import RankedPoset, bits, cycles_of, permutation_of, restrict_to_support
from .weyl import WeylGroup, format_cycles

SUITES = ("panyushev", "rowmotion", "ast", "hat", "section6", "structure")


@dataclass
class VerificationReport:
    suite_name: str
    type_label: str
    rank: int
    checked_count: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, inp, expected, actual) -> None:
        self.failures.append((str(inp), str(expected), str(actual)))

    def to_json(self) -> str:
        d = asdict(self)
        d["failures"] = [list(f) for f in self.failures]
        d["extra"] = _encode(self.extra)
        d["passed"] = self.passed
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        d.pop("passed", None)
        d["failures"] = [tuple(f) for f in d["failures"]]
        d["extra"] = _decode(d["extra"])
        return cls(**d)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.suite_name} {self.type_label}: "
                f"{self.checked_count} checked, {len(self.failures)} failures, {self.elapsed:.2f}s")


_RATIONAL = re.compile(r"^-?\d+/\d+$")


def _encode(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): _encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_encode(v) for v in x]
    return x


def _decode(x):
    if isinstance(x, str) and _RATIONAL.match(x):
        return Fraction(x)
    if isinstance(x, dict):
        return {k: _decode(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_decode(v) for v in x]
    return x


def _labels(P: rs.RootPoset, m_or_A) -> str:
    A = bits(m_or_A) if isinstance(m_or_A, int) else m_or_A
    return "{" + ", ".join(P.label(e) for e in A) + "}"


def _pop(m: int) -> int:
    return bin(m).count("1")


def _new(name: str, P: rs.RootPoset) -> tuple[VerificationReport, float]:
    return VerificationReport(name, P.type_label, P.rank_r), time.perf_counter()


def _done(rep: VerificationReport, t0: float) -> VerificationReport:
    rep.elapsed = time.perf_counter() - t0
    return rep


# -- Panyushev duality ---------------------------------------------------------------


def _cardinality_failures(label: str, masks: list[int]) -> list[tuple[int, int]]:
    P = rs.build(label)
    r = P.rank_r
    return [(m, P.base.rvac_mask(m)) for m in masks if _pop(m) + _pop(P.base.rvac_mask(m)) != r]


def _chunks(seq, k):
    size = max(1, -(-len(seq) // k))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def cardinality_violations(P: rs.RootPoset, jobs: int = 1) -> list[tuple[int, int]]:
    """``(A, Rvac A)`` masks with ``#A + #Rvac(A) != r``, in enumeration order."""
    masks = P.base.antichain_masks()
    if jobs <= 1:
        return _cardinality_failures(P.type_label, masks)
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = ex.map(_cardinality_failures, [P.type_label] * jobs, _chunks(masks, jobs))
        return [x for part in parts for x in part]


def _parabolic_checks(P: rs.RootPoset, masks, rep: VerificationReport) -> None:
    """Removing a simple root: ``alpha in A`` and ``A`` inside the parabolic."""
    B = P.base
    for s in P.simple:
        sub, emb = B.subposet(B.full & ~B.filter_mask(1 << s))
        pos = {old: new for new, old in enumerate(emb)}
        up = B.filter_mask(1 << s)
        lift = lambda m: sum(1 << emb[e] for e in bits(m))
        for m in masks:
            if m >> s & 1:
                rest = sub.mask_of(pos[e] for e in bits(m & ~(1 << s)))
                want = lift(sub.rvac_mask(rest))
            elif not m & up:
                want = (1 << s) | lift(sub.rvac_mask(sub.mask_of(pos[e] for e in bits(m))))
            else:
                continue
            got = B.rvac_mask(m)
            if got != want:
                rep.fail(_labels(P, m), _labels(P, want), _labels(P, got))


def verify_panyushev(P: rs.RootPoset, jobs: int = 1) -> VerificationReport:
    """``#A + #Rvac(A) = r`` plus the rank-reversal, parabolic and long/short properties."""
    rep, t0 = _new("panyushev", P)
    B = P.base
    masks = B.antichain_masks()
    rep.checked_count = len(masks)
    bad = cardinality_violations(P, jobs)
    for m, img in bad:
        rep.fail(_labels(P, m), f"#A + #Rvac(A) = {P.rank_r}", f"{_pop(m)} + {_pop(img)}")
    rep.extra["cardinality_violations"] = len(bad)
    h = P.coxeter_h
    levels = [B.rank_masks[i] if i <= B.max_rank else 0 for i in range(h)]
    for i in range(h):
        got = B.rvac_mask(levels[i])
        if got != levels[h - 1 - i]:
            rep.fail(f"rank {i}", _labels(P, levels[h - 1 - i]), _labels(P, got))
    _parabolic_checks(P, masks, rep)
    if P.family in ("B", "C"):
        _long_short_checks(P, masks, rep)
    return _done(rep, t0)


def _long_short_checks(P: rs.RootPoset, masks, rep: VerificationReport) -> None:
    """Long roots in ``A + Rvac(A)`` match the simple roots, directly and after unfolding."""
    B = P.base
    long_mask = B.mask_of(P.subset_L)
    want = _pop(long_mask & B.min_mask)
    for m in masks:
        got = _pop(m & long_mask) + _pop(B.rvac_mask(m) & long_mask)
        if got != want:
            rep.fail(_labels(P, m), f"{want} long roots", got)
    C = rs.build_type_C(P.rank_r)
    PA = rs.build_type_A(2 * P.rank_r - 1)
    LA, SA = PA.base.mask_of(PA.subset_L), PA.base.mask_of(PA.subset_S)
    for m in masks:
        u = PA.base.mask_of(rs.iota(C, bits(m)))
        v = PA.base.rvac_mask(u)
        if v != PA.base.mask_of(rs.iota(C, bits(B.rvac_mask(m)))):
            rep.fail(_labels(P, m), "unfolding commutes with Rvac", "differs")
        for name, S in (("L", LA), ("S", SA)):
            if bool(u & S) == bool(v & S):
                rep.fail(_labels(P, m), f"exactly one of B, Rvac(B) meets {name}", "both or neither")


def counterexample(P: rs.RootPoset):
    """Lexicographically first antichain (sorted element tuples) breaking ``#A + #Rvac(A) = r``."""
    found = [(bits(m), bits(img)) for m, img in cardinality_violations(P)]
    return min(found) if found else None


# -- rowmotion -----------------------------------------------------------------------


def verify_rowmotion(P: rs.RootPoset) -> VerificationReport:
    """``row^{2h} = id``, ``row^h = -w_0`` and orbit averages ``r/2``."""
    rep, t0 = _new("rowmotion", P)
    B = P.base
    masks, perm = permutation_of(B, "row")
    rep.checked_count = len(masks)
    h = P.coxeter_h
    power = list(range(len(masks)))
    for _ in range(h):
        power = [perm[k] for k in power]
    for k, m in enumerate(masks):
        want = B.mask_of(P.neg_w0[e] for e in bits(m))
        if masks[power[k]] != want:
            rep.fail(_labels(P, m), f"row^h = -w0 gives {_labels(P, want)}", _labels(P, masks[power[k]]))
    half = Fraction(P.rank_r, 2)
    sizes = {}
    for cyc in cycles_of(perm):
        if (2 * h) % len(cyc):
            rep.fail(_labels(P, masks[cyc[0]]), f"orbit size dividing {2 * h}", len(cyc))
        avg = Fraction(sum(_pop(masks[k]) for k in cyc), len(cyc))
        if avg != half:
            rep.fail(_labels(P, masks[cyc[0]]), f"orbit average {half}", avg)
        sizes[len(cyc)] = sizes.get(len(cyc), 0) + 1
    rep.extra["orbit_sizes"] = {str(k): v for k, v in sorted(sizes.items())}
    rep.extra["orbit_average"] = half
    return _done(rep, t0)


# -- structural identities on any ranked poset ----------------------------------------


def verify_structure(B: RankedPoset, label: str = "poset", seed: int = 0,
                     extensions: int = 5) -> VerificationReport:
    """Dihedral relations, toggle descriptions, rank reversal, and support locality."""
    rep = VerificationReport("structure", label, B.max_rank + 1)
    t0 = time.perf_counter()
    name = lambda m: str(list(bits(m)))
    masks = B.antichain_masks()
    rep.checked_count = len(masks)
    rng = random.Random(seed)
    exts = [B.linear_extension()] + [B.random_linear_extension(rng) for _ in range(extensions - 1)]
    for m in masks:
        rv = B.rvac_mask(m)
        if B.rvac_mask(rv) != m:
            rep.fail(name(m), "Rvac involution", name(B.rvac_mask(rv)))
        if B.rvac_mask(B.row_mask(m)) != B.row_inv_mask(rv):
            rep.fail(name(m), "Rvac row = row^-1 Rvac", "differs")
        row = B.row_mask(m)
        for ext in exts:
            t = m
            for p in ext:
                t = B.toggle_mask(p, t)
            if t != row:
                rep.fail(name(m), f"toggles along {ext}", name(t))
        sweep = m
        for i in range(B.max_rank + 1):
            sweep = B.rank_toggle_mask(i, sweep)
        if sweep != row:
            rep.fail(name(m), "rank-toggle sweep = row", name(sweep))
        _support_locality(B, m, rep, name)
    top = B.max_rank + 1
    levels = [B.rank_masks[i] for i in range(top)] + [0]
    # rank reversal needs every maximal element on the top rank (see is_graded)
    rep.extra["graded"] = is_graded(B)
    for i in range(top + 1 if rep.extra["graded"] else 0):
        if B.rvac_mask(levels[i]) != levels[top - i]:
            rep.fail(f"rank {i}", name(levels[top - i]), name(B.rvac_mask(levels[i])))
    for p in bits(B.min_mask):
        up = B.filter_mask(1 << p)
        sub, emb = B.subposet(B.full & ~up)
        pos = {old: new for new, old in enumerate(emb)}
        lift = lambda x: sum(1 << emb[e] for e in bits(x))
        for m in masks:
            if m >> p & 1:
                want = lift(sub.rvac_mask(sub.mask_of(pos[e] for e in bits(m & ~(1 << p)))))
            elif not m & up:
                want = (1 << p) | lift(sub.rvac_mask(sub.mask_of(pos[e] for e in bits(m))))
            else:
                continue
            if B.rvac_mask(m) != want:
                rep.fail(name(m), name(want), name(B.rvac_mask(m)))
    return _done(rep, t0)


def is_graded(B: RankedPoset) -> bool:
    """All maximal elements share the top rank.

    Rowvacuation reverses the rank levels of graded posets only: on
    ``{0 < 2, 1}`` it sends the top level ``{2}`` to ``{1, 2}``.
    """
    return all(B.rank[e] == B.max_rank for e in B.maximal)


def _support_locality(B: RankedPoset, m: int, rep, name) -> None:
    x = B.row_inv_mask(B.rvac_mask(m))
    if B.support_mask(x) != B.support_mask(m):
        rep.fail(name(m), "row^-1 Rvac keeps the support", name(x))
        return
    sub, emb = restrict_to_support(B, bits(B.support_mask(m)))
    pos = {old: new for new, old in enumerate(emb)}
    local = sub.mask_of(pos[e] for e in bits(m))
    y = sum(1 << emb[e] for e in bits(sub.row_inv_mask(sub.rvac_mask(local))))
    if y != x:
        rep.fail(name(m), f"local row^-1 Rvac gives {name(y)}", name(x))


# -- the bijection Theta --------------------------------------------------------------


def verify_ast(P: rs.RootPoset, group: WeylGroup | None = None) -> VerificationReport:
    """Theta axioms, Flip equivariance and the diagram descriptions."""
    rep, t0 = _new("ast", P)
    W = group or WeylGroup(P.family, P.rank_r)
    NC = W.nc_lattice()
    TU = bj.ThetaUniform(P, W)
    B = P.base
    masks = B.antichain_masks()
    rep.checked_count = len(masks)
    theta = {m: TU(bits(m)) for m in masks}
    fmt = lambda w: format_cycles(w)
    image = set(theta.values())
    if len(image) != len(masks) or image != set(NC.elements):
        rep.fail("all antichains", f"bijection onto NC ({len(NC)})", f"{len(image)} distinct values")
    base = B.mask_of(P.simple[i - 1] for i in W.L)
    if not theta[base].is_identity:
        rep.fail(_labels(P, base), "e", fmt(theta[base]))
    nc_sub = {}
    for m in masks:
        A = bits(m)
        w = theta[m]
        if w not in NC:
            rep.fail(_labels(P, A), "element of NC", fmt(w))
            continue
        if theta[B.row_mask(m)] != NC.kreweras(w):
            rep.fail(_labels(P, A), f"Krew: {fmt(NC.kreweras(w))}", fmt(theta[B.row_mask(m)]))
        if theta[B.apply_mask("row_inv_rvac", m)] != NC.flip(w):
            rep.fail(_labels(P, A), f"Flip: {fmt(NC.flip(w))}", fmt(theta[B.apply_mask("row_inv_rvac", m)]))
        J = P.support_indices(A)
        if J not in nc_sub:
            nc_sub[J] = W.nc_lattice(J)
        local = TU(A, J)
        if local not in nc_sub[J]:
            rep.fail(_labels(P, A), f"element of NC(W_{sorted(J)})", fmt(local))
        lifted = W.product([i for i in W.L if i not in J]) * local
        if lifted != w:
            rep.fail(_labels(P, A), f"parabolic induction {fmt(lifted)}", fmt(w))
    if P.family == "A":
        _type_a_diagram_checks(P, masks, rep)
    if P.family == "D":
        _type_d_diagram_checks(P, masks, theta, rep)
        hat_rep = verify_hat(P)
        rep.failures += hat_rep.failures
        rep.extra["hat_checked"] = hat_rep.checked_count
    return _done(rep, t0)


def _type_a_diagram_checks(P, masks, rep) -> None:
    B = P.base
    for m in masks:
        A = bits(m)
        D = bj.phi_diagram_A(P, A)
        if not D.is_noncrossing():
            rep.fail(_labels(P, A), "noncrossing matching", D.to_text())
        if bj.theta_A(P, A) != bj.theta_uniform(P, A):
            rep.fail(_labels(P, A), format_cycles(bj.theta_uniform(P, A)), format_cycles(bj.theta_A(P, A)))
        reflected = bj.reflect_through_M(D)
        other = bj.phi_diagram_A(P, bits(B.row_mask(B.rvac_mask(m))))
        if reflected != other:
            rep.fail(_labels(P, A), "row Rvac reflects the diagram through M", "differs")


def _type_d_diagram_checks(P, masks, theta, rep) -> None:
    n = P.rank_r
    for m in masks:
        A = bits(m)
        if rs.delta_set(P, A) == A:
            continue
        try:
            part = bj.theta_D_partial(P, A)
        except AssertionError as exc:
            rep.fail(_labels(P, A), "four unmatched vertices", exc)
            continue
        D = bj.xi_and_phi_D(P, A)
        if D.rotate180() != D:
            rep.fail(_labels(P, A), "symmetric under half turn", "not symmetric")
        w = theta[m]
        for i, j in part.values.items():
            if w(i) != j:
                rep.fail(_labels(P, A), f"Theta({i}) = {j}", w(i))
        if abs(w(n)) != part.x or abs(w(part.y)) != n:
            rep.fail(_labels(P, A), f"x = {part.x}, y = {part.y}", format_cycles(w))


def verify_hat(P: rs.RootPoset) -> VerificationReport:
    """Hat identities over every antichain of ``D_n`` with ``delta(A) != A``."""
    rep, t0 = _new("hat", P)
    n = P.rank_r
    B = P.base
    PA = rs.build_type_A(2 * n - 3)
    BA = PA.base
    simple_end = (1 << P.simple[n - 2]) | (1 << P.simple[n - 1])
    hatm = lambda m: BA.mask_of(bj.hat_set(P, bits(m)))
    count = 0
    for m in B.antichain_masks():
        A = bits(m)
        if rs.delta_set(P, A) == A:
            continue
        count += 1
        h = hatm(m)
        if not BA.is_antichain_mask(h) or rs.eta_set(PA, bits(h)) != bits(h):
            rep.fail(_labels(P, A), "eta-symmetric antichain", _labels(PA, h))
        got = BA.row_mask(BA.rvac_mask(h))
        want = hatm(B.row_mask(B.rvac_mask(m)))
        if got != want:
            rep.fail(_labels(P, A), f"row Rvac commutes with hat: {_labels(PA, want)}", _labels(PA, got))
        D = bj.xi_and_phi_D(P, A)
        DB = bj.xi_and_phi_D(P, bits(B.row_mask(B.rvac_mask(m))))
        if bj.reflect_through_M(D) != DB:
            rep.fail(_labels(P, A), "row Rvac reflects phi_D through M", "differs")
        if m & simple_end:
            continue
        if BA.row_mask(h) != hatm(B.row_mask(m)):
            rep.fail(_labels(P, A), "row commutes with hat", _labels(PA, BA.row_mask(h)))
        if BA.rvac_mask(h) != hatm(B.rvac_mask(m)):
            rep.fail(_labels(P, A), "Rvac commutes with hat", _labels(PA, BA.rvac_mask(h)))
    rep.checked_count = count
    alpha_n = (P.simple[n - 1],)
    lhs = BA.rvac_mask(hatm(1 << alpha_n[0]))
    rhs = hatm(B.rvac_mask(1 << alpha_n[0]))
    rep.extra["alpha_n_witness"] = {"rvac_of_hat": _labels(PA, lhs), "hat_of_rvac": _labels(PA, rhs)}
    if lhs == rhs or lhs != BA.min_mask or rhs != BA.min_mask & ~(1 << PA.simple[n - 2]):
        rep.fail(_labels(P, alpha_n), "Rvac(hat) = all simples, hat(Rvac) misses the middle",
                 f"{_labels(PA, lhs)} vs {_labels(PA, rhs)}")
    return _done(rep, t0)


# -- the three-case analysis in type D -----------------------------------------------


def classify_D(P: rs.RootPoset, A) -> int:
    """1: delta-symmetric; 2: asymmetric avoiding both end simples; 3: meets them."""
    n = P.rank_r
    if {P.simple[n - 2], P.simple[n - 1]} & set(A):
        return 3
    return 1 if rs.delta_set(P, A) == tuple(sorted(A)) else 2


def verify_type_d_cases(n: int) -> VerificationReport:
    """Size duality in D_n split into the three cases of :func:`classify_D`."""
    P = rs.build_type_D(n)
    rep, t0 = _new("section6", P)
    B = P.base
    C = rs.build_type_C(n - 1)
    PA = rs.build_type_A(2 * n - 3)
    BA = PA.base
    SC = C.base.mask_of(C.subset_S)
    LA = BA.mask_of(PA.subset_L)
    LD = B.mask_of(P.subset_L)
    counts = {1: 0, 2: 0, 3: 0}
    masks = B.antichain_masks()
    rep.checked_count = len(masks)
    for m in masks:
        A = bits(m)
        case = classify_D(P, A)
        counts[case] += 1
        rv = B.rvac_mask(m)
        if _pop(m) + _pop(rv) != n:
            rep.fail(_labels(P, A), f"#A + #Rvac(A) = {n}", _pop(m) + _pop(rv))
        if case == 1:
            g = C.base.mask_of(rs.gamma_set(P, A))
            grv = C.base.mask_of(rs.gamma_set(P, bits(rv)))
            if not C.base.is_antichain_mask(g) or C.base.rvac_mask(g) != grv:
                rep.fail(_labels(P, A), "Rvac_C(gamma A) = gamma(Rvac A)", _labels(C, C.base.rvac_mask(g)))
            for x in (g, grv):
                eps = int(bool(x & SC))
                if len(rs.gamma_preimage(P, bits(x))) != _pop(x) + eps:
                    rep.fail(_labels(C, x), "#gamma^-1(B) = #B + eps(B)", len(rs.gamma_preimage(P, bits(x))))
            if bool(g & SC) == bool(grv & SC):
                rep.fail(_labels(P, A), "eps(gamma A) + eps(Rvac_C gamma A) = 1", "0 or 2")
        elif case == 2:
            h = BA.mask_of(bj.hat_set(P, A))
            want = 2 * len(A) - (1 if not m & LD else 2)
            if _pop(h) != want:
                rep.fail(_labels(P, A), f"#hat A = {want}", _pop(h))
            if (not m & LD) != bool(h & LA):
                rep.fail(_labels(P, A), "A misses L_D iff hat A meets L_A", "differs")
            if BA.rvac_mask(h) != BA.mask_of(bj.hat_set(P, bits(rv))):
                rep.fail(_labels(P, A), "Rvac commutes with hat", "differs")
            if bool(h & LA) == bool(BA.rvac_mask(h) & LA):
                rep.fail(_labels(P, A), "exactly one of hat A, Rvac(hat A) meets L", "0 or 2")
        else:
            s = P.simple[n - 1] if m >> P.simple[n - 1] & 1 else P.simple[n - 2]
            sub, emb = B.subposet(B.full & ~B.filter_mask(1 << s))
            pos = {old: new for new, old in enumerate(emb)}
            local = sub.rvac_mask(sub.mask_of(pos[e] for e in A if e != s))
            if sum(1 << emb[e] for e in bits(local)) != rv:
                rep.fail(_labels(P, A), "Rvac(A) = Rvac' (A - alpha)", _labels(P, rv))
    rep.extra["case_counts"] = {str(k): v for k, v in counts.items()}
    if sum(counts.values()) != rs.catalan(P):
        rep.fail("case partition", rs.catalan(P), sum(counts.values()))
    return _done(rep, t0)
