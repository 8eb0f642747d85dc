"""Independent verification machinery.

Everything a construction claims is rechecked here by a second route:
definitional (quadratic-time) reference transforms against the butterfly
kernels, closed-form spectrum formulas against exact spectra at every point,
fragment-to-full spectrum ratios against the admissible branch table, and
whole-construction reports covering ANF, flatness, degree parity, duals and
rotation symmetry.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import (
    AnfPolynomial,
    BitVector,
    BooleanFunction,
    CapacityError,
    DimensionError,
    InvalidSpecError,
    NotBentError,
    anf_from_truth_table,
    characteristic_function,
    popcounts,
    rotation_symmetry_order,
    truth_table_from_anf,
)
from .spectra import (
    GaussianInteger,
    NegaSpectrum,
    WalshSpectrum,
    classify,
    dual,
    fragmentary_nega,
    fragmentary_nega_spectrum,
    fragmentary_walsh,
    fragmentary_walsh_spectrum,
    i_power,
    mm_function,
    nega_transform,
    walsh_transform,
)
from .subspaces import (
    GammaSpec,
    LinearSubspace,
    VectorSet,
    build_T,
    build_modifier_set,
    coset_representatives,
    in_pair_antirepetition,
    in_pair_repetition,
    orbit,
    orthogonal_complement,
)
from .constructions import (
    ConstructedFunction,
    base_function,
    base_of,
    family_max_degree,
    modifier_set_of,
)
from .reference import ReferenceCase


# ---------------------------------------------------------------------------
# check plumbing


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named verification step."""

    name: str
    passed: bool
    details: str = ""
    counterexample: Optional[str] = None
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        d: dict = {
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    checks: tuple[CheckResult, ...]
    elapsed_ms: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.name)],
        }


class _Checks:
    """Accumulates timed check outcomes for one report."""

    def __init__(self) -> None:
        self.results: list[CheckResult] = []
        self._start = time.perf_counter()

    def add(self, name: str, fn: Callable[[], tuple[bool, str, Optional[str]]]) -> None:
        t0 = time.perf_counter()
        passed, details, counterexample = fn()
        self.results.append(
            CheckResult(name, passed, details, counterexample,
                        (time.perf_counter() - t0) * 1000.0))

    def report(self, subject: str) -> VerificationReport:
        return VerificationReport(
            subject, tuple(self.results),
            (time.perf_counter() - self._start) * 1000.0)


# ---------------------------------------------------------------------------
# definitional reference transforms


_NAIVE_LIMIT = 14


def naive_transforms(f: BooleanFunction) -> tuple[WalshSpectrum, NegaSpectrum]:
    """Both spectra straight from their defining sums, one point at a time.

    Quadratic cost, so refused above n = 14; used to cross-check the
    butterfly kernels on an algorithmically independent route.
    """
    if f.n > _NAIVE_LIMIT:
        raise CapacityError(f"naive transforms are limited to n <= {_NAIVE_LIMIT}")
    size = 1 << f.n
    signs = f.sign_array()
    pops = popcounts(size)
    re_twist = signs * np.array([1, 0, -1, 0], dtype=np.int64)[pops % 4]
    im_twist = signs * np.array([0, 1, 0, -1], dtype=np.int64)[pops % 4]
    xs = np.arange(size, dtype=np.int64)
    w = np.empty(size, dtype=np.int64)
    re = np.empty(size, dtype=np.int64)
    im = np.empty(size, dtype=np.int64)
    for u in range(size):
        dot_signs = 1 - 2 * (pops[xs & u] & 1)
        w[u] = np.dot(signs, dot_signs)
        re[u] = np.dot(re_twist, dot_signs)
        im[u] = np.dot(im_twist, dot_signs)
    for a in (w, re, im):
        a.setflags(write=False)
    return WalshSpectrum(f.n, w), NegaSpectrum(f.n, re, im)


# ---------------------------------------------------------------------------
# fragment-to-full spectrum ratios of a flat base


NEGA_BRANCHES = ("0", "1", "i", "-i")


@dataclass(frozen=True, eq=False)
class FrameCoefficients:
    """Per-point branch codes of the fragment ratios of a flat function.

    Flipping a bent-negabent f0 on a set T turns each spectrum value into
    (1 - 2c) times the original, where c is the fragment-to-full ratio at
    that point.  Flatness survives exactly when |1 - 2c| = 1: Walsh branch
    '0' or '1', nega branch '0', '1', 'i' (ratio (1-i)/2) or '-i' (ratio
    (1+i)/2).  -1 marks a point whose ratio is outside the branch table.
    """

    n: int
    walsh_branch: np.ndarray
    nega_branch: np.ndarray

    @property
    def admissible(self) -> bool:
        return self.walsh_counterexample() is None and self.nega_counterexample() is None

    def walsh_counterexample(self) -> Optional[int]:
        bad = np.nonzero(self.walsh_branch < 0)[0]
        return int(bad[0]) if bad.size else None

    def nega_counterexample(self) -> Optional[int]:
        bad = np.nonzero(self.nega_branch < 0)[0]
        return int(bad[0]) if bad.size else None

    def walsh_code(self, u) -> str:
        idx = u.bits if isinstance(u, BitVector) else int(u)
        b = int(self.walsh_branch[idx])
        return str(b) if b >= 0 else "!"

    def nega_code(self, u) -> str:
        idx = u.bits if isinstance(u, BitVector) else int(u)
        b = int(self.nega_branch[idx])
        return NEGA_BRANCHES[b] if b >= 0 else "!"

    def walsh_counts(self) -> dict[str, int]:
        return {
            "0": int((self.walsh_branch == 0).sum()),
            "1": int((self.walsh_branch == 1).sum()),
            "!": int((self.walsh_branch < 0).sum()),
        }

    def nega_counts(self) -> dict[str, int]:
        out = {code: int((self.nega_branch == i).sum())
               for i, code in enumerate(NEGA_BRANCHES)}
        out["!"] = int((self.nega_branch < 0).sum())
        return out


def extract_frame_coefficients(f0: BooleanFunction, t: VectorSet) -> FrameCoefficients:
    """Branch codes of the fragment ratios of f0 over t, at every point.

    Integer-exact: each branch is decided by comparing the doubled fragment
    value against the full value, never by division.  Raises NotBentError
    unless f0 is bent-negabent (the ratios need flat denominators).
    """
    if f0.n != t.n:
        raise DimensionError("function and subset dimensions differ")
    wf = walsh_transform(f0)
    if f0.n % 2 or wf.flat_counterexample() is not None:
        raise NotBentError("fragment ratios need a bent base function")
    nf = nega_transform(f0)
    if nf.flat_counterexample() is not None:
        raise NotBentError("fragment ratios need a negabent base function")
    size = 1 << f0.n

    wt = fragmentary_walsh_spectrum(f0, t)
    walsh = np.full(size, -1, dtype=np.int8)
    walsh[wt.values == 0] = 0
    walsh[wt.values == wf.values] = 1

    nt = fragmentary_nega_spectrum(f0, t)
    r0, i0 = nf.re, nf.im
    r2, i2 = 2 * nt.re, 2 * nt.im
    nega = np.full(size, -1, dtype=np.int8)
    nega[(nt.re == 0) & (nt.im == 0)] = 0
    nega[(nt.re == r0) & (nt.im == i0)] = 1
    # ratio (1-i)/2 turns N into i*N; ratio (1+i)/2 turns N into -i*N
    nega[(r2 == r0 + i0) & (i2 == i0 - r0)] = 2
    nega[(r2 == r0 - i0) & (i2 == r0 + i0)] = 3
    walsh.setflags(write=False)
    nega.setflags(write=False)
    return FrameCoefficients(f0.n, walsh, nega)


# ---------------------------------------------------------------------------
# closed-form base spectra


def _parity(bits: int) -> int:
    return bits.bit_count() & 1


def walsh_g0_value(t: int, point: int) -> int:
    """Closed form of the Walsh spectrum of the 4t-variable base g0."""
    m = 2 * t
    u, v = point & ((1 << m) - 1), point >> m
    up, upp = u & ((1 << t) - 1), u >> t
    sign = -1 if _parity(up & upp) ^ _parity(u & v) else 1
    return sign << m


def nega_g0_value(t: int, point: int) -> GaussianInteger:
    """Closed form of the nega spectrum of the 4t-variable base g0."""
    m = 2 * t
    u, v = point & ((1 << m) - 1), point >> m
    up, upp = u & ((1 << t) - 1), u >> t
    vp, vpp = v & ((1 << t) - 1), v >> t
    sign = -1 if _parity((up ^ vp) & (upp ^ vpp)) else 1
    return i_power(t - u.bit_count()).scale(sign << m)


def walsh_h0_value(t: int, point: int) -> int:
    """Closed form of the Walsh spectrum of the (4t+2)-variable base h0."""
    m = 2 * t
    big_u = point & ((1 << (m + 1)) - 1)
    big_v = point >> (m + 1)
    u, um = big_u & ((1 << m) - 1), big_u >> m
    v = big_v & ((1 << m) - 1)
    up, upp = u & ((1 << t) - 1), u >> t
    exp = _parity(up & upp) ^ _parity(big_u & big_v) ^ (um & ((v ^ (u >> t)) & 1))
    sign = -1 if exp else 1
    return sign << (m + 1)


def nega_h0_value(t: int, point: int) -> GaussianInteger:
    """Closed form of the nega spectrum of the (4t+2)-variable base h0."""
    m = 2 * t
    big_u = point & ((1 << (m + 1)) - 1)
    big_v = point >> (m + 1)
    u, um = big_u & ((1 << m) - 1), big_u >> m
    v, vm = big_v & ((1 << m) - 1), big_v >> m
    base = nega_g0_value(t, u | (v << m))
    b = (u ^ (u >> t) ^ (v >> t) ^ vm) & 1  # u_0 + u_t + v_t + v_m
    if b == 0:
        return base.scale(2)
    return (base * GaussianInteger(0, 1)).scale(-2 if um else 2)


# ---------------------------------------------------------------------------
# closed-form fragment spectra of the four modifier families


@dataclass(frozen=True)
class _FragmentPrediction:
    walsh: int
    walsh_matches: int
    nega_doubled: GaussianInteger
    nega_matches: int
    nega_branch: str  # "zero", "half" or "full"
    structure_ok: bool


_ZERO = GaussianInteger(0, 0)


def _half_swap(bits: int, half: int) -> int:
    return (bits >> half) | ((bits & ((1 << half) - 1)) << half)


def _halved_branch(full: GaussianInteger, s: int) -> GaussianInteger:
    """Doubled value of (1 + i*(-1)^s)/2 * full."""
    return full + full * GaussianInteger(0, 1 - 2 * s)


def _predict_s1(spec: GammaSpec, point: int) -> _FragmentPrediction:
    k = spec.k
    maskk = (1 << k) - 1
    u, v = point & ((1 << 2 * k) - 1), point >> (2 * k)
    up, upp = u & maskk, u >> k
    vp, vpp = v & maskk, v >> k
    halves = [spec.gamma_halves(i) for i in range(len(spec.gammas))]

    w_target = (up ^ upp ^ vp ^ vpp ^ maskk, up ^ upp)
    w_matches = sum(1 for h in halves if h == w_target)
    walsh = walsh_g0_value(k, point) if w_matches else 0

    n_target = (vp ^ vpp, up ^ upp ^ vp ^ vpp ^ maskk)
    n_matches = sum(1 for h in halves if h == n_target)
    if n_matches:
        nega2 = nega_g0_value(k, point).scale(2)
        branch = "full"
    else:
        nega2, branch = _ZERO, "zero"
    return _FragmentPrediction(walsh, w_matches, nega2, n_matches, branch, True)


def _predict_s2(spec: GammaSpec, point: int) -> _FragmentPrediction:
    k = spec.k
    pairs = 2 * k
    u, v = point & ((1 << 4 * k) - 1), point >> (4 * k)

    w_matches = n_matches = 0
    for g in spec.gammas:
        sw = _half_swap(g.bits, 2 * k)
        if in_pair_repetition(u ^ g.bits, pairs) and in_pair_repetition(v ^ sw, pairs):
            w_matches += 1
        if (in_pair_antirepetition(u ^ g.bits, pairs)
                and in_pair_antirepetition(v ^ g.bits ^ sw, pairs)):
            n_matches += 1
    walsh = walsh_g0_value(2 * k, point) if w_matches else 0
    if n_matches:
        nega2 = nega_g0_value(2 * k, point).scale(2)
        branch = "full"
    else:
        nega2, branch = _ZERO, "zero"
    return _FragmentPrediction(walsh, w_matches, nega2, n_matches, branch, True)


def _predict_s3(spec: GammaSpec, point: int) -> _FragmentPrediction:
    k = spec.k
    m = 2 * k
    maskk = (1 << k) - 1
    big_u = point & ((1 << (m + 1)) - 1)
    big_v = point >> (m + 1)
    u, um = big_u & ((1 << m) - 1), big_u >> m
    v, vm = big_v & ((1 << m) - 1), big_v >> m
    up, upp = u & maskk, u >> k
    vp, vpp = v & maskk, v >> k
    halves = [spec.gamma_halves(i) for i in range(len(spec.gammas))]

    w_matches = 0
    for i, (g1, g2) in enumerate(halves):
        if (g2 == up ^ upp ^ um and (g1 ^ g2) == vp ^ vpp ^ maskk
                and um in spec.e_values(i)):
            w_matches += 1
    walsh = walsh_h0_value(k, point) if w_matches else 0

    candidates = []
    for i, (g1, g2) in enumerate(halves):
        for eps in spec.e_values(i):
            if g1 == vp ^ vpp and (g1 ^ g2) == up ^ upp ^ maskk ^ eps:
                candidates.append((i, eps))
    structure_ok = len(candidates) <= 2
    if len(candidates) == 0:
        nega2, branch = _ZERO, "zero"
    elif len(candidates) == 1:
        _, eps = candidates[0]
        s = (u ^ (u >> k) ^ (v >> k) ^ vm ^ um ^ eps) & 1
        nega2, branch = _halved_branch(nega_h0_value(k, point), s), "half"
    else:
        # two contributions: distinct gammas sharing gamma_1, complementary eps
        (i1, e1), (i2, e2) = candidates[:2]
        structure_ok = (structure_ok and i1 != i2 and (e1 ^ e2) == 1
                        and halves[i1][0] == halves[i2][0])
        nega2, branch = nega_h0_value(k, point).scale(2), "full"
    return _FragmentPrediction(walsh, w_matches, nega2, len(candidates),
                               branch, structure_ok)


def _predict_s4(spec: GammaSpec, point: int) -> _FragmentPrediction:
    k = spec.k
    pairs = 2 * k
    m = 4 * k
    big_u = point & ((1 << (m + 1)) - 1)
    big_v = point >> (m + 1)
    u, um = big_u & ((1 << m) - 1), big_u >> m
    v, vm = big_v & ((1 << m) - 1), big_v >> m

    w_matches = 0
    candidates = []
    for i, g in enumerate(spec.gammas):
        sw = _half_swap(g.bits, 2 * k)
        if (um in spec.e_values(i)
                and in_pair_repetition(u ^ um ^ g.bits, pairs)
                and in_pair_repetition(v ^ sw, pairs)):
            w_matches += 1
        for eps in spec.e_values(i):
            if (in_pair_antirepetition(u ^ g.bits ^ eps, pairs)
                    and in_pair_antirepetition(v ^ g.bits ^ sw, pairs)):
                candidates.append((i, eps))
    walsh = walsh_h0_value(2 * k, point) if w_matches else 0
    if not candidates:
        nega2, branch = _ZERO, "zero"
    else:
        _, eps = candidates[0]
        s = (u ^ (u >> 2 * k) ^ (v >> 2 * k) ^ vm ^ um ^ eps) & 1
        nega2, branch = _halved_branch(nega_h0_value(2 * k, point), s), "half"
    return _FragmentPrediction(walsh, w_matches, nega2, len(candidates),
                               branch, len(candidates) <= 1)


_PREDICTORS = {"S1": _predict_s1, "S2": _predict_s2,
               "S3": _predict_s3, "S4": _predict_s4}

_FRAGMENT_BASES = {"S1": ("g0", 1), "S2": ("g0", 2), "S3": ("h0", 1), "S4": ("h0", 2)}

# largest admissible candidate count per point and family
_NEGA_MATCH_BOUND = {"S1": 1, "S2": 1, "S3": 2, "S4": 1}


def _sample_points(size: int, want: int = 64) -> range:
    if size <= want:
        return range(size)
    step = size // want
    return range(0, step * want, step)


def verify_fragmentary_lemma(spec: GammaSpec) -> VerificationReport:
    """Compare the closed-form fragment spectra of one modifier set against
    exact masked transforms at every point.

    Also checks the closed-form base spectra, the per-point bound on the
    number of contributing parameters, and (on a deterministic sample) the
    literal restricted sums against the masked butterfly route.
    """
    if spec.family not in _PREDICTORS:
        raise InvalidSpecError(f"no fragment lemma for family {spec.family!r}")
    base_name, t_mult = _FRAGMENT_BASES[spec.family]
    t = t_mult * spec.k
    f0 = base_function(base_name, t)
    n = f0.n
    size = 1 << n
    tset = build_modifier_set(spec)
    predict = _PREDICTORS[spec.family]
    base_walsh = walsh_g0_value if base_name == "g0" else walsh_h0_value
    base_nega = nega_g0_value if base_name == "g0" else nega_h0_value

    checks = _Checks()
    wf = walsh_transform(f0)
    nf = nega_transform(f0)
    wt = fragmentary_walsh_spectrum(f0, tset)
    nt = fragmentary_nega_spectrum(f0, tset)
    preds = [predict(spec, idx) for idx in range(size)]

    def base_walsh_check():
        for idx in range(size):
            if wf.value(idx) != base_walsh(t, idx):
                return False, "", f"point {idx}: {wf.value(idx)} != {base_walsh(t, idx)}"
        return True, f"{size} points", None

    checks.add("base-walsh-closed-form", base_walsh_check)

    def base_nega_check():
        for idx in range(size):
            if nf.value(idx) != base_nega(t, idx):
                return False, "", f"point {idx}: {nf.value(idx)} != {base_nega(t, idx)}"
        return True, f"{size} points", None

    checks.add("base-nega-closed-form", base_nega_check)

    def fragment_walsh_check():
        hits = 0
        for idx in range(size):
            if wt.value(idx) != preds[idx].walsh:
                return False, "", f"point {idx}: {wt.value(idx)} != {preds[idx].walsh}"
            hits += 1 if preds[idx].walsh_matches else 0
        return True, f"{size} points, {hits} nonzero", None

    checks.add("fragment-walsh-closed-form", fragment_walsh_check)

    def fragment_nega_check():
        branches = {"zero": 0, "half": 0, "full": 0}
        for idx in range(size):
            got = nt.value(idx).scale(2)
            if got != preds[idx].nega_doubled:
                return False, "", f"point {idx}: 2N = {got} != {preds[idx].nega_doubled}"
            branches[preds[idx].nega_branch] += 1
        detail = " ".join(f"{k}={v}" for k, v in branches.items())
        return True, f"{size} points, branches {detail}", None

    checks.add("fragment-nega-closed-form", fragment_nega_check)

    def match_bounds_check():
        bound = _NEGA_MATCH_BOUND[spec.family]
        w_max = n_max = 0
        for idx in range(size):
            p = preds[idx]
            if p.walsh_matches > 1 or p.nega_matches > bound or not p.structure_ok:
                return False, "", (
                    f"point {idx}: walsh matches {p.walsh_matches}, "
                    f"nega matches {p.nega_matches}, structure ok {p.structure_ok}")
            w_max = max(w_max, p.walsh_matches)
            n_max = max(n_max, p.nega_matches)
        return True, f"max walsh matches {w_max}, max nega matches {n_max} (bound {bound})", None

    checks.add("contribution-bounds", match_bounds_check)

    def literal_sample_check():
        pts = _sample_points(size)
        for idx in pts:
            if fragmentary_walsh(f0, tset, idx) != wt.value(idx):
                return False, "", f"walsh point {idx}"
            if fragmentary_nega(f0, tset, idx) != nt.value(idx):
                return False, "", f"nega point {idx}"
        return True, f"{len(pts)} sampled points", None

    checks.add("literal-sum-agreement", literal_sample_check)

    subject = f"{spec.family} fragment lemma k={spec.k} |Gamma|={len(spec.gammas)}"
    return checks.report(subject)


# ---------------------------------------------------------------------------
# reference-case replay


def check_reference_case(case: ReferenceCase) -> VerificationReport:
    """Rebuild a recorded construction and compare against its fixture."""
    cf = case.build()
    checks = _Checks()
    anf = anf_from_truth_table(cf.function)

    def terms_check():
        got = anf
        if case.delta_over_base:
            got = got ^ anf_from_truth_table(base_of(cf))
        got_masks = frozenset(got.monomials())
        if got_masks == case.expected_terms:
            return True, f"{len(got_masks)} monomials", None
        missing = sorted(case.expected_terms - got_masks)
        extra = sorted(got_masks - case.expected_terms)
        def fmt(masks):
            return ", ".join(AnfPolynomial(cf.n, 1 << m).to_text() for m in masks[:4])
        return False, "", (
            f"{len(missing)} missing ({fmt(missing)}), {len(extra)} extra ({fmt(extra)})")

    checks.add("anf-terms-match", terms_check)

    checks.add("closed-anf-agrees", lambda: (
        cf.closed_anf == anf, f"{anf.term_count()} terms", None))

    def degree_check():
        d = anf.degree()
        return d == case.expected_degree, f"degree {d}", (
            None if d == case.expected_degree else f"expected {case.expected_degree}")

    checks.add("degree", degree_check)

    def flat_check():
        cls = classify(cf.function)
        return cls.is_bent_negabent, "bent and negabent", (
            None if cls.is_bent_negabent else f"bent={cls.is_bent} negabent={cls.is_negabent}")

    checks.add("bent-negabent", flat_check)

    if case.expected_rotation_order is not None:
        def rotation_check():
            order = rotation_symmetry_order(cf.function)
            return (order == case.expected_rotation_order,
                    f"rotation order {order}", None)

        checks.add("rotation-order", rotation_check)

    return checks.report(case.name)


# ---------------------------------------------------------------------------
# relation table between bent and negabent behaviour


def _random_function(rng: np.random.Generator, n: int) -> BooleanFunction:
    nbytes = max(1, (1 << n) // 8)
    return BooleanFunction(n, int.from_bytes(rng.bytes(nbytes), "little"))


def check_table1(k: int = 1) -> VerificationReport:
    """Recheck the classification rows relating the bases, the modifier-set
    indicators and the quadratic symmetric function at parameter k."""
    checks = _Checks()
    n4 = 4 * k
    k2 = 2 * k
    sigma4 = base_function("sigma2", n4)
    g0 = base_function("g0", k)
    h0 = base_function("h0", k)
    f0 = base_function("f0", k)

    def named_flat(f: BooleanFunction, want_bent: bool, want_nega: bool):
        cls = classify(f)
        ok = cls.is_bent == want_bent and cls.is_negabent == want_nega
        return ok, f"bent={cls.is_bent} negabent={cls.is_negabent}", None

    checks.add("sigma2-bent-not-negabent", lambda: named_flat(sigma4, True, False))
    checks.add("g0-bent-negabent", lambda: named_flat(g0, True, True))
    checks.add("h0-bent-negabent", lambda: named_flat(h0, True, True))

    def f0_check():
        cls = classify(f0)
        order = rotation_symmetry_order(f0)
        ok = cls.is_bent_negabent and order == 2
        return ok, f"bent-negabent, rotation order {order}", None

    checks.add("f0-2rs-bent-negabent", f0_check)

    def sweep_chis(specs):
        count = 0
        for spec in specs:
            chi = characteristic_function(build_modifier_set(spec))
            cls = classify(chi)
            if cls.is_bent or not cls.is_negabent:
                return False, "", (
                    f"{spec.family} gammas {[str(g) for g in spec.gammas]}: "
                    f"bent={cls.is_bent} negabent={cls.is_negabent}")
            count += 1
        return True, f"{count} indicator functions", None

    s1_specs = [GammaSpec(k, "S1", (BitVector(k2, g),)) for g in range(1 << k2)]
    checks.add("chi-s1-negabent-not-bent", lambda: sweep_chis(s1_specs))

    pair_basis = [(1 << (2 * i)) | (1 << (2 * i + 1)) for i in range(k2)]
    reps = coset_representatives(LinearSubspace.span(4 * k, pair_basis))
    s2_specs = [GammaSpec(k, "S2", (r,)) for r in reps]
    checks.add("chi-s2-negabent-not-bent", lambda: sweep_chis(s2_specs))

    s3_specs = [GammaSpec(k, "S3", (BitVector(k2, g),), (e,))
                for g in range(1 << k2) for e in ("0", "1", "B")]
    checks.add("chi-s3-negabent-not-bent", lambda: sweep_chis(s3_specs))

    s4_specs = [GammaSpec(k, "S4", (r,), (e,)) for r in reps for e in ("0", "1", "B")]
    checks.add("chi-s4-negabent-not-bent", lambda: sweep_chis(s4_specs))

    unit_orbit = tuple(BitVector(k2, i) for i in sorted(orbit(BitVector(k2, 1)).indices()))
    t_specs = [GammaSpec(k, "T", unit_orbit, rotation_closed=True),
               GammaSpec(k, "T", (BitVector.ones(k2),), rotation_closed=True)]

    def chi_t_check():
        for spec in t_specs:
            chi = characteristic_function(build_T(spec))
            cls = classify(chi)
            order = rotation_symmetry_order(chi)
            if cls.is_bent or not cls.is_negabent or order != 1:
                return False, "", (
                    f"gammas {[str(g) for g in spec.gammas]}: bent={cls.is_bent} "
                    f"negabent={cls.is_negabent} rotation order {order}")
        return True, f"{len(t_specs)} indicator functions, rotation order 1", None

    checks.add("chi-t-rotation-symmetric-negabent-not-bent", chi_t_check)

    def sums_check():
        cases = [
            (g0, s1_specs[1]),
            (base_function("g0", k2), s2_specs[0]),
            (h0, s3_specs[2]),
            (base_function("h0", k2), s4_specs[1]),
        ]
        for base, spec in cases:
            f = base ^ characteristic_function(build_modifier_set(spec))
            if not classify(f).is_bent_negabent:
                return False, "", f"base + {spec.family} indicator is not bent-negabent"
        ft = f0 ^ characteristic_function(build_T(t_specs[0]))
        if not classify(ft).is_bent_negabent or rotation_symmetry_order(ft) != 2:
            return False, "", "f0 + T indicator lost flatness or 2-rotation symmetry"
        return True, "S1, S2, S3, S4 and T sums all bent-negabent", None

    checks.add("base-plus-indicator-bent-negabent", sums_check)

    def named_exchange_check():
        # adding the quadratic symmetric function swaps the two flatness kinds
        if not classify(g0 ^ sigma4).is_negabent:
            return False, "", "g0 + sigma2 is not negabent"
        chi = characteristic_function(build_modifier_set(s1_specs[1]))
        if not classify(chi ^ sigma4).is_bent:
            return False, "", "S1 indicator + sigma2 is not bent"
        return True, "bent base -> negabent sum; negabent indicator -> bent sum", None

    checks.add("named-sigma2-sums", named_exchange_check)

    def sampled_exchange_check():
        rng = np.random.default_rng(20260814)
        for _ in range(50):
            f = _random_function(rng, n4)
            cls = classify(f)
            shifted = classify(f ^ sigma4)
            if cls.is_negabent != shifted.is_bent or cls.is_bent != shifted.is_negabent:
                return False, "", f"table {f.to_hex()}"
        return True, "50 random functions", None

    checks.add("sigma2-exchange-sampled", sampled_exchange_check)

    return checks.report(f"relation table k={k}")


# ---------------------------------------------------------------------------
# subspace-modification comparison cases


@dataclass(frozen=True)
class SuComparisonCase:
    """A parameter choice under which the subspace-modification recipe would
    have to cover our sets: its linearity condition holds but its coset-
    constancy condition fails at a recorded witness coset."""

    name: str
    base_name: str
    base_t: int
    m: int
    pi: tuple[int, ...]
    phi: BooleanFunction
    l_basis: tuple[int, ...]
    alpha: int
    expected_coset: tuple[int, ...]


def _su_cases() -> tuple[SuComparisonCase, ...]:
    phi4 = truth_table_from_anf(AnfPolynomial.from_monomials(4, [0b0101, 0b1010]))
    phi5 = truth_table_from_anf(AnfPolynomial.from_monomials(5, [0b0101, 0b1010]))
    ident4 = tuple(range(16))
    fold5 = tuple(idx ^ ((idx >> 4) & 1) for idx in range(32))
    return (
        SuComparisonCase(
            name="g0-diagonal-subspace",
            base_name="g0", base_t=2, m=4,
            pi=ident4, phi=phi4,
            l_basis=(0b0101, 0b1010), alpha=1,
            expected_coset=(1, 4, 11, 14),
        ),
        SuComparisonCase(
            name="g0-pair-repetition-subspace",
            base_name="g0", base_t=2, m=4,
            pi=ident4, phi=phi4,
            l_basis=(0b0011, 0b1100), alpha=1,
            expected_coset=(1, 2, 13, 14),
        ),
        SuComparisonCase(
            name="h0-diagonal-subspace",
            base_name="h0", base_t=2, m=5,
            pi=fold5, phi=phi5,
            l_basis=(0b00101, 0b01010, 0b10000), alpha=1,
            expected_coset=(1, 4, 11, 14),
        ),
        SuComparisonCase(
            name="h0-pair-repetition-subspace",
            base_name="h0", base_t=2, m=5,
            pi=fold5, phi=phi5,
            l_basis=(0b00011, 0b01100, 0b10000), alpha=1,
            expected_coset=(1, 2, 13, 14),
        ),
    )


SU_CASES: tuple[SuComparisonCase, ...] = _su_cases()


def check_su_conditions(case: SuComparisonCase) -> VerificationReport:
    """Check that the case's base has the stated shape, that the linearity
    condition on pi holds, and that coset constancy of phi fails at the
    recorded witness coset."""
    checks = _Checks()

    def shape_check():
        built = mm_function(case.pi, case.phi)
        want = base_function(case.base_name, case.base_t)
        return built == want, f"{case.base_name} on {want.n} variables", None

    checks.add("mm-shape-matches-base", shape_check)

    def linear_check():
        size = 1 << case.m
        if sorted(case.pi) != list(range(size)):
            return False, "", "image table is not a permutation"
        if case.pi[0] != 0:
            return False, "", "pi(0) != 0"
        for a in range(size):
            for b in range(size):
                if case.pi[a ^ b] != case.pi[a] ^ case.pi[b]:
                    return False, "", f"pi({a}^{b}) != pi({a})^pi({b})"
        return True, f"additive on all {size * size} pairs", None

    checks.add("pi-linear-permutation", linear_check)

    space = LinearSubspace.span(case.m, case.l_basis)
    perp = orthogonal_complement(space)
    perp_members = sorted(v.bits for v in perp.members())

    def fixes_check():
        image = sorted(case.pi[x] for x in perp_members)
        ok = image == perp_members
        return ok, f"dim L = {space.dim}, dim L-perp = {perp.dim}", None

    checks.add("pi-fixes-dual-subspace", fixes_check)

    def coset_check():
        coset = tuple(sorted(case.alpha ^ x for x in perp_members))
        if coset != case.expected_coset:
            return False, "", f"coset {coset} != recorded {case.expected_coset}"
        values = sorted({case.phi.value(x) for x in coset})
        detail = (f"coset {{{', '.join(str(i) for i in coset)}}} "
                  f"phi values {values}")
        return values == [0, 1], detail, None

    checks.add("coset-constancy-fails", coset_check)

    return checks.report(case.name)


# ---------------------------------------------------------------------------
# whole-construction verification


_NAIVE_CROSSCHECK_LIMIT = 12


def verify_construction(cf: ConstructedFunction) -> VerificationReport:
    """Recheck every claim attached to a constructed function.

    ANF against the truth table, flatness of both spectra with Parseval sums,
    the degree parity condition, the closed-form dual (pointwise, flatness
    and involution), admissibility of the fragment ratios over the modifier
    set, rotation symmetry for the rotation-symmetric families, and (when n
    is small enough) agreement of both butterflies with the definitional
    transforms.
    """
    checks = _Checks()
    f = cf.function
    n = f.n
    wf = walsh_transform(f)
    nf = nega_transform(f)
    anf = anf_from_truth_table(f)

    checks.add("walsh-parseval", lambda: (
        wf.parseval_holds(), f"sum of squares = 2^{2 * n}", None))
    checks.add("nega-parseval", lambda: (
        nf.parseval_holds(), f"sum of squared magnitudes = 2^{2 * n}", None))

    def bent_check():
        bad = wf.flat_counterexample()
        if bad is None:
            return True, f"|W| = 2^{n // 2} everywhere", None
        return False, "", f"|W({BitVector(n, bad)})| = {abs(wf.value(bad))}"

    checks.add("bent", bent_check)

    def negabent_check():
        bad = nf.flat_counterexample()
        if bad is None:
            return True, f"|N|^2 = 2^{n} everywhere", None
        return False, "", f"|N({BitVector(n, bad)})|^2 = {nf.norm_sq_value(bad)}"

    checks.add("negabent", negabent_check)

    def anf_check():
        if anf == cf.closed_anf:
            return True, f"{anf.term_count()} terms, degree {anf.degree()}", None
        diff = anf ^ cf.closed_anf
        first = next(diff.monomials())
        return False, "", f"first differing monomial {AnfPolynomial(n, 1 << first).to_text()}"

    checks.add("anf-matches-closed-form", anf_check)

    def degree_check():
        d = anf.degree()
        dmax = family_max_degree(cf.family, cf.k)
        detail = f"degree {d}, family max {dmax}, parity flag {cf.predicts_max_degree}"
        if cf.family == "F2RS_ORBIT":
            want = cf.params.vectors[0].weight()
            ok = d == want and cf.predicts_max_degree == (want == dmax)
            return ok, f"{detail}, orbit weight {want}", None
        if cf.predicts_max_degree:
            return d == dmax, detail, None
        # when the family maximum is 2 the base is already quadratic, so the
        # parity condition cannot push the degree below it
        if dmax <= 2:
            return d <= dmax, detail, None
        return d < dmax, detail, None

    checks.add("degree-parity", degree_check)

    def dual_check():
        try:
            d = dual(f)
        except NotBentError as exc:
            return False, "", str(exc)
        if d == cf.closed_dual:
            return True, "pointwise equal", None
        diff = (d ^ cf.closed_dual).support()
        first = next(diff.indices())
        return False, "", f"first differing point {BitVector(n, first)}"

    checks.add("dual-matches-closed-form", dual_check)

    def dual_flat_check():
        cls = classify(cf.closed_dual)
        return cls.is_bent_negabent, f"bent={cls.is_bent} negabent={cls.is_negabent}", None

    checks.add("dual-bent-negabent", dual_flat_check)

    def involution_check():
        try:
            back = dual(cf.closed_dual)
        except NotBentError as exc:
            return False, "", str(exc)
        return back == f, "dual of dual returns the function", None

    checks.add("dual-involution", involution_check)

    def frame_check():
        try:
            fc = extract_frame_coefficients(base_of(cf), modifier_set_of(cf))
        except NotBentError as exc:
            return False, "", str(exc)
        wdet = " ".join(f"{k}={v}" for k, v in fc.walsh_counts().items() if v)
        ndet = " ".join(f"{k}={v}" for k, v in fc.nega_counts().items() if v)
        if fc.admissible:
            return True, f"walsh branches {wdet}; nega branches {ndet}", None
        bad = fc.walsh_counterexample()
        if bad is None:
            bad = fc.nega_counterexample()
        return False, "", f"inadmissible ratio at {BitVector(n, bad)}"

    checks.add("fragment-ratios-admissible", frame_check)

    if cf.family in ("F2RS", "F2RS_SET", "F2RS_ORBIT"):
        def rotation_check():
            order = rotation_symmetry_order(f)
            return order == 2, f"rotation order {order}", None

        checks.add("rotation-symmetry-order", rotation_check)

    if n <= _NAIVE_CROSSCHECK_LIMIT:
        def naive_check():
            nw, nn = naive_transforms(f)
            ok = (np.array_equal(nw.values, wf.values)
                  and np.array_equal(nn.re, nf.re) and np.array_equal(nn.im, nf.im))
            return ok, "butterfly equals definitional sums", None

        checks.add("butterfly-matches-naive", naive_check)

    return checks.report(f"{cf.family} k={cf.k} n={n}")
