"""Bent-negabent constructions: base functions, modifier families, closed-form
ANFs, closed-form duals and the maximum-degree parity conditions.

Variable layouts (fixed across the package):

* 4t-variable base g0 and its families: x = vars 0..2t-1 (x' low half,
  x'' high half), y = vars 2t..4t-1.
* (4t+2)-variable base h0: x = vars 0..2t-1, x_m = var 2t,
  y = vars 2t+1..4t, y_m = var 4t+1.
* 4k-variable rotation-symmetric base f0: x = vars 0..2k-1, y = vars
  2k..4k-1; the even/odd sublists are x_ev = (x_0, x_2, ...),
  x_od = (x_1, x_3, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .core import (
    AnfPolynomial,
    BitVector,
    BooleanFunction,
    InvalidSpecError,
    VectorSet,
    characteristic_function,
    check_capacity,
    truth_table_from_anf,
)
from .subspaces import (
    GammaSpec,
    build_modifier_set,
    build_S1,
    build_T,
    orbit,
    orbit_representative,
    orbit_representatives,
    pair_repetition_members,
)

FAMILIES = ("G4K", "G8K", "H4K2", "H8K2", "F2RS", "F2RS_SET", "F2RS_ORBIT")

_SET_FAMILY_OF = {"G4K": "S1", "G8K": "S2", "H4K2": "S3", "H8K2": "S4"}


def normalize_family(name: str) -> str:
    tag = name.strip().upper().replace("-", "_")
    if tag not in FAMILIES:
        raise InvalidSpecError(f"unknown family {name!r}; choose from {FAMILIES}")
    return tag


def family_n(family: str, k: int) -> int:
    return {
        "G4K": 4 * k, "G8K": 8 * k, "H4K2": 4 * k + 2, "H8K2": 8 * k + 2,
        "F2RS": 4 * k, "F2RS_SET": 4 * k, "F2RS_ORBIT": 4 * k,
    }[family]


def family_max_degree(family: str, k: int) -> int:
    return {
        "G4K": 2 * k, "G8K": 4 * k, "H4K2": 2 * k + 1, "H8K2": 4 * k + 1,
        "F2RS": 2 * k, "F2RS_SET": 2 * k, "F2RS_ORBIT": 2 * k,
    }[family]


# ---------------------------------------------------------------------------
# base functions


def _g0_anf(t: int) -> AnfPolynomial:
    """x . y + y' . y'' on 4t variables (m = 2t)."""
    m, n = 2 * t, 4 * t
    mons = [(1 << i) | (1 << (m + i)) for i in range(m)]
    mons += [(1 << (m + i)) | (1 << (m + t + i)) for i in range(t)]
    return AnfPolynomial.from_monomials(n, mons)


def _h0_anf(t: int) -> AnfPolynomial:
    """X . Y + x_0 y_m + y' . y'' on 4t+2 variables (m = 2t)."""
    m, n = 2 * t, 4 * t + 2
    mons = [(1 << i) | (1 << (m + 1 + i)) for i in range(m + 1)]
    mons.append((1 << 0) | (1 << (2 * m + 1)))
    mons += [(1 << (m + 1 + i)) | (1 << (m + 1 + t + i)) for i in range(t)]
    return AnfPolynomial.from_monomials(n, mons)


def _f0_anf(k: int) -> AnfPolynomial:
    """x_ev.x_od + y_ev.y_od + x_od.y_od on 4k variables."""
    n = 4 * k
    mons = []
    for i in range(k):
        mons.append((1 << (2 * i)) | (1 << (2 * i + 1)))
        mons.append((1 << (2 * k + 2 * i)) | (1 << (2 * k + 2 * i + 1)))
        mons.append((1 << (2 * i + 1)) | (1 << (2 * k + 2 * i + 1)))
    return AnfPolynomial.from_monomials(n, mons)


def _sigma2_anf(n: int) -> AnfPolynomial:
    """Homogeneous symmetric quadratic: sum of all x_i x_j, i < j."""
    mons = [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]
    return AnfPolynomial.from_monomials(n, mons)


_BASE_ANFS = {"g0": _g0_anf, "h0": _h0_anf, "f0": _f0_anf, "sigma2": _sigma2_anf}


def base_anf(name: str, param: int) -> AnfPolynomial:
    """ANF of a named base function.  param = t for g0/h0, k for f0, n for sigma2."""
    if name not in _BASE_ANFS:
        raise InvalidSpecError(f"unknown base function {name!r}")
    if param < 1:
        raise InvalidSpecError("base function parameter must be positive")
    return _BASE_ANFS[name](param)


def base_function(name: str, param: int) -> BooleanFunction:
    return truth_table_from_anf(base_anf(name, param))


# ---------------------------------------------------------------------------
# GF(2) product expansions (factors always use pairwise disjoint variables,
# so the cross product introduces no duplicate monomials)


def _expand_product(factors: Sequence[Sequence[int]]) -> list[int]:
    masks = [0]
    for f in factors:
        masks = [m | t for m in masks for t in f]
    return masks


def _s_beta_factors(k: int, beta_bits: int, offset: int) -> list[list[int]]:
    """Indicator of x'' = x' + beta on a 2k-variable block at `offset`,
    factored as prod_j (x'_j + x''_j + beta_j + 1)."""
    factors = []
    for j in range(k):
        terms = [1 << (offset + j), 1 << (offset + k + j)]
        if not (beta_bits >> j) & 1:
            terms.append(0)
        factors.append(terms)
    return factors


def _pair_factors(pairs: int, offset: int, gamma_bits: int = 0) -> list[list[int]]:
    """Indicator of membership in gamma + A_2^pairs on a 2*pairs block,
    factored as prod_i (z_{2i} + z_{2i+1} + gamma_{2i} + gamma_{2i+1} + 1)."""
    factors = []
    for i in range(pairs):
        terms = [1 << (offset + 2 * i), 1 << (offset + 2 * i + 1)]
        if (((gamma_bits >> (2 * i)) ^ (gamma_bits >> (2 * i + 1))) & 1) == 0:
            terms.append(0)
        factors.append(terms)
    return factors


def _e_factor(var: int, symbol: str) -> list[int]:
    """Indicator of y_m in E as monomials over the single variable `var`."""
    if symbol == "1":
        return [1 << var]
    if symbol == "0":
        return [1 << var, 0]
    return [0]


def _covering_sum_masks(k2: int, gamma_bits: int) -> list[int]:
    """sum over u * v = 0, u + v >= gamma of x^u y^v on 4k vars (k2 = 2k),
    equal to prod_j (x_j + y_j + gamma_j + 1)."""
    factors = []
    for j in range(k2):
        terms = [1 << j, 1 << (k2 + j)]
        if not (gamma_bits >> j) & 1:
            terms.append(0)
        factors.append(terms)
    return _expand_product(factors)


def _orbit_sum_masks(k2: int, gamma_bits: int) -> list[int]:
    """sum over u * v = 0, u + v in O(gamma) of x^u y^v on 4k vars."""
    masks = []
    for w in orbit(BitVector(k2, gamma_bits)).indices():
        u = w
        while True:
            masks.append(u | ((w ^ u) << k2))
            if u == 0:
                break
            u = (u - 1) & w
    return masks


# ---------------------------------------------------------------------------
# rotation-symmetric parameter bundle


@dataclass(frozen=True)
class RotationSpec:
    """Vectors of length 2k parameterizing the rotation-symmetric families:
    orbit representatives P (covering form), representatives A (orbit-sum
    form) or a single gamma (single-orbit form)."""

    k: int
    vectors: tuple[BitVector, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidSpecError("k must be a positive integer")
        if not self.vectors:
            raise InvalidSpecError("vector set must be nonempty")
        for v in self.vectors:
            if v.n != 2 * self.k:
                raise InvalidSpecError(
                    f"rotation-symmetric specs with k={self.k} need vectors of "
                    f"length {2 * self.k}, got {v.n}")
        if len(set(v.bits for v in self.vectors)) != len(self.vectors):
            raise InvalidSpecError("duplicate vector")

    def normalized_reps(self) -> tuple[BitVector, ...]:
        """Canonical orbit representatives, sorted; rejects two vectors from
        the same cyclic orbit."""
        reps = sorted(set(orbit_representative(v).bits for v in self.vectors))
        if len(reps) != len(self.vectors):
            raise InvalidSpecError("two vectors lie in the same cyclic orbit")
        return tuple(BitVector(2 * self.k, r) for r in reps)


ConstructionSpec = Union[GammaSpec, RotationSpec]


def _swap_halves(bits: int, half: int) -> int:
    return (bits >> half) | ((bits & ((1 << half) - 1)) << half)


def _rotation_p_and_gamma(family: str, spec: ConstructionSpec):
    """(P representatives, full orbit-closed Gamma) for the F2RS families."""
    if isinstance(spec, GammaSpec):
        if spec.family != "T":
            raise InvalidSpecError("rotation-symmetric families take T-tagged specs")
        if not spec.rotation_closed:
            raise InvalidSpecError(
                "rotation-symmetric construction needs an orbit-closed gamma set "
                "(rotation_closed flag)")
        reps = sorted(set(orbit_representative(g).bits for g in spec.gammas))
        p = tuple(BitVector(2 * spec.k, r) for r in reps)
        return p, spec
    if not isinstance(spec, RotationSpec):
        raise InvalidSpecError("expected RotationSpec or T-tagged GammaSpec")
    p = spec.normalized_reps()
    gamma_idx = sorted(set(i for v in p for i in orbit(v).indices()))
    gammas = tuple(BitVector(2 * spec.k, i) for i in gamma_idx)
    gs = GammaSpec(spec.k, "T", gammas, rotation_closed=True)
    return p, gs


# ---------------------------------------------------------------------------
# Lemma-backed decomposition of orbit sums over the covering-sum basis


def orbit_covering_poly(k2: int, beta: BitVector) -> int:
    """Coefficient mask of sum over gamma in O(beta) of the covering sum."""
    acc = 0
    for g in orbit(beta).indices():
        for m in _covering_sum_masks(k2, g):
            acc ^= 1 << m
    return acc


def decompose_orbit_sum(k: int, vectors: Iterable[BitVector]) -> tuple[BitVector, ...]:
    """Express sum over the given orbits of the exact-cover sum as an XOR of
    covering-sum basis polynomials; returns the orbit representatives P of
    the combination.  Solvability is guaranteed for every input orbit."""
    k2 = 2 * k
    reps = orbit_representatives(k2)
    target = 0
    for v in vectors:
        for m in _orbit_sum_masks(k2, v.bits):
            target ^= 1 << m
    pivots: list[tuple[int, int, int]] = []
    for i, rep in enumerate(reps):
        poly, combo = orbit_covering_poly(k2, rep), 1 << i
        for pb, pv, pc in pivots:
            if (poly >> pb) & 1:
                poly ^= pv
                combo ^= pc
        if poly:
            pivots.append(((poly & -poly).bit_length() - 1, poly, combo))
    combo = 0
    for pb, pv, pc in pivots:
        if (target >> pb) & 1:
            target ^= pv
            combo ^= pc
    if target:
        raise InvalidSpecError("orbit sum is outside the covering-sum span")
    return tuple(reps[i] for i in range(len(reps)) if (combo >> i) & 1)


# ---------------------------------------------------------------------------
# closed-form ANFs


def closed_form_anf(family: str, spec: ConstructionSpec) -> AnfPolynomial:
    family = normalize_family(family)
    if family in _SET_FAMILY_OF:
        if not isinstance(spec, GammaSpec) or spec.family != _SET_FAMILY_OF[family]:
            raise InvalidSpecError(f"{family} needs a {_SET_FAMILY_OF[family]}-tagged GammaSpec")
        k = spec.k
        coeffs = 0
        if family == "G4K":
            base = _g0_anf(k)
            for i in range(len(spec.gammas)):
                g1, g2 = spec.gamma_halves(i)
                factors = _s_beta_factors(k, g1, 0) + _s_beta_factors(k, g2, 2 * k)
                for m in _expand_product(factors):
                    coeffs ^= 1 << m
        elif family == "G8K":
            base = _g0_anf(2 * k)
            for g in spec.gammas:
                factors = _pair_factors(2 * k, 0) + _pair_factors(2 * k, 4 * k, g.bits)
                for m in _expand_product(factors):
                    coeffs ^= 1 << m
        elif family == "H4K2":
            base = _h0_anf(k)
            for i in range(len(spec.gammas)):
                g1, g2 = spec.gamma_halves(i)
                factors = (_s_beta_factors(k, g1, 0)
                           + _s_beta_factors(k, g2, 2 * k + 1)
                           + [_e_factor(4 * k + 1, spec.e_sets[i])])
                for m in _expand_product(factors):
                    coeffs ^= 1 << m
        else:  # H8K2
            base = _h0_anf(2 * k)
            for i, g in enumerate(spec.gammas):
                factors = (_pair_factors(2 * k, 0)
                           + _pair_factors(2 * k, 4 * k + 1, g.bits)
                           + [_e_factor(8 * k + 1, spec.e_sets[i])])
                for m in _expand_product(factors):
                    coeffs ^= 1 << m
        return base ^ AnfPolynomial(base.n, coeffs)

    k = spec.k
    base = _f0_anf(k)
    coeffs = 0
    if family == "F2RS":
        p, _ = _rotation_p_and_gamma(family, spec)
        for beta in p:
            for g in orbit(beta).indices():
                for m in _covering_sum_masks(2 * k, g):
                    coeffs ^= 1 << m
    else:  # F2RS_SET / F2RS_ORBIT: the defining orbit-sum ANF
        vectors = _rotation_vectors(family, spec)
        for v in vectors:
            for m in _orbit_sum_masks(2 * k, v.bits):
                coeffs ^= 1 << m
    return base ^ AnfPolynomial(base.n, coeffs)


def _rotation_vectors(family: str, spec: ConstructionSpec) -> tuple[BitVector, ...]:
    if not isinstance(spec, RotationSpec):
        raise InvalidSpecError(f"{family} needs a RotationSpec")
    vectors = spec.normalized_reps()
    if family == "F2RS_ORBIT":
        if len(vectors) != 1:
            raise InvalidSpecError("single-orbit form takes exactly one vector")
        if vectors[0].weight() < 2:
            raise InvalidSpecError(
                "single-orbit form needs wt(gamma) >= 2 (lower weights break flatness)")
    return vectors


# ---------------------------------------------------------------------------
# closed-form duals


def _g0_dual_anf(t: int) -> AnfPolynomial:
    """x' . x'' + x . y on 4t variables."""
    m, n = 2 * t, 4 * t
    mons = [(1 << i) | (1 << (t + i)) for i in range(t)]
    mons += [(1 << i) | (1 << (m + i)) for i in range(m)]
    return AnfPolynomial.from_monomials(n, mons)


def _h0_dual_anf(t: int) -> AnfPolynomial:
    """X . Y + x' . x'' + x_m (x_t + y_0) on 4t+2 variables."""
    m, n = 2 * t, 4 * t + 2
    mons = [(1 << i) | (1 << (m + 1 + i)) for i in range(m + 1)]
    mons += [(1 << i) | (1 << (t + i)) for i in range(t)]
    mons.append((1 << m) | (1 << t))
    mons.append((1 << m) | (1 << (m + 1)))
    return AnfPolynomial.from_monomials(n, mons)


def _f0_dual_quadratic_anf(k: int) -> AnfPolynomial:
    """x_ev.x_od + y_ev.y_od + x_ev.y_ev on 4k variables."""
    n = 4 * k
    mons = []
    for i in range(k):
        mons.append((1 << (2 * i)) | (1 << (2 * i + 1)))
        mons.append((1 << (2 * k + 2 * i)) | (1 << (2 * k + 2 * i + 1)))
        mons.append((1 << (2 * i)) | (1 << (2 * k + 2 * i)))
    return AnfPolynomial.from_monomials(n, mons)


def _build_S2_dual(spec: GammaSpec) -> VectorSet:
    k = spec.k
    a_members = pair_repetition_members(2 * k)
    idxs = []
    for g in spec.gammas:
        sw = _swap_halves(g.bits, 2 * k)
        for a in a_members:
            x = g.bits ^ a
            for b in a_members:
                idxs.append(x | ((sw ^ b) << (4 * k)))
    return VectorSet.from_indices(8 * k, idxs)


def _build_S3_dual(spec: GammaSpec) -> VectorSet:
    k = spec.k
    idxs = []
    ones = (1 << k) - 1
    for i in range(len(spec.gammas)):
        g1, g2 = spec.gamma_halves(i)
        for xm in spec.e_values(i):
            for xp in range(1 << k):
                xpart = xp | ((xp ^ (xm & 1) ^ g2) << k) | (xm << (2 * k))
                for yp in range(1 << k):
                    ypart = (yp | ((yp ^ ones ^ g1 ^ g2) << k)) << (2 * k + 1)
                    for ym in (0, 1):
                        idxs.append(xpart | ypart | (ym << (4 * k + 1)))
    return VectorSet.from_indices(4 * k + 2, idxs)


def _build_S4_dual(spec: GammaSpec) -> VectorSet:
    k = spec.k
    a_members = pair_repetition_members(2 * k)
    idxs = []
    for i, g in enumerate(spec.gammas):
        sw = _swap_halves(g.bits, 2 * k)
        for xm in spec.e_values(i):
            for a in a_members:
                x = g.bits ^ (xm & 1) ^ a
                xpart = x | (xm << (4 * k))
                for b in a_members:
                    ypart = (sw ^ b) << (4 * k + 1)
                    for ym in (0, 1):
                        idxs.append(xpart | ypart | (ym << (8 * k + 1)))
    return VectorSet.from_indices(8 * k + 2, idxs)


def _even_odd_tables(k2: int) -> tuple[list[int], list[int]]:
    """For every 2k-bit value, its even-position and odd-position halves."""
    ev = [0] * (1 << k2)
    od = [0] * (1 << k2)
    for v in range(1 << k2):
        e = o = 0
        for i in range(k2 // 2):
            e |= ((v >> (2 * i)) & 1) << i
            o |= ((v >> (2 * i + 1)) & 1) << i
        ev[v], od[v] = e, o
    return ev, od


def _build_T_dual(k: int, gamma_set: set[int]) -> VectorSet:
    """Points whose derived pair (x_ev+x_od+y_ev+y_od+1_k, x_ev+y_ev) equals
    (gamma_ev, gamma_od) for some gamma in the orbit-closed set.

    The comparison splits gamma into its even- and odd-position bits; the
    concatenated-halves split is wrong here (the two only agree at k = 1)."""
    k2 = 2 * k
    ev, od = _even_odd_tables(k2)
    targets = {(ev[g], od[g]) for g in gamma_set}
    ones = (1 << k) - 1
    lowmask = (1 << k2) - 1
    idxs = []
    for z in range(1 << (4 * k)):
        x, y = z & lowmask, z >> k2
        w1 = ev[x] ^ od[x] ^ ev[y] ^ od[y] ^ ones
        w2 = ev[x] ^ ev[y]
        if (w1, w2) in targets:
            idxs.append(z)
    return VectorSet.from_indices(4 * k, idxs)


def closed_form_dual(family: str, spec: ConstructionSpec) -> BooleanFunction:
    family = normalize_family(family)
    if family in _SET_FAMILY_OF:
        if not isinstance(spec, GammaSpec) or spec.family != _SET_FAMILY_OF[family]:
            raise InvalidSpecError(f"{family} needs a {_SET_FAMILY_OF[family]}-tagged GammaSpec")
        k = spec.k
        if family == "G4K":
            ones = (1 << k) - 1
            transformed = tuple(
                BitVector(2 * k, g2 | ((g1 ^ g2 ^ ones) << k))
                for g1, g2 in (spec.gamma_halves(i) for i in range(len(spec.gammas)))
            )
            tilde = build_S1(GammaSpec(k, "S1", transformed))
            return truth_table_from_anf(_g0_dual_anf(k)) ^ characteristic_function(tilde)
        if family == "G8K":
            return (truth_table_from_anf(_g0_dual_anf(2 * k))
                    ^ characteristic_function(_build_S2_dual(spec)))
        if family == "H4K2":
            return (truth_table_from_anf(_h0_dual_anf(k))
                    ^ characteristic_function(_build_S3_dual(spec)))
        return (truth_table_from_anf(_h0_dual_anf(2 * k))
                ^ characteristic_function(_build_S4_dual(spec)))

    k = spec.k
    if family == "F2RS":
        _, gs = _rotation_p_and_gamma(family, spec)
        gamma_idx = set(g.bits for g in gs.gammas)
    else:
        vectors = _rotation_vectors(family, spec)
        p = decompose_orbit_sum(k, vectors)
        gamma_idx = set(i for beta in p for i in orbit(beta).indices())
    tilde = _build_T_dual(k, gamma_idx)
    return truth_table_from_anf(_f0_dual_quadratic_anf(k)) ^ characteristic_function(tilde)


# ---------------------------------------------------------------------------
# degree parity conditions


def predicts_max_degree(family: str, spec: ConstructionSpec) -> bool:
    """Whether the parameter parity condition for reaching the family's
    maximum algebraic degree holds."""
    family = normalize_family(family)
    if family in ("G4K", "G8K"):
        assert isinstance(spec, GammaSpec)
        return len(spec.gammas) % 2 == 1
    if family in ("H4K2", "H8K2"):
        assert isinstance(spec, GammaSpec)
        return spec.e_size_sum() % 2 == 1
    if family == "F2RS":
        p, _ = _rotation_p_and_gamma(family, spec)
        return sum(len(orbit(beta)) for beta in p) % 2 == 1
    if family == "F2RS_SET":
        vectors = _rotation_vectors(family, spec)
        p = decompose_orbit_sum(spec.k, vectors)
        return sum(len(orbit(beta)) for beta in p) % 2 == 1
    # single-orbit form: degree equals wt(gamma) exactly
    vectors = _rotation_vectors(family, spec)
    return vectors[0].weight() == 2 * spec.k


# ---------------------------------------------------------------------------
# construction driver


@dataclass(frozen=True)
class ConstructedFunction:
    function: BooleanFunction
    family: str
    params: ConstructionSpec
    closed_anf: AnfPolynomial
    closed_dual: BooleanFunction
    predicts_max_degree: bool

    @property
    def n(self) -> int:
        return self.function.n

    @property
    def k(self) -> int:
        return self.params.k


def construct(family: str, spec: ConstructionSpec) -> ConstructedFunction:
    """Build the function, its closed-form ANF, its closed-form dual and the
    degree parity flag.  The truth table and the closed forms are assembled
    by independent routes so verification is meaningful."""
    family = normalize_family(family)
    # reject over-capacity sizes before the closed-form expansion, whose cost
    # grows much faster than the truth table itself
    check_capacity(family_n(family, spec.k))
    if family in _SET_FAMILY_OF:
        if not isinstance(spec, GammaSpec) or spec.family != _SET_FAMILY_OF[family]:
            raise InvalidSpecError(f"{family} needs a {_SET_FAMILY_OF[family]}-tagged GammaSpec")
        base = {"G4K": ("g0", spec.k), "G8K": ("g0", 2 * spec.k),
                "H4K2": ("h0", spec.k), "H8K2": ("h0", 2 * spec.k)}[family]
        f = base_function(*base) ^ characteristic_function(build_modifier_set(spec))
        params: ConstructionSpec = spec
    elif family == "F2RS":
        p, gs = _rotation_p_and_gamma(family, spec)
        f = base_function("f0", gs.k) ^ characteristic_function(build_T(gs))
        params = RotationSpec(gs.k, p)
    else:
        # orbit-sum forms: build the truth table through the decomposed
        # covering form so the defining ANF is checked against it
        vectors = _rotation_vectors(family, spec)
        p = decompose_orbit_sum(spec.k, vectors)
        gamma_idx = sorted(set(i for beta in p for i in orbit(beta).indices()))
        gs = GammaSpec(spec.k, "T",
                       tuple(BitVector(2 * spec.k, i) for i in gamma_idx),
                       rotation_closed=True)
        f = base_function("f0", spec.k) ^ characteristic_function(build_T(gs))
        params = RotationSpec(spec.k, vectors)
    return ConstructedFunction(
        function=f,
        family=family,
        params=params,
        closed_anf=closed_form_anf(family, params),
        closed_dual=closed_form_dual(family, params),
        predicts_max_degree=predicts_max_degree(family, params),
    )


def modifier_set_of(cf: ConstructedFunction) -> VectorSet:
    """The set whose indicator was added to the family's base function."""
    if cf.family in _SET_FAMILY_OF:
        return build_modifier_set(cf.params)  # type: ignore[arg-type]
    base = base_function("f0", cf.params.k)
    return (cf.function ^ base).support()


def base_of(cf: ConstructedFunction) -> BooleanFunction:
    name, param = {
        "G4K": ("g0", cf.params.k), "G8K": ("g0", 2 * cf.params.k),
        "H4K2": ("h0", cf.params.k), "H8K2": ("h0", 2 * cf.params.k),
    }.get(cf.family, ("f0", cf.params.k))
    return base_function(name, param)


# ---------------------------------------------------------------------------
# function-file parameter round trip


def params_to_dict(cf: ConstructedFunction) -> dict:
    spec = cf.params
    if isinstance(spec, GammaSpec):
        d: dict = {"k": spec.k, "gammas": [g.to_string() for g in spec.gammas]}
        if spec.e_sets is not None:
            d["esets"] = list(spec.e_sets)
        return d
    if cf.family == "F2RS":
        return {"k": spec.k, "p": [v.to_string() for v in spec.vectors]}
    if cf.family == "F2RS_SET":
        return {"k": spec.k, "a_set": [v.to_string() for v in spec.vectors]}
    return {"k": spec.k, "gamma": spec.vectors[0].to_string()}


def spec_from_dict(family: str, d: dict) -> ConstructionSpec:
    family = normalize_family(family)
    try:
        k = int(d["k"])
    except KeyError as exc:
        raise InvalidSpecError("params need a k entry") from exc
    if family in _SET_FAMILY_OF:
        gammas = tuple(BitVector.from_string(s) for s in d.get("gammas", []))
        esets = d.get("esets")
        return GammaSpec(k, _SET_FAMILY_OF[family], gammas,
                         tuple(esets) if esets is not None else None)
    if family == "F2RS":
        return RotationSpec(k, tuple(BitVector.from_string(s) for s in d.get("p", [])))
    if family == "F2RS_SET":
        return RotationSpec(k, tuple(BitVector.from_string(s) for s in d.get("a_set", [])))
    gamma = d.get("gamma")
    if not gamma:
        raise InvalidSpecError("single-orbit form needs a gamma entry")
    return RotationSpec(k, (BitVector.from_string(gamma),))


def function_file_dict(cf: ConstructedFunction) -> dict:
    return {
        "n": cf.n,
        "family": cf.family,
        "params": params_to_dict(cf),
        "tt_hex": cf.function.to_hex(),
        "anf": cf.closed_anf.to_text(),
        "dual_tt_hex": cf.closed_dual.to_hex(),
        "predicts_max_degree": cf.predicts_max_degree,
    }
