"""Linear subspaces of F_2^n, coset and orbit machinery, and the four
modifier-set builders (S1, S2, S3, S4) plus the rotation-symmetric set T.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

from .core import (
    BitVector,
    DimensionError,
    InvalidSpecError,
    VectorSet,
    check_capacity,
)


# ---------------------------------------------------------------------------
# GF(2) linear algebra on int-encoded vectors


def _rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced basis with distinct pivot bits (pivot = lowest set bit)."""
    basis: list[int] = []
    for v in vectors:
        v = int(v)
        for b in basis:
            if v & (b & -b):
                v ^= b
        if v:
            pv = v & -v
            basis = [b ^ v if b & pv else b for b in basis]
            basis.append(v)
    basis.sort(key=lambda b: b & -b)
    return tuple(basis)


@dataclass(frozen=True)
class LinearSubspace:
    """A subspace of F_2^n held as a reduced row-echelon basis."""

    n: int
    basis: tuple[int, ...]

    @classmethod
    def span(cls, n: int, vectors: Iterable) -> "LinearSubspace":
        ints = []
        for v in vectors:
            if isinstance(v, BitVector):
                if v.n != n:
                    raise DimensionError("spanning vector dimension mismatch")
                ints.append(v.bits)
            else:
                ints.append(int(v))
        return cls(n, _rref(ints))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, x: int) -> int:
        """Canonical coset label of x (pivot bits cleared)."""
        for b in self.basis:
            if x & (b & -b):
                x ^= b
        return x

    def contains(self, x) -> bool:
        idx = x.bits if isinstance(x, BitVector) else int(x)
        return self.reduce(idx) == 0

    def members(self) -> Iterator[BitVector]:
        for picks in itertools.product((0, 1), repeat=self.dim):
            acc = 0
            for take, b in zip(picks, self.basis):
                if take:
                    acc ^= b
            yield BitVector(self.n, acc)

    def member_set(self) -> VectorSet:
        return VectorSet.from_indices(self.n, (m.bits for m in self.members()))


def orthogonal_complement(space: LinearSubspace) -> LinearSubspace:
    """All x with x . b = 0 for every basis vector b."""
    n, rows = space.n, space.basis
    pivots = [(b & -b).bit_length() - 1 for b in rows]
    pivot_set = set(pivots)
    kernel = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = 1 << j
        for p, row in zip(pivots, rows):
            if (row >> j) & 1:
                v |= 1 << p
        kernel.append(v)
    return LinearSubspace(n, _rref(kernel))


def coset_representatives(space: LinearSubspace) -> list[BitVector]:
    """Minimal-index representative of each coset of the subspace."""
    check_capacity(space.n)
    seen: set[int] = set()
    reps: list[BitVector] = []
    for x in range(1 << space.n):
        label = space.reduce(x)
        if label not in seen:
            seen.add(label)
            reps.append(BitVector(space.n, x))
    return reps


# ---------------------------------------------------------------------------
# repetition sets A_{2d}^r and B_{2d}^r


class RepetitionSets(NamedTuple):
    a: VectorSet
    b: VectorSet


def repetition_sets(d: int, r: int) -> RepetitionSets:
    """r-fold concatenations of the length-2d blocks {0..0, 1..1} (A) and
    {0..0 1..1, 1..1 0..0} (B); subsets of F_2^(2dr)."""
    if d < 1 or r < 1:
        raise ValueError("d and r must be positive")
    n = 2 * d * r
    check_capacity(n)
    a_blocks = (0, (1 << (2 * d)) - 1)
    b_blocks = (((1 << d) - 1) << d, (1 << d) - 1)
    def assemble(blocks):
        out = []
        for picks in itertools.product(blocks, repeat=r):
            acc = 0
            for i, blk in enumerate(picks):
                acc |= blk << (2 * d * i)
            out.append(acc)
        return out
    return RepetitionSets(
        VectorSet.from_indices(n, assemble(a_blocks)),
        VectorSet.from_indices(n, assemble(b_blocks)),
    )


def in_pair_repetition(bits: int, pairs: int) -> bool:
    """bits encodes a vector of 2*pairs coordinates; True iff every adjacent
    coordinate pair (2i, 2i+1) is 00 or 11, i.e. membership in A_2^pairs."""
    for i in range(pairs):
        if ((bits >> (2 * i)) & 3) in (1, 2):
            return False
    return True


def in_pair_antirepetition(bits: int, pairs: int) -> bool:
    """Membership in B_2^pairs: every pair (2i, 2i+1) is 01 or 10."""
    for i in range(pairs):
        if ((bits >> (2 * i)) & 3) in (0, 3):
            return False
    return True


def pair_repetition_members(pairs: int) -> list[int]:
    """All members of A_2^pairs as indices over 2*pairs coordinates."""
    out = []
    for picks in itertools.product((0, 3), repeat=pairs):
        acc = 0
        for i, blk in enumerate(picks):
            acc |= blk << (2 * i)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# cyclic orbits


def orbit(x: BitVector) -> VectorSet:
    """All cyclic coordinate shifts of x."""
    n = x.n
    idxs = set()
    cur = x.bits
    for _ in range(n):
        idxs.add(cur)
        low = cur & 1
        cur = (cur >> 1) | (low << (n - 1))
    return VectorSet.from_indices(n, idxs)


def orbit_representative(x: BitVector) -> BitVector:
    """The orbit member with minimal truth-table index."""
    return BitVector(x.n, min(orbit(x).indices()))


def orbit_representatives(n: int) -> list[BitVector]:
    """Minimal-index representative of every cyclic orbit of F_2^n."""
    check_capacity(n)
    reps = []
    for x in range(1 << n):
        cur, is_min = x, True
        for _ in range(n - 1):
            low = cur & 1
            cur = (cur >> 1) | (low << (n - 1))
            if cur < x:
                is_min = False
                break
        if is_min:
            reps.append(BitVector(n, x))
    return reps


# ---------------------------------------------------------------------------
# modifier-set parameter bundle


SET_FAMILIES = ("S1", "S2", "S3", "S4", "T")

E_SYMBOLS = {"0": (0,), "1": (1,), "B": (0, 1)}


@dataclass(frozen=True)
class GammaSpec:
    """Parameters of one modifier set.

    `family` names the builder (S1..S4 or T) and fixes the expected gamma
    length: 2k for S1/S3/T, 4k for S2/S4.  `e_sets` aligns with `gammas` and
    is required exactly for S3/S4 ('0', '1' or 'B' = both).  `rotation_closed`
    asserts closure of the gamma set under cyclic shift (meaningful for T).
    """

    k: int
    family: str
    gammas: tuple[BitVector, ...]
    e_sets: Optional[tuple[str, ...]] = None
    rotation_closed: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidSpecError("k must be a positive integer")
        if self.family not in SET_FAMILIES:
            raise InvalidSpecError(f"unknown set family {self.family!r}")
        if not self.gammas:
            raise InvalidSpecError("gamma set must be nonempty")
        glen = 2 * self.k if self.family in ("S1", "S3", "T") else 4 * self.k
        for g in self.gammas:
            if g.n != glen:
                raise InvalidSpecError(
                    f"{self.family} with k={self.k} needs gammas of length {glen}, "
                    f"got {g.n}"
                )
        if len(set(g.bits for g in self.gammas)) != len(self.gammas):
            raise InvalidSpecError("duplicate gamma")
        if self.family in ("S3", "S4"):
            if self.e_sets is None or len(self.e_sets) != len(self.gammas):
                raise InvalidSpecError(
                    f"{self.family} needs one E entry per gamma")
            for sym in self.e_sets:
                if sym not in E_SYMBOLS:
                    raise InvalidSpecError(f"E entries must be '0', '1' or 'B', got {sym!r}")
        elif self.e_sets is not None:
            raise InvalidSpecError(f"{self.family} takes no E sets")
        if self.family in ("S2", "S4"):
            pairs = 2 * self.k
            gs = [g.bits for g in self.gammas]
            for i in range(len(gs)):
                for j in range(i + 1, len(gs)):
                    if in_pair_repetition(gs[i] ^ gs[j], pairs):
                        raise InvalidSpecError(
                            f"gammas {self.gammas[i]} and {self.gammas[j]} lie in the "
                            "same coset of the pair-repetition subspace"
                        )
        if self.rotation_closed:
            if self.family != "T":
                raise InvalidSpecError("rotation_closed applies to the T family")
            idxs = set(g.bits for g in self.gammas)
            for g in self.gammas:
                if not set(orbit(g).indices()) <= idxs:
                    raise InvalidSpecError(
                        f"gamma set not closed under cyclic shift (orbit of {g} leaks)")

    def e_values(self, i: int) -> tuple[int, ...]:
        assert self.e_sets is not None
        return E_SYMBOLS[self.e_sets[i]]

    def e_size_sum(self) -> int:
        assert self.e_sets is not None
        return sum(len(E_SYMBOLS[s]) for s in self.e_sets)

    def gamma_halves(self, i: int) -> tuple[int, int]:
        """(gamma_1, gamma_2) as ints over the low/high halves."""
        g = self.gammas[i]
        half = g.n // 2
        return g.bits & ((1 << half) - 1), g.bits >> half


def _require_family(spec: GammaSpec, family: str) -> None:
    if spec.family != family:
        raise InvalidSpecError(f"spec is tagged {spec.family}, builder needs {family}")


def build_S1(spec: GammaSpec) -> VectorSet:
    """Union of the affine cells x'' = x' + gamma_1, y'' = y' + gamma_2
    inside F_2^(4k); |S1| = |Gamma| * 4^k."""
    _require_family(spec, "S1")
    k = spec.k
    idxs = []
    for i in range(len(spec.gammas)):
        g1, g2 = spec.gamma_halves(i)
        for xp in range(1 << k):
            xpart = xp | ((xp ^ g1) << k)
            for yp in range(1 << k):
                idxs.append(xpart | ((yp | ((yp ^ g2) << k)) << (2 * k)))
    return VectorSet.from_indices(4 * k, idxs)


def build_S2(spec: GammaSpec) -> VectorSet:
    """Union of cells x in A_2^(2k), y in gamma + A_2^(2k) inside F_2^(8k);
    |S2| = |Gamma| * 2^(4k)."""
    _require_family(spec, "S2")
    k = spec.k
    a_members = pair_repetition_members(2 * k)
    idxs = []
    for g in spec.gammas:
        for x in a_members:
            for z in a_members:
                idxs.append(x | ((g.bits ^ z) << (4 * k)))
    return VectorSet.from_indices(8 * k, idxs)


def build_S3(spec: GammaSpec) -> VectorSet:
    """S1-style cells extended by x_m free and y_m restricted to E_gamma,
    inside F_2^(4k+2)."""
    _require_family(spec, "S3")
    k = spec.k
    idxs = []
    for i in range(len(spec.gammas)):
        g1, g2 = spec.gamma_halves(i)
        for xp in range(1 << k):
            for xm in (0, 1):
                xpart = xp | ((xp ^ g1) << k) | (xm << (2 * k))
                for yp in range(1 << k):
                    ypart = (yp | ((yp ^ g2) << k)) << (2 * k + 1)
                    for ym in spec.e_values(i):
                        idxs.append(xpart | ypart | (ym << (4 * k + 1)))
    return VectorSet.from_indices(4 * k + 2, idxs)


def build_S4(spec: GammaSpec) -> VectorSet:
    """S2-style cells extended by x_m free and y_m in E_gamma, inside
    F_2^(8k+2)."""
    _require_family(spec, "S4")
    k = spec.k
    a_members = pair_repetition_members(2 * k)
    idxs = []
    for i, g in enumerate(spec.gammas):
        for x in a_members:
            for xm in (0, 1):
                xpart = x | (xm << (4 * k))
                for z in a_members:
                    ypart = (g.bits ^ z) << (4 * k + 1)
                    for ym in spec.e_values(i):
                        idxs.append(xpart | ypart | (ym << (8 * k + 1)))
    return VectorSet.from_indices(8 * k + 2, idxs)


def build_T(spec: GammaSpec) -> VectorSet:
    """Graph-type set {(x, x + gamma)} inside F_2^(4k); |T| = |Gamma| * 2^(2k)."""
    _require_family(spec, "T")
    k = spec.k
    idxs = []
    for g in spec.gammas:
        for x in range(1 << (2 * k)):
            idxs.append(x | ((x ^ g.bits) << (2 * k)))
    return VectorSet.from_indices(4 * k, idxs)


def build_modifier_set(spec: GammaSpec) -> VectorSet:
    builder = {"S1": build_S1, "S2": build_S2, "S3": build_S3,
               "S4": build_S4, "T": build_T}[spec.family]
    return builder(spec)
