"""Exact representations of Boolean functions: truth tables, ANF, bit vectors.

Index convention used everywhere in this package: the truth table entry at
index i is the value of f at the point whose j-th coordinate is bit j of i
(bit 0 = least significant), i.e. the first variable varies fastest.  A vector
and its truth-table index are therefore interchangeable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_MAX_N = 24

_max_n = DEFAULT_MAX_N


class CapacityError(Exception):
    """Requested variable count exceeds the configured limit."""


class DimensionError(ValueError):
    """Operands live over different numbers of variables."""


class NotBentError(ValueError):
    """An operation that requires a bent function received a non-bent one."""


class InvalidSpecError(ValueError):
    """Malformed construction parameters (bad gamma lengths, coset reuse, ...)."""


def max_n() -> int:
    """Current capacity limit for the number of variables."""
    return _max_n


def set_max_n(limit: int) -> None:
    """Override the capacity limit (default 24)."""
    global _max_n
    if limit < 1:
        raise ValueError("capacity limit must be positive")
    _max_n = limit


def check_capacity(n: int) -> None:
    if n < 1:
        raise DimensionError("variable count must be positive")
    if n > _max_n:
        raise CapacityError(f"n={n} exceeds the configured limit of {_max_n} variables")


# ---------------------------------------------------------------------------
# bit packing helpers (numpy <-> python int bitmask)

def _unpack_bits(bits: int, size: int) -> np.ndarray:
    """Bitmask -> uint8 array of length `size` (entry i = bit i)."""
    nbytes = max(1, (size + 7) // 8)
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].copy()


def _pack_bits(arr: np.ndarray) -> int:
    packed = np.packbits(arr.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def popcounts(size: int) -> np.ndarray:
    """Hamming weights of 0..size-1 as an int64 array."""
    a = np.arange(size, dtype=np.uint32)
    a = a - ((a >> 1) & np.uint32(0x55555555))
    a = (a & np.uint32(0x33333333)) + ((a >> 2) & np.uint32(0x33333333))
    a = (a + (a >> 4)) & np.uint32(0x0F0F0F0F)
    return (((a * np.uint32(0x01010101)) >> 24) & np.uint32(0xFF)).astype(np.int64)


# ---------------------------------------------------------------------------
# vectors and vector sets


@dataclass(frozen=True)
class BitVector:
    """A vector in F_2^n.  `bits` is its truth-table index."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError("BitVector needs at least one coordinate")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError("bits out of range for dimension")

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "BitVector":
        bits = 0
        for j, c in enumerate(coords):
            if c & 1:
                bits |= 1 << j
        return cls(len(coords), bits)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse '0110...' where character j is coordinate j."""
        s = s.strip()
        if not s or any(c not in "01" for c in s):
            raise ValueError(f"not a bit string: {s!r}")
        return cls.from_coords([int(c) for c in s])

    @classmethod
    def zero(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, eps: int) -> "BitVector":
        """(eps, 0, ..., 0): eps in the first coordinate."""
        return cls(n, eps & 1)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __add__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise DimensionError("vector dimensions differ")
        return BitVector(self.n, self.bits ^ other.bits)

    __xor__ = __add__

    def dot(self, other: "BitVector") -> int:
        if self.n != other.n:
            raise DimensionError("vector dimensions differ")
        return (self.bits & other.bits).bit_count() & 1

    def star(self, other: "BitVector") -> "BitVector":
        """Coordinatewise product."""
        if self.n != other.n:
            raise DimensionError("vector dimensions differ")
        return BitVector(self.n, self.bits & other.bits)

    def covers(self, other: "BitVector") -> bool:
        """True when self >= other coordinatewise."""
        if self.n != other.n:
            raise DimensionError("vector dimensions differ")
        return (self.bits & other.bits) == other.bits

    def weight(self) -> int:
        return self.bits.bit_count()

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.n + other.n, self.bits | (other.bits << self.n))

    def sub(self, start: int, length: int) -> "BitVector":
        """Coordinates start .. start+length-1 as a new vector."""
        if start < 0 or length < 1 or start + length > self.n:
            raise ValueError("slice out of range")
        return BitVector(length, (self.bits >> start) & ((1 << length) - 1))

    def to_string(self) -> str:
        return "".join(str(self[j]) for j in range(self.n))

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self[j] for j in range(self.n))

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class VectorSet:
    """A subset of F_2^n stored as a membership bitmask over indices."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        check_capacity(self.n)
        if not 0 <= self.mask < (1 << (1 << self.n)):
            raise ValueError("membership mask out of range")

    @classmethod
    def empty(cls, n: int) -> "VectorSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VectorSet":
        return cls(n, (1 << (1 << n)) - 1)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "VectorSet":
        mask = 0
        for i in indices:
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def from_vectors(cls, vectors: Iterable[BitVector]) -> "VectorSet":
        vecs = list(vectors)
        if not vecs:
            raise ValueError("cannot infer dimension from an empty iterable")
        n = vecs[0].n
        for v in vecs:
            if v.n != n:
                raise DimensionError("mixed dimensions in vector set")
        return cls.from_indices(n, (v.bits for v in vecs))

    def __contains__(self, item) -> bool:
        idx = item.bits if isinstance(item, BitVector) else int(item)
        return bool((self.mask >> idx) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def members(self) -> Iterator[BitVector]:
        for i in self.indices():
            yield BitVector(self.n, i)

    def union(self, other: "VectorSet") -> "VectorSet":
        if self.n != other.n:
            raise DimensionError("vector set dimensions differ")
        return VectorSet(self.n, self.mask | other.mask)

    __or__ = union

    def intersection(self, other: "VectorSet") -> "VectorSet":
        if self.n != other.n:
            raise DimensionError("vector set dimensions differ")
        return VectorSet(self.n, self.mask & other.mask)

    def complement(self) -> "VectorSet":
        return VectorSet(self.n, self.mask ^ ((1 << (1 << self.n)) - 1))


# ---------------------------------------------------------------------------
# Boolean functions


@dataclass(frozen=True)
class BooleanFunction:
    """f: F_2^n -> F_2 as a packed truth table (bit i = value at index i)."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        check_capacity(self.n)
        if not 0 <= self.bits < (1 << (1 << self.n)):
            raise ValueError("truth table out of range for dimension")

    @classmethod
    def zero(cls, n: int) -> "BooleanFunction":
        return cls(n, 0)

    @classmethod
    def constant(cls, n: int, value: int) -> "BooleanFunction":
        return cls(n, ((1 << (1 << n)) - 1) if value & 1 else 0)

    @classmethod
    def from_values(cls, n: int, values: Sequence[int]) -> "BooleanFunction":
        if len(values) != 1 << n:
            raise DimensionError("truth table length must be 2^n")
        bits = 0
        for i, v in enumerate(values):
            if v & 1:
                bits |= 1 << i
        return cls(n, bits)

    def value(self, x) -> int:
        idx = x.bits if isinstance(x, BitVector) else int(x)
        return (self.bits >> idx) & 1

    def values(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(1 << self.n)]

    def value_array(self) -> np.ndarray:
        """Truth table as a uint8 numpy array."""
        return _unpack_bits(self.bits, 1 << self.n)

    def sign_array(self) -> np.ndarray:
        """(-1)^f as an int64 numpy array."""
        return (1 - 2 * self.value_array().astype(np.int64))

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> VectorSet:
        return VectorSet(self.n, self.bits)

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        return xor_functions(self, other)

    def to_hex(self) -> str:
        """Little-endian nibble string: hex digit j holds table bits 4j..4j+3."""
        ndigits = max(1, ((1 << self.n) + 3) // 4)
        return "".join(f"{(self.bits >> (4 * j)) & 0xF:x}" for j in range(ndigits))

    @classmethod
    def from_hex(cls, n: int, s: str) -> "BooleanFunction":
        s = s.strip().lower()
        ndigits = max(1, ((1 << n) + 3) // 4)
        if len(s) != ndigits or any(c not in "0123456789abcdef" for c in s):
            raise ValueError(f"expected {ndigits} hex digits, got {s!r}")
        bits = 0
        for j, c in enumerate(s):
            bits |= int(c, 16) << (4 * j)
        if bits >= (1 << (1 << n)):
            raise ValueError("hex table has bits beyond 2^n entries")
        return cls(n, bits)


def xor_functions(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    if f.n != g.n:
        raise DimensionError("cannot xor functions over different dimensions")
    return BooleanFunction(f.n, f.bits ^ g.bits)


def characteristic_function(s: VectorSet) -> BooleanFunction:
    """Indicator of membership in s."""
    return BooleanFunction(s.n, s.mask)


# ---------------------------------------------------------------------------
# ANF


@dataclass(frozen=True)
class AnfPolynomial:
    """Algebraic normal form: bit at position u = coefficient of the monomial
    prod_{j: bit j of u} x_j.  Position 0 is the constant term."""

    n: int
    coeffs: int

    def __post_init__(self) -> None:
        check_capacity(self.n)
        if not 0 <= self.coeffs < (1 << (1 << self.n)):
            raise ValueError("coefficient mask out of range for dimension")

    @classmethod
    def zero(cls, n: int) -> "AnfPolynomial":
        return cls(n, 0)

    @classmethod
    def from_monomials(cls, n: int, monomials: Iterable[int]) -> "AnfPolynomial":
        """XOR-accumulate monomial masks (a mask appearing twice cancels)."""
        coeffs = 0
        for m in monomials:
            coeffs ^= 1 << m
        return cls(n, coeffs)

    def monomials(self) -> Iterator[int]:
        m = self.coeffs
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def term_count(self) -> int:
        return self.coeffs.bit_count()

    def __xor__(self, other: "AnfPolynomial") -> "AnfPolynomial":
        if self.n != other.n:
            raise DimensionError("polynomial dimensions differ")
        return AnfPolynomial(self.n, self.coeffs ^ other.coeffs)

    def degree(self) -> int:
        return _degree_of_mask(self.coeffs, self.n)

    def evaluate(self, x) -> int:
        idx = x.bits if isinstance(x, BitVector) else int(x)
        acc = 0
        for u in self.monomials():
            if u & idx == u:
                acc ^= 1
        return acc

    def to_text(self) -> str:
        """Canonical text: monomials x<i> joined by '*', terms by '+',
        constant term '1', terms in ascending mask order; '0' if empty."""
        parts = []
        for u in self.monomials():
            if u == 0:
                parts.append("1")
            else:
                parts.append("*".join(f"x{j}" for j in range(self.n) if (u >> j) & 1))
        return "+".join(parts) if parts else "0"

    @classmethod
    def from_text(cls, n: int, text: str) -> "AnfPolynomial":
        text = text.replace(" ", "").strip()
        if text in ("", "0"):
            return cls(n, 0)
        coeffs = 0
        for term in text.split("+"):
            if term == "1":
                coeffs ^= 1
                continue
            mask = 0
            for factor in term.split("*"):
                m = re.fullmatch(r"x(\d+)", factor)
                if not m:
                    raise ValueError(f"bad monomial factor {factor!r}")
                j = int(m.group(1))
                if j >= n:
                    raise DimensionError(f"variable x{j} outside n={n}")
                mask |= 1 << j
            coeffs ^= 1 << mask
        return cls(n, coeffs)


def _mobius(bits: int, n: int) -> int:
    """Self-inverse binary Moebius butterfly on a 2^n bitmask."""
    size = 1 << n
    arr = _unpack_bits(bits, size)
    h = 1
    while h < size:
        view = arr.reshape(-1, 2 * h)
        view[:, h:] ^= view[:, :h]
        h *= 2
    return _pack_bits(arr)


def anf_from_truth_table(f: BooleanFunction) -> AnfPolynomial:
    return AnfPolynomial(f.n, _mobius(f.bits, f.n))


def truth_table_from_anf(p: AnfPolynomial) -> BooleanFunction:
    return BooleanFunction(p.n, _mobius(p.coeffs, p.n))


def _degree_of_mask(coeffs: int, n: int) -> int:
    if coeffs == 0:
        return 0
    size = 1 << n
    arr = _unpack_bits(coeffs, size)
    return int(popcounts(size)[arr == 1].max())


def algebraic_degree(f: BooleanFunction) -> int:
    """Degree of the ANF; the zero function has degree 0."""
    return _degree_of_mask(_mobius(f.bits, f.n), f.n)


# ---------------------------------------------------------------------------
# cyclic shifts and rotation symmetry


def cyclic_shift(x: BitVector, l: int) -> BitVector:
    """rho_n^l(x) = (x_l, ..., x_{n-1}, x_0, ..., x_{l-1})."""
    n = x.n
    l %= n
    if l == 0:
        return x
    low = x.bits & ((1 << l) - 1)
    return BitVector(n, (x.bits >> l) | (low << (n - l)))


def cyclic_shift_action(f: BooleanFunction, l: int) -> BooleanFunction:
    """The function x -> f(rho_n^l(x))."""
    n = f.n
    l %= n
    if l == 0:
        return f
    size = 1 << n
    xs = np.arange(size, dtype=np.int64)
    lowmask = (1 << l) - 1
    ys = (xs >> l) | ((xs & lowmask) << (n - l))
    vals = f.value_array()[ys]
    return BooleanFunction(n, _pack_bits(vals))


def rotation_symmetry_order(f: BooleanFunction) -> int:
    """Minimal l > 0 with f(rho^l(x)) = f(x) for all x.

    The invariant shifts form a subgroup of Z_n, so the result divides n.
    Constants (invariant under every shift) return 1.
    """
    for l in range(1, f.n + 1):
        if cyclic_shift_action(f, l) == f:
            return l
    raise AssertionError("unreachable: l = n always fixes f")


def is_k_rotation_symmetric(f: BooleanFunction, k: int) -> bool:
    """Invariant under rho^k but under no smaller positive shift."""
    if f.n % k != 0:
        return False
    return rotation_symmetry_order(f) == k
