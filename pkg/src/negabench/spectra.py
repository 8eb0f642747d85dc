"""Exact Walsh-Hadamard and nega-Hadamard spectra.

All arithmetic is integer-exact: spectra are int64 arrays produced by
butterfly kernels, flatness tests compare squared magnitudes against powers
of two, and no floating point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import (
    BitVector,
    BooleanFunction,
    DimensionError,
    NotBentError,
    VectorSet,
    check_capacity,
    popcounts,
)


@dataclass(frozen=True)
class GaussianInteger:
    """a + b*i with integer a, b."""

    re: int
    im: int

    def __add__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInteger":
        return GaussianInteger(-self.re, -self.im)

    def conj(self) -> "GaussianInteger":
        return GaussianInteger(self.re, -self.im)

    def scale(self, c: int) -> "GaussianInteger":
        return GaussianInteger(c * self.re, c * self.im)

    def norm_sq(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"


_I_POWERS = (GaussianInteger(1, 0), GaussianInteger(0, 1),
             GaussianInteger(-1, 0), GaussianInteger(0, -1))


def i_power(e: int) -> GaussianInteger:
    return _I_POWERS[e % 4]


def _fwht_inplace(a: np.ndarray) -> None:
    """In-place Walsh-Hadamard butterfly: a[u] <- sum_x (-1)^(u.x) a[x]."""
    size = a.shape[0]
    h = 1
    while h < size:
        view = a.reshape(-1, 2 * h)
        lo = view[:, :h].copy()
        view[:, :h] += view[:, h:]
        view[:, h:] *= -1
        view[:, h:] += lo
        h *= 2


def _exact_sum(v: np.ndarray) -> int:
    """Sum of an int64 array as an exact Python int (chunked against overflow)."""
    total = 0
    step = 1 << 14
    for i in range(0, v.shape[0], step):
        total += int(v[i:i + step].sum())
    return total


def _exact_sum_sq(v: np.ndarray) -> int:
    total = 0
    step = 1 << 14
    for i in range(0, v.shape[0], step):
        chunk = v[i:i + step]
        total += int(np.dot(chunk, chunk))
    return total


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """W_f(u) = sum_x (-1)^(f(x) + u.x) for every u, exact integers."""

    n: int
    values: np.ndarray

    def value(self, u) -> int:
        idx = u.bits if isinstance(u, BitVector) else int(u)
        return int(self.values[idx])

    def parseval_sum(self) -> int:
        return _exact_sum_sq(self.values)

    def parseval_holds(self) -> bool:
        return self.parseval_sum() == 1 << (2 * self.n)

    def flat_counterexample(self) -> Optional[int]:
        """Index u with |W(u)| != 2^(n/2), or None when bent-flat (even n)."""
        if self.n % 2:
            return 0 if self.values.shape[0] else None
        target = 1 << (self.n // 2)
        bad = np.nonzero(np.abs(self.values) != target)[0]
        return int(bad[0]) if bad.size else None


@dataclass(frozen=True, eq=False)
class NegaSpectrum:
    """N_f(u) = sum_x (-1)^(f(x) + u.x) i^wt(x), split into re/im int64 arrays."""

    n: int
    re: np.ndarray
    im: np.ndarray

    def value(self, u) -> GaussianInteger:
        idx = u.bits if isinstance(u, BitVector) else int(u)
        return GaussianInteger(int(self.re[idx]), int(self.im[idx]))

    def norm_sq_value(self, u) -> int:
        return self.value(u).norm_sq()

    def parseval_sum(self) -> int:
        return _exact_sum_sq(self.re) + _exact_sum_sq(self.im)

    def parseval_holds(self) -> bool:
        return self.parseval_sum() == 1 << (2 * self.n)

    def flat_counterexample(self) -> Optional[int]:
        """Index u with |N(u)|^2 != 2^n, or None when negabent-flat."""
        target = np.int64(1) << self.n
        norms = self.re * self.re + self.im * self.im
        bad = np.nonzero(norms != target)[0]
        return int(bad[0]) if bad.size else None


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    check_capacity(f.n)
    a = f.sign_array()
    _fwht_inplace(a)
    a.setflags(write=False)
    return WalshSpectrum(f.n, a)


def nega_transform(f: BooleanFunction) -> NegaSpectrum:
    check_capacity(f.n)
    signs = f.sign_array()
    w4 = popcounts(1 << f.n) % 4
    re_mult = np.array([1, 0, -1, 0], dtype=np.int64)[w4]
    im_mult = np.array([0, 1, 0, -1], dtype=np.int64)[w4]
    re = signs * re_mult
    im = signs * im_mult
    _fwht_inplace(re)
    _fwht_inplace(im)
    re.setflags(write=False)
    im.setflags(write=False)
    return NegaSpectrum(f.n, re, im)


# ---------------------------------------------------------------------------
# fragmentary transforms (sums restricted to a subset)


def fragmentary_walsh(f: BooleanFunction, t: VectorSet, u) -> int:
    """W_{f,T}(u) = sum_{x in T} (-1)^(f(x) + u.x), by the literal sum."""
    if f.n != t.n:
        raise DimensionError("function and subset dimensions differ")
    ub = u.bits if isinstance(u, BitVector) else int(u)
    acc = 0
    for x in t.indices():
        acc += -1 if (f.value(x) ^ ((x & ub).bit_count() & 1)) else 1
    return acc


def fragmentary_nega(f: BooleanFunction, t: VectorSet, u) -> GaussianInteger:
    """N_{f,T}(u) = sum_{x in T} (-1)^(f(x) + u.x) i^wt(x), literal sum."""
    if f.n != t.n:
        raise DimensionError("function and subset dimensions differ")
    ub = u.bits if isinstance(u, BitVector) else int(u)
    acc = GaussianInteger(0, 0)
    for x in t.indices():
        sign = -1 if (f.value(x) ^ ((x & ub).bit_count() & 1)) else 1
        acc = acc + i_power(x.bit_count()).scale(sign)
    return acc


def fragmentary_walsh_spectrum(f: BooleanFunction, t: VectorSet) -> WalshSpectrum:
    """All fragmentary Walsh values at once: butterfly on the T-masked signs."""
    if f.n != t.n:
        raise DimensionError("function and subset dimensions differ")
    mask = BooleanFunction(t.n, t.mask).value_array().astype(np.int64)
    a = f.sign_array() * mask
    _fwht_inplace(a)
    a.setflags(write=False)
    return WalshSpectrum(f.n, a)


def fragmentary_nega_spectrum(f: BooleanFunction, t: VectorSet) -> NegaSpectrum:
    if f.n != t.n:
        raise DimensionError("function and subset dimensions differ")
    mask = BooleanFunction(t.n, t.mask).value_array().astype(np.int64)
    signs = f.sign_array() * mask
    w4 = popcounts(1 << f.n) % 4
    re = signs * np.array([1, 0, -1, 0], dtype=np.int64)[w4]
    im = signs * np.array([0, 1, 0, -1], dtype=np.int64)[w4]
    _fwht_inplace(re)
    _fwht_inplace(im)
    re.setflags(write=False)
    im.setflags(write=False)
    return NegaSpectrum(f.n, re, im)


# ---------------------------------------------------------------------------
# classification and duality


@dataclass(frozen=True)
class Classification:
    is_bent: bool
    is_negabent: bool
    note: Optional[str] = None

    @property
    def is_bent_negabent(self) -> bool:
        return self.is_bent and self.is_negabent


def classify(f: BooleanFunction) -> Classification:
    """Exact bent / negabent flags.

    Bentness requires even n; for odd n the flag is False with a note rather
    than an error.  Negabentness is defined for every n.
    """
    nega_ok = nega_transform(f).flat_counterexample() is None
    if f.n % 2:
        return Classification(False, nega_ok, note="bent undefined for odd n; reported false")
    bent_ok = walsh_transform(f).flat_counterexample() is None
    return Classification(bent_ok, nega_ok)


def is_bent(f: BooleanFunction) -> bool:
    return classify(f).is_bent


def is_negabent(f: BooleanFunction) -> bool:
    return nega_transform(f).flat_counterexample() is None


def dual(f: BooleanFunction) -> BooleanFunction:
    """The bent dual: 2^(n/2) (-1)^dual(x) = W_f(x)."""
    if f.n % 2:
        raise NotBentError("bent duals require an even number of variables")
    spec = walsh_transform(f)
    bad = spec.flat_counterexample()
    if bad is not None:
        raise NotBentError(
            f"not bent: |W({BitVector(f.n, bad)})| = {abs(spec.value(bad))} "
            f"!= {1 << (f.n // 2)}"
        )
    target = 1 << (f.n // 2)
    vals = (spec.values == -target).astype(np.uint8)
    return BooleanFunction.from_values(f.n, vals.tolist())


# ---------------------------------------------------------------------------
# Maiorana-McFarland shapes


def _permutation_images(pi: Sequence, m: int) -> list[int]:
    imgs = [p.bits if isinstance(p, BitVector) else int(p) for p in pi]
    if len(imgs) != 1 << m:
        raise DimensionError("permutation table length must be 2^m")
    if sorted(imgs) != list(range(1 << m)):
        raise InvalidPermutationError("image table is not a bijection of F_2^m")
    return imgs


class InvalidPermutationError(ValueError):
    """The supplied image table is not a permutation."""


def mm_function(pi: Sequence, phi: BooleanFunction) -> BooleanFunction:
    """f(x, y) = x . pi(y) + phi(y) on 2m variables (x = low block)."""
    m = phi.n
    imgs = _permutation_images(pi, m)
    size = 1 << m
    xs = np.arange(size, dtype=np.int64)
    par = (popcounts(size) & 1).astype(np.uint8)
    phi_vals = phi.value_array()
    rows = np.empty((size, size), dtype=np.uint8)
    for y in range(size):
        rows[y] = par[xs & imgs[y]] ^ phi_vals[y]
    return BooleanFunction.from_values(2 * m, rows.reshape(-1).tolist())


def mm_dual(pi: Sequence, phi: BooleanFunction) -> BooleanFunction:
    """Dual of the MM bent function: (x, y) -> y . pi^{-1}(x) + phi(pi^{-1}(x))."""
    m = phi.n
    imgs = _permutation_images(pi, m)
    inv = [0] * (1 << m)
    for y, img in enumerate(imgs):
        inv[img] = y
    size = 1 << m
    par = (popcounts(size) & 1).astype(np.uint8)
    phi_vals = phi.value_array()
    vals = np.empty((size, size), dtype=np.uint8)
    ys = np.arange(size, dtype=np.int64)
    for x in range(size):
        w = inv[x]
        vals[:, x] = par[ys & w] ^ phi_vals[w]
    # index = x | (y << m): row y, column x
    return BooleanFunction.from_values(2 * m, vals.reshape(-1).tolist())


def is_weight_sum_invariant(pi: Sequence, m: Optional[int] = None) -> bool:
    """wt(x + y) == wt(pi(x) + pi(y)) for all pairs x, y."""
    if m is None:
        m = (len(pi)).bit_length() - 1
    imgs = _permutation_images(pi, m)
    size = 1 << m
    pops = popcounts(size)
    arr = np.array(imgs, dtype=np.int64)
    xs = np.arange(size, dtype=np.int64)
    for x in range(size):
        if not np.array_equal(pops[xs ^ x], pops[arr ^ imgs[x]]):
            return False
    return True
