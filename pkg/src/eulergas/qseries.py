"""Exact truncated power series over the integers.

A :class:`TruncatedSeries` holds the coefficients of ``x**0 .. x**N`` as
Python ints, so nothing ever overflows or rounds.  Infinite products are
described by :class:`FactorFamily` patterns and expanded by
:func:`expand_product`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "TruncatedSeries",
    "FactorFamily",
    "make_series",
    "one",
    "add",
    "sub",
    "mul",
    "invert",
    "substitute",
    "binomial_factor",
    "apply_binomial",
    "expand_product",
    "expand_exponents",
    "theta4_series",
    "family",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series modulo ``x**(order+1)``."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be non-negative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return mul(self, other)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return sub(self, other)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[:order + 1])

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if n == 0 else f"{c}*x^{n}")
        return (" + ".join(terms) or "0") + f" + O(x^{self.order + 1})"


def make_series(coeffs: Iterable[int], N: int) -> TruncatedSeries:
    """Build a series of order ``N``, zero-padding ``coeffs``."""
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    cs = [int(c) for c in coeffs]
    if len(cs) > N + 1:
        raise ValueError(f"{len(cs)} coefficients do not fit in order {N}")
    return TruncatedSeries(N, tuple(cs + [0] * (N + 1 - len(cs))))


def one(N: int) -> TruncatedSeries:
    return make_series([1], N)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> int:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")
    return a.order


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def _mul_lists(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    # iterate over the sparser operand; product factors are usually sparse
    nz_a = [(i, c) for i, c in enumerate(a) if c]
    nz_b = [(i, c) for i, c in enumerate(b) if c]
    if len(nz_b) < len(nz_a):
        nz_a, a, b = nz_b, b, a
    out = [0] * (N + 1)
    for i, c in nz_a:
        if c == 1:
            for j in range(N + 1 - i):
                out[i + j] += b[j]
        elif c == -1:
            for j in range(N + 1 - i):
                out[i + j] -= b[j]
        else:
            for j in range(N + 1 - i):
                out[i + j] += c * b[j]
    return out


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    N = _check_orders(a, b)
    return TruncatedSeries(N, tuple(_mul_lists(a.coeffs, b.coeffs, N)))


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError(f"constant term must be 1, got {a.coeffs[0]}")
    N = a.order
    nz = [(i, c) for i, c in enumerate(a.coeffs) if c and i]
    b = [0] * (N + 1)
    b[0] = 1
    for n in range(1, N + 1):
        acc = 0
        for i, c in nz:
            if i > n:
                break
            acc += c * b[n - i]
        b[n] = -acc
    return TruncatedSeries(N, tuple(b))


def substitute(a: TruncatedSeries, sign: int, m: int) -> TruncatedSeries:
    """Replace ``x`` by ``sign * x**m``."""
    if m <= 0:
        raise ValueError(f"m must be a positive integer, got {m}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    N = a.order
    out = [0] * (N + 1)
    for n, c in enumerate(a.coeffs):
        if m * n > N:
            break
        out[m * n] = c if sign == 1 or n % 2 == 0 else -c
    return TruncatedSeries(N, tuple(out))


@dataclass(frozen=True)
class FactorFamily:
    """The product ``prod_{k>=1} (1 + sign*x**(step*k + offset))**power``."""

    sign: int
    step: int
    offset: int = 0
    power: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.power not in (1, -1):
            raise ValueError(f"power must be +1 or -1, got {self.power}")
        if self.step < 1:
            raise ValueError(f"step must be positive, got {self.step}")
        if self.step + self.offset < 1:
            raise ValueError(
                f"exponent {self.step}k{self.offset:+d} is not positive at k=1")

    def exponents(self, N: int) -> range:
        """Exponents ``step*k + offset <= N``, k = 1, 2, ..."""
        return range(self.step + self.offset, N + 1, self.step)


def family(spec: str) -> FactorFamily:
    """Parse a compact family description such as ``"1-x^(6k-5)"``,
    ``"1/(1+x^k)"`` or ``"1-x^(2k)"``."""
    text = spec.replace(" ", "")
    power = 1
    if text.startswith("1/"):
        power = -1
        text = text[2:]
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text.startswith("1") or text[1] not in "+-" or text[2:4] != "x^":
        raise ValueError(f"cannot parse factor family {spec!r}")
    sign = 1 if text[1] == "+" else -1
    expo = text[4:]
    if expo.startswith("(") and expo.endswith(")"):
        expo = expo[1:-1]
    head, _, tail = expo.partition("k")
    step = int(head) if head else 1
    offset = int(tail) if tail else 0
    return FactorFamily(sign, step, offset, power)


def binomial_factor(e: int, sign: int, power: int, N: int) -> list[int]:
    """Coefficients of ``(1 + sign*x**e)**power`` up to ``x**N``.

    For ``power == -1`` this is the geometric series, i.e. exactly
    ``invert`` of the binomial, written out without the O(N**2) division.
    """
    out = [0] * (N + 1)
    out[0] = 1
    if e > N:
        return out
    if power == 1:
        out[e] = sign
    else:
        c = 1
        for j in range(e, N + 1, e):
            c *= -sign
            out[j] = c
    return out


def apply_binomial(coeffs: list[int], e: int, sign: int, power: int) -> None:
    """Multiply the coefficient list in place by ``(1 + sign*x**e)**power``."""
    N = len(coeffs) - 1
    if e > N:
        return
    if power == 1:
        coeffs[e:] = [c + sign * p for c, p in zip(coeffs[e:], coeffs[:N + 1 - e])]
    else:
        # block k only reads block k-1, which is already final
        for start in range(e, N + 1, e):
            stop = min(start + e, N + 1)
            coeffs[start:stop] = [c - sign * p for c, p in
                                  zip(coeffs[start:stop], coeffs[start - e:stop - e])]


def expand_exponents(exponents: Iterable[int], sign: int, power: int,
                     N: int) -> TruncatedSeries:
    """``prod (1 + sign*x**e)**power`` over an explicit list of exponents."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    series = TruncatedSeries(N, tuple(coeffs))
    for e in exponents:
        if e < 1:
            raise ValueError(f"exponent must be positive, got {e}")
        if e <= N:
            series = mul(series, TruncatedSeries(N, tuple(binomial_factor(e, sign, power, N))))
    return series


def expand_product(families: Iterable[FactorFamily], N: int) -> TruncatedSeries:
    """Expand a product of factor families to order ``N``.

    Every factor with exponent ``<= N`` is applied as a convolution with its
    (sparse) binomial or geometric series.
    """
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    fams = sorted(families, key=lambda f: (f.power, f.step, f.offset, f.sign))
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    # numerator factors first, then denominators; the result does not depend on it
    for fam in fams:
        for e in fam.exponents(N):
            apply_binomial(coeffs, e, fam.sign, fam.power)
    return TruncatedSeries(N, tuple(coeffs))


def theta4_series(N: int) -> TruncatedSeries:
    """``1 + 2 * sum_{n>=1} (-1)**n x**(n*n)``."""
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    n = 1
    while n * n <= N:
        coeffs[n * n] = 2 if n % 2 == 0 else -2
        n += 1
    return TruncatedSeries(N, tuple(coeffs))
