"""Exact Schur polynomials from semistandard tableaux, bounded Schur sums for
Green parafermi/parabose systems, their determinant form, and the Littlewood
product.

Polynomials are dicts from exponent tuples to ints.  Determinants are only
ever evaluated at rational points (Bareiss elimination over ``Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
import random
from typing import Iterator, Optional, Sequence

from .verdict import MATCH, MISMATCH, Verdict

__all__ = [
    "IntegerPartition",
    "MultivariatePolynomial",
    "partitions_in_box",
    "schur_poly",
    "bialternant_eval",
    "bareiss_det",
    "green_parafermi_sum",
    "green_parabose_sum",
    "green_parafermi_det",
    "littlewood_product",
    "littlewood_check",
    "sample_points",
    "bialternant_check",
    "parafermi_det_check",
    "MAX_VARS",
    "MAX_DEGREE",
]

MAX_VARS = 6
MAX_DEGREE = 10


@dataclass(frozen=True, order=True)
class IntegerPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> IntegerPartition:
        return IntegerPartition(tuple(
            sum(1 for p in self.parts if p > c) for c in range(self.largest)))

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_in_box(max_part: Optional[int], max_len: Optional[int],
                      max_weight: Optional[int] = None) -> Iterator[IntegerPartition]:
    """All partitions with largest part <= max_part, length <= max_len and
    weight <= max_weight (``None`` means unbounded; at least one of
    max_weight and the box must be finite)."""
    if max_weight is None and (max_part is None or max_len is None):
        raise ValueError("enumeration would be infinite")

    def rec(prefix, cap, room):
        yield IntegerPartition(tuple(prefix))
        if max_len is not None and len(prefix) >= max_len:
            return
        top = cap if room is None else min(cap, room)
        for p in range(top, 0, -1):
            prefix.append(p)
            yield from rec(prefix, p, None if room is None else room - p)
            prefix.pop()

    cap = max_part if max_part is not None else max_weight
    yield from rec([], cap, max_weight)


@dataclass
class MultivariatePolynomial:
    """Integer polynomial in ``nvars`` variables; monomials above total
    degree ``cap`` are dropped."""

    nvars: int
    terms: dict = field(default_factory=dict)
    cap: Optional[int] = None

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != self.nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e}")
            if c and (self.cap is None or sum(e) <= self.cap):
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, nvars, c=1, cap=None):
        return cls(nvars, {(0,) * nvars: c}, cap)

    @classmethod
    def variable(cls, nvars, i, cap=None):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, cap)

    def _cap_with(self, other):
        caps = [c for c in (self.cap, other.cap) if c is not None]
        return min(caps) if caps else None

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other: MultivariatePolynomial) -> MultivariatePolynomial:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultivariatePolynomial(self.nvars, out, self._cap_with(other))

    def __sub__(self, other: MultivariatePolynomial) -> MultivariatePolynomial:
        return self + other.scale(-1)

    def scale(self, k: int) -> MultivariatePolynomial:
        return MultivariatePolynomial(self.nvars, {e: k * c for e, c in self.terms.items()}, self.cap)

    def __mul__(self, other: MultivariatePolynomial) -> MultivariatePolynomial:
        self._check(other)
        cap = self._cap_with(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if cap is not None and d1 + sum(e2) > cap:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultivariatePolynomial(self.nvars, out, cap)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def truncate(self, cap: int) -> MultivariatePolynomial:
        return MultivariatePolynomial(self.nvars, self.terms, cap)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(pt, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def permute(self, perm: Sequence[int]) -> MultivariatePolynomial:
        """Substitute ``x_i -> x_perm[i]``."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for i, k in enumerate(e):
                f[perm[i]] = k
            out[tuple(f)] = c
        return MultivariatePolynomial(self.nvars, out, self.cap)

    def is_symmetric(self) -> bool:
        return all(self.permute(p) == self for p in permutations(range(self.nvars)))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-k for k in t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces)


def _as_partition(lam) -> IntegerPartition:
    return lam if isinstance(lam, IntegerPartition) else IntegerPartition(tuple(lam))


def schur_poly(lam, M: int, cap: Optional[int] = None) -> MultivariatePolynomial:
    """Sum over semistandard tableaux of shape ``lam`` with entries 1..M of
    the content monomial."""
    lam = _as_partition(lam)
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if lam.length > M:
        return MultivariatePolynomial(M, {}, cap)
    cells = [(r, c) for r, row in enumerate(lam.parts) for c in range(row)]
    grid = [[0] * row for row in lam.parts]
    content = [0] * M
    terms: dict = {}

    def fill(idx):
        if idx == len(cells):
            key = tuple(content)
            terms[key] = terms.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if c:
            lo = grid[r][c - 1]                 # rows weakly increase
        if r:
            lo = max(lo, grid[r - 1][c] + 1)    # columns strictly increase
        # the rest of column c below row r needs distinct larger entries
        below = sum(1 for rr in range(r + 1, lam.length) if lam.parts[rr] > c)
        for v in range(lo, M - below + 1):
            grid[r][c] = v
            content[v - 1] += 1
            fill(idx + 1)
            content[v - 1] -= 1
        grid[r][c] = 0

    fill(0)
    return MultivariatePolynomial(M, terms, cap)


def bareiss_det(matrix: Sequence[Sequence]) -> Fraction:
    """Fraction-exact determinant by fraction-free elimination with pivoting."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _distinct_point(point) -> list[Fraction]:
    pt = [Fraction(x) for x in point]
    if len(set(pt)) != len(pt):
        raise ValueError(f"coordinates must be pairwise distinct: {point}")
    return pt


def bialternant_eval(lam, point: Sequence) -> Fraction:
    """``det(x_i^(lam_j + M - j)) / det(x_i^(M - j))`` at a rational point."""
    lam = _as_partition(lam)
    pt = _distinct_point(point)
    M = len(pt)
    if M == 0:
        raise ValueError("empty point")
    if lam.length > M:
        return Fraction(0)
    parts = list(lam.parts) + [0] * (M - lam.length)
    num = [[x ** (parts[j] + M - 1 - j) for j in range(M)] for x in pt]
    den = [[x ** (M - 1 - j) for j in range(M)] for x in pt]
    return bareiss_det(num) / bareiss_det(den)


def _check_small(name, value, lo=1, hi=MAX_VARS):
    if not lo <= value <= hi:
        raise ValueError(f"{name} must be in {lo}..{hi}, got {value}")


def green_parafermi_sum(s: int, M: int) -> MultivariatePolynomial:
    """Sum of ``s_lam(x_1..x_M)`` over every lam with lam_1 <= s (and length <= M)."""
    _check_small("s", s)
    _check_small("M", M)
    total = MultivariatePolynomial(M)
    for lam in partitions_in_box(s, M):
        total = total + schur_poly(lam, M)
    return total


def green_parabose_sum(s: int, M: int, D: int) -> MultivariatePolynomial:
    """Sum of ``s_lam`` over lam of length <= s, truncated at total degree D."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    _check_small("M", M)
    _check_small("D", D, 0, MAX_DEGREE)
    total = MultivariatePolynomial(M, {}, D)
    for lam in partitions_in_box(None, min(s, M), D):
        total = total + schur_poly(lam, M, D)
    return total


def green_parafermi_det(s: int, M: int, point: Sequence) -> Fraction:
    """``det(x_i^(s+2M-j) - x_i^(j-1)) / det(x_i^(2M-j) - x_i^(j-1))``, i,j = 1..M."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    pt = [Fraction(x) for x in point]
    if len(pt) != M or M < 1:
        raise ValueError(f"expected {M} coordinates, got {len(pt)}")
    num = [[x ** (s + 2 * M - j) - x ** (j - 1) for j in range(1, M + 1)] for x in pt]
    den = [[x ** (2 * M - j) - x ** (j - 1) for j in range(1, M + 1)] for x in pt]
    d = bareiss_det(den)
    if d == 0:
        raise ValueError(f"denominator vanishes at {point}")
    return bareiss_det(num) / d


def _geometric(M: int, exponent: tuple, D: int) -> MultivariatePolynomial:
    """``1/(1 - x^exponent)`` truncated at total degree D."""
    step = sum(exponent)
    terms = {}
    k = 0
    while k * step <= D:
        terms[tuple(k * e for e in exponent)] = 1
        k += 1
    return MultivariatePolynomial(M, terms, D)


def littlewood_product(M: int, D: int) -> MultivariatePolynomial:
    """``prod_i 1/(1-x_i) prod_{i<j} 1/(1-x_i x_j)`` up to total degree D."""
    _check_small("M", M)
    _check_small("D", D, 0, MAX_DEGREE)
    out = MultivariatePolynomial.constant(M, 1, D)
    for i in range(M):
        e = [0] * M
        e[i] = 1
        out = out * _geometric(M, tuple(e), D)
    for i in range(M):
        for j in range(i + 1, M):
            e = [0] * M
            e[i] = e[j] = 1
            out = out * _geometric(M, tuple(e), D)
    return out


def _compare_polys(left: MultivariatePolynomial, right: MultivariatePolynomial,
                   note: str) -> Verdict:
    keys = sorted(set(left.terms) | set(right.terms),
                  key=lambda e: (sum(e), tuple(-k for k in e)))
    for e in keys:
        a, b = left.terms.get(e, 0), right.terms.get(e, 0)
        if a != b:
            return Verdict(MISMATCH, (sum(e), a, b), f"{note}; monomial {e}")
    return Verdict(MATCH, None, note)


def littlewood_check(M: int, D: int, s: Optional[int] = None) -> Verdict:
    """Bounded parabose sum (length <= s, s >= M) against the Littlewood product."""
    if s is None:
        s = M
    if s < M:
        raise ValueError(f"need s >= M, got s={s}, M={M}")
    lhs = green_parabose_sum(s, M, D)
    rhs = littlewood_product(M, D)
    return _compare_polys(lhs, rhs, f"M={M} D={D} s={s}")


def sample_points(M: int, count: int, seed: int = 0, accept=None) -> list[list[Fraction]]:
    """Reproducible random rational points with distinct coordinates.

    ``accept`` may reject further points (e.g. where a denominator vanishes).
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pt = [Fraction(rng.randint(-12, 12), rng.randint(1, 9)) for _ in range(M)]
        if len(set(pt)) != M:
            continue
        if accept is not None and not accept(pt):
            continue
        out.append(pt)
    return out


def _first_disagreement(pairs, note):
    for i, (a, b) in enumerate(pairs):
        if a != b:
            return Verdict(MISMATCH, (i, str(a), str(b)), note)
    return Verdict(MATCH, None, note)


def bialternant_check(max_weight: int, M: int, points: int = 20, seed: int = 0) -> Verdict:
    """SSYT expansion against the determinant ratio for every lam with
    ``|lam| <= max_weight``, at ``points`` random rational points each.
    On mismatch ``first_diff`` is ``(index, ssyt value, ratio value)``."""
    _check_small("M", M)
    _check_small("max_weight", max_weight, 0, MAX_DEGREE)
    pts = sample_points(M, points, seed)
    pairs = []
    shapes = 0
    for lam in partitions_in_box(None, None, max_weight):
        shapes += 1
        P = schur_poly(lam, M)
        pairs.extend((P.evaluate(p), bialternant_eval(lam, p)) for p in pts)
    return _first_disagreement(pairs, f"{shapes} shapes x {points} points, M={M}")


def _det_regular(s, M):
    def ok(pt):
        try:
            green_parafermi_det(s, M, pt)
        except ValueError:
            return False
        return True
    return ok


def parafermi_det_check(s: int, M: int, points: int = 20, seed: int = 0) -> Verdict:
    """Bounded Schur sum against the determinant ratio at random points
    (points where the denominator vanishes are redrawn)."""
    P = green_parafermi_sum(s, M)
    pts = sample_points(M, points, seed, _det_regular(s, M))
    pairs = [(P.evaluate(p), green_parafermi_det(s, M, p)) for p in pts]
    return _first_disagreement(pairs, f"s={s} M={M}, {points} points")
