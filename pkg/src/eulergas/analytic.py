"""Floating-point checks: theta functional equations, the Mellin transform
of theta4 against the eta closed form, the cosh product, the p=1/2, 3/2
oscillator decomposition and the growth rate of parafermion counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy import integrate

from .partitions import named_constraint, restricted_counts

__all__ = [
    "theta_value",
    "THETA_GRID",
    "theta_residuals",
    "dirichlet_eta",
    "MellinCheckResult",
    "mellin_theta4",
    "mellin_closed_form",
    "mellin_zeta_form",
    "HyperbolicResidual",
    "hyperbolic_product_check",
    "cosh_product",
    "z_half",
    "z_three_halves",
    "z_boson",
    "z_fermion",
    "parastat_half_check",
    "HagisRecord",
    "hagis_check",
    "parafermion_count",
]

_TAIL = 1e-18


def _theta_sum(t: float, alternating: bool) -> float:
    """``1 + 2 sum_{n>=1} (+-1)^n exp(-pi n^2 t)`` summed until negligible."""
    total = 0.0
    n = 1
    while True:
        term = math.exp(-math.pi * n * n * t)
        total += -term if alternating and n % 2 else term
        if term < _TAIL:
            break
        n += 1
    return 1.0 + 2.0 * total


def _half_shift_sum(u: float) -> float:
    """``2 sum_{n>=0} exp(-pi (n+1/2)^2 u)``."""
    total = 0.0
    n = 0
    while True:
        term = math.exp(-math.pi * (n + 0.5) ** 2 * u)
        total += term
        if term < _TAIL:
            break
        n += 1
    return 2.0 * total


def theta_value(t: float, variant: str = "theta", method: str = "auto") -> float:
    """``theta(t) = sum_n exp(-pi n^2 t)`` or ``theta4(t) = sum_n (-1)^n exp(-pi n^2 t)``.

    With ``method="auto"`` arguments below 1 go through the inversion
    ``t -> 1/t`` so only a handful of terms are ever summed.  ``"direct"``
    always sums the defining series.
    """
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    if variant not in ("theta", "theta4"):
        raise ValueError(f"unknown variant {variant!r}")
    if method not in ("auto", "direct"):
        raise ValueError(f"unknown method {method!r}")
    alternating = variant == "theta4"
    if method == "direct" or t >= 1:
        return _theta_sum(t, alternating)
    if alternating:
        return t ** -0.5 * _half_shift_sum(1.0 / t)
    return t ** -0.5 * _theta_sum(1.0 / t, False)


THETA_GRID = tuple(round(0.1 * k, 1) for k in range(1, 31))


def theta_residuals(ts=THETA_GRID) -> tuple[float, float]:
    """Max residuals over ``ts`` of ``theta4(t) = 2 theta(4t) - theta(t)`` and
    of ``theta(t) = t^(-1/2) theta(1/t)``, both sides summed directly."""
    r1 = r2 = 0.0
    for t in ts:
        direct = theta_value(t, method="direct")
        r1 = max(r1, abs(theta_value(t, "theta4", "direct")
                         - (2 * theta_value(4 * t, method="direct") - direct)))
        r2 = max(r2, abs(direct - t ** -0.5 * theta_value(1 / t, method="direct")))
    return r1, r2


def dirichlet_eta(s: float, n: int = 40) -> float:
    """Alternating zeta ``sum (-1)^(k+1) k^-s`` by Borwein's acceleration."""
    # d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    d = []
    acc = 0.0
    for i in range(n + 1):
        acc += n * math.factorial(n + i - 1) * 4 ** i / (math.factorial(n - i) * math.factorial(2 * i))
        d.append(acc)
    total = 0.0
    for k in range(n):
        total += (-1) ** k * (d[n] - d[k]) / (k + 1) ** s
    return total / d[n]


@dataclass(frozen=True)
class MellinCheckResult:
    s: float
    lhs: float
    rhs: float
    abs_err: float

    def to_dict(self) -> dict:
        return {"s": self.s, "lhs": self.lhs, "rhs": self.rhs, "abs_err": self.abs_err}


def mellin_closed_form(s: float) -> float:
    """``-2 pi^(-s/2) Gamma(s/2) eta(s) + 2/s``."""
    return -2.0 * math.pi ** (-s / 2) * math.gamma(s / 2) * dirichlet_eta(s) + 2.0 / s


def mellin_zeta_form(s: float) -> float:
    """The same value written with ``(2^(1-s) - 1) zeta(s)``; undefined at s=1."""
    from scipy.special import zeta

    if s == 1:
        raise ValueError("the zeta form has a removable singularity at s=1")
    return 2.0 * math.pi ** (-s / 2) * math.gamma(s / 2) * (2 ** (1 - s) - 1) * float(zeta(s)) + 2.0 / s


def mellin_theta4(s: float, tol: float = 1e-12) -> MellinCheckResult:
    """Quadrature of the split Mellin integral of theta4 against the closed form.

    The piece over (0, 1) is mapped to (1, inf) by ``u = 1/t``; there
    ``theta4(1/u) = u^(1/2) * 2 sum exp(-pi (n+1/2)^2 u)`` decays fast and
    the integrand is smooth.
    """
    if not 0 < s <= 4:
        raise ValueError(f"s must lie in (0, 4], got {s}")
    a = s / 2 - 1

    def upper(t):
        return t ** a * (theta_value(t, "theta4") - 1.0)

    def lower(u):
        # t^(s/2-1) theta4(t) dt with t = 1/u, dt = du/u^2
        return u ** (-a - 2) * u ** 0.5 * _half_shift_sum(u)

    kw = dict(epsabs=tol, epsrel=tol, limit=200)
    i1, _ = integrate.quad(upper, 1.0, math.inf, **kw)
    i2, _ = integrate.quad(lower, 1.0, math.inf, **kw)
    lhs = i1 + i2
    rhs = mellin_closed_form(s)
    return MellinCheckResult(s, lhs, rhs, abs(lhs - rhs))


@dataclass(frozen=True)
class HyperbolicResidual:
    identity: float   # |2cosh(t/2) - sinh(t)/sinh(t/2)|
    product: float    # |2cosh(t/2) - 2 prod_{k<K} (1 + t^2/((2k+1)^2 pi^2))|

    @property
    def max(self) -> float:
        return max(self.identity, self.product)


def cosh_product(t: float, K: int) -> float:
    """``2 prod_{k=0}^{K-1} (1 + t^2 / ((2k+1)^2 pi^2))``."""
    logs = math.fsum(math.log1p(t * t / ((2 * k + 1) ** 2 * math.pi ** 2)) for k in range(K))
    return 2.0 * math.exp(logs)


def hyperbolic_product_check(t: float, K: int) -> HyperbolicResidual:
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    lhs = 2.0 * math.cosh(t / 2)
    ratio = math.sinh(t) / math.sinh(t / 2)
    return HyperbolicResidual(abs(lhs - ratio), abs(lhs - cosh_product(t, K)))


def z_half(t: float) -> float:
    """Oscillator levels 2n + 1/2: ``e^(-t/2) / (1 - e^(-2t))``."""
    return math.exp(-t / 2) / -math.expm1(-2 * t)


def z_three_halves(t: float) -> float:
    """Oscillator levels 2n + 3/2: ``e^(-3t/2) / (1 - e^(-2t))``."""
    return math.exp(-1.5 * t) / -math.expm1(-2 * t)


def z_boson(t: float) -> float:
    """Oscillator with zero-point energy: ``e^(-t/2) / (1 - e^(-t))``."""
    return math.exp(-t / 2) / -math.expm1(-t)


def z_fermion(t: float) -> float:
    """Two-level system at energies -1/2, +1/2: ``2 cosh(t/2)``."""
    return 2.0 * math.cosh(t / 2)


def _level_sum(t: float, offset: float) -> float:
    total = 0.0
    n = 0
    while True:
        term = math.exp(-t * (2 * n + offset))
        total += term
        if term < 1e-18 * total:
            return total
        n += 1


def parastat_half_check(t: float) -> float:
    """Largest residual among: level sums vs closed forms, the two sectors
    summing to the boson, and the boson as ``Z_B(2t) * Z_F(t)``."""
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    half, three = z_half(t), z_three_halves(t)
    residuals = [
        abs(_level_sum(t, 0.5) - half),
        abs(_level_sum(t, 1.5) - three),
        abs(half + three - z_boson(t)),
        abs(z_boson(t) - z_boson(2 * t) * z_fermion(t)),
    ]
    return max(residuals)


@dataclass(frozen=True)
class HagisRecord:
    s: int
    n: int
    empirical: float
    alternative_candidate: float
    standard_candidate: float

    def to_dict(self) -> dict:
        return {"s": self.s, "n": self.n, "empirical": self.empirical,
                "alternative_candidate": self.alternative_candidate,
                "standard_candidate": self.standard_candidate}


@lru_cache(maxsize=16)
def _parafermion_table(s: int, N: int) -> tuple[int, ...]:
    return tuple(restricted_counts(N, named_constraint(f"prime-to-{s}")))


def parafermion_count(n: int, s: int) -> int:
    """Partitions of n with every multiplicity below s, counted as
    partitions into parts not divisible by s."""
    N = 4096 if n <= 4096 else 10 ** 4  # two table sizes shared by all requests
    return _parafermion_table(s, N)[n]


def hagis_check(s: int, n: int) -> HagisRecord:
    """``ln p(n,s) / sqrt(n)`` next to the two candidate limits."""
    if not 2 <= s <= 10:
        raise ValueError(f"s must be in 2..10, got {s}")
    if not 1 <= n <= 10 ** 4:
        raise ValueError(f"n must be in 1..10000, got {n}")
    empirical = math.log(parafermion_count(n, s)) / math.sqrt(n)
    alternative = math.pi * math.sqrt(2 * s / (3 * (1 + s)))
    standard = math.pi * math.sqrt(2 * (s - 1) / (3 * s))
    return HagisRecord(s, n, empirical, alternative, standard)
