"""Dirichlet coefficients of zeta quotients and the arithmetic functions
they are claimed to equal.

A quotient ``prod_i zeta(m_i t)^(e_i)`` has local factor
``prod_i (1 - y^(m_i))^(-e_i)`` at every prime, with ``y = p^(-t)``.
:func:`zeta_quotient_coeffs` expands that power series per prime and
assembles ``a(n)`` multiplicatively.  The arithmetic functions in
:func:`arith_value` are evaluated from the factorization of ``n`` alone,
so the two sides of every claim share nothing but ``factorize``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .verdict import Verdict, compare

__all__ = [
    "EulerProductSpec",
    "ArithmeticSequence",
    "factorize",
    "primes_upto",
    "zeta_quotient_coeffs",
    "local_series",
    "arith_value",
    "ARITH_FUNCTIONS",
    "CLAIMS",
    "claim_ids",
    "verify_dirichlet",
    "is_multiplicative",
]

FACTOR_LIMIT = 10 ** 7
COEFF_LIMIT = 10 ** 6


@dataclass(frozen=True)
class EulerProductSpec:
    """``prod_i zeta(m_i * t) ** e_i`` as a tuple of ``(m_i, e_i)``."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for m, e in self.factors:
            if m < 1:
                raise ValueError(f"multiplier must be positive, got {m}")
            if e == 0:
                raise ValueError("exponent must be nonzero")

    @classmethod
    def of(cls, *factors: tuple[int, int]) -> EulerProductSpec:
        return cls(tuple(factors))

    def __str__(self):
        def z(m):
            return "zeta(t)" if m == 1 else f"zeta({m}t)"
        num = [z(m) + (f"^{e}" if e > 1 else "") for m, e in self.factors if e > 0]
        den = [z(m) + (f"^{-e}" if e < -1 else "") for m, e in self.factors if e < 0]
        text = "*".join(num) or "1"
        return text + ("/(" + "*".join(den) + ")" if den else "")


@dataclass(frozen=True)
class ArithmeticSequence:
    """``values[n-1] = a(n)`` for n = 1..limit."""

    limit: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.limit:
            raise ValueError(f"expected {self.limit} values, got {len(self.values)}")

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"n={n} outside 1..{self.limit}")
        return self.values[n - 1]

    def __len__(self):
        return self.limit


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, primes ascending."""
    if not isinstance(n, int) or not 1 <= n <= FACTOR_LIMIT:
        raise ValueError(f"n must be an integer in 1..{FACTOR_LIMIT}, got {n!r}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            r = 0
            while n % p == 0:
                n //= p
                r += 1
            out.append((p, r))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def primes_upto(N: int) -> list[int]:
    if N < 2:
        return []
    sieve = bytearray([1]) * (N + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(N) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, N + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def local_series(spec: EulerProductSpec, J: int) -> list[int]:
    """Coefficients of ``prod_i (1 - y^m_i)^(-e_i)`` up to ``y^J``."""
    c = [0] * (J + 1)
    c[0] = 1
    for m, e in spec.factors:
        for _ in range(abs(e)):
            if m > J:
                break
            if e > 0:
                # divide by (1 - y^m)
                for j in range(m, J + 1):
                    c[j] += c[j - m]
            else:
                for j in range(J, m - 1, -1):
                    c[j] -= c[j - m]
    return c


def zeta_quotient_coeffs(spec: EulerProductSpec, N: int) -> ArithmeticSequence:
    """Dirichlet coefficients ``a(1..N)`` of the quotient, assembled from
    the local factors with a smallest-prime-factor sieve."""
    if not 1 <= N <= COEFF_LIMIT:
        raise ValueError(f"N must be in 1..{COEFF_LIMIT}, got {N}")
    J = max(1, N.bit_length())
    local = local_series(spec, J)
    spf = list(range(N + 1))
    for p in range(2, math.isqrt(N) + 1):
        if spf[p] == p:
            for q in range(p * p, N + 1, p):
                if spf[q] == q:
                    spf[q] = p
    a = [0] * (N + 1)
    a[1] = 1
    for n in range(2, N + 1):
        p = spf[n]
        m, r = n, 0
        while m % p == 0:
            m //= p
            r += 1
        a[n] = a[m] * local[r]
    return ArithmeticSequence(N, tuple(a[1:]))


# ---------------------------------------------------------------------------
# arithmetic functions, each from the factorization

def _exps(n: int) -> list[int]:
    return [r for _, r in factorize(n)]


def _mobius(n, s=None):
    rs = _exps(n)
    return 0 if any(r > 1 for r in rs) else (-1) ** len(rs)


def _liouville(n, s=None):
    return (-1) ** sum(_exps(n))


def _nu(n, s=None):
    return len(_exps(n))


def _squarefree(n, s=None):
    return int(all(r < 2 for r in _exps(n)))


def _q_s(n, s):
    return int(all(r < s for r in _exps(n)))


def _mu_s(n, s):
    rs = _exps(n)
    return 0 if any(r >= s for r in rs) else (-1) ** sum(rs)


def _nu_s(n, s):
    return sum(1 for r in _exps(n) if r >= s)


def _a_plus(n, s):
    return int(all(r % s in (0, 1) for r in _exps(n)))


def _a_minus(n, s):
    rs = _exps(n)
    if any(r % s not in (0, 1) for r in rs):
        return 0
    return (-1) ** sum(r // s for r in rs)


def _two_nu(n, s=None):
    return 2 ** _nu(n)


def _tau(n, s=None):
    return math.prod(r + 1 for r in _exps(n))


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _squarefree_divisor_count(n, s=None):
    return sum(_squarefree(d) for d in _divisors(n))


def _unitary_divisor_count(n, s=None):
    return sum(1 for d in _divisors(n) if math.gcd(d, n // d) == 1)


def _theta_coeff(n, s):
    """``(-1)^(sum floor(k_i/s)) 2^nu(n)`` when no exponent is divisible by s."""
    rs = _exps(n)
    if any(r % s == 0 for r in rs):
        return 0
    return (-1) ** sum(r // s for r in rs) * 2 ** len(rs)


def _two_nu_s_lambda(n, s):
    return 2 ** _nu_s(n, s) * _liouville(n)


def _two_nu_lambda(n, s=None):
    return 2 ** _nu(n) * _liouville(n)


# id -> (function, needs s)
ARITH_FUNCTIONS: dict[str, tuple[Callable[..., int], bool]] = {
    "mobius": (_mobius, False),
    "liouville": (_liouville, False),
    "nu": (_nu, False),
    "squarefree": (_squarefree, False),
    "q_s": (_q_s, True),
    "mu_s": (_mu_s, True),
    "nu_s": (_nu_s, True),
    "a_plus": (_a_plus, True),
    "a_minus": (_a_minus, True),
    "two_nu": (_two_nu, False),
    "tau": (_tau, False),
    "squarefree_divisor_count": (_squarefree_divisor_count, False),
    "unitary_divisor_count": (_unitary_divisor_count, False),
    "theta_coeff": (_theta_coeff, True),
    "two_nu_s_lambda": (_two_nu_s_lambda, True),
    "two_nu_lambda": (_two_nu_lambda, False),
}


def arith_value(fn: str, n: int, s: Optional[int] = None) -> int:
    if fn not in ARITH_FUNCTIONS:
        raise KeyError(f"unknown arithmetic function {fn!r}")
    f, needs_s = ARITH_FUNCTIONS[fn]
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if needs_s:
        if s is None:
            raise ValueError(f"{fn} needs a parameter s")
        if s < 1:
            raise ValueError(f"s must be positive, got {s}")
        return f(n, s)
    return f(n)


# ---------------------------------------------------------------------------
# claims

@dataclass(frozen=True)
class DirichletClaim:
    id: str
    description: str
    spec: Optional[Callable[[int], EulerProductSpec]]
    fn: str
    parity: Optional[str] = None        # "even" / "odd" restriction on s
    parametrized: bool = True
    # when spec is None the left side is a divisor sum of `left_fn`
    left_fn: Optional[str] = None


Z = EulerProductSpec.of

CLAIMS: dict[str, DirichletClaim] = {c.id: c for c in [
    DirichletClaim("d56", "zeta(t)/zeta(2t) = sum q(n)/n^t",
                   lambda s: Z((1, 1), (2, -1)), "squarefree", parametrized=False),
    DirichletClaim("d57", "zeta(t)/zeta(st) = sum q_s(n)/n^t",
                   lambda s: Z((1, 1), (s, -1)), "q_s"),
    DirichletClaim("d58", "zeta(2t)/(zeta(t)zeta(st)) = sum mu_s(n)/n^t, s even",
                   lambda s: Z((2, 1), (1, -1), (s, -1)), "mu_s", "even"),
    DirichletClaim("d59", "zeta(2t)zeta(st)/(zeta(t)zeta(2st)) = sum mu_s(n)/n^t, s odd",
                   lambda s: Z((2, 1), (s, 1), (1, -1), (2 * s, -1)), "mu_s", "odd"),
    DirichletClaim("d60", "zeta(t)zeta(st)/zeta(2t) = sum a+(n)/n^t",
                   lambda s: Z((1, 1), (s, 1), (2, -1)), "a_plus", "even"),
    DirichletClaim("d62", "zeta(t)zeta(2st)/(zeta(2t)zeta(st)) = sum a-(n)/n^t",
                   lambda s: Z((1, 1), (2 * s, 1), (2, -1), (s, -1)), "a_minus", "odd"),
    DirichletClaim("d64", "zeta(t)^2/zeta(2t) = sum 2^nu(n)/n^t",
                   lambda s: Z((1, 2), (2, -1)), "two_nu", parametrized=False),
    DirichletClaim("d65", "sum_{d|n} q(d) = 2^nu(n)",
                   None, "two_nu", parametrized=False, left_fn="squarefree"),
    DirichletClaim("d68", "zeta(t)^2 zeta(2st)/(zeta(2t) zeta(st)^2) closed form, s odd",
                   lambda s: Z((1, 2), (2 * s, 1), (2, -1), (s, -2)), "theta_coeff", "odd"),
    DirichletClaim("d69", "zeta(2t)/(zeta(t)zeta(st)) = sum 2^nu_s(n) lambda(n)/n^t, s odd",
                   lambda s: Z((2, 1), (1, -1), (s, -1)), "two_nu_s_lambda", "odd"),
    DirichletClaim("d70", "zeta(2t)zeta(st)/(zeta(t)zeta(2st)) = sum 2^nu_s(n) lambda(n)/n^t, s even",
                   lambda s: Z((2, 1), (s, 1), (1, -1), (2 * s, -1)), "two_nu_s_lambda", "even"),
    DirichletClaim("d_s1", "zeta(2t)/zeta(t)^2 = sum 2^nu(n) lambda(n)/n^t",
                   lambda s: Z((2, 1), (1, -2)), "two_nu_lambda", parametrized=False),
]}


def claim_ids() -> list[str]:
    return list(CLAIMS)


def _parse_claim(id: str, s: Optional[int]) -> tuple[DirichletClaim, Optional[int]]:
    base, _, tail = id.partition("_s")
    if id in CLAIMS:
        claim = CLAIMS[id]
    elif base in CLAIMS and tail.isdigit():
        claim, s = CLAIMS[base], int(tail)
    else:
        raise KeyError(f"unknown Dirichlet claim {id!r}")
    if claim.parametrized:
        if s is None:
            raise ValueError(f"claim {claim.id} needs a parameter s")
        if s < 2:
            raise ValueError(f"s must be >= 2, got {s}")
        if claim.parity == "even" and s % 2:
            raise ValueError(f"claim {claim.id} is stated for even s, got {s}")
        if claim.parity == "odd" and s % 2 == 0:
            raise ValueError(f"claim {claim.id} is stated for odd s, got {s}")
    else:
        s = None
    return claim, s


def verify_dirichlet(id: str, N: int, s: Optional[int] = None) -> Verdict:
    """Compare the claimed coefficient sequence with its defining side for
    n = 1..N.  Parametrized claims take ``s`` directly or as ``d57_s4``."""
    claim, s = _parse_claim(id, s)
    right = [arith_value(claim.fn, n, s) for n in range(1, N + 1)]
    if claim.spec is None:
        left = []
        for n in range(1, N + 1):
            left.append(sum(arith_value(claim.left_fn, d) for d in _divisors(n)))
        note = f"divisor sum of {claim.left_fn} vs {claim.fn}"
    else:
        spec = claim.spec(s)
        left = list(zeta_quotient_coeffs(spec, N).values)
        note = f"{spec} vs {claim.fn}" + (f" (s={s})" if s is not None else "")
    return compare(left, right, start=1, note=note)


def is_multiplicative(values: ArithmeticSequence, pairs: int = 500, seed: int = 0) -> bool:
    """Spot-check ``a(mn) = a(m)a(n)`` on random coprime pairs."""
    import random

    rng = random.Random(seed)
    N = values.limit
    if values[1] != 1:
        return False
    for _ in range(pairs):
        m = rng.randint(2, max(2, math.isqrt(N)))
        n = rng.randint(2, max(2, N // m))
        if m * n > N or math.gcd(m, n) != 1:
            continue
        if values[m * n] != values[m] * values[n]:
            return False
    return True
