"""Catalog of product, sum and partition-count identities.

Every :class:`IdentityRecord` carries two or more series builders that
reach the same generating function by different code paths: symbolic
products (``qseries.expand_product``), theta-series arithmetic, partition
constraints fed through ``partitions.gen_series``, direct DP counts, and
the explicit q-hypergeometric sums defined below.  ``verify`` expands all
of them and reports the first coefficient where any pair disagrees.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from . import partitions as P
from .qseries import (
    TruncatedSeries,
    apply_binomial,
    expand_exponents,
    expand_product,
    family,
    invert,
    make_series,
    mul,
    one,
    substitute,
    theta4_series,
)
from .verdict import MATCH, MISMATCH, Verdict

__all__ = [
    "IdentityRecord",
    "catalog",
    "catalog_ids",
    "get_record",
    "instantiate",
    "families",
    "verify",
    "verify_record",
    "verify_all",
    "gauss_cauchy_sum",
    "lebesgue_sum",
    "slater6_sum",
    "andrews_multisum",
    "overpartition_double_sum",
    "two_modular_sum",
    "two_modular_record",
    "catalog_constraints",
    "TWO_MODULAR_READINGS",
    "graded_parafermion_product",
    "parafermion_series",
    "theta_ratio",
    "product",
    "SEQUENCES",
    "sequence",
]

Builder = Callable[[int], TruncatedSeries]


@dataclass(frozen=True)
class IdentityRecord:
    """A named identity and its independent series builders.

    ``claim`` marks a conjectured formula whose verdict is an output of the
    run rather than an expectation.
    """

    id: str
    description: str
    builders: tuple[tuple[str, Builder], ...]
    default_order: int
    anchor: str
    claim: bool = False

    def __post_init__(self):
        if len(self.builders) < 2:
            raise ValueError(f"{self.id}: need at least two builders")
        names = [name for name, _ in self.builders]
        if len(set(names)) != len(names):
            raise ValueError(f"{self.id}: duplicate builder names {names}")


# ---------------------------------------------------------------------------
# building blocks

def product(*specs: str) -> Builder:
    """Builder for a product of factor families given in compact form."""
    fams = [family(s) for s in specs]
    return lambda N: expand_product(fams, N)


_COLLECT_LOCK = threading.Lock()
_collected: Optional[set[str]] = None  # constraint names seen while building, when collecting


def _named(name: str) -> P.PartitionConstraint:
    if _collected is not None:
        _collected.add(name)
    return P.named_constraint(name)


def constraint(name: str) -> Builder:
    c = _named(name)
    return lambda N: P.gen_series(c, N)


def dp_counts(name: str) -> Builder:
    c = _named(name)
    return lambda N: make_series(P.restricted_counts(N, c), N)


def even_half(name: str) -> Builder:
    """Coefficient n is the number of constrained partitions of 2n."""
    c = _named(name)
    return lambda N: make_series(P.gen_series(c, 2 * N).coeffs[::2], N)


def parafermion_series(s: int, N: int) -> TruncatedSeries:
    """``prod_k (1 + x^k + ... + x^((s-1)k))`` from the multiplicity rule."""
    return P.gen_series(P.named_constraint(f"at-most-{s - 1}"), N)


def graded_parafermion_product(s: int, N: int) -> TruncatedSeries:
    """``prod_k sum_{j<s} (-1)^j x^(jk)``: each mode graded separately."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    series = one(N)
    for k in range(1, N + 1):
        factor = [0] * (N + 1)
        for j in range(min(s - 1, N // k) + 1):
            factor[j * k] = -1 if j % 2 else 1
        series = mul(series, make_series(factor, N))
    return series


def theta_ratio(s: int, N: int) -> TruncatedSeries:
    """``theta4(x^s) / theta4(x)`` from the theta series alone."""
    th = theta4_series(N)
    return mul(substitute(th, 1, s), invert(th))


def _exponent_product(exponents: Callable[[int], Iterable[int]], sign: int, power: int,
                      tail: Sequence[str] = ()) -> Builder:
    def build(N: int) -> TruncatedSeries:
        head = expand_exponents(exponents(N), sign, power, N)
        return mul(head, expand_product([family(t) for t in tail], N))
    return build


def _shift_add(total: list[int], term: Sequence[int], shift: int, weight: int = 1) -> None:
    N = len(total) - 1
    for j in range(N + 1 - shift):
        if term[j]:
            total[j + shift] += weight * term[j]


# ---------------------------------------------------------------------------
# q-hypergeometric sums

def gauss_cauchy_sum(N: int) -> TruncatedSeries:
    """``1 + sum_k 2 (1+x)...(1+x^(k-1)) / ((1-x)...(1-x^k)) x^k``."""
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    total = [0] * (N + 1)
    total[0] = 1
    t = [0] * (N + 1)
    t[0] = 1
    apply_binomial(t, 1, -1, -1)
    for k in range(1, N + 1):
        _shift_add(total, t, k, 2)
        apply_binomial(t, k, 1, 1)
        apply_binomial(t, k + 1, -1, -1)
    return TruncatedSeries(N, tuple(total))


def lebesgue_sum(N: int) -> TruncatedSeries:
    """``1 + sum_k 2 (1+x)...(1+x^(k-1)) / ((1-x)...(1-x^k)) x^(k(k+1)/2)``."""
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    total = [0] * (N + 1)
    total[0] = 1
    t = [0] * (N + 1)
    t[0] = 1
    apply_binomial(t, 1, -1, -1)
    k = 1
    while k * (k + 1) // 2 <= N:
        _shift_add(total, t, k * (k + 1) // 2, 2)
        apply_binomial(t, k, 1, 1)
        apply_binomial(t, k + 1, -1, -1)
        k += 1
    return TruncatedSeries(N, tuple(total))


def slater6_sum(N: int) -> TruncatedSeries:
    """``1 + sum_k 2 (-x;x)_(k-1) x^(k^2) / ((x;x)_k (1-x)(1-x^3)...(1-x^(2k-1)))``."""
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    total = [0] * (N + 1)
    total[0] = 1
    t = [0] * (N + 1)
    t[0] = 1
    apply_binomial(t, 1, -1, -1)
    apply_binomial(t, 1, -1, -1)
    k = 1
    while k * k <= N:
        _shift_add(total, t, k * k, 2)
        apply_binomial(t, k, 1, 1)
        apply_binomial(t, k + 1, -1, -1)
        apply_binomial(t, 2 * k + 1, -1, -1)
        k += 1
    return TruncatedSeries(N, tuple(total))


def _inverse_pochhammers(N: int, top: int) -> list[list[int]]:
    """``1/(x;x)_d`` for d = 0..top, each to order N."""
    out = []
    cur = [0] * (N + 1)
    cur[0] = 1
    out.append(cur[:])
    for d in range(1, top + 1):
        apply_binomial(cur, d, -1, -1)
        out.append(cur[:])
    return out


def andrews_multisum(s: int, N: int) -> TruncatedSeries:
    """Sum over chains ``n_(s-1) >= ... >= n_1 >= 0`` of

        prod_{j=0}^{n_(s-1)-1} (1+x^j) * x^(n_(s-1)(n_(s-1)+1)/2 + n_(s-2)^2 + ... + n_1^2)
        / ((x;x)_(n_(s-1)-n_(s-2)) ... (x;x)_(n_2-n_1) (x;x)_(n_1))

    The j=0 numerator factor is the constant 2.  The chain sum is folded
    level by level: ``level[n]`` is the sum over all chains below a fixed
    ``n_i = n``, so every chain is counted once without listing it.
    """
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    top = 0
    while (top + 1) * (top + 2) // 2 <= N:
        top += 1
    inv = _inverse_pochhammers(N, top)

    # bottom level n_1 = n: x^(n^2) / (x;x)_n, kept unshifted except for n^2
    def fold(lower: list[list[int]], n: int) -> list[int]:
        acc = [0] * (N + 1)
        for m, series in enumerate(lower[:n + 1]):
            if any(series):
                prod_ = mul(make_series(series, N), make_series(inv[n - m], N))
                acc = [a + b for a, b in zip(acc, prod_.coeffs)]
        return acc

    lower = [[1] + [0] * N]          # zero levels below: a single empty chain
    for _level in range(s - 2):
        new = []
        for n in range(top + 1):
            if n * n > N:
                new.append([0] * (N + 1))
                continue
            folded = fold(lower, n)
            shifted = [0] * (N + 1)
            _shift_add(shifted, folded, n * n)
            new.append(shifted)
        lower = new
    total = [0] * (N + 1)
    numer = [0] * (N + 1)
    numer[0] = 1
    for a in range(top + 1):
        if a == 1:
            numer = [2 * c for c in numer]          # the factor 1 + x^0
        elif a > 1:
            apply_binomial(numer, a - 1, 1, 1)
        inner = fold(lower, a)
        term = mul(make_series(numer, N), make_series(inner, N))
        _shift_add(total, term.coeffs, a * (a + 1) // 2)
    return TruncatedSeries(N, tuple(total))


def overpartition_double_sum(N: int) -> TruncatedSeries:
    """``1 + sum over strict chains n_1 > ... > n_i > 0 of
    2^i x^(n_1+...+n_i) / ((1-x^n_1)...(1-x^n_i))``, by depth-first search."""
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    total = [0] * (N + 1)
    total[0] = 1

    # chains are grown smallest part first; cur already holds the term
    def walk(cur: list[int], low: int, used: int):
        for k in range(low, N - used + 1):
            nxt = [0] * k + [2 * c for c in cur[:N + 1 - k]]
            apply_binomial(nxt, k, -1, -1)
            total[k:] = [a + b for a, b in zip(total[k:], nxt[k:])]
            walk(nxt, k + 1, used + k)

    start = [0] * (N + 1)
    start[0] = 1
    walk(start, 1, 0)
    return TruncatedSeries(N, tuple(total))


TWO_MODULAR_READINGS = ("all", "min", "max")


def _distinct_even_parts(total: int, m: int) -> list[list[int]]:
    """Partitions of ``total`` into exactly ``m`` distinct even parts."""
    if total % 2:
        return []
    out: list[list[int]] = []

    # halves h_1 > h_2 > ... > h_m > 0 summing to total/2
    def walk(rem: int, count: int, below: int, halves: list[int]):
        if count == 1:
            if 0 < rem < below:
                out.append([2 * h for h in halves + [rem]])
            return
        for h in range(min(below - 1, rem), 0, -1):
            # the largest sum reachable with h on top is h + (h-1) + ...
            if h * count - count * (count - 1) // 2 < rem:
                break
            if rem - h < (count - 1) * count // 2:
                continue
            halves.append(h)
            walk(rem - h, count - 1, h, halves)
            halves.pop()

    walk(total // 2, m, total // 2 + 1, [])
    return out


def _two_modular_pairs(N: int, reading: str) -> list[tuple[int, int, list[list[int]]]]:
    if reading not in TWO_MODULAR_READINGS:
        raise ValueError(f"unknown reading {reading!r}; expected one of {TWO_MODULAR_READINGS}")
    pairs = []
    for n in range(1, N + 1):
        if n == 2:
            continue
        admissible = []
        m = 1
        while m * m <= n:
            if (n + m) % 2 == 0 and (n > m or (n, m) == (1, 1)):
                parts = _distinct_even_parts(n + m, m)
                if parts:
                    admissible.append((m, parts))
            m += 1
        if not admissible:
            continue
        if reading == "min":
            admissible = admissible[:1]
        elif reading == "max":
            admissible = admissible[-1:]
        for m, parts in admissible:
            pairs.append((n, m, parts))
    return pairs


def two_modular_sum(N: int, reading: str = "all") -> TruncatedSeries:
    """The proposed 2-modular sum

        1 + sum_{n>=1, n != 2} sum_m sum_{n_1..n_m} x^n (1+x)^m / prod_j (1-x^(n_j))

    with ``n + m`` even, ``n > m`` except ``(n, m) = (1, 1)``, and
    ``n_1..n_m`` distinct even parts summing to ``n + m``.  ``reading``
    chooses which admissible ``m`` enter for each ``n``: all of them, only
    the smallest, or only the largest.
    """
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    total = [0] * (N + 1)
    total[0] = 1
    for n, m, partitions_ in _two_modular_pairs(N, reading):
        base = [0] * (N + 1)
        base[0] = 1
        for _ in range(m):
            apply_binomial(base, 1, 1, 1)
        for parts in partitions_:
            term = base[:]
            for e in parts:
                apply_binomial(term, e, -1, -1)
            _shift_add(total, term, n)
    return TruncatedSeries(N, tuple(total))


# ---------------------------------------------------------------------------
# catalog

Family = Callable[[int], IdentityRecord]
_FAMILIES: dict[str, tuple[Family, tuple[int, ...]]] = {}


def _register(name: str, params: tuple[int, ...] = ()):
    def deco(fn):
        _FAMILIES[name] = (fn, params)
        return fn
    return deco


def _plain(name: str):
    def deco(fn):
        _FAMILIES[name] = (lambda _p: fn(), ())
        return fn
    return deco


def _rec(id: str, description: str, builders: dict[str, Builder], order: int,
         anchor: str, claim: bool = False) -> IdentityRecord:
    return IdentityRecord(id, description, tuple(builders.items()), order, anchor, claim)


@_plain("euler_distinct_odd")
def _euler() -> IdentityRecord:
    return _rec("euler_distinct_odd", "distinct parts and odd parts are equinumerous", {
        "prod(1+x^k)": product("1+x^k"),
        "prod 1/(1-x^(2k-1))": product("1/(1-x^(2k-1))"),
        "prod(1-x^(2k))/(1-x^k)": product("1-x^(2k)", "1/(1-x^k)"),
        "distinct parts": constraint("distinct"),
        "odd parts": dp_counts("odd"),
    }, 500, "Euler distinct=odd")


@_plain("witten_cancellation")
def _witten() -> IdentityRecord:
    return _rec("witten_cancellation", "graded fermion times boson product is 1", {
        "prod(1-x^k) * prod 1/(1-x^k)": lambda N: mul(expand_product([family("1-x^k")], N),
                                                       expand_product([family("1/(1-x^k)")], N)),
        "one": one,
    }, 300, "Witten index cancellation")


@_register("parafermion_multiplicity", tuple(range(2, 9)))
def _parafermion(s: int) -> IdentityRecord:
    return _rec(f"parafermion_multiplicity_s{s}",
                f"parts at most {s - 1} times = parts not divisible by {s}", {
                    "multiplicity rule": constraint(f"at-most-{s - 1}"),
                    "prod(1-x^(sk))/(1-x^k)": product(f"1-x^({s}k)", "1/(1-x^k)"),
                    "parts prime to s": dp_counts(f"prime-to-{s}"),
                }, 300, "truncated boson factorization")


@_plain("s3_prime_to_3")
def _s3() -> IdentityRecord:
    return _rec("s3_prime_to_3", "order-3 parafermion = parts prime to 3", {
        "prod 1/((1-x^(3k-2))(1-x^(3k-1)))": product("1/(1-x^(3k-2))", "1/(1-x^(3k-1))"),
        "prod(1-x^(3k))/(1-x^k)": product("1-x^(3k)", "1/(1-x^k)"),
        "parts at most twice": constraint("at-most-2"),
        "parts prime to 3": dp_counts("prime-to-3"),
    }, 200, "A000726")


@_plain("thm_squares")
def _squares() -> IdentityRecord:
    return _rec("thm_squares", "each k at most k-1 times = no square parts", {
        "k at most k-1 times": constraint("at-most-k-minus-1"),
        "prod(1-x^(k^2))/(1-x^k)": _exponent_product(
            lambda N: (k * k for k in range(1, N + 1) if k * k <= N), -1, 1, ["1/(1-x^k)"]),
        "no square parts": dp_counts("no-squares"),
    }, 300, "excluded squares theorem")


@_register("thm_2r_gons", tuple(range(2, 9)))
def _two_r_gons(r: int) -> IdentityRecord:
    return _rec(f"thm_2r_gons_r{r}", f"k at most {r - 1}(k-1) times = no {2 * r}-gonal parts", {
        "multiplicity rule": constraint(f"thm2-mult-{r}"),
        "prod(1-x^(k[(r-1)(k-1)+1]))/(1-x^k)": _exponent_product(
            lambda N: (e for e in (k * ((r - 1) * (k - 1) + 1) for k in range(1, N + 1)) if e <= N),
            -1, 1, ["1/(1-x^k)"]),
        "no 2r-gon parts": dp_counts(f"no-{2 * r}-gons"),
    }, 200, "excluded 2r-gons theorem")


@_register("thm_2r1_gons", tuple(range(2, 9)))
def _two_r1_gons(r: int) -> IdentityRecord:
    def exps(N):
        for k in range(1, N + 1):
            e = (2 * k - 1) * ((2 * r - 1) * (k - 1) + 1)
            if e <= N:
                yield e
    return _rec(f"thm_2r1_gons_r{r}",
                f"odd part 2k-1 at most {2 * r - 1}(k-1) times = no odd-indexed {2 * r + 1}-gons", {
                    "multiplicity rule": constraint(f"thm3-mult-{r}"),
                    "prod(1-x^((2k-1)[(2r-1)(k-1)+1]))/(1-x^k)": _exponent_product(
                        exps, -1, 1, ["1/(1-x^k)"]),
                    "no odd-indexed gons": dp_counts(f"no-odd-index-{2 * r + 1}-gons"),
                }, 200, "excluded odd-indexed (2r+1)-gons theorem")


@_register("graded_parafermion", tuple(range(2, 9)))
def _graded(s: int) -> IdentityRecord:
    sign = "-" if s % 2 == 0 else "+"
    return _rec(f"graded_parafermion_s{s}", "mode-wise graded parafermion product", {
        "prod sum_{j<s} (-x^k)^j": lambda N: graded_parafermion_product(s, N),
        "prod(1+(-1)^(s-1)x^(sk))/(1+x^k)": product(f"1{sign}x^({s}k)", "1/(1+x^k)"),
    }, 200, "graded parafermion identity")


@_plain("schur_1926")
def _schur() -> IdentityRecord:
    return _rec("schur_1926", "distinct parts prime to 3 = parts 1,5 mod 6", {
        "prod(1+x^(3k-2))(1+x^(3k-1))": product("1+x^(3k-2)", "1+x^(3k-1)"),
        "prod(1-x^(6k-3))/(1-x^(2k-1))": product("1-x^(6k-3)", "1/(1-x^(2k-1))"),
        "prod 1/((1-x^(6k-5))(1-x^(6k-1)))": product("1/(1-x^(6k-5))", "1/(1-x^(6k-1))"),
        "distinct parts prime to 3": constraint("distinct-prime-to-3"),
        "parts 1,5 mod 6": dp_counts("mod-6-in-1,5"),
        "graded inverse": lambda N: invert(graded_parafermion_product(3, N)),
    }, 200, "Schur 1926 theorem")


@_plain("igppf4")
def _igppf4() -> IdentityRecord:
    return _rec("igppf4", "inverse graded parafermion of order 4", {
        "prod(1+x^k)/(1-x^(4k))": product("1+x^k", "1/(1-x^(4k))"),
        "prod(1+x^(2k-1))/(1-x^(2k))": product("1+x^(2k-1)", "1/(1-x^(2k))"),
        "even parts with even multiplicity": constraint("even-even-mult"),
        "odd parts distinct": constraint("odd-distinct"),
        "parts not 2 mod 4": dp_counts("mod-4-in-0,1,3"),
        "graded inverse": lambda N: invert(graded_parafermion_product(4, N)),
    }, 200, "A006950")


@_plain("igppf5")
def _igppf5() -> IdentityRecord:
    return _rec("igppf5", "inverse graded parafermion of order 5", {
        "prod(1+x^k)/(1+x^(5k))": product("1+x^k", "1/(1+x^(5k))"),
        "prod(1+x^(5k-j)), j=1..4": product("1+x^(5k-1)", "1+x^(5k-2)", "1+x^(5k-3)", "1+x^(5k-4)"),
        "prod 1/(1-x^(10k-j)), j=1,3,7,9": product(
            "1/(1-x^(10k-1))", "1/(1-x^(10k-3))", "1/(1-x^(10k-7))", "1/(1-x^(10k-9))"),
        "distinct parts prime to 5": constraint("distinct-prime-to-5"),
        "parts 1,3,7,9 mod 10": dp_counts("mod-10-in-1,3,7,9"),
    }, 200, "distinct parts prime to 5")


@_plain("igppf6")
def _igppf6() -> IdentityRecord:
    return _rec("igppf6",
                "inverse graded parafermion of order 6; the last printed product carries "
                "(1+x^(6k-5)) where the residue form needs (1-x^(6k-5)); the residue form is used", {
                    "prod(1+x^k)/(1-x^(6k))": product("1+x^k", "1/(1-x^(6k))"),
                    "prod(1+x^(3k-1))(1+x^(3k-2))/(1-x^(3k))": product(
                        "1+x^(3k-1)", "1+x^(3k-2)", "1/(1-x^(3k))"),
                    "parts 0,1,3,5 mod 6": constraint("mod-6-in-0,1,3,5"),
                    "even parts in multiples of 3": dp_counts("even-mult-step-3"),
                }, 200, "residues 0,1,3,5 mod 6")


@_register("prop1_even", (2, 4, 6, 8))
def _prop1_even(s: int) -> IdentityRecord:
    if s % 2:
        raise ValueError(f"prop1_even needs even s, got {s}")
    residues = ",".join(str(r) for r in [0] + list(range(1, s, 2)))
    return _rec(f"prop1_even_s{s}", f"inverse graded parafermion, even order {s}", {
        "prod(1+x^k)/(1-x^(sk))": product("1+x^k", f"1/(1-x^({s}k))"),
        "prod 1/((1-x^(2k-1))(1-x^(sk)))": product("1/(1-x^(2k-1))", f"1/(1-x^({s}k))"),
        "parts 0 or odd mod s": constraint(f"mod-{s}-in-{residues}"),
        "even parts in multiples of s/2": dp_counts(f"even-mult-step-{s // 2}"),
    }, 200, "inverse graded parafermion, even order")


@_register("prop1_odd", (3, 5, 7))
def _prop1_odd(s: int) -> IdentityRecord:
    if s % 2 == 0:
        raise ValueError(f"prop1_odd needs odd s, got {s}")
    odd = [r for r in range(1, 2 * s, 2) if r != s]
    denom = [f"1/(1-x^({2 * s}k-{2 * s - r}))" for r in range(1, 2 * s, 2)]
    return _rec(f"prop1_odd_s{s}", f"inverse graded parafermion, odd order {s}", {
        "prod(1+x^k)/(1+x^(sk))": product("1+x^k", f"1/(1+x^({s}k))"),
        "prod 1/((1-x^(2k-1))(1+x^(sk)))": product("1/(1-x^(2k-1))", f"1/(1+x^({s}k))"),
        "prod(1-x^(2sk-s))/prod_odd(1-x^(2sk-r))": product(f"1-x^({2 * s}k-{s})", *denom),
        "distinct parts prime to s": constraint(f"distinct-prime-to-{s}"),
        "odd residues mod 2s except s": dp_counts(f"mod-{2 * s}-in-{','.join(map(str, odd))}"),
    }, 200, "inverse graded parafermion, odd order")


@_register("fermion_truncation", tuple(range(2, 9)))
def _fermion_truncation(s: int) -> IdentityRecord:
    if s % 2 == 0:
        h = s // 2
        return _rec(f"fermion_truncation_s{s}", "fermions not divisible by s/2 times bosons", {
            "prod(1+x^k)/((1-x^(hk))(1+x^(hk)))": product("1+x^k", f"1/(1-x^({h}k))", f"1/(1+x^({h}k))"),
            "prod_{k not div s/2}(1+x^k) prod 1/(1-x^(hk))": _exponent_product(
                lambda N: (k for k in range(1, N + 1) if k % h), 1, 1, [f"1/(1-x^({h}k))"]),
            "graded inverse": lambda N: invert(graded_parafermion_product(s, N)),
        }, 200, "fermion truncation, even order")
    return _rec(f"fermion_truncation_s{s}", "fermions with parts not divisible by s", {
        "prod(1+x^k)/(1+x^(sk))": product("1+x^k", f"1/(1+x^({s}k))"),
        "prod_{k not div s}(1+x^k)": _exponent_product(
            lambda N: (k for k in range(1, N + 1) if k % s), 1, 1),
        "graded inverse": lambda N: invert(graded_parafermion_product(s, N)),
    }, 200, "fermion truncation, odd order")


def _mixed(s: int) -> Builder:
    return lambda N: mul(parafermion_series(s, N), invert(graded_parafermion_product(s, N)))


@_register("mixed_even", (4, 6, 8))
def _mixed_even(s: int) -> IdentityRecord:
    return _rec(f"mixed_even_s{s}", "parafermion over graded parafermion, even order", {
        "Z_s / graded": _mixed(s),
        "prod(1+x^k)/(1-x^k)": product("1+x^k", "1/(1-x^k)"),
        "1/theta4": lambda N: invert(theta4_series(N)),
    }, 200, "mixed system, even order")


@_register("mixed_odd", (3, 5, 7))
def _mixed_odd(s: int) -> IdentityRecord:
    return _rec(f"mixed_odd_s{s}", "parafermion over graded parafermion, odd order", {
        "Z_s / graded": _mixed(s),
        "prod(1+x^k)(1-x^(sk))/((1-x^k)(1+x^(sk)))": product(
            "1+x^k", f"1-x^({s}k)", "1/(1-x^k)", f"1/(1+x^({s}k))"),
        "prod_{k not div s}(1+x^k)/(1-x^k)": lambda N: mul(
            expand_exponents((k for k in range(1, N + 1) if k % s), 1, 1, N),
            expand_exponents((k for k in range(1, N + 1) if k % s), -1, -1, N)),
        "theta4(x^s)/theta4(x)": lambda N: theta_ratio(s, N),
    }, 200, "mixed system, odd order")


@_plain("theta4_gauss")
def _theta4_gauss() -> IdentityRecord:
    return _rec("theta4_gauss", "Cauchy sum at a=1 equals 1/theta4", {
        "Cauchy sum": gauss_cauchy_sum,
        "1/theta4": lambda N: invert(theta4_series(N)),
        "prod(1+x^k)/(1-x^k)": product("1+x^k", "1/(1-x^k)"),
    }, 200, "Gauss identity")


@_plain("theta4_inv_def")
def _theta4_inv() -> IdentityRecord:
    return _rec("theta4_inv_def", "1/theta4 counts partitions of 2n with odd parts of even multiplicity", {
        "1/theta4": lambda N: invert(theta4_series(N)),
        "prod 1/((1-x^(2k-1))(1-x^k))": product("1/(1-x^(2k-1))", "1/(1-x^k)"),
        "partitions of 2n, odd parts even multiplicity": even_half("odd-even-mult"),
        "overpartitions": lambda N: make_series(P.overpartition_counts(N), N),
    }, 200, "A015128")


@_plain("slater6")
def _slater6() -> IdentityRecord:
    return _rec("slater6", "Slater-type sum for theta4(x^3)/theta4(x)", {
        "sum": slater6_sum,
        "prod(1+x^(3k-1))(1+x^(3k-2))/((1-x^(3k-1))(1-x^(3k-2)))": product(
            "1+x^(3k-1)", "1+x^(3k-2)", "1/(1-x^(3k-1))", "1/(1-x^(3k-2))"),
        "theta4(x^3)/theta4(x)": lambda N: theta_ratio(3, N),
    }, 120, "Slater list identity 6")


@_register("prop2", tuple(range(2, 9)))
def _prop2(s: int) -> IdentityRecord:
    builders = {
        "theta4(x^s)/theta4(x)": lambda N: theta_ratio(s, N),
        "prod(1-x^(sk))(1-x^(s(2k-1)))/((1-x^k)(1-x^(2k-1)))": product(
            f"1-x^({s}k)", f"1-x^({2 * s}k-{s})", "1/(1-x^k)", "1/(1-x^(2k-1))"),
        "partitions of 2n, odd parts 2..2(s-1) times, even parts at most s-1 times":
            even_half(f"theta-ratio-{s}"),
        "overpartitions with no part divisible by s":
            lambda N: make_series(P.overpartition_counts(N, s), N),
    }
    if s % 2:
        builders["partitions of 2n prime to s, odd parts even multiplicity"] = \
            even_half(f"prime-to-{s}-odd-even-mult")
    return _rec(f"prop2_s{s}", "two partition readings of theta4(x^s)/theta4(x)",
                builders, 200, "theta ratio partition definitions")


@_plain("a080054")
def _a080054() -> IdentityRecord:
    return _rec("a080054", "theta4(x^2)/theta4(x) product forms", {
        "theta4(x^2)/theta4(x)": lambda N: theta_ratio(2, N),
        "prod(1+x^(2k-1))/(1-x^(2k-1))": product("1+x^(2k-1)", "1/(1-x^(2k-1))"),
        "prod(1+x^(2k-1))(1+x^k)": product("1+x^(2k-1)", "1+x^k"),
        "partitions of 2n, odd parts twice, even parts once": even_half("odd-twice-even-once"),
    }, 200, "A080054")


@_plain("lebesgue")
def _lebesgue() -> IdentityRecord:
    return _rec("lebesgue", "Lebesgue sum at a=-1", {
        "sum": lebesgue_sum,
        "prod(1+x^(2k-1))/(1-x^(2k-1))": product("1+x^(2k-1)", "1/(1-x^(2k-1))"),
    }, 200, "Lebesgue identity")


@_plain("overpartition_series")
def _overpartitions() -> IdentityRecord:
    return _rec("overpartition_series", "overpartition generating function", {
        "prod(1+x^k)/(1-x^k)": product("1+x^k", "1/(1-x^k)"),
        "2^(distinct parts) weighting": lambda N: make_series(P.overpartition_counts(N), N),
        "Cauchy sum": gauss_cauchy_sum,
    }, 200, "overpartitions")


@_plain("theta_ratio_s2")
def _theta_ratio_s2() -> IdentityRecord:
    return _rec("theta_ratio_s2", "overpartitions with odd parts only", {
        "prod(1+x^k)(1-x^(2k))/((1-x^k)(1+x^(2k)))": product(
            "1+x^k", "1-x^(2k)", "1/(1-x^k)", "1/(1+x^(2k))"),
        "overpartitions, no part divisible by 2": lambda N: make_series(P.overpartition_counts(N, 2), N),
        "theta4(x^2)/theta4(x)": lambda N: theta_ratio(2, N),
    }, 200, "overpartitions into odd parts")


@_register("andrews_multi", tuple(range(2, 9)))
def _andrews(s: int) -> IdentityRecord:
    return _rec(f"andrews_multi_s{s}", "multisum for theta4(x^s)/theta4(x)", {
        "multisum": lambda N: andrews_multisum(s, N),
        "prod(1+x^k)(1-x^(sk))/((1-x^k)(1+x^(sk)))": product(
            "1+x^k", f"1-x^({s}k)", "1/(1-x^k)", f"1/(1+x^({s}k))"),
    }, 60, "Andrews multiple series")


@_register("restricted_over", (2, 4, 6, 8))
def _restricted_over(s: int) -> IdentityRecord:
    if s % 2:
        raise ValueError(f"restricted_over needs even s, got {s}")
    h = s // 2
    return _rec(f"restricted_over_s{s}", "overpartition-like convolution of fermions and bosons", {
        "prod(1+x^k)/(1-x^(sk))": product("1+x^k", f"1/(1-x^({s}k))"),
        "prod_{k not div s/2}(1+x^k) prod 1/(1-x^(hk))": _exponent_product(
            lambda N: (k for k in range(1, N + 1) if k % h), 1, 1, [f"1/(1-x^({h}k))"]),
        "distinct parts * parts in multiples of s": lambda N: mul(
            P.gen_series(P.named_constraint("distinct"), N),
            P.gen_series(P.named_constraint(f"mult-step-{s}"), N)),
    }, 200, "restricted overpartitions")


def _mode_sum_product(s: int, N: int) -> TruncatedSeries:
    """``prod_k [ (1 + ... + x^((s-1)k)) + x^(sk)/(1-x^k) ]`` mode by mode."""
    series = one(N)
    for k in range(1, N + 1):
        fermi = [0] * (N + 1)
        for j in range(min(s - 1, N // k) + 1):
            fermi[j * k] = 1
        bose = [0] * (N + 1)
        if s * k <= N:
            bose[s * k] = 1
            apply_binomial(bose, k, -1, -1)
        series = mul(series, make_series([a + b for a, b in zip(fermi, bose)], N))
    return series


@_register("parabose_complement", tuple(range(2, 9)))
def _parabose_complement(s: int) -> IdentityRecord:
    return _rec(f"parabose_complement_s{s}", "parafermion plus parabose tail per mode is the boson", {
        "prod [truncated + tail]": lambda N: _mode_sum_product(s, N),
        "prod 1/(1-x^k)": product("1/(1-x^k)"),
    }, 200, "parabose occupation complement")


def _paraboson_modes(s: int, N: int) -> TruncatedSeries:
    series = one(N)
    for k in range(1, N + 1):
        factor = [0] * (N + 1)
        factor[0] = 1
        if s * k <= N:
            tail = [0] * (N + 1)
            tail[s * k] = 1
            apply_binomial(tail, k, -1, -1)
            factor = [a + b for a, b in zip(factor, tail)]
        series = mul(series, make_series(factor, N))
    return series


def _paraboson_quotient(s: int, N: int) -> TruncatedSeries:
    numer = one(N)
    for k in range(1, N + 1):
        factor = [0] * (N + 1)
        factor[0] = 1
        factor[k] -= 1
        if s * k <= N:
            factor[s * k] += 1
        numer = mul(numer, make_series(factor, N))
    return mul(numer, expand_product([family("1/(1-x^k)")], N))


@_register("paraboson_product", tuple(range(2, 9)))
def _paraboson(s: int) -> IdentityRecord:
    return _rec(f"paraboson_product_s{s}", "parabose product, occupations 0 or at least s", {
        "prod(1 + x^(sk)/(1-x^k))": lambda N: _paraboson_modes(s, N),
        "prod(1-x^k+x^(sk)) / prod(1-x^k)": lambda N: _paraboson_quotient(s, N),
        "multiplicity 0 or >= s": constraint(f"parabose-{s}"),
    }, 200, "parabose partition function")


@_plain("over_double_sum")
def _over_double() -> IdentityRecord:
    return _rec("over_double_sum", "double sum over part sizes of overpartitions", {
        "double sum": overpartition_double_sum,
        "prod(1+x^k)/(1-x^k)": product("1+x^k", "1/(1-x^k)"),
    }, 60, "overpartition part-size sum")


def two_modular_record(reading: str = "all") -> IdentityRecord:
    """The 2-modular proposal under one reading of its m-range."""
    if reading not in TWO_MODULAR_READINGS:
        raise ValueError(f"unknown reading {reading!r}; expected one of {TWO_MODULAR_READINGS}")
    label = {"all": "every admissible m", "min": "smallest m only", "max": "largest m only"}[reading]
    return _rec("two_modular", f"proposed 2-modular sum, {label}", {
        "proposed sum": lambda N: two_modular_sum(N, reading),
        "prod(1+x^(2k-1))/(1-x^(2k))": product("1+x^(2k-1)", "1/(1-x^(2k))"),
    }, 40, "2-modular diagram proposal", claim=True)


@_plain("two_modular")
def _two_modular() -> IdentityRecord:
    return two_modular_record("all")


def families() -> dict[str, tuple[int, ...]]:
    """Family name -> default parameters (empty for single identities)."""
    return {name: params for name, (_, params) in _FAMILIES.items()}


def instantiate(name: str, param: Optional[int] = None) -> IdentityRecord:
    """Build one record, e.g. ``instantiate("parafermion_multiplicity", 10)``."""
    if name not in _FAMILIES:
        raise KeyError(f"unknown identity family {name!r}")
    fn, params = _FAMILIES[name]
    if params and param is None:
        raise ValueError(f"family {name!r} needs a parameter")
    return fn(param)


@lru_cache(maxsize=1)
def _catalog() -> tuple[IdentityRecord, ...]:
    out = []
    for name, (fn, params) in _FAMILIES.items():
        if params:
            out.extend(fn(p) for p in params)
        else:
            out.append(fn(None))
    return tuple(out)


def catalog() -> list[IdentityRecord]:
    return list(_catalog())


def catalog_constraints() -> list[str]:
    """Every named constraint some catalog builder counts with, sorted."""
    global _collected
    with _COLLECT_LOCK:
        _collected = set()
        try:
            for fn, params in _FAMILIES.values():
                for p in params or (None,):
                    fn(p)
            return sorted(_collected)
        finally:
            _collected = None


def catalog_ids() -> list[str]:
    return [r.id for r in _catalog()]


def get_record(id: str) -> IdentityRecord:
    for r in _catalog():
        if r.id == id:
            return r
    # parametrized ids outside the default range, e.g. prop2_s11
    head, sep, tail = id.rpartition("_")
    if sep and tail[:1] in "sr" and tail[1:].isdigit() and head in _FAMILIES:
        return instantiate(head, int(tail[1:]))
    raise KeyError(f"unknown identity {id!r}")


def verify_record(record: IdentityRecord, N: Optional[int] = None) -> Verdict:
    """Expand every builder at order N and compare them all coefficient-wise."""
    N = record.default_order if N is None else N
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    built = [(name, fn(N)) for name, fn in record.builders]
    worst = None
    ref_name, ref = built[0]
    for name, series in built[1:]:
        if series.order != N:
            raise ValueError(f"{record.id}: builder {name!r} returned order {series.order}")
        for n in range(N + 1):
            if ref[n] != series[n]:
                if worst is None or n < worst[0][0]:
                    worst = ((n, ref[n], series[n]), f"{ref_name} vs {name}")
                break
    if worst is None:
        return Verdict(MATCH, None, f"{len(built)} builders agree to order {N}")
    return Verdict(MISMATCH, worst[0], worst[1])


def verify(id: str, N: Optional[int] = None) -> Verdict:
    return verify_record(get_record(id), N)


def verify_all(records: Optional[Sequence[IdentityRecord]] = None, scale: float = 1.0,
               threads: int = 1) -> list[tuple[IdentityRecord, int, Verdict, float]]:
    """Verify every record at ``round(default_order * scale)``.

    Results come back in catalog order whatever the completion order.
    """
    recs = list(_catalog()) if records is None else list(records)

    def run(rec: IdentityRecord):
        N = max(0, round(rec.default_order * scale))
        t0 = time.perf_counter()
        v = verify_record(rec, N)
        return rec, N, v, (time.perf_counter() - t0) * 1000.0

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run, recs))
    return [run(r) for r in recs]


# ---------------------------------------------------------------------------
# named sequences

SEQUENCES: dict[str, tuple[str, Builder]] = {
    "partitions": ("unrestricted partitions", product("1/(1-x^k)")),
    "parafermion3": ("A000726: parts prime to 3", lambda N: parafermion_series(3, N)),
    "igppf3": ("A003105: distinct parts prime to 3", lambda N: invert(graded_parafermion_product(3, N))),
    "igppf4": ("A006950", lambda N: invert(graded_parafermion_product(4, N))),
    "igppf5": ("distinct parts prime to 5", lambda N: invert(graded_parafermion_product(5, N))),
    "igppf6": ("parts 0,1,3,5 mod 6", lambda N: invert(graded_parafermion_product(6, N))),
    "theta4_inv": ("A015128: 1/theta4", lambda N: invert(theta4_series(N))),
    "theta_ratio2": ("A080054: theta4(x^2)/theta4(x)", lambda N: theta_ratio(2, N)),
    "theta_ratio3": ("A098151: theta4(x^3)/theta4(x)", lambda N: theta_ratio(3, N)),
    "overpartitions": ("overpartitions", lambda N: make_series(P.overpartition_counts(N), N)),
    "two_modular": ("2-modular product", product("1+x^(2k-1)", "1/(1-x^(2k))")),
}


def sequence(id: str, length: int) -> list[int]:
    """First ``length`` coefficients of a named sequence."""
    if id not in SEQUENCES:
        raise KeyError(f"unknown sequence {id!r}")
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    return list(SEQUENCES[id][1](length - 1).coeffs)
