"""Counting, enumerating and generating restricted partitions.

A :class:`PartitionConstraint` says which part sizes may be used and, for
each admitted part, which multiplicities are allowed.  Three independent
routes consume a constraint:

* :func:`count_restricted` -- in-place dynamic programming over parts,
* :func:`enumerate_restricted` -- explicit recursive listing (small n),
* :func:`gen_series` -- the product of per-part series via ``qseries.mul``.

Named constraints live in one registry (:func:`named_constraint`) shared
by the identity catalog and the command line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .qseries import TruncatedSeries, make_series, mul, one
from .verdict import MATCH, MISMATCH, Verdict, compare

__all__ = [
    "Multiplicities",
    "PartitionConstraint",
    "Verdict",
    "MATCH",
    "MISMATCH",
    "compare",
    "polygonal",
    "is_polygonal",
    "count_restricted",
    "restricted_counts",
    "enumerate_restricted",
    "gen_series",
    "overpartition_count",
    "overpartition_counts",
    "distinct_profile",
    "named_constraint",
    "constraint_patterns",
    "ENUMERATION_LIMIT",
]

ENUMERATION_LIMIT = 40


@dataclass(frozen=True)
class Multiplicities:
    """The set ``{0} | {m : lower <= m <= upper, m % step == 0}``.

    ``lower`` defaults to ``step`` and ``upper=None`` means unbounded.
    Every rule in use fits this shape: unrestricted, at most t, distinct,
    even, multiples of d, ``{0,2,...,2(s-1)}`` and ``{0,s,s+1,...}``.
    """

    step: int = 1
    lower: Optional[int] = None
    upper: Optional[int] = None

    def __post_init__(self):
        if self.step < 1:
            raise ValueError(f"step must be positive, got {self.step}")
        if self.lower is None:
            object.__setattr__(self, "lower", self.step)
        if self.lower < 1:
            raise ValueError(f"lower must be positive, got {self.lower}")

    @property
    def unbounded(self) -> bool:
        return self.upper is None

    def nonzero(self, limit: int) -> range:
        """Allowed non-zero multiplicities not exceeding ``limit``."""
        first = -(-self.lower // self.step) * self.step
        top = limit if self.upper is None else min(limit, self.upper)
        return range(first, top + 1, self.step)

    def __contains__(self, m: int) -> bool:
        if m == 0:
            return True
        if m < self.lower or m % self.step:
            return False
        return self.upper is None or m <= self.upper


UNRESTRICTED = Multiplicities()
DISTINCT = Multiplicities(upper=1)
NONE_ALLOWED = Multiplicities(upper=0)


def at_most(t: int) -> Multiplicities:
    return Multiplicities(upper=max(t, 0))


@dataclass(frozen=True, eq=False)
class PartitionConstraint:
    """Part filter plus a per-part multiplicity rule."""

    name: str
    admits: Callable[[int], bool] = field(default=lambda k: True)
    multiplicity: Callable[[int], Multiplicities] = field(default=lambda k: UNRESTRICTED)

    def rule(self, k: int) -> Optional[Multiplicities]:
        """Multiplicity set for part ``k``, or None when ``k`` is never used."""
        if not self.admits(k):
            return None
        mult = self.multiplicity(k)
        if mult.upper == 0:
            return None
        return mult

    def __repr__(self):
        return f"PartitionConstraint({self.name!r})"


def polygonal(k: int, g: int) -> int:
    """The k-th g-gonal number ``k*((g-2)*k - (g-4)) / 2``."""
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    if g < 3:
        raise ValueError(f"polygon must have at least 3 sides, got {g}")
    return k * ((g - 2) * k - (g - 4)) // 2


def is_polygonal(n: int, g: int, odd_index: bool = False) -> bool:
    k = 1
    while True:
        p = polygonal(k, g)
        if p == n:
            return True
        if p > n:
            return False
        k += 2 if odd_index else 1


# ---------------------------------------------------------------------------
# counting

def restricted_counts(N: int, c: PartitionConstraint) -> list[int]:
    """``[count_restricted(n, c) for n in range(N + 1)]`` in one DP pass."""
    if N < 0:
        raise ValueError(f"n must be non-negative, got {N}")
    a = [0] * (N + 1)
    a[0] = 1
    for k in range(1, N + 1):
        mult = c.rule(k)
        if mult is None:
            continue
        if mult.unbounded and mult.lower == mult.step:
            # geometric in x^(k*step): a[j] += a[j-e], swept in blocks
            e = k * mult.step
            for start in range(e, N + 1, e):
                stop = min(start + e, N + 1)
                a[start:stop] = [x + y for x, y in zip(a[start:stop], a[start - e:stop - e])]
            continue
        new = a[:]
        for m in mult.nonzero(N // k):
            e = k * m
            new[e:] = [x + y for x, y in zip(new[e:], a[:N + 1 - e])]
        a = new
    return a


def count_restricted(n: int, c: PartitionConstraint) -> int:
    """Number of partitions of ``n`` obeying ``c``."""
    return restricted_counts(n, c)[n]


def enumerate_restricted(n: int, c: PartitionConstraint) -> list[list[int]]:
    """All partitions of ``n`` obeying ``c``, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration is limited to n <= {ENUMERATION_LIMIT}, got {n}")
    out: list[list[int]] = []

    def walk(remaining: int, below: int, prefix: list[int]):
        if remaining == 0:
            out.append(list(prefix))
            return
        for k in range(min(remaining, below - 1), 0, -1):
            mult = c.rule(k)
            if mult is None:
                continue
            for m in reversed(mult.nonzero(remaining // k)):
                prefix.extend([k] * m)
                walk(remaining - k * m, k, prefix)
                del prefix[len(prefix) - m:]

    walk(n, n + 1, [])
    return out


def gen_series(c: PartitionConstraint, N: int) -> TruncatedSeries:
    """``prod_k sum_{m allowed} x**(k*m)`` over admitted parts ``k <= N``."""
    if N < 0:
        raise ValueError(f"order must be non-negative, got {N}")
    series = one(N)
    for k in range(1, N + 1):
        mult = c.rule(k)
        if mult is None:
            continue
        factor = [0] * (N + 1)
        factor[0] = 1
        for m in mult.nonzero(N // k):
            factor[k * m] = 1
        series = mul(series, make_series(factor, N))
    return series


def _excluded_by(s: Optional[int]) -> Callable[[int], bool]:
    if s is None:
        return lambda k: True
    if s < 1:
        raise ValueError(f"divisor must be positive, got {s}")
    return lambda k: k % s != 0


def overpartition_counts(N: int, exclude_div: Optional[int] = None) -> list[int]:
    """Overpartition numbers ``0..N``: each ordinary partition weighted by
    ``2**(number of distinct part sizes)``."""
    admits = _excluded_by(exclude_div)
    a = [0] * (N + 1)
    a[0] = 1
    for k in range(1, N + 1):
        if not admits(k):
            continue
        # factor 1 + 2*(x^k + x^2k + ...) = 2/(1-x^k) - 1
        b = a[:]
        for j in range(k, N + 1):
            b[j] += b[j - k]
        a = [2 * y - x for x, y in zip(a, b)]
    return a


def overpartition_count(n: int, exclude_div: Optional[int] = None) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return overpartition_counts(n, exclude_div)[n]


def distinct_profile(n: int, i: int, exclude_div: Optional[int] = None) -> int:
    """Partitions of ``n`` (parts not divisible by ``exclude_div``) having
    exactly ``i`` distinct part sizes."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if i < 1:
        raise ValueError(f"i must be positive, got {i}")
    row = _profile_table(n, exclude_div)[n]
    return row[i] if i < len(row) else 0


@lru_cache(maxsize=64)
def _profile_table(n: int, exclude_div: Optional[int]) -> tuple[tuple[int, ...], ...]:
    admits = _excluded_by(exclude_div)
    width = 1
    while width * (width + 1) // 2 <= n:
        width += 1
    # dp[j][d]: partitions of j with d distinct sizes
    dp = [[0] * (width + 1) for _ in range(n + 1)]
    dp[0][0] = 1
    for k in range(1, n + 1):
        if not admits(k):
            continue
        new = [row[:] for row in dp]
        for j in range(k, n + 1):
            for m in range(1, j // k + 1):
                src = dp[j - k * m]
                row = new[j]
                for d in range(width):
                    if src[d]:
                        row[d + 1] += src[d]
        dp = new
    return tuple(tuple(row) for row in dp)


# ---------------------------------------------------------------------------
# named constraints

def _odd_even(odd: Multiplicities, even: Multiplicities) -> Callable[[int], Multiplicities]:
    return lambda k: odd if k % 2 else even


def _residue_filter(m: int, residues: frozenset[int]) -> Callable[[int], bool]:
    return lambda k: k % m in residues


def _thm3_rule(r: int) -> Callable[[int], Multiplicities]:
    def rule(part: int) -> Multiplicities:
        if part % 2 == 0:
            return UNRESTRICTED
        k = (part + 1) // 2
        return at_most((2 * r - 1) * (k - 1))
    return rule


def _factories() -> list[tuple[str, Callable[..., PartitionConstraint]]]:
    C = PartitionConstraint
    return [
        (r"all", lambda n: C(n)),
        (r"none", lambda n: C(n, admits=lambda k: False)),
        (r"distinct", lambda n: C(n, multiplicity=lambda k: DISTINCT)),
        (r"odd", lambda n: C(n, admits=lambda k: k % 2 == 1)),
        (r"even", lambda n: C(n, admits=lambda k: k % 2 == 0)),
        (r"(?:prime-to|not-div)-(\d+)",
         lambda n, s: C(n, admits=_excluded_by(int(s)))),
        (r"multiples-of-(\d+)",
         lambda n, d: C(n, admits=lambda k, d=int(d): k % d == 0)),
        (r"distinct-(?:prime-to|not-div)-(\d+)",
         lambda n, s: C(n, admits=_excluded_by(int(s)), multiplicity=lambda k: DISTINCT)),
        (r"at-most-(\d+)",
         lambda n, t: C(n, multiplicity=lambda k, t=int(t): at_most(t))),
        (r"mod-(\d+)-in-([\d,]+)",
         lambda n, m, rs: C(n, admits=_residue_filter(
             int(m), frozenset(int(r) % int(m) for r in rs.split(","))))),
        (r"at-most-k-minus-1", lambda n: C(n, multiplicity=lambda k: at_most(k - 1))),
        (r"no-squares", lambda n: C(n, admits=lambda k: not is_polygonal(k, 4))),
        (r"thm2-mult-(\d+)",
         lambda n, r: C(n, multiplicity=lambda k, r=int(r): at_most((r - 1) * (k - 1)))),
        (r"no-(\d+)-gons",
         lambda n, g: C(n, admits=lambda k, g=int(g): not is_polygonal(k, g))),
        (r"thm3-mult-(\d+)", lambda n, r: C(n, multiplicity=_thm3_rule(int(r)))),
        (r"no-odd-index-(\d+)-gons",
         lambda n, g: C(n, admits=lambda k, g=int(g): not is_polygonal(k, g, odd_index=True))),
        # odd parts with even multiplicity, even parts free
        (r"odd-even-mult",
         lambda n: C(n, multiplicity=_odd_even(Multiplicities(step=2), UNRESTRICTED))),
        (r"even-even-mult",
         lambda n: C(n, multiplicity=_odd_even(UNRESTRICTED, Multiplicities(step=2)))),
        (r"odd-distinct",
         lambda n: C(n, multiplicity=_odd_even(DISTINCT, UNRESTRICTED))),
        (r"even-mult-step-(\d+)",
         lambda n, d: C(n, multiplicity=_odd_even(UNRESTRICTED, Multiplicities(step=int(d))))),
        (r"mult-step-(\d+)",
         lambda n, d: C(n, multiplicity=lambda k, d=int(d): Multiplicities(step=d))),
        # odd parts 2,4,...,2(s-1) times, even parts at most s-1 times
        (r"theta-ratio-(\d+)",
         lambda n, s: C(n, multiplicity=_odd_even(
             Multiplicities(step=2, upper=2 * (int(s) - 1)), at_most(int(s) - 1)))),
        (r"prime-to-(\d+)-odd-even-mult",
         lambda n, s: C(n, admits=_excluded_by(int(s)),
                        multiplicity=_odd_even(Multiplicities(step=2), UNRESTRICTED))),
        (r"odd-twice-even-once",
         lambda n: C(n, multiplicity=_odd_even(Multiplicities(step=2, upper=2), DISTINCT))),
        (r"parabose-(\d+)",
         lambda n, s: C(n, multiplicity=lambda k, s=int(s): Multiplicities(lower=s))),
    ]


_PATTERNS = [(re.compile(p + r"\Z"), f) for p, f in _factories()]


def constraint_patterns() -> list[str]:
    return [p for p, _ in _factories()]


def named_constraint(name: str) -> PartitionConstraint:
    """Resolve a registered constraint name, e.g. ``"prime-to-3"``,
    ``"mod-6-in-0,1,3,5"`` or ``"thm3-mult-2"``."""
    for pattern, factory in _PATTERNS:
        m = pattern.match(name)
        if m:
            return factory(name, *m.groups())
    raise KeyError(f"unknown constraint {name!r}")
