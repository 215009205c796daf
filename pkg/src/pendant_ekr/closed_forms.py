"""Exact integer closed forms and the pendant-path star recurrence."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .errors import InvalidParameterError
from .families import count_independent_rsets, star
from .graphs import Graph, pendant_family

FIB_MAX_INDEX = 90
GOLDEN_RATIO = (1 + math.sqrt(5)) / 2


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    """Fibonacci numbers seeded ``F(0) = 1``, ``F(1) = 2``."""
    if n < 0:
        raise InvalidParameterError("fib index must be non-negative")
    if n > FIB_MAX_INDEX:
        raise OverflowError(f"fib({n}) exceeds the 64-bit guard (n <= {FIB_MAX_INDEX})")
    a, b = 1, 2
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_table(n_max: int) -> list[int]:
    return [fib(k) for k in range(n_max + 1)]


def binet(n: int) -> float:
    """Floating closed form that should match ``fib(n - 2)``."""
    return (GOLDEN_RATIO**n - (-GOLDEN_RATIO) ** (-n)) / math.sqrt(5)


def count_kstar_formula(n: int, r: int) -> int:
    """Number of independent r-sets of K_n*."""
    if n < 0 or r < 0:
        raise InvalidParameterError("n and r must be non-negative")
    return (r + 1) * math.comb(n, r) if r <= n else 0


def star_kstar_formula(n: int, r: int) -> int:
    """Size of the r-star of K_n* at a pendant vertex."""
    if not 1 <= r <= n:
        raise InvalidParameterError("need 1 <= r <= n")
    return r * math.comb(n - 1, r - 1)


def star_product(n: int, k: int) -> int:
    """``F(k-1) * F(n-k)``, the full-size star at the k-th pendant of P_n*."""
    if not 1 <= k <= n:
        raise InvalidParameterError("need 1 <= k <= n")
    return fib(k - 1) * fib(n - k)


def argmax_star_product(n: int) -> frozenset[int]:
    values = {k: star_product(n, k) for k in range(1, n + 1)}
    best = max(values.values())
    return frozenset(k for k, v in values.items() if v == best)


def star_product_rows(n: int) -> list[tuple[int, int, int, bool]]:
    """``(n, k, f(k), is_argmax)`` rows for CSV export."""
    top = argmax_star_product(n)
    return [(n, k, star_product(n, k), k in top) for k in range(1, n + 1)]


@lru_cache(maxsize=None)
def _pendant_path(m: int) -> Graph:
    return pendant_family("path", m)


def path_pendant_star(m: int, position: int, r: int) -> int:
    """``|I_{p_position}^{(r)}(P_m*)|`` with 1-based ``position``.

    Zero when ``r <= 0`` or when P_m* has no such pendant.
    """
    if r <= 0 or not 1 <= position <= m:
        return 0
    g = _pendant_path(m)
    return len(star(g, m + position - 1, r))


@dataclass(frozen=True)
class RecurrenceReport:
    n: int
    r: int
    i: int
    form: Literal["direct", "mirrored"]
    applicable: bool
    lhs: int
    terms: tuple[int, int, int, int]

    @property
    def rhs(self) -> int:
        return sum(self.terms)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def check_path_recurrence(n: int, r: int, i: int) -> RecurrenceReport:
    """Compare both sides of the four-term pendant-star recurrence on P_n*.

    ``i`` is the 1-based pendant position.  Positions ``i <= n-2`` use the
    direct form; larger positions are reflected to ``n + 1 - i``.  The report
    is marked inapplicable when the reflected position is still above
    ``n - 2`` (only the middle pendant of P_3*).
    """
    if n < 3:
        raise InvalidParameterError("recurrence needs n >= 3")
    if not 1 <= i <= n:
        raise InvalidParameterError("need 1 <= i <= n")
    if i <= n - 2:
        form, j = "direct", i
    else:
        form, j = "mirrored", n + 1 - i
    terms = (
        path_pendant_star(n - 1, j, r),
        path_pendant_star(n - 1, j, r - 1),
        path_pendant_star(n - 2, j, r - 1),
        path_pendant_star(n - 2, j, r - 2),
    )
    return RecurrenceReport(n, r, i, form, j <= n - 2, path_pendant_star(n, i, r), terms)


def full_path_count(n: int) -> int:
    """Enumerated ``|I^{(n)}(P_n*)|``."""
    return count_independent_rsets(_pendant_path(n), n)
