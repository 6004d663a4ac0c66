"""Partitions, Stirling numbers and monomial symmetric functions at 1..k-1.

``mhat(lam, k)`` denotes the monomial symmetric function ``m_lam`` evaluated
at ``x_i = i`` for ``1 <= i <= k-1`` and ``x_i = 0`` beyond.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, Tuple

from .exact import Rational, normalize

Partition = Tuple[int, ...]


def validate_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def _partitions(d: int, largest: int, smallest: int) -> Iterator[Partition]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), smallest - 1, -1):
        for rest in _partitions(d - first, first, smallest):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(d: int, smallest: int) -> tuple[Partition, ...]:
    return tuple(_partitions(d, d, smallest))


def partitions_of(d: int, smallest_part: int = 1) -> list[Partition]:
    """All partitions of ``d`` in reverse-lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if d < 0:
        return []
    return list(_partitions_cached(d, smallest_part))


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def arrangements(lam: Partition) -> int:
    """Number of distinct orderings of the parts of ``lam``."""
    n = factorial(len(lam))
    for m in Counter(lam).values():
        n //= factorial(m)
    return n


def stirling2(j: int, i: int) -> int:
    """Stirling number of the second kind.

    Read off the exponential generating function ``(e^x - 1)^i / i!``:
    ``S(j, i) = (1/i!) sum_r (-1)^(i-r) C(i, r) r^j``.
    """
    if j < 0 or i < 0:
        return 0
    if i > j:
        return 0
    total = sum((-1) ** (i - r) * comb(i, r) * r**j for r in range(i + 1))
    return total // factorial(i)


def mhat_j(j: int, k: int) -> int:
    """Power sum ``1^j + ... + (k-1)^j`` via Stirling numbers."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return sum(stirling2(j, i) * factorial(i) * comb(k, i + 1) for i in range(1, j + 1))


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


@lru_cache(maxsize=256)
def _mhat_table(k: int, size: int) -> dict[Partition, Rational]:
    # Expand exp(sum_j mhat_j * log(A(x)) |_{x^j}) in the a_i, graded by |lambda|.
    # A product a_mu * a_nu is the partition mu + nu, so monomials in the a_i
    # are keyed by partitions directly.
    log_part: dict[int, dict[Partition, Rational]] = {}
    for j in range(1, size + 1):
        mj = mhat_j(j, k)
        log_part[j] = {
            mu: normalize(Fraction((-1) ** (len(mu) - 1) * arrangements(mu) * mj, len(mu)))
            for mu in partitions_of(j)
        }
    # graded exponential: d * E_d = sum_j j * L_j * E_{d-j}
    exp_part: list[dict[Partition, Rational]] = [{(): 1}]
    for d in range(1, size + 1):
        acc: dict[Partition, Rational] = {}
        for j in range(1, d + 1):
            for mu, c in log_part[j].items():
                if not c:
                    continue
                for nu, e in exp_part[d - j].items():
                    key = _merge(mu, nu)
                    acc[key] = acc.get(key, 0) + j * c * e
        exp_part.append({lam: normalize(Fraction(c) / d) for lam, c in acc.items()})
    table: dict[Partition, Rational] = {}
    for part in exp_part:
        table.update(part)
    return table


def mhat_lambda(lam: Partition, k: int) -> Rational:
    """``m_lam(1, 2, ..., k-1)`` from the exponential generating identity.

    >>> mhat_lambda((1, 1), 3)
    2
    """
    lam = validate_partition(lam)
    if not lam:
        return 1
    if k < 1:
        raise ValueError("k must be >= 1")
    return _mhat_table(k, sum(lam)).get(lam, 0)
