"""Symmetric-group characters and free cumulants from first principles.

Nothing here touches the character-polynomial machinery, so these values
can serve as ground truth for it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

from .exact import Rational, Series, normalize
from .symfun import Partition, validate_partition


@dataclass(frozen=True)
class Profile:
    """Local minima ``x`` and maxima ``y`` of a rotated Young diagram (unit boxes)."""

    minima: tuple[int, ...]
    maxima: tuple[int, ...]

    def __post_init__(self):
        x, y = self.minima, self.maxima
        if len(x) != len(y) + 1:
            raise ValueError("need exactly one more minimum than maxima")
        seq = [x[0]]
        for a, b in zip(y, x[1:]):
            seq += [a, b]
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"coordinates do not interlace: {seq}")
        if sum(x) != sum(y):
            raise ValueError("sum of minima must equal sum of maxima")


def profile(omega: Partition) -> Profile:
    """Minima are contents of addable cells, maxima contents of removable cells.

    >>> profile((2, 1))
    Profile(minima=(-2, 0, 2), maxima=(-1, 1))
    """
    omega = validate_partition(omega)
    rows = list(omega)
    minima, maxima = [], []
    for i in range(len(rows) + 1):
        row_len = rows[i] if i < len(rows) else 0
        above = rows[i - 1] if i > 0 else None
        if above is None or row_len < above:
            minima.append(row_len - i)
        if i < len(rows) and (i + 1 == len(rows) or rows[i + 1] < row_len):
            maxima.append(row_len - 1 - i)
    return Profile(tuple(sorted(minima)), tuple(sorted(maxima)))


def _moments(p: Profile, order: int) -> list[Fraction]:
    # H(1/s) = s * prod(1 - y s) / prod(1 - x s), as a plain coefficient list in s
    num = [Fraction(1)]
    for y in p.maxima:
        num = [a - y * b for a, b in zip(num + [0], [0] + num)]
    series = [Fraction(0)] * (order + 1)
    for d, c in enumerate(num):
        if d + 1 <= order:
            series[d + 1] = c
    for x in p.minima:
        # divide by (1 - x s): running sum
        for d in range(1, order + 1):
            series[d] += x * series[d - 1]
    return series


def moment_series(p: Profile, order: int) -> Series:
    """``H(z) = sum_j m_j z^{-j-1}`` as the power series ``sum_j m_j s^{j+1}`` in ``s = 1/z``."""
    return Series(_moments(p, order), order, basis="R", var="s")


def free_cumulants(p: Profile, max_i: int) -> list[Rational]:
    """``[R_1, ..., R_max_i]`` defined by ``H(K(z)) = z``, ``K(z) = 1/z + sum R_i z^(i-1)``.

    With ``kappa = 1/K`` the equation reads ``M(kappa(z)) = z`` for the
    moment series ``M``; ``kappa`` is found order by order and then
    ``z / kappa(z) = 1 + sum R_i z^i``.
    """
    n = max_i + 1
    m = _moments(p, n)
    kappa = [Fraction(0), Fraction(1)] + [Fraction(0)] * (n - 1)
    for d in range(2, n + 1):
        comp = _compose_coeff(m, kappa, d)
        kappa[d] = -comp  # the kappa_d contribution enters with coefficient m_1 = 1
    # z / kappa = 1 / (1 + kappa_2 z + kappa_3 z^2 + ...)
    tail = kappa[1:]
    inv = [Fraction(1)]
    for d in range(1, n):
        inv.append(-sum(tail[i] * inv[d - i] for i in range(1, d + 1)))
    return [normalize(c) for c in inv[1 : max_i + 1]]


def _compose_coeff(m: list[Fraction], kappa: list[Fraction], d: int) -> Fraction:
    # [z^d] M(kappa(z)) using only the currently known kappa (kappa_d treated as 0)
    total = Fraction(0)
    power = [Fraction(1)] + [Fraction(0)] * d
    for j in range(1, d + 1):
        power = [sum(power[a] * kappa[b - a] for a in range(b + 1) if b - a < len(kappa)) for b in range(d + 1)]
        if m[j]:
            total += m[j] * power[d]
    return total


# -- characters ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _mn(shape: Partition, cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    length = len(shape)
    beta = [shape[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((beads - {b}) | {target}, reverse=True)
        new_shape = tuple(v - (length - 1 - i) for i, v in enumerate(new_beta))
        new_shape = tuple(part for part in new_shape if part > 0)
        total += (-1) ** height * _mn(new_shape, rest)
    return total


def mn_character(omega: Partition, lam: Partition) -> int:
    """Irreducible character ``chi_omega(lam)`` by the Murnaghan-Nakayama rule.

    Border strips are removed largest cycle first, using beta-sets: a strip
    of length ``r`` corresponds to sliding a bead from ``b`` to ``b - r``.
    """
    omega = validate_partition(omega)
    lam = tuple(sorted(validate_partition(lam), reverse=True))
    if sum(omega) != sum(lam):
        raise ValueError(f"size mismatch: |{omega}| != |{lam}|")
    return _mn(omega, lam)


def degree(omega: Partition) -> int:
    return mn_character(omega, (1,) * sum(omega))


def syt_count(omega: Partition) -> int:
    """Standard Young tableaux of shape ``omega`` by the hook-length formula."""
    omega = validate_partition(omega)
    conj = [sum(1 for r in omega if r > j) for j in range(omega[0])] if omega else []
    hooks = prod(omega[i] - j + conj[j] - i - 1 for i in range(len(omega)) for j in range(omega[i]))
    return factorial(sum(omega)) // hooks


def class_size(lam: Partition) -> int:
    n = sum(lam)
    denom = prod(i**m * factorial(m) for i, m in Counter(lam).items())
    return factorial(n) // denom


def normalized_character(omega: Partition, k: int) -> Rational:
    """``n(n-1)...(n-k+1) chi_omega(k 1^{n-k}) / chi_omega(1^n)``."""
    omega = validate_partition(omega)
    n = sum(omega)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    falling = prod(range(n - k + 1, n + 1))
    cls = (k,) + (1,) * (n - k)
    return normalize(Fraction(falling * mn_character(omega, cls), degree(omega)))


def central_character(omega: Partition, lam: Partition) -> Rational:
    """``|C_lam| chi_omega(lam) / chi_omega(1^n)``."""
    chi = mn_character(omega, lam)
    return normalize(Fraction(class_size(tuple(lam)) * chi, degree(omega)))


# -- cycle products --------------------------------------------------------------


def _cycle_count(perm: list[int]) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if not seen[start]:
            count += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = perm[i]
    return count


def count_cycle_products(k: int, n: int) -> int:
    """Number of ``k``-cycles ``c`` in ``S_k`` with ``(1 2 ... k) c`` having ``k - 2n`` cycles.

    Brute force over all ``(k-1)!`` ``k``-cycles.
    """
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    target = k - 2 * n
    if target < 1:
        return 0
    long_cycle = [(i + 1) % k for i in range(k)]
    count = 0
    for order in permutations(range(1, k)):
        c = [0] * k
        seq = (0,) + order
        for a, b in zip(seq, seq[1:] + (0,)):
            c[a] = b
        product = [long_cycle[c[i]] for i in range(k)]
        if _cycle_count(product) == target:
            count += 1
    return count
