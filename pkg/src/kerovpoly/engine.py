"""Kerov character polynomials and their graded pieces.

``Sigma_k`` is computed four ways:

* :func:`sigma_main` -- sum over partitions of ``2n`` of ``mhat_lam * P_lam / C``;
* :func:`sigma_mainmod` -- same, with the one-part term simplified;
* :func:`sigma_maingen` -- product over ``j = 1..k-1`` generating all pieces;
* :func:`sigma_biane` -- the series ``phi`` obtained from the compositional
  inverse of ``x / R(x)``, shifted and multiplied over ``j = 0..k-1``.

The first three work natively in the C basis, where ``C(t) = 1 + sum C_m t^m``;
the last works in the R basis.  :func:`to_c_basis` and :func:`to_r_basis`
convert between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

from .exact import BasisError, Poly, Rational, Series, normalize, product_coeff, weight
from .symfun import Partition, mhat_lambda, partitions_of


@dataclass(frozen=True)
class KerovResult:
    """Graded pieces ``{2n: Sigma_{k,2n}}`` of one character polynomial."""

    k: int
    basis: str
    pieces: Mapping[int, Poly] = field(default_factory=dict)

    def __post_init__(self):
        for grade, p in self.pieces.items():
            if grade % 2 or grade < 0 or self.k + 1 - grade < 0:
                raise ValueError(f"invalid grade {grade} for k={self.k}")
            if p.basis != self.basis:
                raise BasisError(f"piece {grade} is in basis {p.basis}")
            if any(weight(m) != self.k + 1 - grade for m in p):
                raise ValueError(f"piece {grade} is not of weight {self.k + 1 - grade}")

    def piece(self, grade: int) -> Poly:
        if grade % 2 or grade < 0 or self.k + 1 - grade < 0:
            return Poly.zero(self.basis)
        return self.pieces.get(grade, Poly.zero(self.basis))

    def total(self, *, include_leading: bool = True) -> Poly:
        out = Poly.zero(self.basis)
        for grade in sorted(self.pieces):
            if grade or include_leading:
                out = out + self.pieces[grade]
        return out

    def grades(self) -> list[int]:
        return list(range(0, self.k + 2, 2))


def valid_grades(k: int) -> list[int]:
    return list(range(0, k + 2, 2))


def split_by_weight(k: int, p: Poly) -> KerovResult:
    """Grade a full ``Sigma_k`` into pieces by monomial weight."""
    pieces = {g: p.weight_part(k + 1 - g) for g in valid_grades(k)}
    leftover = sum(len(q) for q in pieces.values())
    if leftover != len(p):
        raise ValueError(f"Sigma_{k} has monomials of weight with the wrong parity")
    return KerovResult(k, p.basis, pieces)


# -- the C polynomials and basis changes -------------------------------------


def c_var(m: int, basis: str = "C") -> Poly:
    """``C_m`` as a polynomial; in the C basis ``C_0 = 1`` and ``C_1 = 0``."""
    if basis == "R":
        return c_m_explicit(m)
    if m == 0:
        return Poly.const("C", 1)
    if m == 1 or m < 0:
        return Poly.zero("C")
    return Poly.var("C", m)


@lru_cache(maxsize=None)
def c_m_explicit(m: int) -> Poly:
    """``C_m`` in the R basis as a sum over multiplicities ``j_2, j_3, ...``.

    Each partition of ``m`` into parts ``>= 2`` contributes
    ``(sum j)! * prod ((i-1) R_i)^{j_i} / j_i!``.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Poly.const("R", 1)
    terms = {}
    for mu in partitions_of(m, smallest_part=2):
        mult = _multiplicity_pairs(mu)
        c = Fraction(factorial(len(mu)))
        for i, j in mult:
            c = c * (i - 1) ** j / factorial(j)
        terms[mult] = c
    return Poly("R", terms)


@lru_cache(maxsize=None)
def r_in_c_basis(i: int) -> Poly:
    """``R_i`` as a signed combination of C monomials (``i >= 2``)."""
    if i < 2:
        raise ValueError("R_i is an indeterminate only for i >= 2")
    terms = {}
    for mu in partitions_of(i, smallest_part=2):
        mult = _multiplicity_pairs(mu)
        c = Fraction((-1) ** (1 + len(mu)) * factorial(len(mu)), i - 1)
        for _, j in mult:
            c /= factorial(j)
        terms[mult] = c
    return Poly("C", terms)


def _multiplicity_pairs(mu: Partition) -> tuple:
    counts: dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    return tuple(sorted(counts.items()))


def to_c_basis(p: Poly) -> Poly:
    if p.basis != "R":
        raise BasisError("to_c_basis expects an R-basis polynomial")
    return p.substitute(r_in_c_basis, "C")


def to_r_basis(p: Poly) -> Poly:
    if p.basis != "C":
        raise BasisError("to_r_basis expects a C-basis polynomial")
    return p.substitute(c_m_explicit, "R")


def to_basis(p: Poly, basis: str) -> Poly:
    if p.basis == basis:
        return p
    return to_c_basis(p) if basis == "C" else to_r_basis(p)


def convert_result(res: KerovResult, basis: str) -> KerovResult:
    if res.basis == basis:
        return res
    return KerovResult(res.k, basis, {g: to_basis(p, basis) for g, p in res.pieces.items()})


# -- C(t) and P_m(t) ---------------------------------------------------------


@lru_cache(maxsize=None)
def c_series(order: int, basis: str = "R") -> Series:
    """``C(t) = 1 / (1 - sum_{i>=2} (i-1) R_i t^i)`` truncated at ``order``.

    In the C basis this is simply ``1 + sum_{m>=2} C_m t^m``.
    """
    if basis == "C":
        return Series([c_var(m) for m in range(order + 1)], order, basis="C")
    denom = [Poly.const("R", 1), Poly.zero("R")]
    denom += [Poly.var("R", i).scale(-(i - 1)) for i in range(2, order + 1)]
    return Series(denom, order, basis="R").reciprocal()


@lru_cache(maxsize=None)
def p_series(m: int, order: int, basis: str = "C") -> Series:
    """``P_m(t) = -(1/m!) C (D+(m-2)) C ... (D+1) C D C``.

    Built from ``P_1 = -C`` by ``P_{i+1} = C (D + (i-1)) P_i / (i+1)``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    C = c_series(order, basis)
    if m == 1:
        return -C
    prev = p_series(m - 1, order, basis)
    i = m - 1
    return (C * (prev.D() + prev.scale(i - 1))).scale(Fraction(1, m))


def _p_lambda(lam: Partition, order: int, basis: str) -> Series:
    out = Series.one(order, basis)
    for part in lam:
        out = out * p_series(part, order, basis)
    return out


# -- the four routes -----------------------------------------------------------


def _check_kn(k: int, n: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")


def sigma_main(k: int, n: int, basis: str = "C") -> Poly:
    """``Sigma_{k,2n} = -(1/k) [t^{k+1-2n}] sum_{lam |- 2n} mhat_lam P_lam(t) / C(t)``."""
    _check_kn(k, n)
    d = k + 1 - 2 * n
    if d < 0:
        return Poly.zero(basis)
    if n == 0:
        return to_basis(Poly.var("R", k + 1), basis)
    total = Series.zero(d, "C")
    for lam in partitions_of(2 * n):
        coeff = mhat_lambda(lam, k)
        if coeff:
            total = total + _p_lambda(lam, d, "C").scale(coeff)
    inv_c = c_series(d, "C").reciprocal()
    out = product_coeff(total, inv_c, d).scale(Fraction(-1, k))
    return to_basis(out, basis)


def sigma_mainmod(k: int, n: int, basis: str = "C") -> Poly:
    """As :func:`sigma_main`, with the one-part term ``mhat_{2n} P_{2n}/C``
    replaced by ``((k-1)/2n) mhat_{2n} P_{2n-1}``."""
    _check_kn(k, n)
    d = k + 1 - 2 * n
    if d < 0:
        return Poly.zero(basis)
    if n == 0:
        return to_basis(Poly.var("R", k + 1), basis)
    rest = Series.zero(d, "C")
    for lam in partitions_of(2 * n):
        if len(lam) < 2:
            continue
        coeff = mhat_lambda(lam, k)
        if coeff:
            rest = rest + _p_lambda(lam, d, "C").scale(coeff)
    inv_c = c_series(d, "C").reciprocal()
    single = p_series(2 * n - 1, d, "C").coeff(d).scale(Fraction((k - 1) * mhat_lambda((2 * n,), k), 2 * n))
    out = (single + product_coeff(rest, inv_c, d)).scale(Fraction(-1, k))
    return to_basis(out, basis)


def maingen_u_coefficients(k: int, basis: str = "C") -> dict[int, Poly]:
    """``-(1/k) [u^e t^{k+1}] (1/C) prod_{j=1}^{k-1} (1 + sum_i j^i P_i t^i u^i)`` for every ``e``.

    Since ``t`` and ``u`` enter the factors together, the product is kept
    as ``sum_e u^e t^e Q_e(t)`` and only ``Q_e`` is stored, truncated at
    the order ``k+1-e`` that the extraction needs.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    top = k + 1
    p = {i: p_series(i, top - i, "C") for i in range(1, top + 1)}
    q: dict[int, Series] = {0: Series.one(top, "C")}
    for j in range(1, k):
        new: dict[int, Series] = {}
        for e in range(0, top + 1):
            acc = q[e].truncate(top - e) if e in q else None
            for i in range(1, e + 1):
                if e - i not in q:
                    continue
                term = q[e - i].truncate(top - e) * p[i].truncate(top - e).scale(j**i)
                acc = term if acc is None else acc + term
            if acc is not None:
                new[e] = acc
        q = new
    scale = Fraction(-1, k)
    out = {}
    for e in range(0, top + 1):
        d = top - e
        if e not in q:
            out[e] = Poly.zero(basis)
            continue
        val = product_coeff(q[e], c_series(d, "C").reciprocal(), d).scale(scale)
        out[e] = to_basis(val, basis)
    return out


def sigma_maingen(k: int, basis: str = "C") -> KerovResult:
    """All graded pieces of ``Sigma_k`` from the generating-function product."""
    coeffs = maingen_u_coefficients(k, basis)
    return KerovResult(k, basis, {g: coeffs[g] for g in valid_grades(k)})


# the Biane-Stanley series route


def r_series(order: int) -> Series:
    """``R(x) = 1 + sum_{i>=2} R_i x^i``."""
    coeffs = [Poly.const("R", 1), Poly.zero("R")] + [Poly.var("R", i) for i in range(2, order + 1)]
    return Series(coeffs, order, basis="R", var="x")


@lru_cache(maxsize=None)
def phi_series(order: int) -> Series:
    """``phi(x) = x / F^{<-1>}(x)`` where ``F(x) = x / R(x)``."""
    n = order + 1
    F = r_series(n).reciprocal().shift(1).truncate(n)
    F_inv = F.reversion()
    return F_inv.shift(-1).reciprocal()


def capital_phi(phi: Series, j: Rational) -> Series:
    """``Phi(x, j) = (1 - jx) phi(x / (1 - jx))`` for a scalar ``j``."""
    n = phi.order
    inner = Series([0] + [Fraction(j) ** (d - 1) for d in range(1, n + 1)], n, basis=phi.basis, var=phi.var)
    one_minus = Series([1, -Fraction(j)], n, basis=phi.basis, var=phi.var)
    return phi.compose(inner) * one_minus


def capital_phi_component(phi: Series, i: int) -> Series:
    """``Phi_i(x) = (x/i!) (x^2 d/dx)^i (phi(x)/x)``, the ``u^i`` coefficient of ``Phi(x,u)``.

    ``phi(x)/x`` is a Laurent series starting at ``x^-1``; it is held as
    ``(valuation, coefficients)`` while the operator is applied.
    """
    if i < 0:
        raise ValueError("i must be >= 0")
    basis = phi.basis
    val = -1
    coeffs = list(phi.coeffs)
    for _ in range(i):
        # x^2 d/dx: c * x^a -> a*c * x^(a+1)
        coeffs = [c.scale(val + d) for d, c in enumerate(coeffs)]
        val += 1
    # multiply by x / i!
    val += 1
    coeffs = [c.scale(Fraction(1, factorial(i))) for c in coeffs]
    # val >= 0 here; leading coefficients below degree 0 must have vanished
    out = [Poly.zero(basis)] * val + coeffs
    return Series(out[: phi.order + 1], phi.order, basis=basis, var=phi.var)


@lru_cache(maxsize=None)
def sigma_biane(k: int) -> KerovResult:
    """``Sigma_k = -(1/k) [x^{k+1}] prod_{j=0}^{k-1} Phi(x, j)`` in the R basis."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = k + 1
    phi = phi_series(n)
    prod_series = Series.one(n, "R", var="x")
    for j in range(k):
        prod_series = prod_series * capital_phi(phi, j)
    total = prod_series.coeff(n).scale(Fraction(-1, k))
    return split_by_weight(k, total)


@lru_cache(maxsize=None)
def sigma(k: int, basis: str = "R") -> KerovResult:
    """``Sigma_k`` in either basis (R from the series route, C from the product)."""
    if basis == "R":
        return sigma_biane(k)
    return sigma_maingen(k, "C")


# -- closed forms ----------------------------------------------------------------


def sigma_k2_closed(k: int) -> Poly:
    """``Sigma_{k,2} = (k-1) k (k+1) C_{k-1} / 24``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return c_var(k - 1).scale(Fraction((k - 1) * k * (k + 1), 24))


def alpha(k: int) -> Fraction:
    return Fraction(-(k - 3) * (k - 1) ** 2 * k * (k + 1) * (k * k - 4 * k - 6), 17280)


def beta(k: int) -> Fraction:
    return Fraction((k - 1) * k * (k + 1) * (2 * k * k - 3), 2880)


def sigma_k4_closed(k: int) -> Poly:
    """``Sigma_{k,4}`` as ``alpha(k) sum C_i C_j C_m + beta(k) sum i^2 C_i C_j C_m``,
    both sums over ``i + j + m = k - 3``."""
    if k < 3:
        raise ValueError("the closed form for Sigma_{k,4} needs k >= 3")
    s = k - 3
    plain = Poly.zero("C")
    weighted = Poly.zero("C")
    for i in range(s + 1):
        for j in range(s + 1 - i):
            m = s - i - j
            term = c_var(i) * c_var(j) * c_var(m)
            if term:
                plain = plain + term
                weighted = weighted + term.scale(i * i)
    return plain.scale(alpha(k)) + weighted.scale(beta(k))


def sigma_k4_series(k: int) -> Poly:
    """``Sigma_{k,4} = alpha(k) [t^{k-3}] C^3 + beta(k) [t^{k-3}] C^2 D^2 C``."""
    if k < 3:
        raise ValueError("the closed form for Sigma_{k,4} needs k >= 3")
    d = k - 3
    C = c_series(d, "C")
    C2 = C * C
    return (C2 * C).coeff(d).scale(alpha(k)) + product_coeff(C2, C.D().D(), d).scale(beta(k))


def pure_power_coeff(m: int, i: int) -> Fraction:
    """Closed form for ``[R_m^i] Sigma_{mi+3,4}``."""
    if m < 2 or i < 1:
        raise ValueError("need m >= 2 and i >= 1")
    cubic = m**3 * i**3 + 2 * m * m * (m + 4) * i * i + 4 * m * (3 * m + 5) * i + 15 * m + 18
    num = (m - 1) ** i * m * i * (i + 1) * (i + 2) * (m * i + 2) * (m * i + 3) * (m * i + 4) * cubic
    return normalize(Fraction(num, 34560))


def stanley_value(i: int) -> Fraction:
    """``i (i+1)^3 (i+2)^3 (i+3) (2i+3) / 540``."""
    if i < 1:
        raise ValueError("i must be >= 1")
    return normalize(Fraction(i * (i + 1) ** 3 * (i + 2) ** 3 * (i + 3) * (2 * i + 3), 540))


def linear_coefficient(k: int, n: int, source: KerovResult | None = None) -> Rational:
    """``[R_{k+1-2n}] Sigma_{k,2n}``."""
    if n < 1 or k < 2 * n - 1:
        raise ValueError(f"need k >= 2n-1 >= 1, got k={k}, n={n}")
    res = source if source is not None else sigma_biane(k)
    if res.basis != "R":
        res = convert_result(res, "R")
    w = k + 1 - 2 * n
    piece = res.piece(2 * n)
    if w == 0:
        return piece.constant_term()
    if w == 1:
        return 0
    return piece.coeff(((w, 1),))


def r_power_coeff(p: Poly, m: int, i: int) -> Rational:
    """``[R_m^i] p`` for an R-basis polynomial."""
    if p.basis != "R":
        raise BasisError("expected an R-basis polynomial")
    return p.coeff(((m, i),))


def clear_caches() -> None:
    """Drop every memo table (used to time computations from a cold start)."""
    from . import exact, oracle, symfun

    for fn in (c_m_explicit, r_in_c_basis, c_series, p_series, phi_series, sigma_biane, sigma):
        fn.cache_clear()
    exact.mono_mul.cache_clear()
    symfun._mhat_table.cache_clear()
    symfun._partitions_cached.cache_clear()
    oracle._mn.cache_clear()
