"""Exact polynomial and truncated power-series arithmetic.

Scalars are Python ``int`` or :class:`fractions.Fraction`; both are exact and
always in lowest terms.  Integral values are kept as ``int`` wherever the
arithmetic allows it, which keeps the integral R-basis computations fast.

A :class:`Poly` is a sparse polynomial in indexed indeterminates ``R_i`` or
``C_m`` (index >= 2).  A :class:`Series` is a truncated power series in one
variable whose coefficients are ``Poly`` values of a single basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Rational = Union[int, Fraction]
Monomial = Tuple[Tuple[int, int], ...]

BASES = ("R", "C")
UNIT: Monomial = ()


class BasisError(ValueError):
    """Operands live in different bases (R vs C) or the wrong basis was given."""


class TruncationError(ValueError):
    """A coefficient beyond the stored order of a series was requested."""


class NotInvertibleError(ArithmeticError):
    """Reciprocal or reversion of a series without the required unit term."""


def normalize(x: Rational) -> Rational:
    """Collapse a ``Fraction`` with denominator 1 to ``int``."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def as_rational(x) -> Rational:
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return normalize(x)
    if isinstance(x, str):
        return normalize(Fraction(x))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# -- monomials ---------------------------------------------------------------


def monomial(*factors: Tuple[int, int]) -> Monomial:
    """Build a canonical monomial from ``(index, exponent)`` pairs."""
    acc: dict[int, int] = {}
    for index, exp in factors:
        if index < 2 or exp < 0:
            raise ValueError(f"bad factor {(index, exp)}")
        if exp:
            acc[index] = acc.get(index, 0) + exp
    return tuple(sorted(acc.items()))


def weight(m: Monomial) -> int:
    return sum(i * e for i, e in m)


def degree(m: Monomial) -> int:
    return sum(e for _, e in m)


@lru_cache(maxsize=1 << 17)
def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for i, e in b:
        acc[i] = acc.get(i, 0) + e
    return tuple(sorted(acc.items()))


def monomial_key(m: Monomial):
    """Canonical order: weight first, then lexicographic on the pairs."""
    return (weight(m), m)


# -- polynomials -------------------------------------------------------------


class Poly:
    """Immutable sparse polynomial with rational coefficients.

    >>> R2, R3 = Poly.var("R", 2), Poly.var("R", 3)
    >>> (R2 + R3) * R2 == R2 * R2 + R2 * R3
    True
    """

    __slots__ = ("basis", "_terms", "_hash")

    def __init__(self, basis: str, terms: Mapping[Monomial, Rational] | None = None):
        if basis not in BASES:
            raise BasisError(f"unknown basis {basis!r}")
        clean: dict[Monomial, Rational] = {}
        for m, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                m = monomial(*m)
                clean[m] = normalize(clean.get(m, 0) + c)
                if not clean[m]:
                    del clean[m]
        self.basis = basis
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, basis: str, terms: dict) -> "Poly":
        # trusted constructor: canonical monomials, no zero coefficients
        p = object.__new__(cls)
        p.basis = basis
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, basis: str) -> "Poly":
        return cls._raw(basis, {})

    @classmethod
    def const(cls, basis: str, c: Rational) -> "Poly":
        c = as_rational(c)
        return cls._raw(basis, {UNIT: c} if c else {})

    @classmethod
    def var(cls, basis: str, index: int, exp: int = 1) -> "Poly":
        if index < 2:
            raise ValueError("indeterminate indices start at 2")
        return cls._raw(basis, {((index, exp),): 1})

    # read access

    @property
    def terms(self) -> Mapping[Monomial, Rational]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[Monomial, Rational]]:
        """Terms in canonical (ascending) monomial order."""
        return sorted(self._terms.items(), key=lambda mc: monomial_key(mc[0]))

    def coeff(self, m: Monomial) -> Rational:
        return self._terms.get(m, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and UNIT in self._terms)

    def constant_term(self) -> Rational:
        return self._terms.get(UNIT, 0)

    def weights(self) -> set[int]:
        return {weight(m) for m in self._terms}

    def weight_part(self, w: int) -> "Poly":
        return Poly._raw(self.basis, {m: c for m, c in self._terms.items() if weight(m) == w})

    def is_integral(self) -> bool:
        return all(isinstance(normalize(c), int) for c in self._terms.values())

    def evaluate(self, values: Mapping[int, Rational] | Sequence[Rational]) -> Rational:
        """Substitute numbers for the indeterminates.

        ``values`` maps index -> value; a sequence is read as ``values[index]``.
        """
        total: Rational = 0
        for m, c in self._terms.items():
            term = c
            for i, e in m:
                term = term * values[i] ** e
            total += term
        return normalize(total)

    # arithmetic

    def _check(self, other: "Poly") -> None:
        if self.basis != other.basis:
            raise BasisError(f"cannot combine {self.basis}-basis and {other.basis}-basis polynomials")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(self.basis, other)

    def __add__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = normalize(v)
            else:
                out.pop(m, None)
        return Poly._raw(self.basis, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.basis, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c: Rational) -> "Poly":
        c = as_rational(c)
        if not c:
            return Poly.zero(self.basis)
        if c == 1:
            return self
        return Poly._raw(self.basis, {m: normalize(v * c) for m, v in self._terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict[Monomial, Rational] = {}
        _accumulate(out, self, other)
        return Poly._raw(self.basis, _prune(out))

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __truediv__(self, c) -> "Poly":
        return self.scale(Fraction(1) / as_rational(c))

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = Poly.const(self.basis, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def substitute(self, images: "callable", basis: str) -> "Poly":
        """Replace each indeterminate ``X_i`` by ``images(i)`` (a Poly in ``basis``)."""
        out = Poly.zero(basis)
        for m, c in self._terms.items():
            term = Poly.const(basis, c)
            for i, e in m:
                term = term * images(i) ** e
            out = out + term
        return out

    # comparison / display

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.basis == other.basis and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.basis, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.basis!r}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _accumulate(out: dict, a: Poly, b: Poly, scale: Rational = 1) -> None:
    # out += scale * a * b, in place; zero entries may remain
    get = out.get
    for m1, c1 in a._terms.items():
        if scale != 1:
            c1 = c1 * scale
        for m2, c2 in b._terms.items():
            m = mono_mul(m1, m2)
            out[m] = get(m, 0) + c1 * c2


def _prune(out: dict) -> dict:
    return {m: normalize(c) for m, c in out.items() if c}


def format_poly(p: Poly, *, times: str = "*") -> str:
    """Plain-text rendering, highest weight first (``R_6 + 15*R_4 + 5*R_2^2``)."""
    if not p:
        return "0"
    parts = []
    for m, c in reversed(p.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        factors = [f"{p.basis}_{i}" + (f"^{e}" if e > 1 else "") for i, e in reversed(m)]
        body = times.join(factors)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{times}{body}"
        parts.append((sign, text))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


# -- truncated power series ----------------------------------------------------


class Series:
    """Truncated power series ``sum_{d <= order} coeffs[d] * var^d``.

    Coefficients are :class:`Poly` values in one basis.  Every coefficient
    up to ``order`` is exact; nothing beyond it is known, and asking for it
    raises :class:`TruncationError`.
    """

    __slots__ = ("basis", "order", "var", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None, *, basis: str = "R", var: str = "t"):
        polys = [c if isinstance(c, Poly) else Poly.const(basis, c) for c in coeffs]
        for c in polys:
            if c.basis != basis:
                raise BasisError(f"coefficient in basis {c.basis}, series in {basis}")
        if order is None:
            order = len(polys) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        polys = polys[: order + 1]
        polys += [Poly.zero(basis)] * (order + 1 - len(polys))
        self.basis = basis
        self.order = order
        self.var = var
        self.coeffs = tuple(polys)

    @classmethod
    def _raw(cls, coeffs: list, order: int, basis: str, var: str) -> "Series":
        s = object.__new__(cls)
        s.basis, s.order, s.var, s.coeffs = basis, order, var, tuple(coeffs)
        return s

    @classmethod
    def zero(cls, order: int, basis: str = "R", var: str = "t") -> "Series":
        return cls._raw([Poly.zero(basis)] * (order + 1), order, basis, var)

    @classmethod
    def one(cls, order: int, basis: str = "R", var: str = "t") -> "Series":
        return cls.monomial(0, order, basis=basis, var=var)

    @classmethod
    def monomial(cls, d: int, order: int, coeff: Rational | Poly = 1, *, basis: str = "R", var: str = "t") -> "Series":
        coeffs = [Poly.zero(basis)] * (order + 1)
        if d <= order:
            coeffs[d] = coeff if isinstance(coeff, Poly) else Poly.const(basis, coeff)
        return cls(coeffs, order, basis=basis, var=var)

    def coeff(self, d: int) -> Poly:
        if d < 0:
            return Poly.zero(self.basis)
        if d > self.order:
            raise TruncationError(f"coefficient {d} requested from a series known to order {self.order}")
        return self.coeffs[d]

    __getitem__ = coeff

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationError(f"cannot extend order {self.order} to {order}")
        return Series._raw(self.coeffs[: order + 1], order, self.basis, self.var)

    def _check(self, other: "Series") -> None:
        if self.basis != other.basis:
            raise BasisError(f"cannot combine {self.basis}-basis and {other.basis}-basis series")
        if self.var != other.var:
            raise ValueError(f"series in different variables ({self.var}, {other.var})")

    def __add__(self, other) -> "Series":
        if not isinstance(other, Series):
            other = Series.monomial(0, self.order, other, basis=self.basis, var=self.var)
        self._check(other)
        n = min(self.order, other.order)
        return Series._raw([self.coeffs[d] + other.coeffs[d] for d in range(n + 1)], n, self.basis, self.var)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series._raw([-c for c in self.coeffs], self.order, self.basis, self.var)

    def __sub__(self, other) -> "Series":
        return self + (-other)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def scale(self, c: Rational | Poly) -> "Series":
        if isinstance(c, Poly):
            return Series._raw([x * c for x in self.coeffs], self.order, self.basis, self.var)
        return Series._raw([x.scale(c) for x in self.coeffs], self.order, self.basis, self.var)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return self.scale(other)
        self._check(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        nz_a = [i for i in range(n + 1) if a[i]]
        nz_b = [j for j in range(n + 1) if b[j]]
        acc: list[dict] = [{} for _ in range(n + 1)]
        for i in nz_a:
            for j in nz_b:
                if i + j > n:
                    break
                _accumulate(acc[i + j], a[i], b[j])
        return Series._raw([Poly._raw(self.basis, _prune(d)) for d in acc], n, self.basis, self.var)

    __rmul__ = scale

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            return self.reciprocal() ** (-e)
        result = Series.one(self.order, self.basis, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.basis, self.var, self.order, self.coeffs) == (other.basis, other.var, other.order, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.basis, self.var, self.order, self.coeffs))

    def __repr__(self) -> str:
        shown = [f"({c})*{self.var}^{d}" for d, c in enumerate(self.coeffs) if c]
        return f"Series[{self.basis}, O({self.var}^{self.order + 1})](" + (" + ".join(shown) or "0") + ")"

    # operations

    def shift(self, s: int) -> "Series":
        """Multiply by ``var**s``; negative ``s`` divides and requires vanishing low terms."""
        if s >= 0:
            coeffs = [Poly.zero(self.basis)] * s + list(self.coeffs)
            return Series._raw(coeffs, self.order + s, self.basis, self.var)
        if any(self.coeffs[: -s]):
            raise ValueError(f"series is not divisible by {self.var}^{-s}")
        return Series._raw(self.coeffs[-s:], self.order + s, self.basis, self.var)

    def D(self) -> "Series":
        """Euler operator ``var * d/dvar``: scales degree ``m`` by ``m``."""
        return Series._raw([c.scale(d) for d, c in enumerate(self.coeffs)], self.order, self.basis, self.var)

    def derivative(self) -> "Series":
        if self.order == 0:
            return Series.zero(0, self.basis, self.var)
        coeffs = [self.coeffs[d].scale(d) for d in range(1, self.order + 1)]
        return Series._raw(coeffs, self.order - 1, self.basis, self.var)

    def reciprocal(self) -> "Series":
        c0 = self.coeffs[0]
        if not c0 or not c0.is_constant():
            raise NotInvertibleError("constant term must be a nonzero rational")
        inv = Fraction(1) / c0.constant_term()
        inv = normalize(inv)
        n = self.order
        out = [Poly.const(self.basis, inv)]
        for d in range(1, n + 1):
            acc: dict = {}
            for i in range(1, d + 1):
                if self.coeffs[i] and out[d - i]:
                    _accumulate(acc, self.coeffs[i], out[d - i])
            out.append(Poly._raw(self.basis, _prune(acc)).scale(-inv))
        return Series._raw(out, n, self.basis, self.var)

    def compose(self, g: "Series") -> "Series":
        """``self(g)`` for ``g`` without constant term (Horner scheme)."""
        self._check(g)
        if g.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, g.order)
        result = Series.monomial(0, n, self.coeffs[n], basis=self.basis, var=self.var)
        g = g.truncate(n)
        for d in range(n - 1, -1, -1):
            result = result * g
            result = Series._raw((result.coeffs[0] + self.coeffs[d],) + result.coeffs[1:], n, self.basis, self.var)
        return result

    def reversion(self) -> "Series":
        """Compositional inverse by the Lagrange coefficient formula.

        Writing ``f = y / psi(y)``, the inverse ``g`` has
        ``[z^n] g = (1/n) [y^(n-1)] psi(y)^n``.
        """
        if self.coeffs[0]:
            raise NotInvertibleError("series must have zero constant term")
        if self.order < 1:
            raise NotInvertibleError("need at least the linear coefficient")
        c1 = self.coeffs[1]
        if not c1 or not c1.is_constant():
            raise NotInvertibleError("linear coefficient must be a nonzero rational")
        n = self.order
        psi = self.shift(-1).reciprocal()  # y / f(y), known to order n-1
        out = [Poly.zero(self.basis)]
        power = Series.one(n - 1, self.basis, self.var)
        for k in range(1, n + 1):
            power = power * psi
            out.append(power.coeffs[k - 1].scale(Fraction(1, k)))
        return Series._raw(out, n, self.basis, self.var)

    def map_coeffs(self, fn) -> "Series":
        coeffs = [fn(c) for c in self.coeffs]
        basis = coeffs[0].basis if coeffs else self.basis
        return Series(coeffs, self.order, basis=basis, var=self.var)


def product_coeff(a: Series, b: Series, d: int) -> Poly:
    """``[var^d](a*b)`` without forming the full product."""
    a._check(b)
    if d > a.order or d > b.order:
        raise TruncationError(f"coefficient {d} beyond order {min(a.order, b.order)}")
    acc: dict = {}
    for i in range(d + 1):
        if a.coeffs[i] and b.coeffs[d - i]:
            _accumulate(acc, a.coeffs[i], b.coeffs[d - i])
    return Poly._raw(a.basis, _prune(acc))
