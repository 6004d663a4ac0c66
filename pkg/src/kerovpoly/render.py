"""Text, LaTeX and JSON renderings of polynomials and results."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .exact import Poly, Rational, format_poly, monomial
from .engine import KerovResult


def rational_str(c: Rational) -> str:
    """Always ``p/q``, so the JSON schema never depends on integrality."""
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s: str) -> Rational:
    c = Fraction(s)
    return c.numerator if c.denominator == 1 else c


# -- polynomials ---------------------------------------------------------------


def poly_text(p: Poly) -> str:
    return format_poly(p)


def _latex_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\tfrac{{{c.numerator}}}{{{c.denominator}}}"


def rational_latex(c: Rational) -> str:
    c = Fraction(c)
    return ("-" if c < 0 else "") + _latex_coeff(abs(c))


def poly_latex(p: Poly) -> str:
    r"""LaTeX in the style of a printed table: ``5\,C_{4} + \tfrac{203}{3}\,C_{2}^{2}``."""
    if not p:
        return "0"
    out = []
    for m, c in reversed(p.items()):
        c = Fraction(c)
        mag = abs(c)
        body = "".join(f"{p.basis}_{{{i}}}" + (f"^{{{e}}}" if e > 1 else "") for i, e in reversed(m))
        if not body:
            term = _latex_coeff(mag)
        elif mag == 1:
            term = body
        else:
            term = _latex_coeff(mag) + r"\," + body
        if not out:
            out.append(("-" if c < 0 else "") + term)
        else:
            out.append(("- " if c < 0 else "+ ") + term)
    return " ".join(out)


def poly_to_json(p: Poly) -> dict[str, Any]:
    return {
        "basis": p.basis,
        "terms": [{"monomial": [[i, e] for i, e in m], "coeff": rational_str(c)} for m, c in p.items()],
    }


def poly_from_json(doc: dict[str, Any]) -> Poly:
    terms = {}
    for term in doc["terms"]:
        m = monomial(*(tuple(f) for f in term["monomial"]))
        terms[m] = parse_rational(term["coeff"])
    return Poly(doc["basis"], terms)


def render_poly(p: Poly, fmt: str) -> str:
    if fmt == "latex":
        return poly_latex(p)
    if fmt == "text":
        return poly_text(p)
    raise ValueError(f"unknown format {fmt!r}")


# -- whole character polynomials ---------------------------------------------------


def result_lines(res: KerovResult, fmt: str) -> list[str]:
    """Every piece, then the total.  C-basis totals drop the leading ``R_{k+1}``."""
    k = res.k
    lines = []
    grades = res.grades() if res.basis == "R" else [g for g in res.grades() if g > 0]
    for g in grades:
        body = render_poly(res.piece(g), fmt)
        lines.append(rf"\Sigma_{{{k},{g}}} = {body}" if fmt == "latex" else f"Sigma_{{{k},{g}}} = {body}")
    lines.append(total_line(res, fmt))
    return lines


def total_line(res: KerovResult, fmt: str) -> str:
    k = res.k
    if res.basis == "R":
        body = render_poly(res.total(), fmt)
        return rf"\Sigma_{{{k}}} = {body}" if fmt == "latex" else f"Sigma_{k} = {body}"
    body = render_poly(res.total(include_leading=False), fmt)
    if fmt == "latex":
        return rf"\Sigma_{{{k}}}-R_{{{k + 1}}} &=& {body}\\"
    return f"Sigma_{k} - R_{k + 1} = {body}"


def result_to_json(res: KerovResult) -> dict[str, Any]:
    leading = res.basis == "R"
    return {
        "k": res.k,
        "basis": res.basis,
        "pieces": {str(g): poly_to_json(res.piece(g)) for g in res.grades()},
        "total": poly_to_json(res.total(include_leading=leading)),
        "total_includes_leading": leading,
    }
