"""Published expansions used as golden data."""

from fractions import Fraction as F

from kerovpoly.exact import Poly


def _build(basis, terms):
    p = Poly.zero(basis)
    for coeff, *factors in terms:
        term = Poly.const(basis, coeff)
        for index in factors:
            term = term * Poly.var(basis, index)
        p = p + term
    return p


def r_poly(*terms):
    return _build("R", terms)


def c_poly(*terms):
    return _build("C", terms)


# Sigma_k in free cumulants, k = 1..6
SIGMA_R = {
    1: r_poly((1, 2)),
    2: r_poly((1, 3)),
    3: r_poly((1, 4), (1, 2)),
    4: r_poly((1, 5), (5, 3)),
    5: r_poly((1, 6), (15, 4), (5, 2, 2), (8, 2)),
    6: r_poly((1, 7), (35, 5), (35, 3, 2), (84, 3)),
}

# Sigma_k - R_{k+1} in the C basis, k = 1..10
SIGMA_C_MINUS_LEADING = {
    1: c_poly(),
    2: c_poly(),
    3: c_poly((1, 2)),
    4: c_poly((F(5, 2), 3)),
    5: c_poly((5, 4), (8, 2)),
    6: c_poly((F(35, 4), 5), (42, 3)),
    7: c_poly((14, 6), (F(469, 3), 4), (F(203, 3), 2, 2), (180, 2)),
    8: c_poly((21, 7), (F(1869, 4), 5), (F(819, 2), 3, 2), (1522, 3)),
    9: c_poly(
        (30, 8),
        (1197, 6),
        (F(963, 2), 3, 3),
        (1122, 4, 2),
        (81, 2, 2, 2),
        (F(26060, 3), 4),
        (F(17680, 3), 2, 2),
        (8064, 2),
    ),
    10: c_poly(
        (F(165, 4), 9),
        (F(5467, 2), 7),
        (F(4433, 2), 4, 3),
        (F(1133, 2), 3, 2, 2),
        (F(11033, 4), 5, 2),
        (38225, 5),
        (52580, 3, 2),
        (96624, 3),
    ),
}
