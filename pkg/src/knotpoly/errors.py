"""Exception types shared across the polynomial modules."""


class NonIntegralOuter(ValueError):
    """Composition/substitution source has a negative or fractional exponent."""


class NotAPerfectSquare(ValueError):
    """No exact polynomial square root exists."""


class ZeroBase(ValueError):
    """Evaluation at zero requested while negative exponents are present."""


class NonPolynomialB2(ValueError):
    """The second skein coefficient does not reduce to a polynomial."""


class UnresolvedRadical(ValueError):
    """A radical expression was used where a plain polynomial is required."""
