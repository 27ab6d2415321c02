"""Exact sparse Laurent polynomials with half-integer exponents.

Every exponent lives on the lattice of halves: a term is stored under its
exponent *numerator* (the exponent times two) with an exact ``int``
coefficient, so knot polynomials with integer powers and link polynomials
with half powers share one representation.  No zero coefficient is ever
stored, the zero polynomial has an empty term map, and equality compares
term maps only; the variable name is display metadata.

Values are immutable by convention: every operation returns a fresh
object, so instances can be shared freely between threads.
"""

from __future__ import annotations

import cmath
import json
import math
from fractions import Fraction

from ._kernels import add_terms, mul_terms, neg_terms, scale_terms, sub_terms
from .errors import NonIntegralOuter, NotAPerfectSquare, ZeroBase

__all__ = ["LaurentPoly"]


def _to_numerator(exponent) -> int:
    """Exponent (int, or Fraction with denominator 1 or 2) -> numerator in half-steps."""
    if isinstance(exponent, int):
        return 2 * exponent
    frac = Fraction(exponent)
    if frac.denominator == 1:
        return 2 * frac.numerator
    if frac.denominator == 2:
        return frac.numerator
    raise ValueError(f"exponent {exponent!r} is not on the half-integer lattice")


def _pow_str(variable: str, num: int) -> str:
    """Render variable**(num/2); bare name for exponent one, parens for
    negative or fractional exponents."""
    if num == 0:
        return ""
    if num == 2:
        return variable
    if num % 2 == 0:
        k = num // 2
        return f"{variable}^{k}" if k > 0 else f"{variable}^({k})"
    return f"{variable}^({num}/2)"


def _join_terms(chunks) -> str:
    """chunks: iterable of (positive, body) in display order."""
    parts = []
    for positive, body in chunks:
        if not parts:
            parts.append(body if positive else f"-{body}")
        else:
            parts.append(f"+ {body}" if positive else f"- {body}")
    return " ".join(parts)


def _dense_sqrt(coeffs):
    """Square root of an ordinary integer polynomial in dense form.

    ``coeffs[k]`` is the degree-k coefficient and the leading entry is
    nonzero.  Returns the dense root with positive leading coefficient,
    or None when no root with integer coefficients exists.
    """
    deg = len(coeffs) - 1
    if deg % 2:
        return None
    half = deg // 2
    lead = coeffs[-1]
    if lead < 0:
        return None
    root_lead = math.isqrt(lead)
    if root_lead * root_lead != lead:
        return None
    root = [0] * (half + 1)
    root[half] = root_lead
    rem = list(coeffs)
    rem[-1] = 0
    twice = 2 * root_lead
    top = deg - 1
    while True:
        while top >= 0 and rem[top] == 0:
            top -= 1
        if top < 0:
            return root
        exp = top - half
        if exp < 0:
            return None
        q, leftover = divmod(rem[top], twice)
        if leftover:
            return None
        # rem -= 2*q*s^exp*root + (q*s^exp)^2; root[exp] is still zero here
        for j, rc in enumerate(root):
            if rc:
                rem[exp + j] -= 2 * q * rc
        rem[2 * exp] -= q * q
        root[exp] = q


class LaurentPoly:
    """Sparse Laurent polynomial over the integers.

    ``terms`` maps exponent numerators (exponent * 2) to nonzero integer
    coefficients.  Construct with a mapping or iterable of
    ``(numerator, coeff)`` pairs, or use :meth:`from_terms` to pass real
    exponents.
    """

    __slots__ = ("variable", "terms")

    def __init__(self, terms=(), variable: str = "t"):
        clean: dict[int, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for num, coeff in items:
            if not isinstance(num, int):
                raise TypeError(f"exponent numerator {num!r} is not an int")
            c = clean.get(num, 0) + int(coeff)
            if c:
                clean[num] = c
            elif num in clean:
                del clean[num]
        self.variable = variable
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def _make(cls, variable: str, terms: dict) -> "LaurentPoly":
        # trusted path: terms already canonical
        self = object.__new__(cls)
        self.variable = variable
        self.terms = terms
        return self

    @classmethod
    def from_terms(cls, pairs, variable: str = "t") -> "LaurentPoly":
        """Build from (exponent, coefficient) pairs; duplicates are summed
        and zero coefficients dropped."""
        return cls(((_to_numerator(e), int(c)) for e, c in pairs), variable)

    @classmethod
    def zero(cls, variable: str = "t") -> "LaurentPoly":
        return cls._make(variable, {})

    @classmethod
    def constant(cls, value: int, variable: str = "t") -> "LaurentPoly":
        value = int(value)
        return cls._make(variable, {0: value} if value else {})

    @classmethod
    def one(cls, variable: str = "t") -> "LaurentPoly":
        return cls.constant(1, variable)

    @classmethod
    def gen(cls, variable: str = "t") -> "LaurentPoly":
        """The variable itself."""
        return cls._make(variable, {2: 1})

    @classmethod
    def gen_sqrt(cls, variable: str = "t") -> "LaurentPoly":
        """The square root of the variable (exponent one half)."""
        return cls._make(variable, {1: 1})

    @classmethod
    def monomial(cls, coeff: int, exponent, variable: str = "t") -> "LaurentPoly":
        coeff = int(coeff)
        return cls._make(variable, {_to_numerator(exponent): coeff} if coeff else {})

    # -- ring structure ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variable)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._make(self.variable, add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._make(self.variable, sub_terms(self.terms, other.terms))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._make(self.variable, sub_terms(other.terms, self.terms))

    def __neg__(self):
        return LaurentPoly._make(self.variable, neg_terms(self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._make(self.variable, scale_terms(self.terms, other))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._make(self.variable, mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result = {0: 1}
        base = self.terms
        while k:
            if k & 1:
                result = mul_terms(result, base)
            k >>= 1
            if k:
                base = mul_terms(base, base)
        return LaurentPoly._make(self.variable, result)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> Fraction:
        """Highest exponent; raises ValueError on the zero polynomial."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return Fraction(max(self.terms), 2)

    def min_degree(self) -> Fraction:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return Fraction(min(self.terms), 2)

    def leading_coefficient(self) -> int:
        if not self.terms:
            return 0
        return self.terms[max(self.terms)]

    def coefficient(self, exponent) -> int:
        return self.terms.get(_to_numerator(exponent), 0)

    # -- transforms --------------------------------------------------

    def rename(self, variable: str) -> "LaurentPoly":
        return LaurentPoly._make(variable, dict(self.terms))

    def invert_variable(self) -> "LaurentPoly":
        """Substitute the variable by its reciprocal."""
        return LaurentPoly._make(self.variable, {-n: c for n, c in self.terms.items()})

    def compose(self, inner):
        """Substitute ``inner`` for the variable.

        Requires this polynomial to be an ordinary polynomial (all
        exponents nonnegative integers); raises NonIntegralOuter
        otherwise.  ``inner`` may be any value supporting ring
        arithmetic with ints; the result has inner's type.
        """
        by_degree = {}
        for num, coeff in self.terms.items():
            if num < 0 or num % 2:
                raise NonIntegralOuter(
                    "composition source must have nonnegative integer exponents"
                )
            by_degree[num // 2] = coeff
        result = inner * 0
        for k in range(max(by_degree, default=0), -1, -1):
            result = result * inner + by_degree.get(k, 0)
        return result

    def sqrt_perfect(self) -> "LaurentPoly":
        """Exact square root, normalised to a positive leading coefficient.

        Raises NotAPerfectSquare when no root with integer coefficients
        exists on the half-exponent lattice, and ValueError on zero.
        """
        if not self.terms:
            raise ValueError("the zero polynomial has no canonical square root")
        lo = min(self.terms)
        hi = max(self.terms)
        if lo % 2 == 0 and (hi - lo) % 2 == 0:
            dense = [0] * (hi - lo + 1)
            for num, coeff in self.terms.items():
                dense[num - lo] = coeff
            root = _dense_sqrt(dense)
            if root is not None:
                shift = lo // 2
                return LaurentPoly._make(
                    self.variable, {shift + j: c for j, c in enumerate(root) if c}
                )
        raise NotAPerfectSquare(f"{self} is not a perfect square")

    def eval_complex(self, value) -> complex:
        """Numeric evaluation; half exponents use the principal square root
        of the argument.  Raises ZeroBase at zero with negative exponents.

        Real arguments with integer exponents are summed in exact rational
        arithmetic before the final rounding; high-degree alternating
        polynomials would otherwise lose everything to cancellation.
        """
        z = complex(value)
        if z == 0:
            if self.terms and min(self.terms) < 0:
                raise ZeroBase("negative exponents cannot be evaluated at zero")
            return complex(self.terms.get(0, 0))
        integral = all(num % 2 == 0 for num in self.terms)
        if integral and z.imag == 0:
            base = Fraction(z.real)
            total_exact = sum(
                coeff * base ** (num // 2) for num, coeff in self.terms.items()
            )
            return complex(total_exact)
        total = 0j
        if integral:
            for num, coeff in self.terms.items():
                total += coeff * z ** (num // 2)
        else:
            w = cmath.sqrt(z)
            for num, coeff in self.terms.items():
                total += coeff * w**num
        return total

    # -- rendering ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "variable": self.variable,
            "den": 2,
            "terms": [
                {"num": num, "coeff": str(self.terms[num])}
                for num in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "LaurentPoly":
        if obj.get("den") != 2:
            raise ValueError("expected an exponent denominator of 2")
        return cls(
            ((int(t["num"]), int(t["coeff"])) for t in obj["terms"]),
            variable=obj.get("variable", "t"),
        )

    def render(self, style: str = "text") -> str:
        """Terms in descending exponent order with explicit signs, or the
        canonical JSON form."""
        if style == "json":
            return json.dumps(self.to_json_dict())
        if style != "text":
            raise ValueError(f"unknown style {style!r}")
        if not self.terms:
            return "0"
        chunks = []
        for num in sorted(self.terms, reverse=True):
            coeff = self.terms[num]
            body = _pow_str(self.variable, num)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}{body}"
            chunks.append((coeff > 0, text))
        return _join_terms(chunks)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.terms!r}, variable={self.variable!r})"
