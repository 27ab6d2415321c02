"""Exact sparse bivariate polynomials and formal square-root expressions.

Terms map pairs of exponent numerators (each exponent times two) to
integer coefficients.  Variable names are display metadata only, so the
same machinery serves every variable pair in play; operations match
positionally.
"""

from __future__ import annotations

import cmath
import json
import math

from ._kernels import add_terms, bi_mul_terms, neg_terms, scale_terms, sub_terms
from .errors import NonIntegralOuter, UnresolvedRadical, ZeroBase
from .laurent import _dense_sqrt, _join_terms, _pow_str, _to_numerator

__all__ = ["BiPoly", "RadicalExpr"]


def _uni_sqrt_dict(terms):
    """Square root of a univariate numerator-keyed dict, or None."""
    if not terms:
        return {}
    lo = min(terms)
    hi = max(terms)
    if lo % 2:
        return None
    dense = [0] * (hi - lo + 1)
    for num, coeff in terms.items():
        dense[num - lo] = coeff
    root = _dense_sqrt(dense)
    if root is None:
        return None
    shift = lo // 2
    return {shift + j: c for j, c in enumerate(root) if c}


def _uni_divexact(num, den):
    """Exact division of univariate numerator-keyed dicts over the
    integers; None when the division leaves a remainder."""
    if not num:
        return {}
    quot = {}
    rem = dict(num)
    den_top = max(den)
    den_lead = den[den_top]
    while rem:
        rem_top = max(rem)
        shift = rem_top - den_top
        if shift < 0:
            return None
        q, leftover = divmod(rem[rem_top], den_lead)
        if leftover:
            return None
        quot[shift] = q
        for e, c in den.items():
            k = shift + e
            v = rem.get(k, 0) - q * c
            if v:
                rem[k] = v
            elif k in rem:
                del rem[k]
    return quot


def _bi_sqrt_terms(terms):
    """Exact square root of a bivariate numerator-keyed dict, or None.

    Long division on the first variable; coefficient arithmetic happens
    in the univariate ring of the second variable, with the recursion
    bottoming out in integer square roots.
    """
    if not terms:
        return {}
    min_a = min(na for na, _ in terms)
    min_b = min(nb for _, nb in terms)
    if min_a % 2 or min_b % 2:
        return None
    shifted = {(na - min_a, nb - min_b): c for (na, nb), c in terms.items()}
    top = max(na for na, _ in shifted)
    if top % 2:
        return None
    half = top // 2
    lead_poly = {nb: c for (na, nb), c in shifted.items() if na == top}
    lead_root = _uni_sqrt_dict(lead_poly)
    if lead_root is None:
        return None
    root = {(half, nb): c for nb, c in lead_root.items()}
    rem = sub_terms(shifted, bi_mul_terms(root, root))
    twice_lead = {nb: 2 * c for nb, c in lead_root.items()}
    while rem:
        k = max(na for na, _ in rem)
        exp = k - half
        if exp < 0 or exp >= half:
            return None
        coeff_poly = {nb: c for (na, nb), c in rem.items() if na == k}
        quot = _uni_divexact(coeff_poly, twice_lead)
        if quot is None:
            return None
        tau = {(exp, nb): c for nb, c in quot.items() if c}
        rem = sub_terms(rem, bi_mul_terms(tau, add_terms(root, root)))
        rem = sub_terms(rem, bi_mul_terms(tau, tau))
        root = add_terms(root, tau)
    return {(na + min_a // 2, nb + min_b // 2): c for (na, nb), c in root.items()}


def _power(base: complex, k: int) -> complex:
    if k == 0:
        return 1 + 0j
    if base == 0:
        return 0j
    return base**k


class BiPoly:
    """Sparse polynomial in an ordered pair of variables, with exact
    integer coefficients and half-integer exponents per variable."""

    __slots__ = ("variables", "terms")

    def __init__(self, terms=(), variables=("q", "p")):
        va, vb = variables
        clean: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            na, nb = key
            if not (isinstance(na, int) and isinstance(nb, int)):
                raise TypeError(f"exponent numerators {key!r} are not ints")
            key = (na, nb)
            c = clean.get(key, 0) + int(coeff)
            if c:
                clean[key] = c
            elif key in clean:
                del clean[key]
        self.variables = (va, vb)
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def _make(cls, variables, terms: dict) -> "BiPoly":
        self = object.__new__(cls)
        self.variables = variables
        self.terms = terms
        return self

    @classmethod
    def from_terms(cls, pairs, variables=("q", "p")) -> "BiPoly":
        """Build from ((expA, expB), coefficient) pairs with integer or
        half-integer exponents."""
        return cls(
            (((_to_numerator(ea), _to_numerator(eb)), int(c)) for (ea, eb), c in pairs),
            variables,
        )

    @classmethod
    def zero(cls, variables=("q", "p")) -> "BiPoly":
        return cls._make(tuple(variables), {})

    @classmethod
    def constant(cls, value: int, variables=("q", "p")) -> "BiPoly":
        value = int(value)
        return cls._make(tuple(variables), {(0, 0): value} if value else {})

    @classmethod
    def one(cls, variables=("q", "p")) -> "BiPoly":
        return cls.constant(1, variables)

    @classmethod
    def gens(cls, variables=("q", "p")) -> tuple["BiPoly", "BiPoly"]:
        """The two coordinate polynomials."""
        variables = tuple(variables)
        return (
            cls._make(variables, {(2, 0): 1}),
            cls._make(variables, {(0, 2): 1}),
        )

    # -- ring structure ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.constant(other, self.variables)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiPoly._make(self.variables, add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiPoly._make(self.variables, sub_terms(self.terms, other.terms))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiPoly._make(self.variables, sub_terms(other.terms, self.terms))

    def __neg__(self):
        return BiPoly._make(self.variables, neg_terms(self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly._make(self.variables, scale_terms(self.terms, other))
        if not isinstance(other, BiPoly):
            return NotImplemented
        return BiPoly._make(self.variables, bi_mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result = {(0, 0): 1}
        base = self.terms
        while k:
            if k & 1:
                result = bi_mul_terms(result, base)
            k >>= 1
            if k:
                base = bi_mul_terms(base, base)
        return BiPoly._make(self.variables, result)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- transforms --------------------------------------------------

    def rename(self, variables) -> "BiPoly":
        va, vb = variables
        return BiPoly._make((va, vb), dict(self.terms))

    def substitute(self, image_a, image_b):
        """Replace the first/second variable by the given images.

        Both images must live in the same ring and support arithmetic
        with ints; the result has their type (a pair of BiPoly images
        gives a BiPoly, a pair of LaurentPoly images collapses to a
        univariate result).  This polynomial must have nonnegative
        integer exponents in both variables.
        """
        rows: dict[int, dict[int, int]] = {}
        for (na, nb), coeff in self.terms.items():
            if na < 0 or nb < 0 or na % 2 or nb % 2:
                raise NonIntegralOuter(
                    "substitution source must have nonnegative integer exponents"
                )
            rows.setdefault(na // 2, {})[nb // 2] = coeff
        zero = image_a * 0
        result = zero
        for i in range(max(rows, default=0), -1, -1):
            row = rows.get(i, {})
            inner = zero
            for j in range(max(row, default=0), -1, -1):
                inner = inner * image_b + row.get(j, 0)
            result = result * image_a + inner
        return result

    def sqrt(self) -> "RadicalExpr":
        """Split into a square part and a residual radicand.

        The result squares back to this polynomial exactly.  When the
        polynomial is a perfect square the radicand list is empty;
        otherwise the largest extractable monomial square (including a
        perfect-square integer content) moves into the prefactor and
        the remainder stays under a single formal root.
        """
        if not self.terms:
            raise ValueError("the zero polynomial has no canonical square root")
        whole = _bi_sqrt_terms(self.terms)
        if whole is not None:
            return RadicalExpr._raw(BiPoly._make(self.variables, whole), [])
        content = 0
        for c in self.terms.values():
            content = math.gcd(content, c)
        root_c = math.isqrt(content)
        if root_c * root_c != content:
            root_c = 1
        square = root_c * root_c
        min_a = min(na for na, _ in self.terms)
        min_b = min(nb for _, nb in self.terms)
        even_a = min_a - (min_a % 2)
        even_b = min_b - (min_b % 2)
        pre = BiPoly._make(self.variables, {(even_a // 2, even_b // 2): root_c})
        residual = BiPoly._make(
            self.variables,
            {(na - even_a, nb - even_b): c // square for (na, nb), c in self.terms.items()},
        )
        return RadicalExpr._raw(pre, [residual])

    def eval_complex(self, point) -> complex:
        """Numeric evaluation at ``(value_a, value_b)``; half exponents use
        principal square roots."""
        za, zb = point
        za = complex(za)
        zb = complex(zb)
        if za == 0 and any(na < 0 for na, _ in self.terms):
            raise ZeroBase("negative exponents cannot be evaluated at zero")
        if zb == 0 and any(nb < 0 for _, nb in self.terms):
            raise ZeroBase("negative exponents cannot be evaluated at zero")
        half_a = any(na % 2 for na, _ in self.terms)
        half_b = any(nb % 2 for _, nb in self.terms)
        wa = cmath.sqrt(za) if half_a else za
        wb = cmath.sqrt(zb) if half_b else zb
        total = 0j
        for (na, nb), coeff in self.terms.items():
            fa = _power(wa, na if half_a else na // 2)
            fb = _power(wb, nb if half_b else nb // 2)
            total += coeff * fa * fb
        return total

    # -- rendering ---------------------------------------------------

    def to_json_dict(self) -> dict:
        va, vb = self.variables
        return {
            "variables": [va, vb],
            "den": 2,
            "terms": [
                {"numA": na, "numB": nb, "coeff": str(self.terms[(na, nb)])}
                for na, nb in sorted(self.terms, key=lambda k: (-k[0], -k[1]))
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "BiPoly":
        if obj.get("den") != 2:
            raise ValueError("expected an exponent denominator of 2")
        va, vb = obj.get("variables", ("q", "p"))
        return cls(
            (((int(t["numA"]), int(t["numB"])), int(t["coeff"])) for t in obj["terms"]),
            variables=(va, vb),
        )

    def render(self, style: str = "text", *, ascending: bool = True) -> str:
        """Text terms ordered by the first variable's exponent (ascending by
        default, descending with ``ascending=False``), ties ordered by
        ascending second exponent; or the canonical JSON form."""
        if style == "json":
            return json.dumps(self.to_json_dict())
        if style != "text":
            raise ValueError(f"unknown style {style!r}")
        if not self.terms:
            return "0"
        va, vb = self.variables
        if ascending:
            keys = sorted(self.terms)
        else:
            keys = sorted(self.terms, key=lambda k: (-k[0], -k[1]))
        chunks = []
        for na, nb in keys:
            coeff = self.terms[(na, nb)]
            body = _pow_str(va, na) + _pow_str(vb, nb)
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
        return f"BiPoly({self.terms!r}, variables={self.variables!r})"


class RadicalExpr:
    """A polynomial prefactor times formal square roots of polynomials.

    Entries in ``radicands`` are never perfect squares: the constructor
    moves every extractable square part into the prefactor, and
    ``square()`` always lands back in BiPoly.
    """

    __slots__ = ("prefactor", "radicands")

    def __init__(self, prefactor: BiPoly, radicands=()):
        if not isinstance(prefactor, BiPoly):
            raise TypeError("prefactor must be a BiPoly")
        pre = prefactor
        rest: list[BiPoly] = []
        for rad in radicands:
            if not isinstance(rad, BiPoly):
                raise TypeError("radicands must be BiPoly values")
            if rad.is_zero:
                pre = pre * 0
                rest = []
                break
            part = rad.sqrt()
            pre = pre * part.prefactor
            rest.extend(part.radicands)
        if pre.is_zero:
            rest = []
        self.prefactor = pre
        self.radicands = rest

    @classmethod
    def _raw(cls, prefactor: BiPoly, radicands) -> "RadicalExpr":
        self = object.__new__(cls)
        self.prefactor = prefactor
        self.radicands = list(radicands)
        return self

    @property
    def is_polynomial(self) -> bool:
        return not self.radicands

    def as_polynomial(self) -> BiPoly:
        """The underlying polynomial; raises UnresolvedRadical when formal
        roots remain."""
        if self.radicands:
            raise UnresolvedRadical(f"{self} still carries radical factors")
        return self.prefactor

    def square(self) -> BiPoly:
        out = self.prefactor * self.prefactor
        for rad in self.radicands:
            out = out * rad
        return out

    def eval_complex(self, point) -> complex:
        total = self.prefactor.eval_complex(point)
        for rad in self.radicands:
            total *= cmath.sqrt(rad.eval_complex(point))
        return total

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return not self.radicands and self.prefactor == other
        if not isinstance(other, RadicalExpr):
            return NotImplemented

        def key(rads):
            return sorted(sorted(r.terms.items()) for r in rads)

        return self.prefactor == other.prefactor and key(self.radicands) == key(
            other.radicands
        )

    def to_json_dict(self) -> dict:
        return {
            "prefactor": self.prefactor.to_json_dict(),
            "radicands": [r.to_json_dict() for r in self.radicands],
        }

    def render(self, style: str = "text", *, ascending: bool = True) -> str:
        if style == "json":
            return json.dumps(self.to_json_dict())
        if not self.radicands:
            return self.prefactor.render(ascending=ascending)
        parts = []
        if self.prefactor != 1:
            text = self.prefactor.render(ascending=ascending)
            parts.append(f"({text})" if len(self.prefactor.terms) > 1 else text)
        for rad in self.radicands:
            # radicands read best in plain descending-power order
            parts.append(f"sqrt({rad.render(ascending=False)})")
        return " * ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RadicalExpr({self.prefactor!r}, {self.radicands!r})"
