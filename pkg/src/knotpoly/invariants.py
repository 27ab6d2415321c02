"""Polynomial invariants of (s,2) torus knots and links.

The family is indexed by the winding number s >= 1 (s odd: knot, s even:
two-component link; s = 1 unknot, s = 2 Hopf link, s = 3 trefoil).  The
classical Alexander polynomial of the s-th member is the alternating sum
of s powers of t centred on degree m = (s-1)/2, and the whole sequence
obeys the three-term skein recursion with coefficients
(t^(1/2) - t^(-1/2), 1).

A two-variable generalisation, written either in (q,p) through the
q,p-numbers or in (r,x) through scaled Chebyshev polynomials, carries the
same structure; substituting r = a^2, x = z^2 + 2 turns the (r,x) form
into the HOMFLY polynomials of the odd-s (knot) members.

The skein-coefficient tools convert between the coefficients (c1, c2) of
the second-order recurrence that skips a member and the coefficients
(b1, b2) of the stepwise skein relation: c1 = b1^2 + 2 b2, c2 = -b2^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bivar import BiPoly, RadicalExpr
from .errors import NonPolynomialB2
from .laurent import LaurentPoly
from .qnumbers import _check_index, qnum_closed, qpnum_closed

__all__ = [
    "TorusIndex",
    "SkeinCoeffs",
    "TripleCheck",
    "SkeinReport",
    "alexander_closed",
    "alexander_unified_rec",
    "alexander_knot_rec",
    "alexander_from_qnum",
    "alexander_qp",
    "alexander_rx",
    "homfly_rec",
    "homfly_from_alexander",
    "derive_skein",
    "compose_skein",
    "verify_skein",
]


@dataclass(frozen=True)
class TorusIndex:
    """Index of the (s,2) family member with s minimal crossings."""

    s: int

    def __post_init__(self):
        if not isinstance(self.s, int) or self.s < 1:
            raise ValueError(f"s must be a positive integer, got {self.s!r}")

    @property
    def m(self) -> Fraction:
        """Degree of the Alexander polynomial: (s-1)/2."""
        return Fraction(self.s - 1, 2)

    @property
    def is_knot(self) -> bool:
        return self.s % 2 == 1

    @property
    def is_link(self) -> bool:
        return self.s % 2 == 0


def _as_s(index) -> int:
    if isinstance(index, TorusIndex):
        return index.s
    return TorusIndex(index).s


# -- Alexander family ----------------------------------------------------


def alexander_closed(index) -> LaurentPoly:
    """Alternating sum t^m - t^(m-1) + ... with s terms, m = (s-1)/2.

    Accepts an int s or a TorusIndex.
    """
    s = _as_s(index)
    return LaurentPoly._make("t", {s - 1 - 2 * i: (-1) ** i for i in range(s)})


def alexander_unified_rec(s_max: int) -> list[LaurentPoly]:
    """Knot and link members interleaved, built by the skein recursion.

    Entry i holds the member with s = i + 1; seeds are 1 (unknot) and
    t^(1/2) - t^(-1/2) (Hopf link), and each step adds
    (t^(1/2) - t^(-1/2)) times the previous member to the one before it.
    """
    if _as_s(s_max) < 1:
        raise ValueError("s_max must be at least 1")
    step = LaurentPoly._make("t", {1: 1, -1: -1})
    seq = [LaurentPoly.one("t"), step]
    while len(seq) < s_max:
        seq.append(step * seq[-1] + seq[-2])
    return seq[:s_max]


def alexander_knot_rec(m_max: int) -> list[LaurentPoly]:
    """Knot members only, indexed by degree m = 0..m_max, built by
    A_{m+1} = (t + 1/t) A_m - A_{m-1} from A_0 = 1, A_1 = t - 1 + 1/t."""
    _check_index(m_max)
    step = LaurentPoly._make("t", {2: 1, -2: 1})
    seq = [LaurentPoly.one("t"), LaurentPoly._make("t", {2: 1, 0: -1, -2: 1})]
    while len(seq) <= m_max:
        seq.append(step * seq[-1] - seq[-2])
    return seq[: m_max + 1]


def alexander_from_qnum(m: int) -> LaurentPoly:
    """Knot member of degree m as the difference [m+1] - [m] of q-numbers."""
    _check_index(m)
    return (qnum_closed(m + 1) - qnum_closed(m)).rename("t")


def alexander_qp(n: int, variables=("q", "p")) -> BiPoly:
    """Two-variable generalisation [n+1]_{q,p} - qp [n]_{q,p}.

    Specialises to the classical knot member of degree n under
    q -> t, p -> 1/t.
    """
    _check_index(n)
    variables = tuple(variables)
    qp = BiPoly._make(variables, {(2, 2): 1})
    return qpnum_closed(n + 1, variables) - qp * qpnum_closed(n, variables)


def alexander_rx(n: int, variables=("r", "x")) -> BiPoly:
    """Two-variable generalisation in scale/trace form, built by the
    recursion A_{k+1} = rx A_k - r^2 A_{k-1} from A_0 = 1, A_1 = rx - r^2."""
    _check_index(n)
    variables = tuple(variables)
    seq = [
        BiPoly.one(variables),
        BiPoly._make(variables, {(2, 2): 1, (4, 0): -1}),
    ]
    rx = BiPoly._make(variables, {(2, 2): 1})
    r2 = BiPoly._make(variables, {(4, 0): 1})
    while len(seq) <= n:
        seq.append(rx * seq[-1] - r2 * seq[-2])
    return seq[n]


# -- HOMFLY family -------------------------------------------------------


def homfly_rec(m_max: int) -> list[BiPoly]:
    """HOMFLY polynomials of the knot members T(2m+1, 2) for m = 0..m_max,
    built by H_{m+1} = a^2 (z^2 + 2) H_m - a^4 H_{m-1} from H_0 = 1,
    H_1 = 2a^2 + a^2 z^2 - a^4."""
    _check_index(m_max)
    variables = ("a", "z")
    seq = [
        BiPoly.one(variables),
        BiPoly._make(variables, {(4, 0): 2, (4, 4): 1, (8, 0): -1}),
    ]
    step = BiPoly._make(variables, {(4, 4): 1, (4, 0): 2})
    a4 = BiPoly._make(variables, {(8, 0): 1})
    while len(seq) <= m_max:
        seq.append(step * seq[-1] - a4 * seq[-2])
    return seq[: m_max + 1]


def homfly_from_alexander(n: int) -> BiPoly:
    """HOMFLY polynomial via the substitution r = a^2, x = z^2 + 2 applied
    to the (r,x)-form generalised Alexander polynomial."""
    variables = ("a", "z")
    a_sq = BiPoly._make(variables, {(4, 0): 1})
    z_sq_plus_2 = BiPoly._make(variables, {(0, 4): 1, (0, 0): 2})
    return alexander_rx(n).substitute(a_sq, z_sq_plus_2)


# -- skein coefficients ----------------------------------------------------


@dataclass(frozen=True)
class SkeinCoeffs:
    """Stepwise skein coefficients: P_{n+1} = b1 P_n + b2 P_{n-1}."""

    b1: RadicalExpr
    b2: BiPoly


def derive_skein(c1: BiPoly, c2: BiPoly) -> SkeinCoeffs:
    """Recover (b1, b2) from the member-skipping recurrence coefficients:
    b2 = sqrt(-c2), b1 = sqrt(c1 - 2 b2), both normalised to positive
    leading coefficients.

    b2 must come out as a plain polynomial (the stepwise relation closes
    only then); otherwise NonPolynomialB2 is raised.  b1 may keep formal
    radical factors.
    """
    minus_c2 = -c2
    if minus_c2.is_zero:
        b2 = BiPoly.zero(c2.variables)
    else:
        root = minus_c2.sqrt()
        if root.radicands:
            raise NonPolynomialB2(f"-c2 = {minus_c2} is not a perfect square")
        b2 = root.prefactor
    inner = c1 - 2 * b2
    if inner.is_zero:
        b1 = RadicalExpr._raw(BiPoly.zero(c1.variables), [])
    else:
        b1 = inner.sqrt()
    return SkeinCoeffs(b1, b2)


def compose_skein(b1, b2: BiPoly) -> tuple[BiPoly, BiPoly]:
    """Inverse of derive_skein: c1 = b1^2 + 2 b2, c2 = -b2^2.

    ``b1`` may be a RadicalExpr or a plain polynomial; its square is
    always polynomial.
    """
    b1_sq = b1.square() if isinstance(b1, RadicalExpr) else b1 * b1
    return (b1_sq + 2 * b2, -(b2 * b2))


# -- skein verification ----------------------------------------------------


@dataclass(frozen=True)
class TripleCheck:
    """Outcome for one consecutive triple; ``index`` is the position of
    the produced element in the sequence."""

    index: int
    ok: bool
    mode: str
    detail: str = ""


@dataclass(frozen=True)
class SkeinReport:
    checks: list[TripleCheck] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[TripleCheck]:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        good = sum(1 for c in self.checks if c.ok)
        return f"{good}/{len(self.checks)} triples satisfy the skein relation"


_DEFAULT_SAMPLES = ((0.6, 2.7), (1.3, 3.5), (2.2, 5.1))


def verify_skein(sequence, b1, b2, samples=None, tol: float = 1e-9) -> SkeinReport:
    """Check P_{n+1} - b1 P_n - b2 P_{n-1} = 0 over every consecutive triple.

    ``b1`` may be a polynomial (LaurentPoly or BiPoly, matching the
    sequence) or a RadicalExpr; ``b2`` a polynomial or int.  When b1
    carries unresolved radical factors the check falls back to numeric
    sampling of bivariate sequences; the default sample points keep the
    first variable positive and the second above 2 so the standard
    radicands stay positive.  Failures are recorded in the report, never
    raised.
    """
    sequence = list(sequence)
    if len(sequence) < 3:
        raise ValueError("need at least three sequence entries")
    b1_poly = b1
    numeric = False
    if isinstance(b1, RadicalExpr):
        if b1.radicands:
            numeric = True
        else:
            b1_poly = b1.prefactor
    checks = []
    if not numeric:
        for i in range(2, len(sequence)):
            residue = sequence[i] - b1_poly * sequence[i - 1] - b2 * sequence[i - 2]
            checks.append(
                TripleCheck(
                    index=i,
                    ok=residue.is_zero,
                    mode="symbolic",
                    detail="" if residue.is_zero else f"residue {residue}",
                )
            )
        return SkeinReport(checks)

    if not isinstance(sequence[0], BiPoly):
        raise TypeError("numeric skein verification expects a bivariate sequence")
    points = tuple(samples) if samples is not None else _DEFAULT_SAMPLES
    b2_eval = (lambda pt: complex(b2)) if isinstance(b2, int) else b2.eval_complex
    for i in range(2, len(sequence)):
        worst = 0.0
        ok = True
        for pt in points:
            high = sequence[i].eval_complex(pt)
            mid = b1.eval_complex(pt) * sequence[i - 1].eval_complex(pt)
            low = b2_eval(pt) * sequence[i - 2].eval_complex(pt)
            scale = max(1.0, abs(high), abs(mid), abs(low))
            err = abs(high - mid - low) / scale
            worst = max(worst, err)
            if err > tol:
                ok = False
        checks.append(
            TripleCheck(index=i, ok=ok, mode="numeric", detail=f"max rel err {worst:.3e}")
        )
    return SkeinReport(checks)
