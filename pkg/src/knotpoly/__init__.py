"""Exact polynomial invariants of (s,2) torus knots and links.

Construction and cross-verification of the classical Alexander
polynomials, their two-variable generalisations, the HOMFLY polynomials,
Chebyshev polynomials of both kinds, q-numbers and q,p-numbers, plus the
algebra that converts recurrence coefficients into skein coefficients.

The arithmetic core is exact: arbitrary-precision integer coefficients
over half-integer exponent lattices.  Hot kernels run from a compiled
extension when available; ``kernel_backend()`` reports which one is in
use (``KNOTPOLY_PURE=1`` forces the fallback).
"""

from . import errors
from ._kernels import BACKEND as _BACKEND
from .bivar import BiPoly, RadicalExpr
from .chebyshev import (
    cheb_first,
    cheb_first_seq,
    cheb_second,
    cheb_second_qp,
    cheb_second_rx,
    cheb_second_seq,
)
from .invariants import (
    SkeinCoeffs,
    SkeinReport,
    TorusIndex,
    TripleCheck,
    alexander_closed,
    alexander_from_qnum,
    alexander_knot_rec,
    alexander_qp,
    alexander_rx,
    alexander_unified_rec,
    compose_skein,
    derive_skein,
    homfly_from_alexander,
    homfly_rec,
    verify_skein,
)
from .laurent import LaurentPoly
from .qnumbers import (
    qnum_closed,
    qnum_rec,
    qnum_rec_seq,
    qpnum_closed,
    qpnum_rec,
    qpnum_rec_seq,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "LaurentPoly",
    "RadicalExpr",
    "SkeinCoeffs",
    "SkeinReport",
    "TorusIndex",
    "TripleCheck",
    "alexander_closed",
    "alexander_from_qnum",
    "alexander_knot_rec",
    "alexander_qp",
    "alexander_rx",
    "alexander_unified_rec",
    "cheb_first",
    "cheb_first_seq",
    "cheb_second",
    "cheb_second_qp",
    "cheb_second_rx",
    "cheb_second_seq",
    "compose_skein",
    "derive_skein",
    "errors",
    "homfly_from_alexander",
    "homfly_rec",
    "kernel_backend",
    "qnum_closed",
    "qnum_rec",
    "qnum_rec_seq",
    "qpnum_closed",
    "qpnum_rec",
    "qpnum_rec_seq",
    "verify_skein",
]


def kernel_backend() -> str:
    """Which arithmetic kernel is active: "compiled" or "pure"."""
    return _BACKEND
