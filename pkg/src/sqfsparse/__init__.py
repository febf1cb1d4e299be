"""Square-free values of polynomials over F_q[t] on linear sparse sets.

The package is organised bottom-up:

* :mod:`.ffield` -- GF(p^n) arithmetic on integer codes
* :mod:`.polyring` and :mod:`.polytext` -- F_q[t], F_q[t][x_1..x_D] and their text syntax
* :mod:`.discrim` -- Sylvester resultants and the discriminant operator D^k
* :mod:`.sqfree` -- square-free tests with brute-force oracles
* :mod:`.sparse` -- sparse specifications, bounds, conditions and the polynomial P
* :mod:`.harness` -- exhaustive counting experiments
* :mod:`.cli` -- the ``sqfsparse`` command
"""
from .discrim import disc_t, sylvester_resultant, universal_disc
from .ffield import FieldDescriptor, FieldElement, FieldError, field_from_q, field_make, parse_field_spec
from .harness import count_monic_box, count_sparse, frequency_sweep, run_counterexamples, schmidt_check
from .polyring import NEG_INF, CoefPoly, PolyError, TPoly, XPoly, gcd_t
from .polytext import PolyParseError, format_tpoly, format_xpoly, parse_tpoly, parse_xpoly
from .sparse import (
    NotSquareFreeError,
    SparseSpec,
    TheoremViolation,
    build_vanishing_poly,
    compute_bounds,
    validate_conditions,
)
from .sqfree import is_squarefree_f, is_squarefree_t

__version__ = "0.1.0"

__all__ = [
    "CoefPoly", "FieldDescriptor", "FieldElement", "FieldError", "NEG_INF", "NotSquareFreeError",
    "PolyError", "PolyParseError", "SparseSpec", "TPoly", "TheoremViolation", "XPoly",
    "build_vanishing_poly", "compute_bounds", "count_monic_box", "count_sparse", "disc_t",
    "field_from_q", "field_make", "format_tpoly", "format_xpoly", "frequency_sweep", "gcd_t",
    "is_squarefree_f", "is_squarefree_t", "parse_field_spec", "parse_tpoly", "parse_xpoly",
    "run_counterexamples", "schmidt_check", "sylvester_resultant", "universal_disc",
    "validate_conditions",
]
