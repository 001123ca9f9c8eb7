"""Rejects, JRejects and J-torsionless modules over finite rings.

Rings and modules are finite and stored as Cayley tables; every property
is decided by exhaustive search under the budgets in ``jtl.limits``.
"""
from .constructors import (
    ring_gf,
    ring_matrix,
    ring_product,
    ring_quotient,
    ring_upper_triangular,
    ring_zmod,
)
from .classify import module_profile
from .errors import (
    AxiomViolation,
    BudgetExceeded,
    JTLError,
    ShapeError,
    UnknownFlag,
)
from .hom import dual, hom_set, is_isomorphic, is_projective
from .limits import LIMITS, override_limits
from .module import (
    FiniteModule,
    direct_sum,
    module_quotient,
    radical,
    regular_module,
    simple_modules,
    validate_module,
)
from .reject import jrej, jrej_ring, nilrej, rej, torsion_profile
from .ring import FiniteRing, classify_ring, jacobson_radical, left_ideals, validate_ring

__version__ = "0.1.0"
