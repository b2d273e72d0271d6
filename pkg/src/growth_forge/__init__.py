"""Growth computations for a prime monomial algebra of quadratic growth and a
subalgebra of its group ring over a polycyclic group.

Modules: ``words`` (the infinite word), ``algebra``/``growth``/``lemmas``
(the monomial algebra), ``group`` (normal forms), ``centre`` (the subalgebra
B), ``cli`` (command line).
"""
from ._kernels import BACKEND
from .algebra import AlgebraElement, Frame, MonomialAlgebra
from .centre import (
    BGenerators,
    GroupRing,
    GroupRingElement,
    b_dim_Vn,
    b_growth_report,
    central_witness,
    express_in_B,
    independence_check,
    multiply_AG,
    prime_witness_B,
    x_ideal_nilpotency_B,
)
from .config import Budget
from .errors import (
    BudgetExceeded,
    ExpressibilityError,
    GrowthForgeError,
    InvalidArgument,
    NilpotentInput,
    ParseError,
)
from .extnat import ExtendedNat, parse_extnat, render
from .fields import QQ, PrimeField
from .group import GroupElement, commutator, conjugate_by_u, inverse, is_central, multiply, parse_group
from .growth import GrowthSeries, bergman_bound_check, dim_Vn, gk_estimate, growth_report
from .lemmas import (
    ReductionRelation,
    annihilator_search,
    ideal_power_growth,
    nilpotency_index,
    prime_witness,
    reduction_search,
    two_sided_growth,
)
from .parsing import parse_element
from .words import (
    RunSequenceSpec,
    RunWord,
    build_prefix,
    factor_complexity,
    is_factor,
    max_x_occurrences,
    shortest_bridge,
    stable_level,
    stabilization_check,
    word_length,
)

__version__ = "0.1.0"
