"""Complete splittings of finite abelian groups.

Build, verify, analyze and search for factorizations ``G = MS`` where every
element has exactly one representation ``m * s`` with ``m`` an integer
multiplier and ``s`` a group element.
"""

from .arith import (
    UnitDecomposition,
    decompose_unit_group_pq,
    euler_phi,
    factorize,
    mul_order,
    unit_decompositions,
)
from .construct import (
    NonexistenceVerdict,
    PqPlan,
    construct_pq,
    factorization_interval_subgroup,
    nonexistence_criterion,
    p_group_triviality,
    trivial_complete,
)
from .errors import (
    CeilingExceeded,
    InapplicableError,
    InternalConsistencyError,
    ObstructionError,
    PreconditionError,
    SearchInconclusive,
    SplitkitError,
    ValidationError,
)
from .group import (
    Group,
    QuotientView,
    Subgroup,
    all_subgroups,
    element_order,
    make_group,
    quotient,
    scalar_mul,
    subgroup_closure,
)
from .search import SearchConfig, enumerate_complete_splittings, split_exists
from .splitting import (
    Certificate,
    QProfile,
    StructureReport,
    VerificationReport,
    analyze_structure,
    counting_check,
    derive_partial_from_splitting,
    induce_subgroup,
    order_partition,
    q_profile,
    recursive_class_counts,
    residue_system_check,
    verify,
)

__version__ = "0.1.0"
