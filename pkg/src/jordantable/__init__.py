"""Jordan types with a given two-part maximal commuting nilpotent type."""

from .equations import (
    MERSENNE61,
    ParamAssignment,
    PolyGenerator,
    Var,
    equation_set,
    evaluate,
    random_assignment,
    sample_point,
)
from .linalg import (
    ModMatrix,
    ModuleMap,
    build_matrix,
    commutant_sample,
    corank_profile,
    d_oracle,
    jordan_matrix,
    jordan_type_of,
    rank,
)
from .partition import (
    AbForm,
    Dominance,
    Partition,
    StableQ,
    ab_decomposition,
    almost_rectangular,
    classify_type,
    conjugate,
    dominance_leq,
    dominance_max,
    is_stable,
)
from .table import (
    CasePath,
    JTable,
    TableEntry,
    UChains,
    burge_code,
    case_path,
    closed_form_partition,
    full_table,
    jordan_type_from_corank,
    u_chain_lengths,
)
from .tropical import (
    INF,
    CorankSequence,
    MinPlusMatrix2,
    OrderMatrix,
    corank_at,
    corank_sequence,
    intersection_coordinates,
    min_plus_mul,
    simplified_power_11,
    tropical_power_11,
)

__version__ = "0.1.0"
