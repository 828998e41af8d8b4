"""Linear codes and fuzzy linear codes over prime fields."""

from .code import LinearCode
from .decoder import DecodeResult, SyndromeTable, build_table, classic_decode, decode
from .duality import (
    build_fuzzy_self_dual,
    dimension_parameterized,
    embed_self_orthogonal,
    fuzzy_dual,
    fuzzy_simplex_hamming,
    is_fuzzy_self_dual,
    is_fuzzy_self_orthogonal,
    is_orthogonal,
)
from .errors import (
    DualDoesNotExist,
    EmptyCut,
    FieldError,
    FuzzCodeError,
    InvariantError,
    MembershipZeroOutsideChain,
    NotFuzzyLinear,
    NotNested,
    ParseError,
    RankError,
    TooLarge,
)
from .fuzzy import (
    FuzzyLinearCode,
    LevelMap,
    direct_sum,
    ext_sum,
    from_level_map,
    join_raw,
    meet,
    verify_axioms_pointwise,
)
from .gf import GF2, Field, FieldMatrix, null_space, rank, rref, standard_form
from .zoo import (
    ext_hamming_8_4,
    fuzzy_reed_muller,
    golay_24_12,
    hamming_7_4,
    reed_muller,
    rm_properties,
    simplex_7_3,
)

__version__ = "0.1.0"
