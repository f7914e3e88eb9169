"""Degeneration calculus for representations of the equioriented type-A
quiver, with the symmetric (symplectic and orthogonal) variant and the
combinatorics of degenerate Lagrangian flag loci."""

from .core import (
    Representation,
    RankSequence,
    SENTINEL_INFINITY,
    dim_vector,
    dual,
    euler_form,
    ext_dim,
    hom_dim,
    ranks_of,
    rep_of,
    sigma,
)
from .degen import (
    Move,
    apply_move,
    apply_moves,
    degenerates,
    degeneration_path,
    generic_quotient,
)
from .symdegen import (
    DegenStep,
    EpsilonRep,
    INCONCLUSIVE,
    SymMove,
    SymmetricType,
    apply_sym_move,
    is_epsilon_rank,
    is_epsilon_rep,
    perp_quotient_ranks,
    sym_degenerates,
    sym_degeneration_path,
    sym_move_refinement,
)
from .coxeter import (
    PermutationA,
    SignedPermutation,
    WeylWord,
    bruhat_leq,
    evaluate,
    is_reduced,
    parse_word,
    word_to_str,
)
from .pbw import (
    CRootVector,
    FixedPoint,
    PbwSubset,
    build_Mi,
    check_lemma_ui,
    dynkin_face_contains,
    dynkin_face_violations,
    find_interior_point,
    lagrangian_fixed_points,
    u_iprime_word,
    w_i_word,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "Representation", "RankSequence", "SENTINEL_INFINITY", "dim_vector",
    "dual", "euler_form", "ext_dim", "hom_dim", "ranks_of", "rep_of",
    "sigma",
    "Move", "apply_move", "apply_moves", "degenerates", "degeneration_path",
    "generic_quotient",
    "DegenStep", "EpsilonRep", "INCONCLUSIVE", "SymMove", "SymmetricType",
    "apply_sym_move", "is_epsilon_rank", "is_epsilon_rep",
    "perp_quotient_ranks", "sym_degenerates", "sym_degeneration_path",
    "sym_move_refinement",
    "PermutationA", "SignedPermutation", "WeylWord", "bruhat_leq",
    "evaluate", "is_reduced", "parse_word", "word_to_str",
    "CRootVector", "FixedPoint", "PbwSubset", "build_Mi", "check_lemma_ui",
    "dynkin_face_contains", "dynkin_face_violations", "find_interior_point",
    "lagrangian_fixed_points", "u_iprime_word", "w_i_word",
    "errors",
    "__version__",
]
