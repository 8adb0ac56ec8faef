"""
Reduction Module - GNF grammar to GJFA universality reduction

Public API:
    ReductionArtifacts    Γ, P_BU, P_NB, P_C, t and the machine M_G
    build_artifacts()     construct everything from a validated grammar
    interleave()          x_1 t x_2 t ... x_n t
    annotate()            annotated derivation words w_0 .. w_d
    reduce_wd_check()     can w_d be reduced to A_S with P_BU deletions?
"""

from .universality import (
    B_MARKER,
    ReductionArtifacts,
    annotate,
    build_artifacts,
    fresh_b_symbols,
    interleave,
    reduce_wd_check,
)

__all__ = [
    'B_MARKER', 'ReductionArtifacts', 'annotate', 'build_artifacts',
    'fresh_b_symbols', 'interleave', 'reduce_wd_check',
]
