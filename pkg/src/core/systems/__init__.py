"""
Systems Module - the concrete rewriting systems R_01 and R_uV and their companions

Public API:
    builtin_r01(), builtin_ruv(), BUILTINS        the two built-in systems
    phi(), in_k(), potential(), simulate_step()    φ, the filter K, the potential Φ
    lemma6_chain(), corollary5_chain(),
    corollary7_derivation(), closing_chain(),
    level_blocks()                                 explicit production certificates
"""

from .builtins import BINARY, BUILTINS, UV, builtin_r01, builtin_ruv
from .morphism import in_k, is_all_u, phi, potential, simulate_step
from .chains import (
    CLOSING_TEMPLATE,
    LEMMA6_TEMPLATE,
    block_word,
    closing_chain,
    corollary5_chain,
    corollary7_derivation,
    lemma6_chain,
    level_blocks,
)

__all__ = [
    'BINARY', 'BUILTINS', 'UV', 'builtin_r01', 'builtin_ruv',
    'in_k', 'is_all_u', 'phi', 'potential', 'simulate_step',
    'CLOSING_TEMPLATE', 'LEMMA6_TEMPLATE', 'block_word', 'closing_chain', 'corollary5_chain',
    'corollary7_derivation', 'lemma6_chain', 'level_blocks',
]
