"""
Rewriting Module - k-context rewriting systems and clearing restarting automata

Public API:
    Instruction, ContextRewritingSystem, ClearingRA      systems
    DerivationTrace, TraceStep, Direction                certificates
    applicable(), apply()                                single rewrites
    reduce_to_empty()                                    w ⊢* ε with a trace
    produce_step(), productions(), generate()            the ⊣ direction
    forward_closure(), derive_from()                     bounded forward search
    validate_trace()                                     certificate replay
"""

from .system import (
    ClearingRA,
    ContextRewritingSystem,
    DerivationTrace,
    Direction,
    Instruction,
    TraceStep,
    empty_trace,
)
from .engine import (
    applicable,
    apply,
    derive_from,
    forward_closure,
    generate,
    produce_step,
    productions,
    reduce_to_empty,
    validate_trace,
)

__all__ = [
    'ClearingRA', 'ContextRewritingSystem', 'DerivationTrace', 'Direction', 'Instruction',
    'TraceStep', 'empty_trace',
    'applicable', 'apply', 'derive_from', 'forward_closure', 'generate', 'produce_step',
    'productions', 'reduce_to_empty', 'validate_trace',
]
