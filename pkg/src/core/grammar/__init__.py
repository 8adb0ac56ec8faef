"""
Grammar Module - Greibach Normal Form Grammars

Public API:
    GnfGrammar, Production        data model
    validate()                    structural GNF check (raises GrammarError subclasses)
    derives()                     membership oracle
    leftmost_derivation()         first leftmost derivation by rule index
    sentential_forms()            the forms visited by a derivation
    grammar_a(), grammar_ab(), grammar_full()   sample grammars
"""

from .gnf import GnfGrammar, Production, derives, leftmost_derivation, sentential_forms, validate
from .samples import SAMPLE_GRAMMARS, grammar_a, grammar_ab, grammar_full

__all__ = [
    'GnfGrammar', 'Production', 'derives', 'leftmost_derivation', 'sentential_forms', 'validate',
    'SAMPLE_GRAMMARS', 'grammar_a', 'grammar_ab', 'grammar_full',
]
