"""
Machine-kind Dispatch for CLI Commands

A machine reference resolves to one of three kinds: a Gjfa, a GnfGrammar or a
context rewriting system (possibly a ClearingRA). The commands treat them
uniformly through the helpers below.
"""

from typing import List, Optional, Tuple

from ...core.gjfa import Gjfa, accepts, enumerate_words
from ...core.grammar import GnfGrammar, derives, leftmost_derivation, sentential_forms
from ...core.rewriting import derive_from, forward_closure, generate, reduce_to_empty
from ...core.words import EPSILON, Word, all_words


def input_alphabet(machine):
    if isinstance(machine, Gjfa):
        return machine.alphabet
    if isinstance(machine, GnfGrammar):
        return machine.terminals
    return machine.sigma


def kind_of(machine):
    if isinstance(machine, Gjfa):
        return 'gjfa'
    if isinstance(machine, GnfGrammar):
        return 'gnf'
    return 'cl-RA' if machine.is_clearing else 'crs'


def shrinks(system):
    """True if some instruction of a rewriting system makes the word shorter."""
    return any(len(i.rule_to) < len(i.rule_from) for i in system.instructions)


def trace_line(w, rule_id, position):
    return f"{w}  [{rule_id} @ {position}]"


def decide(machine, w) -> Tuple[bool, Optional[List[str]]]:
    """
    Membership of `w`, plus one `<word>  [<rule-id> @ <pos>]` line per step on
    acceptance. GJFA and grammar rules are identified as r1, r2, ... in file order.

    Non-clearing rewriting systems are searched forward from ε within words no
    longer than `w`, which is exact when no instruction shrinks the word.
    """
    if isinstance(machine, Gjfa):
        accepted, witness = accepts(machine, w)
        if not accepted:
            return False, None
        words = witness.replay(w)
        return True, [
            trace_line(words[i + 1], f"r{machine.rules.index(step.rule) + 1}", step.position)
            for i, step in enumerate(witness.steps)
        ]

    if isinstance(machine, GnfGrammar):
        derivation = leftmost_derivation(machine, w) if derives(machine, w) else None
        if derivation is None:
            return False, None
        forms = sentential_forms(machine, derivation)
        nonterminals = set(machine.nonterminals)
        lines = []
        for i, index in enumerate(derivation):
            position = next(p for p, s in enumerate(forms[i].symbols, start=1) if s in nonterminals)
            lines.append(trace_line(forms[i + 1], f"r{index + 1}", position))
        return True, lines

    if machine.is_clearing:
        accepted, trace = reduce_to_empty(machine, w)
    else:
        machine.sigma.require(w)
        trace = derive_from(machine, EPSILON, w, maxlen=len(w))
        accepted = trace is not None
    if not accepted:
        return False, None
    return True, [trace_line(step.word, step.instruction_id, step.position) for step in trace.steps]


def language_up_to(machine, maxlen) -> List[Word]:
    """The accepted words of length <= maxlen, in shortlex order."""
    if isinstance(machine, Gjfa):
        return enumerate_words(machine, maxlen)
    if isinstance(machine, GnfGrammar):
        return [w for w in all_words(machine.terminals, maxlen) if w and derives(machine, w)]
    if machine.is_clearing:
        return generate(machine, maxlen)
    return [w for w in forward_closure(machine, EPSILON, maxlen) if machine.sigma.covers(w)]
