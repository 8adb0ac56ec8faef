import pytest

from src.core.errors import AlphabetMismatchError, MachineDefinitionError, NotApplicableError
from src.core.rewriting import (
    ClearingRA,
    ContextRewritingSystem,
    Instruction,
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
from src.core.systems import BINARY
from src.core.words import EPSILON, all_words, word


def matches(system, w):
    return [(instr.id, position) for instr, position in applicable(system, word(w))]


def texts(words):
    return [str(w) for w in words]


class TestApplicable:
    def test_left_end(self, r01):
        assert matches(r01, '1000') == [('1a', 1)]

    def test_nothing_applies(self, r01):
        assert matches(r01, '0011') == []
        assert matches(r01, '10') == []

    def test_whole_word_sentinels(self, r01):
        assert matches(r01, '00') == [('0a', 1)]
        assert '0a' not in [ident for ident, _ in matches(r01, '000')]

    def test_right_sentinel_needs_exact_suffix(self, r01):
        assert ('3a', 3) in matches(r01, '01100')
        assert ('3a', 3) not in matches(r01, '011000')
        assert ('2a', 3) in matches(r01, '011000')

    def test_left_anchored_rewrite(self, ruv):
        assert matches(ruv, 'uu') == [('1', 1)]
        assert matches(ruv, '') == [('0', 1)]


class TestApply:
    def test_clearing(self, r01):
        assert apply(r01, word('1000'), '1a', 1) == word('00')
        assert apply(r01, word('100110'), '3b', 4) == word('1000')

    def test_rewriting(self, ruv):
        assert apply(ruv, EPSILON, '0', 1) == word('uu')
        assert apply(ruv, word('uu'), '1', 1) == word('uuVu')
        assert apply(ruv, word('Vu'), '3', 1) == word('uuuu')
        assert apply(ruv, word('uVuu'), '2', 2) == word('uuuuVu')

    def test_not_applicable(self, r01):
        with pytest.raises(NotApplicableError):
            apply(r01, word('0011'), '2b', 3)

    def test_unknown_instruction(self, r01):
        with pytest.raises(MachineDefinitionError):
            apply(r01, word('00'), '9z', 1)


class TestReduce:
    def test_trace(self, r01):
        ok, trace = reduce_to_empty(r01, word('100110'))
        assert ok
        assert [(s.instruction_id, s.position) for s in trace.steps] == [('3b', 4), ('1a', 1), ('0a', 1)]
        assert texts(trace.words()) == ['100110', '1000', '00', 'ε']
        assert validate_trace(r01, trace) is None

    def test_rejects(self, r01):
        assert reduce_to_empty(r01, word('0011')) == (False, None)

    def test_empty_word(self, r01):
        ok, trace = reduce_to_empty(r01, EPSILON)
        assert ok
        assert trace.steps == ()

    def test_foreign_symbol(self, r01):
        with pytest.raises(AlphabetMismatchError):
            reduce_to_empty(r01, word('012'))

    def test_every_step_shrinks(self, r01):
        _, trace = reduce_to_empty(r01, word('001000'))
        lengths = [len(w) for w in trace.words()]
        assert all(a - b == 2 for a, b in zip(lengths, lengths[1:]))


class TestProduce:
    def test_produce_step(self, r01):
        assert texts(produce_step(r01, word('1000'))) == ['001000', '100110']
        assert texts(produce_step(r01, EPSILON)) == ['00']

    def test_productions_carry_positions(self, r01):
        assert [(i.id, p, str(v)) for i, p, v in productions(r01, word('00'))] == [('1a', 1, '1000')]

    def test_generate(self, r01):
        assert texts(generate(r01, 0)) == ['ε']
        assert texts(generate(r01, 4)) == ['ε', '00', '1000']
        assert texts(generate(r01, 6)) == ['ε', '00', '1000', '001000', '100110']

    def test_forward_closure(self, ruv):
        assert texts(forward_closure(ruv, EPSILON, 4)) == ['ε', 'uu', 'uuVu']

    def test_derive_from(self, ruv):
        trace = derive_from(ruv, EPSILON, word('uuuuuu'))
        assert trace is not None
        assert trace.final == word('uuuuuu')
        assert len(trace.steps) == 3
        assert validate_trace(ruv, trace) is None
        assert derive_from(ruv, EPSILON, word('uuu')) is None


class TestValidateTrace:
    def test_corrupted_word(self, r01):
        _, trace = reduce_to_empty(r01, word('100110'))
        assert validate_trace(r01, trace.replace_word(1, word('0000'))) == 1

    def test_wrong_first_word(self, r01):
        _, trace = reduce_to_empty(r01, word('1000'))
        broken = trace.replace_word(0, word('10'))
        assert validate_trace(r01, broken) == 0


class TestDefinition:
    def test_builtins(self, r01, ruv):
        assert isinstance(r01, ClearingRA)
        assert r01.is_clearing
        assert len(r01.instructions) == 9
        assert not ruv.is_clearing
        assert len(ruv.instructions) == 4

    def test_context_wider_than_k(self):
        too_wide = Instruction('x', word('01'), word('1'))
        with pytest.raises(MachineDefinitionError):
            ContextRewritingSystem(BINARY, BINARY, 1, (too_wide,))

    def test_clearing_needs_erasing_rules(self):
        rewrite = Instruction('x', EPSILON, word('0'), word('1'))
        with pytest.raises(MachineDefinitionError):
            ClearingRA.of(BINARY, 1, (rewrite,))

    def test_duplicate_ids(self):
        rule = Instruction('x', EPSILON, word('0'))
        with pytest.raises(MachineDefinitionError):
            ClearingRA.of(BINARY, 1, (rule, rule))


def test_produce_inverts_reduce(r01):
    for u in all_words(BINARY, 8):
        for v in produce_step(r01, u):
            assert u in [apply(r01, v, instr, p) for instr, p in applicable(r01, v)]
    for v in all_words(BINARY, 8):
        for instr, p in applicable(r01, v):
            assert v in produce_step(r01, apply(r01, v, instr, p))


def test_generate_agrees_with_reduction(r01):
    generated = set(generate(r01, 10))
    reducible = {w for w in all_words(BINARY, 10) if reduce_to_empty(r01, w)[0]}
    assert generated == reducible
