import pytest

from src.core.errors import AlphabetMismatchError, EmptyInputError, NotDerivableError, NotGnfError
from src.core.gjfa import accepts, refute_universality
from src.core.grammar import GnfGrammar, Production
from src.core.reduction import annotate, build_artifacts, fresh_b_symbols, interleave, reduce_wd_check
from src.core.words import EPSILON, Alphabet, Word, word


def texts(words):
    return [w.text() for w in words]


class TestArtifacts:
    def test_fresh_symbols(self, art_ab):
        assert art_ab.b_symbols == ('βS', 'βB')
        assert art_ab.gamma.symbols == ('a', 'b', 'S', 'B', 'βS', 'βB')

    def test_word_sets(self, art_ab):
        assert art_ab.t == word('S βS B βB')
        assert texts(art_ab.p_bu) == ['βS a B', 'βB b']
        assert texts(art_ab.p_nb) == ['S βS', 'B βB']
        assert texts(art_ab.p_c) == ['a S', 'b S', 'S βS', 'B βB', 'βS B', 'βB a', 'βB b']

    def test_single_nonterminal(self, art_a):
        assert art_a.t == word('S βS')
        assert texts(art_a.p_bu) == ['βS a S', 'βS a']
        assert texts(art_a.p_c) == ['a S', 'S βS', 'βS a']

    def test_machine_shape(self, art_ab):
        machine = art_ab.machine
        assert machine.states == ('q0', 'q1', 'q2', 'q3', 'q4')
        assert machine.start == 'q0'
        assert machine.finals == frozenset({'q4'})
        into_q2 = [r for r in machine.rules if r.source == 'q0' and r.target == 'q2']
        assert len(into_q2) == 36 - 7
        assert all(r.label not in art_ab.p_c for r in into_q2)

    def test_fresh_symbol_avoids_clashes(self):
        grammar = GnfGrammar(Alphabet.of('a', 'βS'), ('S',), 'S', (Production('S', word('a')),))
        assert fresh_b_symbols(grammar) == ('ββS',)

    def test_invalid_grammar(self):
        grammar = GnfGrammar(Alphabet.of('a'), ('S',), 'S', (Production('S', word('S a')),))
        with pytest.raises(NotGnfError):
            build_artifacts(grammar)


class TestInterleave:
    def test_examples(self, art_a, art_ab):
        assert interleave(art_a, word('a')) == word('a S βS')
        assert interleave(art_ab, word('ab')) == word('a S βS B βB b S βS B βB')

    def test_length(self, art_a):
        assert len(interleave(art_a, word('aaaa'))) == 3 * 4

    def test_empty_word(self, art_a):
        with pytest.raises(EmptyInputError):
            interleave(art_a, EPSILON)

    def test_foreign_symbol(self, art_a):
        with pytest.raises(AlphabetMismatchError):
            interleave(art_a, word('ab'))


class TestAnnotate:
    def test_two_step_derivation(self, art_ab, g_ab):
        assert texts(annotate(art_ab, g_ab, word('ab'))) == ['S', 'S βS a B', 'S βS a B βB b']

    def test_one_step_derivation(self, art_a, g_a):
        assert texts(annotate(art_a, g_a, word('a'))) == ['S', 'S βS a']

    def test_not_derivable(self, art_ab, g_ab):
        with pytest.raises(NotDerivableError):
            annotate(art_ab, g_ab, word('ba'))

    def test_final_word_reduces(self, art_a, g_a):
        w_d = annotate(art_a, g_a, word('aaa'))[-1]
        assert reduce_wd_check(art_a, w_d)
        assert accepts(art_a.machine, w_d)[0]

    def test_final_word_is_accepted_through_q1(self, art_ab, g_ab):
        ok, witness = accepts(art_ab.machine, annotate(art_ab, g_ab, word('ab'))[-1])
        assert ok
        assert witness.steps[0].rule.target == 'q1'
        assert witness.steps[-1].rule.target == 'q4'


class TestReduceCheck:
    def test_examples(self, art_ab):
        assert reduce_wd_check(art_ab, word('S βS a B βB b'))
        assert reduce_wd_check(art_ab, word('S'))
        assert not reduce_wd_check(art_ab, word('a S'))


class TestMachine:
    def test_interleaved_members_are_rejected(self, art_ab, art_a):
        assert not accepts(art_ab.machine, interleave(art_ab, word('ab')))[0]
        assert not accepts(art_ab.machine, interleave(art_ab, word('aa')))[0]
        assert not accepts(art_a.machine, interleave(art_a, word('aa')))[0]

    def test_bad_factor_is_accepted(self, art_ab):
        assert accepts(art_ab.machine, word('b a'))[0]
        assert accepts(art_ab.machine, word('a a S βS B βB'))[0]

    def test_bare_annotation_pair_is_rejected(self, art_a):
        # A_S b_S is in P_C and has no terminal to its left
        assert not accepts(art_a.machine, word('S βS'))[0]

    def test_not_universal(self, art_ab):
        counterexample = refute_universality(art_ab.machine, 2)
        assert counterexample is not None
        assert len(counterexample) == 2
        assert not accepts(art_ab.machine, counterexample)[0]

    def test_short_words_are_accepted(self, art_ab):
        machine = art_ab.machine
        assert accepts(machine, EPSILON)[0]
        for symbol in art_ab.gamma:
            assert accepts(machine, Word.of(symbol))[0]
