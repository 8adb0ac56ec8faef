import pytest
import hypothesis.strategies as st
from hypothesis import given

from src.core.errors import AlphabetMismatchError, InvalidParametersError
from src.core.rewriting import Direction, applicable, apply, reduce_to_empty, validate_trace
from src.core.systems import (
    BINARY,
    block_word,
    builtin_ruv,
    closing_chain,
    corollary5_chain,
    corollary7_derivation,
    in_k,
    is_all_u,
    lemma6_chain,
    level_blocks,
    phi,
    potential,
    simulate_step,
)
from src.core.words import EPSILON, all_words, word


uv_words = st.text(alphabet='uV', max_size=8).map(word)


class TestMorphism:
    def test_phi(self):
        assert phi(word('0100')) == word('uVuu')
        assert phi(word('1000')) == word('uuVu')
        assert phi(EPSILON) == EPSILON

    def test_phi_rejects_foreign_symbols(self):
        with pytest.raises(AlphabetMismatchError):
            phi(word('uu'))

    @pytest.mark.parametrize('text, expected', [
        ('', True), ('00', True), ('0011', True), ('001100', True),
        ('0100', False), ('1000', False), ('111', False), ('101', False),
    ])
    def test_filter(self, text, expected):
        assert in_k(word(text)) is expected

    def test_potential(self):
        assert potential(EPSILON) == 0
        assert potential(word('uu')) == 2
        assert potential(word('Vu')) == 4
        assert potential(word('uuVu')) == 6
        assert potential(word('uVuu')) == 8

    def test_filter_is_all_u_image(self):
        for w in all_words(BINARY, 10):
            assert in_k(w) == is_all_u(phi(w))

    def test_simulated_steps(self):
        assert simulate_step(EPSILON, word('00')) == ('0', 1)
        assert simulate_step(word('00'), word('1000')) == ('1', 1)
        assert simulate_step(word('00'), word('0011')) is None


@given(w=uv_words)
def test_potential_laws(w):
    ruv = builtin_ruv()
    before = potential(w)
    for instr, position in applicable(ruv, w):
        after = potential(apply(ruv, w, instr, position))
        if instr.id == '0':
            assert (before, after) == (0, 2)
        elif instr.id == '1':
            assert after == 3 * before
        else:
            assert after == before


class TestChains:
    def test_lemma6(self, r01):
        trace = lemma6_chain(1, 1)
        assert trace.direction == Direction.PRODUCE
        assert trace.start == block_word(1, '1000', 1)
        assert trace.final == block_word(10, '1000', 0)
        assert len(trace.steps) == 16
        assert len(trace.final) - len(trace.start) == 32
        assert validate_trace(r01, trace) is None

    def test_lemma6_each_step_grows_by_two(self):
        lengths = [len(w) for w in lemma6_chain(2, 3).words()]
        assert all(b - a == 2 for a, b in zip(lengths, lengths[1:]))

    @pytest.mark.parametrize('alpha, beta', [(0, 1), (1, 0)])
    def test_lemma6_parameters(self, alpha, beta):
        with pytest.raises(InvalidParametersError):
            lemma6_chain(alpha, beta)

    def test_corollary5(self, r01):
        one = corollary5_chain(1)
        assert one.start == word('001000' + '1100')
        assert one.final == block_word(9, '1000')
        two = corollary5_chain(2)
        assert len(two.steps) == 32
        assert two.final == block_word(18, '1000')
        assert validate_trace(r01, two) is None

    def test_corollary5_parameters(self):
        with pytest.raises(InvalidParametersError):
            corollary5_chain(0)

    def test_level_blocks(self):
        assert [level_blocks(k) for k in range(4)] == [0, 4, 40, 364]

    def test_corollary7_level0(self):
        trace = corollary7_derivation(0)
        assert trace.start == EPSILON
        assert trace.final == word('00')
        assert [(s.instruction_id, s.position) for s in trace.steps] == [('0a', 1)]

    def test_corollary7_level1(self, r01):
        trace = corollary7_derivation(1)
        assert trace.final == block_word(4)
        assert len(trace.final) == 18
        assert [s.instruction_id for s in trace.steps[-6:]] == ['3b', '2a', '2b', '2d', '2c', '3a']
        assert validate_trace(r01, trace) is None
        assert reduce_to_empty(r01, trace.final)[0]

    def test_corollary7_level2(self, r01):
        trace = corollary7_derivation(2)
        assert len(trace.final) == 2 + 4 * 40
        assert validate_trace(r01, trace) is None

    @pytest.mark.parametrize('m', [0, 3])
    def test_closing_chain(self, r01, m):
        trace = closing_chain(m)
        assert trace.start == block_word(m, '1000')
        assert trace.final == block_word(m + 4)
        assert [s.instruction_id for s in trace.steps] == ['3b', '2a', '2b', '2d', '2c', '3a']
        assert validate_trace(r01, trace) is None

    def test_closing_chain_parameters(self):
        with pytest.raises(InvalidParametersError):
            closing_chain(-1)

    @pytest.mark.parametrize('k', [-1, 7])
    def test_corollary7_parameters(self, k):
        with pytest.raises(InvalidParametersError):
            corollary7_derivation(k)
