import pytest
import hypothesis.strategies as st
from hypothesis import given

from src.core.errors import AlphabetMismatchError, InvalidPositionError, InvalidSymbolError
from src.core.words import (
    EPSILON,
    Alphabet,
    Word,
    all_words,
    check_symbol,
    delete_at,
    insert_at,
    insert_closure,
    insert_power,
    insertion_chain,
    insertions,
    occurrences,
    project,
    shortlex,
    word,
)


BINARY = Alphabet.of('0', '1')
ABC = Alphabet.of('a', 'b', 'c')

words_ab = st.text(alphabet='ab', max_size=5).map(word)
pieces_ab = st.text(alphabet='ab', max_size=3).map(word)


def texts(words):
    return [str(w) for w in words]


class TestParsing:
    def test_compact_and_spaced_forms(self):
        assert Word.parse('100110', BINARY) == word('100110')
        assert Word.parse('a S βS').symbols == ('a', 'S', 'βS')
        assert Word.parse('_') == EPSILON
        assert Word.parse('') == EPSILON

    def test_foreign_symbol_is_rejected(self):
        with pytest.raises(AlphabetMismatchError):
            Word.parse('102', BINARY)

    @pytest.mark.parametrize('name', ['^', '$', '_', '#', '|', '->', 'a b', 'x#y', ''])
    def test_reserved_and_malformed_names(self, name):
        with pytest.raises(InvalidSymbolError):
            check_symbol(name)

    def test_duplicate_symbols_in_alphabet(self):
        with pytest.raises(InvalidSymbolError):
            Alphabet.of('a', 'a')

    def test_text_and_str(self):
        assert EPSILON.text() == '_'
        assert str(EPSILON) == 'ε'
        assert str(word('a S βS')) == 'a S βS'
        assert str(word('0100')) == '0100'


class TestOccurrences:
    def test_single(self):
        assert occurrences(word('0100'), word('10')) == [2]

    def test_overlapping(self):
        assert occurrences(word('aaa'), word('aa')) == [1, 2]

    def test_empty_piece_everywhere(self):
        assert occurrences(word('ab'), EPSILON) == [1, 2, 3]


class TestDeleteInsert:
    def test_delete_at(self):
        assert delete_at(word('aabb'), word('ab'), 2) == word('ab')
        assert delete_at(word('1000'), word('10'), 1) == word('00')

    def test_delete_empty_is_identity(self):
        w = word('abba')
        for p in range(1, len(w) + 2):
            assert delete_at(w, EPSILON, p) == w

    def test_delete_at_wrong_position(self):
        with pytest.raises(InvalidPositionError):
            delete_at(word('aabb'), word('ab'), 1)

    def test_insert_at(self):
        assert insert_at(word('ab'), word('c'), 1) == word('cab')
        assert insert_at(word('ab'), word('c'), 3) == word('abc')
        assert insert_at(EPSILON, word('uu'), 1) == word('uu')

    @pytest.mark.parametrize('position', [0, 4])
    def test_insert_at_out_of_range(self, position):
        with pytest.raises(InvalidPositionError):
            insert_at(word('ab'), word('c'), position)


class TestInsertions:
    def test_three_positions(self):
        assert texts(insertions(word('ab'), word('c'), ABC)) == ['abc', 'acb', 'cab']

    def test_collisions_are_deduplicated(self):
        assert texts(insertions(word('ab'), word('ab'), ABC)) == ['aabb', 'abab']

    def test_into_empty(self):
        assert insertions(EPSILON, word('ab')) == [word('ab')]

    def test_closure_up_to_two_insertions(self):
        result = insert_closure(word('ab'), [word('c')], 4, ABC)
        assert set(texts(result)) == {
            'ab', 'cab', 'acb', 'abc', 'ccab', 'cacb', 'cabc', 'accb', 'acbc', 'abcc',
        }
        assert len(result) == 10

    def test_closure_without_pieces(self):
        assert insert_closure(word('ab'), [], 6) == [word('ab')]

    def test_closure_of_powers(self):
        assert texts(insert_closure(EPSILON, [word('uu')], 4)) == ['ε', 'uu', 'uuuu']

    def test_insert_power_and_chain_agree(self):
        twice = insert_power(EPSILON, [word('ab')], 2, ABC)
        assert texts(twice) == ['aabb', 'abab']
        assert insertion_chain(EPSILON, [word('ab'), word('ab')], ABC) == twice

    def test_insert_power_zero_times(self):
        assert insert_power(word('ab'), [word('c')], 0) == [word('ab')]


class TestProjectionAndOrder:
    def test_project(self):
        assert project(word('a S βS B βB b'), Alphabet.of('a', 'b')) == word('ab')
        assert project(word('abba'), ABC) == word('abba')
        assert project(word('abba'), ()) == EPSILON

    def test_shortlex_follows_declaration_order(self):
        order = Alphabet.of('b', 'a')
        assert texts(shortlex([word('ab'), word('a'), word('b'), word('ab')], order)) == ['b', 'a', 'ab']

    def test_all_words(self):
        assert texts(all_words(BINARY, 2)) == ['ε', '0', '1', '00', '01', '10', '11']


def test_insertion_deletion_duality():
    for u in all_words(BINARY, 5):
        for v in all_words(BINARY, 3):
            for w in insertions(u, v):
                assert u in [delete_at(w, v, p) for p in occurrences(w, v)]


@given(w=words_ab, v=pieces_ab)
def test_every_deletion_can_be_undone(w, v):
    for p in occurrences(w, v):
        smaller = delete_at(w, v, p)
        assert len(smaller) == len(w) - len(v)
        assert w in insertions(smaller, v)
        assert insert_at(smaller, v, p) == w


@given(u=words_ab, v=words_ab)
def test_project_is_a_homomorphism(u, v):
    keep = Alphabet.of('a')
    assert project(u + v, keep) == project(u, keep) + project(v, keep)


@given(seed=pieces_ab, piece=st.sampled_from(['a', 'ab', 'bb']).map(word))
def test_closure_is_closed_under_deletion(seed, piece):
    closure = set(insert_closure(seed, [piece], 6))
    for w in closure:
        if w == seed:
            continue
        assert any(delete_at(w, piece, p) in closure for p in occurrences(w, piece))
