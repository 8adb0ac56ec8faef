import pytest

from src.cli.utils.formatting import Colors
from src.core.gjfa import Gjfa, Rule
from src.core.grammar import grammar_a, grammar_ab, grammar_full
from src.core.reduction import build_artifacts
from src.core.systems import builtin_r01, builtin_ruv
from src.core.words import Alphabet, word


# result lines are compared verbatim
Colors.disable()

AB = Alphabet.of('a', 'b')


M1_TEXT = """\
# accepts exactly ab
gjfa
alphabet: a b
states: s f
start: s
final: f
rule: s f a b
"""

UNIVERSAL_TEXT = """\
gjfa
alphabet: a b
states: s
start: s
final: s
rule: s s a
rule: s s b
"""

G_AB_TEXT = """\
gnf
terminals: a b
nonterminals: S B
start: S
rule: S -> a B
rule: B -> b
"""


@pytest.fixture
def r01():
    return builtin_r01()


@pytest.fixture
def ruv():
    return builtin_ruv()


@pytest.fixture
def g_a():
    return grammar_a()


@pytest.fixture
def g_ab():
    return grammar_ab()


@pytest.fixture
def g_full():
    return grammar_full()


@pytest.fixture
def art_a(g_a):
    return build_artifacts(g_a)


@pytest.fixture
def art_ab(g_ab):
    return build_artifacts(g_ab)


@pytest.fixture
def m1():
    return Gjfa(('s', 'f'), AB, (Rule('s', word('ab'), 'f'),), 's', frozenset({'f'}))


@pytest.fixture
def m2(m1):
    return Gjfa(m1.states, AB, m1.rules + (Rule('f', word('ab'), 'f'),), 's', frozenset({'f'}))


@pytest.fixture
def universal():
    return Gjfa(('s',), AB, (Rule('s', word('a'), 's'), Rule('s', word('b'), 's')), 's', frozenset({'s'}))


@pytest.fixture
def machine_files(tmp_path):
    """M1, the universal machine and G_ab written to disk."""
    paths = {}
    for name, text in (('m1.gjfa', M1_TEXT), ('universal.gjfa', UNIVERSAL_TEXT), ('g_ab.gnf', G_AB_TEXT)):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        paths[name] = path
    return paths
