import json

import pytest

from src.cli.main import VERSION, main
from src.core.formats import parse_gjfa, parse_sets
from src.core.grammar import grammar_ab
from src.core.reduction import build_artifacts
from src.core.rewriting import DerivationTrace, Direction, TraceStep, validate_trace
from src.core.systems import builtin_r01
from src.core.words import word


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMember:
    def test_accept_with_trace(self, capsys):
        code, out, _ = run(capsys, 'member', 'builtin:R01', '100110', '--trace')
        assert code == 0
        assert out.splitlines() == ['ACCEPT', '1000  [3b @ 4]', '00  [1a @ 1]', 'ε  [0a @ 1]']

    def test_printed_trace_revalidates(self, capsys):
        _, out, _ = run(capsys, 'member', 'builtin:R01', '001000', '--trace')
        steps = []
        for line in out.splitlines()[1:]:
            text, _, label = line.partition('  [')
            ident, _, position = label.rstrip(']').partition(' @ ')
            steps.append(TraceStep(ident, int(position), word('' if text == 'ε' else text)))
        trace = DerivationTrace(word('001000'), tuple(steps), Direction.REDUCE)
        assert steps
        assert validate_trace(builtin_r01(), trace) is None

    def test_reject(self, capsys):
        code, out, _ = run(capsys, 'member', 'builtin:R01', '0011')
        assert code == 1
        assert out.splitlines() == ['REJECT']

    def test_foreign_symbol(self, capsys):
        code, out, err = run(capsys, 'member', 'builtin:R01', '102')
        assert code == 2
        assert out == ''
        assert 'alphabet-mismatch' in err

    def test_rewriting_system(self, capsys):
        code, out, _ = run(capsys, 'member', 'builtin:RuV', 'uuuuuu', '--trace')
        assert code == 0
        assert out.splitlines()[0] == 'ACCEPT'
        assert out.splitlines()[-1].startswith('uuuuuu  [3 @ ')

    def test_gjfa_file(self, capsys, machine_files):
        code, out, _ = run(capsys, 'member', str(machine_files['m1.gjfa']), 'ab', '--trace')
        assert code == 0
        assert out.splitlines() == ['ACCEPT', 'ε  [r1 @ 1]']

    def test_grammar_file(self, capsys, machine_files):
        code, out, _ = run(capsys, 'member', str(machine_files['g_ab.gnf']), 'ab', '--trace')
        assert code == 0
        assert out.splitlines() == ['ACCEPT', 'aB  [r1 @ 1]', 'ab  [r2 @ 2]']

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, 'member', str(tmp_path / 'nope.gjfa'), 'ab')
        assert code == 2
        assert 'invalid-parameters' in err

    def test_file_that_is_not_utf8(self, capsys, tmp_path):
        path = tmp_path / 'bad.gjfa'
        path.write_bytes(b"gjfa\nalphabet: a \xff\n")
        code, out, err = run(capsys, 'member', str(path), 'a')
        assert code == 2
        assert out == ''
        assert 'parse-error' in err


class TestGenerate:
    def test_listing(self, capsys):
        code, out, _ = run(capsys, 'generate', 'builtin:R01', '--maxlen', '6')
        assert code == 0
        assert out.splitlines() == ['ε', '00', '1000', '001000', '100110']

    def test_filter(self, capsys):
        code, out, _ = run(capsys, 'generate', 'builtin:R01', '--maxlen', '6', '--filter', 'K')
        assert code == 0
        assert out.splitlines() == ['ε', '00', '100110']

    def test_filter_needs_binary_machine(self, capsys):
        code, _, err = run(capsys, 'generate', 'builtin:RuV', '--maxlen', '4', '--filter', 'K')
        assert code == 2
        assert 'unsupported-machine' in err

    def test_rewriting_system(self, capsys):
        code, out, _ = run(capsys, 'generate', 'builtin:RuV', '--maxlen', '4')
        assert code == 0
        assert out.splitlines() == ['ε', 'uu', 'uuVu']

    def test_negative_bound(self, capsys):
        code, _, _ = run(capsys, 'generate', 'builtin:R01', '--maxlen', '-1')
        assert code == 2

    def test_missing_bound_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(['generate', 'builtin:R01'])
        assert excinfo.value.code == 2


class TestReduceAndRefute:
    def test_reduce_writes_both_files(self, capsys, machine_files, tmp_path):
        prefix = tmp_path / 'out' / 'g_ab'
        code, out, _ = run(capsys, 'reduce', str(machine_files['g_ab.gnf']), '--out', str(prefix))
        assert code == 0
        assert 'g_ab.gjfa' in out

        machine_text = (tmp_path / 'out' / 'g_ab.gjfa').read_text(encoding='utf-8')
        assert parse_gjfa(machine_text) == build_artifacts(grammar_ab()).machine

        sets_text = (tmp_path / 'out' / 'g_ab.sets').read_text(encoding='utf-8')
        assert 't: S βS B βB' in sets_text
        assert len(parse_sets(sets_text)['P_C']) == 7

    def test_reduced_machine_rejects_interleaved_word(self, capsys, machine_files, tmp_path):
        prefix = tmp_path / 'g_ab'
        run(capsys, 'reduce', str(machine_files['g_ab.gnf']), '--out', str(prefix))
        code, out, _ = run(capsys, 'member', f"{prefix}.gjfa", 'a S βS B βB a S βS B βB')
        assert code == 1
        assert out.splitlines() == ['REJECT']

        code, out, _ = run(capsys, 'refute', f"{prefix}.gjfa", '--maxlen', '2')
        assert code == 0
        assert len(out.split()) == 2

    def test_reduce_reports_bad_rule(self, capsys, tmp_path):
        path = tmp_path / 'bad.gnf'
        path.write_text("gnf\nterminals: a\nnonterminals: S\nstart: S\nrule: S -> S a\n", encoding='utf-8')
        code, _, err = run(capsys, 'reduce', str(path), '--out', str(tmp_path / 'bad'))
        assert code == 2
        assert 'line 5' in err
        assert 'rule 1' in err
        assert not (tmp_path / 'bad.gjfa').exists()

    def test_reduce_grammar_that_is_not_utf8(self, capsys, tmp_path):
        path = tmp_path / 'bad.gnf'
        path.write_bytes(b"gnf\nterminals: \xfe\xff\n")
        code, _, err = run(capsys, 'reduce', str(path), '--out', str(tmp_path / 'bad'))
        assert code == 2
        assert 'parse-error' in err
        assert not (tmp_path / 'bad.gjfa').exists()

    def test_refute_finds_empty_word(self, capsys, machine_files):
        code, out, _ = run(capsys, 'refute', str(machine_files['m1.gjfa']), '--maxlen', '1')
        assert code == 0
        assert out.splitlines() == ['ε']

    def test_refute_none_up_to(self, capsys, machine_files):
        code, out, _ = run(capsys, 'refute', str(machine_files['universal.gjfa']), '--maxlen', '3')
        assert code == 1
        assert out.splitlines() == ['NONE-UP-TO 3']

    def test_refute_needs_gjfa(self, capsys):
        code, _, err = run(capsys, 'refute', 'builtin:R01', '--maxlen', '2')
        assert code == 2
        assert 'unsupported-machine' in err


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'lemma6')
        assert code == 0
        verdicts = [line for line in out.splitlines() if line.startswith(('PASS', 'FAIL'))]
        assert len(verdicts) == 9
        assert all(line.startswith('PASS lemma6.chain-') for line in verdicts)

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, 'verify', '--suite', 'nosuch')
        assert code == 2
        assert 'unknown-suite' in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'cor5', '--json')
        assert code == 0
        data = json.loads(out)
        assert data['passed'] is True
        assert [c['name'] for c in data['suites'][0]['checks']] == ['chain-1', 'chain-2', 'chain-3']

    def test_suite_or_all_is_required(self):
        with pytest.raises(SystemExit) as excinfo:
            main(['verify'])
        assert excinfo.value.code == 2


class TestPhi:
    def test_binary_word(self, capsys):
        code, out, _ = run(capsys, 'phi', '0100', '--json')
        assert code == 0
        assert json.loads(out) == {'word': '0100', 'phi': 'uVuu', 'in_k': False, 'potential': 8}

    def test_uv_word(self, capsys):
        code, out, _ = run(capsys, 'phi', 'uuVu', '--json')
        assert code == 0
        assert json.loads(out) == {'word': 'uuVu', 'potential': 6}

    def test_human_layout(self, capsys):
        code, out, _ = run(capsys, 'phi', '100110')
        assert code == 0
        assert 'in K' in out

    def test_other_alphabet(self, capsys):
        code, _, _ = run(capsys, 'phi', 'abc')
        assert code == 2


def test_version(capsys):
    code, out, _ = run(capsys, '--version')
    assert code == 0
    assert VERSION in out


def test_no_command_prints_help(capsys):
    code, out, _ = run(capsys)
    assert code == 0
    assert 'member' in out
