import json

import pytest

from posetkit import yaml_parser
from posetkit.config import BUDGET_ENV, Config, load_config
from posetkit.core import hasse
from posetkit.documents import dumps_document, emit_document, load_document, parse_document, to_dot
from posetkit.errors import BadParams, CycleError, DocumentError
from posetkit.oracle import enumerate_posets

from conftest import P_2X2, P_N


class TestParseDocument:
    def test_mapping(self):
        p = parse_document({'elements': ['a', 'b', 'c'], 'relations': [['a', 'b'], ['b', 'c']]})
        assert p.lt('a', 'c')

    def test_json_text(self):
        p = parse_document('{"elements": ["a", "b"], "relations": [["a", "b"]]}')
        assert p.relation() == [('a', 'b')]

    def test_yaml_text(self):
        p = parse_document('elements: [a, b]\nrelations:\n  - [a, b]\n')
        assert p.relation() == [('a', 'b')]

    def test_numbers_become_labels(self):
        p = parse_document({'elements': [1, 2], 'relations': [[1, 2]]})
        assert p.elements == ('1', '2')
        assert p.lt('1', '2')

    def test_relations_default(self):
        assert parse_document({'elements': ['a']}).relation() == []

    def test_annotations_dropped(self):
        p = parse_document('x-note: drawn by hand\nelements: [a]\n')
        assert p.elements == ('a',)

    def test_missing_elements(self):
        with pytest.raises(DocumentError):
            parse_document({'relations': []})

    def test_bad_pair(self):
        with pytest.raises(DocumentError):
            parse_document({'elements': ['a', 'b'], 'relations': [['a', 'b', 'a']]})

    def test_not_a_mapping(self):
        with pytest.raises(DocumentError):
            parse_document('- a\n- b\n')

    def test_cycle(self):
        with pytest.raises(CycleError):
            parse_document({'elements': ['a', 'b'], 'relations': [['a', 'b'], ['b', 'a']]})

    def test_round_trip(self):
        for n in range(5):
            for p in enumerate_posets(n):
                assert parse_document(emit_document(p)) == p
                assert parse_document(dumps_document(emit_document(p), 'yaml')) == p


class TestLoadDocument:
    def test_json(self, tmp_path):
        path = tmp_path / 'p.json'
        path.write_text(json.dumps(emit_document(P_N)))
        assert load_document(str(path)) == P_N

    def test_yaml_include(self, tmp_path):
        (tmp_path / 'elements.yaml').write_text('[bot, m1, m2, top]')
        path = tmp_path / 'p.yaml'
        path.write_text('elements: !include elements.yaml\n'
                        'relations: [[bot, m1], [bot, m2], [m1, top], [m2, top]]\n')
        assert load_document(str(path)) == P_2X2

    def test_unsupported(self, tmp_path):
        path = tmp_path / 'p.txt'
        path.write_text('')
        with pytest.raises(DocumentError):
            load_document(str(path))

    def test_missing(self, tmp_path):
        with pytest.raises(DocumentError):
            load_document(str(tmp_path / 'nope.json'))

    def test_broken_json(self, tmp_path):
        path = tmp_path / 'p.json'
        path.write_text('{"elements": [')
        with pytest.raises(DocumentError):
            load_document(str(path))


class TestDot:
    def test_hasse(self):
        text = to_dot(P_2X2)
        assert text.startswith('digraph "P" {')
        assert 'rankdir=BT;' in text
        edges = {tuple(_.strip(' ;').replace('"', '').split(' -> ')) for _ in text.splitlines() if '->' in _}
        assert edges == set(hasse(P_2X2))

    def test_inc(self):
        text = to_dot(P_N, 'inc')
        assert text.startswith('graph "P" {')
        assert sum('--' in _ for _ in text.splitlines()) == 3

    def test_quoting(self):
        assert '"a\\"b"' in to_dot(parse_document({'elements': ['a"b']}))

    def test_unknown_view(self):
        with pytest.raises(BadParams):
            to_dot(P_N, 'cover')

    def test_unknown_format(self):
        with pytest.raises(BadParams):
            dumps_document(emit_document(P_N), 'toml')


class TestConfig:
    def test_defaults(self, workdir):
        assert load_config() == Config()

    def test_default_time_cap(self, workdir):
        assert load_config().time_ms == 60000

    def test_default_file(self, workdir):
        (workdir / '.posetkit.yaml').write_text('budget:\n  max_k: 2\nverify:\n  jobs: 4\n')
        config = load_config()
        assert config.max_k == 2
        assert config.jobs == 4
        assert config.max_elements == 6

    def test_json_file(self, workdir):
        (workdir / 'c.json').write_text('{"enumeration": {"allow_seven": true}}')
        assert load_config('c.json').allow_seven

    def test_interpolation(self, workdir, monkeypatch):
        (workdir / 'c.yaml').write_text('budget:\n  max_elements: ${POSETKIT_TEST_MAX:-5}\n')
        assert load_config('c.yaml').max_elements == 5
        monkeypatch.setenv('POSETKIT_TEST_MAX', '4')
        assert load_config('c.yaml').max_elements == 4

    def test_budget_env(self, workdir, monkeypatch):
        monkeypatch.setenv(BUDGET_ENV, '250')
        assert load_config().time_ms == 250
        monkeypatch.setenv(BUDGET_ENV, 'soon')
        with pytest.raises(DocumentError):
            load_config()

    def test_invalid(self, workdir):
        (workdir / 'c.yaml').write_text('enumeration:\n  max_n: 9\n')
        with pytest.raises(DocumentError):
            load_config('c.yaml')

    def test_missing(self, workdir):
        with pytest.raises(DocumentError):
            load_config('nope.yaml')


class TestYamlParser:
    def test_unset_without_default(self, monkeypatch):
        monkeypatch.delenv('POSETKIT_TEST_UNSET', raising=False)
        assert yaml_parser.load('key: ${POSETKIT_TEST_UNSET}') == {'key': None}

    def test_nested_extensions(self):
        assert yaml_parser.load('a:\n  x-b: 1\n  c: 2\n') == {'a': {'c': 2}}

    def test_dump_keeps_order(self):
        assert yaml_parser.dump({'elements': ['b', 'a']}).startswith('elements:')
