import pytest

from posetkit.core import Relation, compare, dual, induced
from posetkit.decomposition import GraphKind, graph_view, is_inc_connected
from posetkit.errors import BadParams, CertificateViolation, OracleInconsistency, UnknownElement, UnknownFamily
from posetkit.lazy import (STRAY, TOP, Family, LazyPoset, OmegaCertificate, bfs_layers, builtin_certificate,
                           builtin_family, dual_lazy, prefix, verify_omega_split)
from posetkit.recognition import inc_degree_profile

from conftest import ANTICHAIN3, P_N


def rung(label):
    return int(label[1:])


def successor_only(x, y):
    i, j = rung(x), rung(y)
    if i == j:
        return Relation.EQ
    if j == i + 1:
        return Relation.LT
    if i == j + 1:
        return Relation.GT
    return Relation.INC


def always_below(x, y):
    return Relation.EQ if x == y else Relation.LT


class TestPrefix:
    def test_ladder(self):
        p = prefix(builtin_family('ladder'), 4)
        assert p.elements == ('x0', 'x1', 'x2', 'x3')
        assert set(p.relation()) == {('x0', 'x2'), ('x0', 'x3'), ('x1', 'x3')}

    def test_small(self):
        assert len(prefix(builtin_family('ladder'), 0)) == 0
        assert prefix(builtin_family('ladder'), 1).elements == ('x0',)

    def test_negative(self):
        with pytest.raises(BadParams):
            prefix(builtin_family('ladder'), -1)

    def test_not_transitive(self):
        lp = LazyPoset('successor', lambda i: f'x{i}', successor_only)
        with pytest.raises(OracleInconsistency) as e:
            prefix(lp, 3)
        assert e.value.kind == 'transitivity'
        assert e.value.elements == ('x0', 'x1', 'x2')

    def test_not_asymmetric(self):
        lp = LazyPoset('below', lambda i: f'x{i}', always_below)
        with pytest.raises(OracleInconsistency) as e:
            prefix(lp, 2)
        assert e.value.kind == 'asymmetry'

    def test_unchecked(self):
        lp = LazyPoset('successor', lambda i: f'x{i}', successor_only)
        assert len(prefix(lp, 3, check=False).relation()) == 2

    def test_monotone(self):
        lp = builtin_family('ladder')
        small = prefix(lp, 5)
        assert induced(prefix(lp, 8), small.elements) == small

    @pytest.mark.parametrize('family', list(Family))
    def test_families_are_orders(self, family):
        assert len(prefix(builtin_family(family), 12)) == 12

    def test_omega_plus_one_is_chain(self):
        p = prefix(builtin_family('omega1'), 5)
        assert p.elements == (TOP, '0', '1', '2', '3')
        assert len(p.relation()) == 10

    def test_z_chain(self):
        p = prefix(builtin_family('z'), 5)
        assert p.elements == ('0', '-1', '1', '-2', '2')
        assert len(p.relation()) == 10
        assert p.lt('-2', '-1')

    def test_stray(self):
        p = prefix(builtin_family('omega1-stray'), 4)
        assert p.elements == (TOP, STRAY, '0', '1')
        assert p.lt(STRAY, TOP)
        assert compare(p, STRAY, '0') == Relation.INC
        assert compare(p, STRAY, '1') == Relation.INC


class TestLadder:
    @pytest.mark.parametrize('n', [3, 6, 20])
    def test_degree_two(self, n):
        p = prefix(builtin_family('ladder'), n)
        degrees = inc_degree_profile(p).degrees
        assert max(degrees.values()) == 2
        assert degrees['x0'] == 1
        assert is_inc_connected(p)

    def test_unknown_label(self):
        with pytest.raises(UnknownElement):
            builtin_family('ladder').oracle('x0', 'y1')

    def test_dual_same_inc(self):
        for family in ('ladder', 'omega1', 'omega1-stray'):
            lp = builtin_family(family)
            p = prefix(lp, 9)
            q = prefix(dual_lazy(lp), 9)
            assert q == dual(p)
            assert graph_view(q).edge_set == graph_view(p).edge_set


class TestOmegaSplit:
    @pytest.mark.parametrize('n', [1, 2, 3, 10, 11, 100, 10000])
    def test_ladder_plus_top(self, n):
        family = Family.LADDER_PLUS_TOP
        report = verify_omega_split(builtin_family(family), builtin_certificate(family), n)
        assert report.crossing_inc_edges == 0
        assert report.domination_violations == 0
        assert report.final == (TOP,)
        assert len(report.initial) == n - 1

    @pytest.mark.parametrize('n', [1, 5, 50])
    def test_omega_plus_one(self, n):
        family = Family.OMEGA_PLUS_ONE
        report = verify_omega_split(builtin_family(family), builtin_certificate(family), n)
        assert report.initial == tuple(str(i) for i in range(n - 1))
        assert report.final == (TOP,)
        assert report.to_dict()['crossing_inc_edges'] == 0

    def test_stray_element(self):
        family = Family.OMEGA_PLUS_ONE_STRAY
        report = verify_omega_split(builtin_family(family), builtin_certificate(family), 10)
        assert report.final == (TOP, STRAY)
        assert report.crossing_inc_edges == 8
        assert report.domination_violations == 8

    def test_decreasing_indices(self):
        lp = builtin_family('omega1')
        with pytest.raises(CertificateViolation):
            verify_omega_split(lp, OmegaCertificate(lambda i: 5 - i, TOP), 10)

    def test_chain_not_ascending(self):
        lp = builtin_family('ladder-top')
        with pytest.raises(CertificateViolation) as e:
            verify_omega_split(lp, OmegaCertificate(lambda i: i + 1, TOP), 10)
        assert e.value.reason == 'chain is not ascending'

    def test_top_on_chain(self):
        lp = builtin_family('omega1')
        with pytest.raises(CertificateViolation):
            verify_omega_split(lp, OmegaCertificate(lambda i: i, TOP), 10)

    def test_no_certificate(self):
        with pytest.raises(UnknownFamily):
            builtin_certificate('ladder')
        with pytest.raises(UnknownFamily):
            builtin_family('nope')


class TestBfsLayers:
    def test_ladder_path(self):
        g = graph_view(prefix(builtin_family('ladder'), 5))
        layers = bfs_layers(g, 'x0')
        assert layers.layers == tuple(frozenset({f'x{i}'}) for i in range(5))
        assert layers.unreachable == frozenset()

    def test_edgeless(self):
        layers = bfs_layers(graph_view(P_N, GraphKind.COMP), 'a')
        assert layers.layers[0] == {'a'}
        layers = bfs_layers(graph_view(ANTICHAIN3, GraphKind.COMP), 'a')
        assert layers.layers == (frozenset('a'),)
        assert layers.unreachable == {'b', 'c'}

    def test_triangle(self):
        layers = bfs_layers(graph_view(ANTICHAIN3), 'a')
        assert layers.layers == (frozenset('a'), frozenset('bc'))
        assert layers.to_dict() == {'layers': [['a'], ['b', 'c']], 'unreachable': []}

    def test_unknown_source(self):
        with pytest.raises(UnknownElement):
            bfs_layers(graph_view(P_N), 'q')


def test_single_lookahead_misses_last_rung():
    family = Family.LADDER_PLUS_TOP
    report = verify_omega_split(builtin_family(family), builtin_certificate(family), 3, lookahead=1)
    assert report.horizon == 'x2'
    assert report.final == (TOP, 'x1')
    assert report.crossing_inc_edges == 1
    with pytest.raises(BadParams):
        verify_omega_split(builtin_family(family), builtin_certificate(family), 3, lookahead=0)
