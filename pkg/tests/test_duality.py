import itertools

import networkx as nx
import pytest

from posetkit.core import empty_poset, is_antichain, is_chain
from posetkit.duality import (LEFT, RIGHT, KWitness, Matching, SearchBudget, SplitVertex, dilworth, k_witness_search,
                              koenig_cover, max_matching, maximum_chain, mirsky_levels, split_bipartite, width)
from posetkit.errors import BadParams, BudgetExceeded, EmptyPoset, InvalidMatching, NotMaximumMatching
from posetkit.generate import random_dag
from posetkit.oracle import bruteforce_max_antichain, enumerate_posets
from posetkit.witness import validate_k_witness

from conftest import ANTICHAIN3, CHAIN3, P_2X2, P_N, P_SUM, antichain, chain, make


def lv(x):
    return SplitVertex(LEFT, x)


def rv(x):
    return SplitVertex(RIGHT, x)


class TestMirsky:
    def test_p_n(self):
        assert mirsky_levels(P_N) == ({'a', 'b'}, {'c', 'd'})

    def test_chain(self):
        assert mirsky_levels(CHAIN3) == ({'a'}, {'b'}, {'c'})

    def test_antichain(self):
        assert mirsky_levels(ANTICHAIN3) == ({'a', 'b', 'c'},)

    def test_empty(self):
        with pytest.raises(EmptyPoset):
            mirsky_levels(empty_poset())


class TestMaximumChain:
    def test_p_n(self):
        assert maximum_chain(P_N) == ('a', 'c')

    def test_antichain_takes_least_label(self):
        assert maximum_chain(ANTICHAIN3) == ('a',)

    def test_2x2(self):
        assert maximum_chain(P_2X2) == ('bot', 'm1', 'top')

    def test_least_among_longest(self):
        p = make('abcde', ['ba', 'ae', 'cd', 'de'])
        assert maximum_chain(p) == ('b', 'a', 'e')

    def test_meets_every_level_once(self):
        for n in range(1, 6):
            for p in enumerate_posets(n):
                levels = mirsky_levels(p)
                c = maximum_chain(p)
                assert is_chain(p, c)
                assert len(c) == len(levels)
                assert all(len(set(c) & level) == 1 for level in levels)

    @pytest.mark.slow
    def test_random_large(self):
        for seed in range(1000):
            p = random_dag(40, 0.1, seed)
            levels = mirsky_levels(p)
            c = maximum_chain(p)
            assert len(c) == len(levels)
            assert all(len(set(c) & level) == 1 for level in levels)


class TestSplitBipartite:
    def test_p_n(self):
        g = split_bipartite(P_N)
        assert set(g.edges) == {(lv('a'), rv('c')), (lv('b'), rv('c')), (lv('b'), rv('d'))}
        assert len(g.left) == len(g.right) == 4

    def test_antichain_has_no_edges(self):
        assert split_bipartite(ANTICHAIN3).edges == ()

    def test_vertex_text(self):
        assert str(lv('a')) == 'a-'


class TestMatching:
    def test_chain(self):
        assert len(max_matching(split_bipartite(CHAIN3))) == 2

    def test_edgeless(self):
        assert len(max_matching(split_bipartite(ANTICHAIN3))) == 0

    def test_p_n(self):
        assert len(max_matching(split_bipartite(P_N))) == 2

    def test_against_networkx(self):
        for n in range(1, 6):
            for p in itertools.islice(enumerate_posets(n), 0, None, 7):
                g = split_bipartite(p)
                graph = nx.Graph()
                graph.add_nodes_from(g.left + g.right)
                graph.add_edges_from(g.edges)
                expected = nx.bipartite.maximum_matching(graph, top_nodes=g.left)
                assert len(max_matching(g)) == len(expected) // 2


class TestKoenigCover:
    def test_sizes_match(self):
        for p in (CHAIN3, P_N, P_2X2, P_SUM, ANTICHAIN3):
            g = split_bipartite(p)
            m = max_matching(g)
            cover = koenig_cover(g, m)
            assert len(cover) == len(m)
            assert all(cover.covers(e) for e in g.edges)

    def test_rejects_non_maximum(self):
        g = split_bipartite(CHAIN3)
        with pytest.raises(NotMaximumMatching) as e:
            koenig_cover(g, Matching(frozenset({(lv('a'), rv('c'))})))
        assert e.value.exit_code == 1
        assert e.value.path[0] in g.left and e.value.path[-1] in g.right

    def test_rejects_foreign_edge(self):
        g = split_bipartite(CHAIN3)
        with pytest.raises(InvalidMatching):
            koenig_cover(g, Matching(frozenset({(lv('c'), rv('a'))})))

    def test_rejects_shared_endpoint(self):
        g = split_bipartite(CHAIN3)
        with pytest.raises(InvalidMatching):
            koenig_cover(g, Matching(frozenset({(lv('a'), rv('b')), (lv('a'), rv('c'))})))

    def test_exhaustive(self):
        for n in range(1, 6):
            for p in enumerate_posets(n):
                g = split_bipartite(p)
                m = max_matching(g)
                cover = koenig_cover(g, m)
                assert len(cover) == len(m)
                assert all(cover.covers(e) for e in g.edges)


class TestDilworth:
    def test_chain(self):
        chains, antichain = dilworth(CHAIN3)
        assert chains == (('a', 'b', 'c'),)
        assert antichain == {'a'}

    def test_2x2(self):
        chains, antichain = dilworth(P_2X2)
        assert chains == (('bot', 'm1', 'top'), ('m2',))
        assert antichain == {'m1', 'm2'}

    def test_antichain(self):
        chains, antichain = dilworth(ANTICHAIN3)
        assert chains == (('a',), ('b',), ('c',))
        assert antichain == {'a', 'b', 'c'}

    def test_width(self):
        assert width(CHAIN3) == 1
        assert width(ANTICHAIN3) == 3
        assert width(P_N) == 2

    def test_empty(self):
        with pytest.raises(EmptyPoset):
            dilworth(empty_poset())

    def test_exhaustive(self):
        for n in range(1, 6):
            for p in enumerate_posets(n):
                chains, antichain = dilworth(p)
                assert len(chains) == len(antichain) == len(bruteforce_max_antichain(p))
                assert is_antichain(p, antichain)
                assert sorted(x for c in chains for x in c) == sorted(p.elements)
                assert all(is_chain(p, c) for c in chains)


class TestKWitnessSearch:
    def test_2x2_two_chains(self):
        kw = k_witness_search(P_2X2, 2)
        assert kw == KWitness((('bot', 'm1', 'top'), ('m2',)),
                              (frozenset({'bot'}), frozenset({'m1', 'm2'}), frozenset({'top'})))

    def test_singleton(self):
        for k in (1, 2, 3):
            kw = k_witness_search(chain('x'), k)
            assert kw.chains == (('x',),)
            assert kw.partition == (frozenset({'x'}),)

    def test_empty(self):
        assert k_witness_search(empty_poset(), 2) == KWitness((), ())

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as e:
            k_witness_search(antichain(*'abcdefg'), 1)
        assert e.value.exit_code == 3
        with pytest.raises(BudgetExceeded):
            k_witness_search(CHAIN3, 4)

    def test_time_budget(self):
        with pytest.raises(BudgetExceeded):
            k_witness_search(antichain(*'abcdef'), 3, SearchBudget(time_ms=-1))

    def test_bad_k(self):
        with pytest.raises(BadParams):
            k_witness_search(CHAIN3, 0)

    @pytest.mark.parametrize('k', [1, 2])
    def test_small_posets_have_witnesses(self, k):
        for n in range(1, 5):
            for p in enumerate_posets(n):
                kw = k_witness_search(p, k)
                assert kw is not None
                assert validate_k_witness(p, kw, k).ok

    @pytest.mark.slow
    def test_six_elements_k_one(self):
        for p in enumerate_posets(6):
            kw = k_witness_search(p, 1)
            assert kw is not None
            assert validate_k_witness(p, kw, 1).ok

    def test_default_budget_has_time_cap(self):
        assert SearchBudget().time_ms == 60000

    @pytest.mark.slow
    @pytest.mark.parametrize('k', [1, 2, 3])
    def test_five_elements(self, k):
        for p in enumerate_posets(5):
            kw = k_witness_search(p, k)
            assert kw is not None
            assert validate_k_witness(p, kw, k).ok
