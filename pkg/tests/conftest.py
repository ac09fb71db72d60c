import pytest

from posetkit.core import from_relations


def make(elements, pairs=()):
    return from_relations(list(elements), [tuple(_) for _ in pairs])


def chain(*labels):
    return make(labels, zip(labels, labels[1:]))


def antichain(*labels):
    return make(labels)


# a<c, b<c, b<d
P_N = make('abcd', ['ac', 'bc', 'bd'])
# bot < m1, m2 < top
P_2X2 = make(['bot', 'm1', 'm2', 'top'], [('bot', 'm1'), ('bot', 'm2'), ('m1', 'top'), ('m2', 'top')])
# {a, b} all below {c, d}
P_SUM = make('abcd', ['ac', 'ad', 'bc', 'bd'])
# x<y<z with w incomparable to all three
P_3P1 = make('xyzw', ['xy', 'yz'])
CHAIN3 = chain('a', 'b', 'c')
ANTICHAIN3 = antichain('a', 'b', 'c')
TWO_CHAINS = make('abcd', ['ab', 'cd'])

NAMED = {
    'P_N': P_N,
    'P_2x2': P_2X2,
    'P_sum': P_SUM,
    'P_3p1': P_3P1,
    'chain3': CHAIN3,
    'antichain3': ANTICHAIN3,
    'two_chains': TWO_CHAINS,
}


@pytest.fixture(params=sorted(NAMED))
def named_poset(request):
    return NAMED[request.param]


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv('POSETKIT_BUDGET_MS', raising=False)
    return tmp_path
