'''Seeded random and structured poset generators.

Every generator takes an explicit seed; nothing reads ambient entropy.
'''
import numpy as np

from .core import Poset, transitive_closure
from .documents import emit_document
from .errors import BadParams
from .recognition import is_three_plus_one_free, semiorder_from_unit_intervals
from .validator import GENERATE_SCHEMAS, Validator

MODELS = list(GENERATE_SCHEMAS)


def _labels(n, prefix='v'):
    return [f'{prefix}{i}' for i in range(n)]


def random_order(n, dims=2, seed=0) -> Poset:
    '''Intersection of `dims` random linear orders.'''
    rng = np.random.default_rng(seed)
    ranks = np.array([rng.permutation(n) for _ in range(dims)]).reshape(dims, n)
    below = np.ones((n, n), dtype=bool)
    for rank in ranks:
        below &= rank[:, None] < rank[None, :]
    return Poset(_labels(n), below)


def unit_semiorder(n, seed=0, spread=None) -> Poset:
    rng = np.random.default_rng(seed)
    spread = n / 2 if spread is None else spread
    return semiorder_from_unit_intervals(rng.uniform(0.0, spread, n))


def grid(rows, cols) -> Poset:
    '''Product of a rows-chain and a cols-chain.'''
    cells = [(r, c) for r in range(rows) for c in range(cols)]
    below = np.array([[a != b and a[0] <= b[0] and a[1] <= b[1] for b in cells] for a in cells], dtype=bool)
    return Poset([f'{r}.{c}' for r, c in cells], below.reshape(len(cells), len(cells)))


def bipartite(n, p=0.5, seed=0) -> Poset:
    '''Height-one poset: the first half below a random set of the second half.'''
    rng = np.random.default_rng(seed)
    low = n // 2
    below = np.zeros((n, n), dtype=bool)
    below[:low, low:] = rng.random((low, n - low)) < p
    return Poset(_labels(n), below)


def random_dag(n, density=0.3, seed=0) -> Poset:
    '''Closure of random forward edges over a random labeling.'''
    rng = np.random.default_rng(seed)
    forward = np.triu(rng.random((n, n)) < density, k=1)
    order = rng.permutation(n)
    return Poset(_labels(n), transitive_closure(forward)[np.ix_(order, order)])


def random_three_plus_one_free(n, seed=0, density=0.5, attempts=1000) -> Poset:
    '''Rejection-sample random_dag until the draw has no (3+1).'''
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        candidate = random_dag(n, density, int(rng.integers(2 ** 32)))
        if is_three_plus_one_free(candidate):
            return candidate
    raise BadParams(f'No (3+1)-free poset drawn in {attempts} attempts. [n={n}, density={density}]')


def generate(model, params, seed=0) -> dict:
    '''PosetDocument for the named model; deterministic in (model, params, seed).'''
    if model not in GENERATE_SCHEMAS:
        raise BadParams(f"Unknown model. [{model}] (choose from {', '.join(MODELS)})")
    validator = Validator(GENERATE_SCHEMAS[model])
    if not validator.validate({k: v for k, v in params.items() if v is not None}):
        raise BadParams(f'Invalid parameters for {model}. [{validator.errors}]')
    args = validator.document
    if model == 'random-order':
        p = random_order(args['n'], args['dims'], seed)
    elif model == 'unit-semiorder':
        p = unit_semiorder(args['n'], seed, args['spread'])
    elif model == 'grid':
        p = grid(args['rows'], args['cols'])
    else:
        p = bipartite(args['n'], args['p'], seed)
    return emit_document(p)
