'''Brute-force reference implementations.

Nothing here calls the fast paths in duality, decomposition, witness or
recognition; they are checked against these.
'''
from __future__ import annotations

import itertools
import string
from typing import Iterator, Optional

import numpy as np

from .core import Poset, label_key
from .decomposition import Witness
from .errors import BadParams, BudgetExceeded
from .recognition import Pattern, PatternEmbedding

POSET_COUNTS = (1, 1, 3, 19, 219, 4231, 130023, 6129859)


def canonical_labels(n):
    return list(string.ascii_lowercase[:n])


def _downsets(n, below):
    '''Down-closed subsets of {0..n-1} as bitmasks, given strict down-set masks.'''
    for mask in range(1 << n):
        if all(not (mask >> i & 1) or below[i] & mask == below[i] for i in range(n)):
            yield mask


def _rows_to_poset(n, below):
    matrix = np.zeros((n, n), dtype=bool)
    for j in range(n):
        for i in range(n):
            if below[j] >> i & 1:
                matrix[i, j] = True
    return Poset(canonical_labels(n), matrix)


def enumerate_posets(n: int, allow_seven: bool = False) -> Iterator[Poset]:
    '''Every labeled strict partial order on n canonical labels, once each.

    Elements are added one at a time; the new element picks a down-set D and
    an up-set U of the poset so far with every member of D below every
    member of U, which keeps the extension transitive.
    '''
    if n < 0:
        raise BadParams(f'Poset size must not be negative. [{n}]')
    if n > 7 or (n == 7 and not allow_seven):
        raise BudgetExceeded('enumeration n', n)

    def extend(size, below, above):
        if size == n:
            yield _rows_to_poset(n, below)
            return
        downs = list(_downsets(size, below))
        ups = list(_downsets(size, above))
        for down in downs:
            for up in ups:
                if down & up:
                    continue
                if any(down >> i & 1 and above[i] & up != up for i in range(size)):
                    continue
                new_below = list(below)
                new_above = list(above)
                for i in range(size):
                    if up >> i & 1:
                        new_below[i] |= 1 << size
                    if down >> i & 1:
                        new_above[i] |= 1 << size
                yield from extend(size + 1, new_below + [down], new_above + [up])

    yield from extend(0, [], [])


def enumerate_posets_by_filtering(n: int) -> Iterator[Poset]:
    '''Second enumerator: every relation on n labels, kept when it is a strict order.'''
    if n < 0:
        raise BadParams(f'Poset size must not be negative. [{n}]')
    if n > 5:
        raise BudgetExceeded('filtering n', n)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if bits >> b & 1:
                rows[i] |= 1 << j
        if any(rows[i] >> j & 1 and rows[j] >> i & 1 for i, j in pairs):
            continue
        if any(rows[i] >> j & 1 and rows[j] & ~rows[i] for i, j in pairs):
            continue
        below = [sum(1 << i for i in range(n) if rows[i] >> j & 1) for j in range(n)]
        yield _rows_to_poset(n, below)


def _comparable(p, x, y):
    return p.lt(x, y) or p.lt(y, x)


def bruteforce_max_antichain(p: Poset) -> frozenset:
    if len(p) > 20:
        raise BudgetExceeded('max_antichain elements', len(p))
    ordered = sorted(p.elements, key=label_key)
    for size in range(len(ordered), 0, -1):
        for subset in itertools.combinations(ordered, size):
            if not any(_comparable(p, x, y) for x, y in itertools.combinations(subset, 2)):
                return frozenset(subset)
    return frozenset()


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def bruteforce_witness(p: Poset) -> Optional[Witness]:
    if len(p) > 6:
        raise BudgetExceeded('witness elements', len(p))
    ordered = sorted(p.elements, key=label_key)
    chains = []
    for size in range(1, len(ordered) + 1):
        for subset in itertools.combinations(ordered, size):
            if all(_comparable(p, x, y) for x, y in itertools.combinations(subset, 2)):
                chains.append(sorted(subset, key=lambda x: sum(p.lt(y, x) for y in subset)))
    partitions = [blocks for blocks in _set_partitions(ordered)
                  if all(not _comparable(p, x, y) for block in blocks for x, y in itertools.combinations(block, 2))]
    for chain in chains:
        for blocks in partitions:
            if all(set(block) & set(chain) for block in blocks):
                return Witness(tuple(chain), tuple(frozenset(_) for _ in blocks))
    return None


def _embeds(p, pattern, w):
    if pattern == Pattern.THREE_PLUS_ONE:
        x, y, z, free = w
        return p.lt(x, y) and p.lt(y, z) and not any(_comparable(p, free, _) for _ in (x, y, z))
    a, b, c, d = w
    return p.lt(a, b) and p.lt(c, d) and not any(_comparable(p, u, v) for u in (a, b) for v in (c, d))


def bruteforce_pattern(p: Poset, pattern: Pattern) -> Optional[PatternEmbedding]:
    if len(p) > 10:
        raise BudgetExceeded('pattern elements', len(p))
    for w in itertools.permutations(sorted(p.elements, key=label_key), 4):
        if _embeds(p, pattern, w):
            return PatternEmbedding(pattern, w)
    return None
