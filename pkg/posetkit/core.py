'''Finite poset data model.

A poset stores its strict order as a closed boolean matrix. Construction
closes the given pairs once; every query after that is a lookup.
'''
from __future__ import annotations

import enum
import heapq
import re
from collections import deque
from typing import FrozenSet, Iterable, Sequence, Tuple

import numpy as np

from .debug import log
from .errors import CycleError, DuplicateLabelError, EmptyPoset, UnknownElement

ElementId = str
Chain = Tuple[ElementId, ...]
Antichain = FrozenSet[ElementId]

_DIGITS = re.compile(r'(\d+)')


def label_key(label):
    ''' Canonical sort key for labels, numeric runs compared as numbers; ties ("01", "1") fall back to the raw text '''
    label = str(label)
    return tuple((0, int(_), '') if _.isdigit() else (1, 0, _) for _ in _DIGITS.split(label) if _), label


def canonical(labels):
    return sorted(labels, key=label_key)


class Relation(enum.Enum):
    LT = '<'
    GT = '>'
    EQ = '='
    INC = '||'

    def flip(self):
        return {Relation.LT: Relation.GT, Relation.GT: Relation.LT}.get(self, self)


def compose(matrix):
    '''Boolean product of a relation with itself.'''
    m = matrix.astype(np.float32)
    return (m @ m) > 0


def transitive_closure(matrix):
    closed = np.array(matrix, dtype=bool)
    while True:
        grown = closed | compose(closed)
        if np.array_equal(grown, closed):
            return closed
        closed = grown


class Poset:
    __slots__ = ('_elements', '_index', '_lt', '_heights')

    def __init__(self, elements, matrix):
        '''Wrap an already closed strict order. Use from_relations for raw pairs.'''
        self._elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self._elements)}
        if len(self._index) != len(self._elements):
            seen = set()
            for x in self._elements:
                if x in seen:
                    raise DuplicateLabelError(x)
                seen.add(x)
        lt = np.array(matrix, dtype=bool).reshape(len(self._elements), len(self._elements))
        lt.flags.writeable = False
        self._lt = lt
        self._heights = None

    @property
    def elements(self):
        return self._elements

    @property
    def matrix(self):
        return self._lt

    def index(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(x) from None

    def indices(self, xs):
        return [self.index(_) for _ in xs]

    def __contains__(self, x):
        return x in self._index

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self._elements == other._elements and np.array_equal(self._lt, other._lt)

    def __hash__(self):
        return hash((self._elements, self._lt.tobytes()))

    def __repr__(self):
        pairs = ', '.join(f'{x}<{y}' for x, y in self.relation())
        return f"Poset([{', '.join(self._elements)}], {{{pairs}}})"

    def lt(self, x, y):
        return bool(self._lt[self.index(x), self.index(y)])

    def relation(self):
        rows, cols = np.nonzero(self._lt)
        return [(self._elements[i], self._elements[j]) for i, j in zip(rows, cols)]

    def incomparable_mask(self):
        comparable = self._lt | self._lt.T
        mask = ~comparable
        np.fill_diagonal(mask, False)
        return mask


def _find_cycle(elements, edges):
    succ = {x: [] for x in elements}
    for x, y in edges:
        if x == y:
            return (x,)
        succ[x].append(y)
    for start in elements:
        parent = {start: None}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in succ[node]:
                if nxt == start:
                    cycle = [node]
                    while parent[cycle[-1]] is not None:
                        cycle.append(parent[cycle[-1]])
                    return tuple(reversed(cycle))
                if nxt not in parent:
                    parent[nxt] = node
                    queue.append(nxt)
    return ()


def from_relations(elements: Sequence[ElementId], pairs: Iterable[Tuple[ElementId, ElementId]]) -> Poset:
    elements = tuple(elements)
    index = {}
    for i, x in enumerate(elements):
        if x in index:
            raise DuplicateLabelError(x)
        index[x] = i
    pairs = list(pairs)
    matrix = np.zeros((len(elements), len(elements)), dtype=bool)
    for x, y in pairs:
        for _ in (x, y):
            if _ not in index:
                raise UnknownElement(_)
        matrix[index[x], index[y]] = True
    closed = transitive_closure(matrix)
    if closed.diagonal().any():
        raise CycleError(_find_cycle(elements, pairs))
    log(f'from_relations: {len(elements)} elements, {len(pairs)} pairs, {int(closed.sum())} after closure')
    return Poset(elements, closed)


def empty_poset():
    return Poset((), np.zeros((0, 0), dtype=bool))


def compare(p: Poset, x: ElementId, y: ElementId) -> Relation:
    i, j = p.index(x), p.index(y)
    if i == j:
        return Relation.EQ
    if p.matrix[i, j]:
        return Relation.LT
    if p.matrix[j, i]:
        return Relation.GT
    return Relation.INC


def down_set(p: Poset, xs: Iterable[ElementId]) -> FrozenSet[ElementId]:
    cols = p.indices(xs)
    if not cols:
        return frozenset()
    below = p.matrix[:, cols].any(axis=1)
    below[cols] = True
    return frozenset(p.elements[i] for i in np.flatnonzero(below))


def up_set(p: Poset, xs: Iterable[ElementId]) -> FrozenSet[ElementId]:
    rows = p.indices(xs)
    if not rows:
        return frozenset()
    above = p.matrix[rows, :].any(axis=0)
    above[rows] = True
    return frozenset(p.elements[i] for i in np.flatnonzero(above))


def dual(p: Poset) -> Poset:
    return Poset(p.elements, p.matrix.T)


def induced(p: Poset, subset: Iterable[ElementId]) -> Poset:
    keep = set(subset)
    for x in keep:
        p.index(x)
    rows = [i for i, x in enumerate(p.elements) if x in keep]
    return Poset([p.elements[i] for i in rows], p.matrix[np.ix_(rows, rows)])


def hasse(p: Poset) -> FrozenSet[Tuple[ElementId, ElementId]]:
    covers = p.matrix & ~compose(p.matrix)
    rows, cols = np.nonzero(covers)
    return frozenset((p.elements[i], p.elements[j]) for i, j in zip(rows, cols))


def linear_extension(p: Poset) -> Chain:
    '''Topological order taking the least label among the available minima.'''
    indegree = p.matrix.sum(axis=0).astype(int)
    heap = [(label_key(p.elements[i]), i) for i in range(len(p)) if indegree[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(p.elements[i])
        for j in np.flatnonzero(p.matrix[i]):
            indegree[j] -= 1
            if indegree[j] == 0:
                heapq.heappush(heap, (label_key(p.elements[j]), j))
    return tuple(order)


def _heights(p: Poset):
    if p._heights is None:
        heights = np.zeros(len(p), dtype=int)
        for x in linear_extension(p):
            j = p.index(x)
            below = np.flatnonzero(p.matrix[:, j])
            if len(below):
                heights[j] = heights[below].max() + 1
        p._heights = heights
    return p._heights


def depths(p: Poset):
    '''Edge count of a longest chain starting at each element, by index.'''
    return _heights(dual(p))


def heights(p: Poset):
    return {x: int(h) for x, h in zip(p.elements, _heights(p))}


def element_height(p: Poset, x: ElementId) -> int:
    return int(_heights(p)[p.index(x)])


def height(p: Poset) -> int:
    if not len(p):
        raise EmptyPoset('height')
    return int(_heights(p).max())


def is_chain(p: Poset, members: Sequence[ElementId]) -> bool:
    idx = p.indices(members)
    return all(p.matrix[a, b] for a, b in zip(idx, idx[1:]))


def is_antichain(p: Poset, members: Iterable[ElementId]) -> bool:
    idx = p.indices(members)
    return not p.matrix[np.ix_(idx, idx)].any()


def reorder(p: Poset, elements: Sequence[ElementId]) -> Poset:
    '''The same poset listed in another element order.'''
    if sorted(elements, key=label_key) != sorted(p.elements, key=label_key):
        raise UnknownElement(next(iter(set(elements) ^ set(p.elements)), '?'))
    idx = p.indices(elements)
    return Poset(elements, p.matrix[np.ix_(idx, idx)])
