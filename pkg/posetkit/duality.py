'''Chain and antichain duality.

Mirsky levels and longest chains, the split bipartite graph of a poset with
its maximum matching and Koenig cover, Dilworth decompositions and an
exhaustive search for k-chain witnesses.
'''
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, NamedTuple, Optional, Tuple

import numpy as np

from .core import Antichain, Chain, ElementId, Poset, _heights, canonical, depths, label_key
from .debug import log
from .errors import BadParams, BudgetExceeded, EmptyPoset, InvalidMatching, NotMaximumMatching

AntichainPartition = Tuple[Antichain, ...]

LEFT = '-'
RIGHT = '+'


class SplitVertex(NamedTuple):
    side: str
    label: ElementId

    def __str__(self):
        return f'{self.label}{self.side}'


@dataclass(frozen=True)
class SplitBipartite:
    left: Tuple[SplitVertex, ...]
    right: Tuple[SplitVertex, ...]
    edges: Tuple[Tuple[SplitVertex, SplitVertex], ...]

    def neighbours(self):
        adjacency = {v: [] for v in self.left + self.right}
        for x, y in self.edges:
            adjacency[x].append(y)
            adjacency[y].append(x)
        return adjacency


@dataclass(frozen=True)
class Matching:
    edges: FrozenSet[Tuple[SplitVertex, SplitVertex]]

    def __len__(self):
        return len(self.edges)

    def mate(self):
        pairs = {}
        for x, y in self.edges:
            pairs[x] = y
            pairs[y] = x
        return pairs


@dataclass(frozen=True)
class VertexCover:
    vertices: FrozenSet[SplitVertex]

    def __len__(self):
        return len(self.vertices)

    def covers(self, edge):
        return edge[0] in self.vertices or edge[1] in self.vertices


@dataclass(frozen=True)
class KWitness:
    chains: Tuple[Chain, ...]
    partition: AntichainPartition

    @classmethod
    def from_witness(cls, witness):
        return cls((tuple(witness.chain),), tuple(witness.partition))

    def to_dict(self):
        return {
            'chains': [list(_) for _ in self.chains],
            'partition': [canonical(_) for _ in self.partition],
        }


@dataclass(frozen=True)
class SearchBudget:
    max_elements: int = 6
    max_k: int = 3
    time_ms: Optional[int] = 60000

    @classmethod
    def from_config(cls, config):
        return cls(config.max_elements, config.max_k, config.time_ms)


def mirsky_levels(p: Poset) -> AntichainPartition:
    if not len(p):
        raise EmptyPoset('mirsky_levels')
    h = _heights(p)
    return tuple(frozenset(p.elements[i] for i in np.flatnonzero(h == level)) for level in range(h.max() + 1))


def maximum_chain(p: Poset) -> Chain:
    '''Lexicographically least among the longest chains.'''
    if not len(p):
        raise EmptyPoset('maximum_chain')
    h = _heights(p)
    d = depths(p)
    top = h.max()
    on_longest = (h + d) == top
    candidates = [i for i in np.flatnonzero(on_longest & (h == 0))]
    chain = []
    for level in range(top + 1):
        best = min(candidates, key=lambda i: label_key(p.elements[i]))
        chain.append(best)
        candidates = np.flatnonzero(p.matrix[best] & on_longest & (h == level + 1))
    return tuple(p.elements[i] for i in chain)


def split_bipartite(p: Poset) -> SplitBipartite:
    left = tuple(SplitVertex(LEFT, x) for x in p.elements)
    right = tuple(SplitVertex(RIGHT, x) for x in p.elements)
    rows, cols = np.nonzero(p.matrix)
    edges = tuple((left[i], right[j]) for i, j in zip(rows, cols))
    return SplitBipartite(left, right, edges)


def max_matching(g: SplitBipartite) -> Matching:
    '''Augmenting paths, scanning left vertices and their edges in graph order.'''
    adjacency = {v: [] for v in g.left}
    for x, y in g.edges:
        adjacency[x].append(y)
    mate_of_right: Dict[SplitVertex, SplitVertex] = {}

    def augment(x, seen):
        for y in adjacency[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in mate_of_right or augment(mate_of_right[y], seen):
                mate_of_right[y] = x
                return True
        return False

    for x in g.left:
        augment(x, set())
    log(f'max_matching: {len(mate_of_right)} edges of {len(g.edges)}')
    return Matching(frozenset((x, y) for y, x in mate_of_right.items()))


def _check_matching(g, m):
    edges = set(g.edges)
    used = set()
    for edge in m.edges:
        if edge not in edges:
            raise InvalidMatching(edge, 'edge is not in the graph')
        if edge[0] in used or edge[1] in used:
            raise InvalidMatching(edge, 'edges share an endpoint')
        used.update(edge)


def _augmenting_path(g, m):
    mate = m.mate()
    adjacency = g.neighbours()
    parent = {}
    queue = [x for x in g.left if x not in mate]
    for x in queue:
        parent[x] = None
    while queue:
        x = queue.pop(0)
        for y in adjacency[x]:
            if y in parent:
                continue
            parent[y] = x
            if y not in mate:
                path = [y]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            parent[mate[y]] = y
            queue.append(mate[y])
    return ()


def koenig_cover(g: SplitBipartite, m: Matching) -> VertexCover:
    '''Cover with one endpoint of every matching edge.

    Alternating reachability runs from the unmatched right copies: a reached
    right vertex goes out of the cover, its matched left partner goes in.
    '''
    _check_matching(g, m)
    path = _augmenting_path(g, m)
    if path:
        raise NotMaximumMatching(path)
    mate = m.mate()
    adjacency = g.neighbours()
    reached = set(y for y in g.right if y not in mate)
    queue = list(reached)
    while queue:
        y = queue.pop(0)
        for x in adjacency[y]:
            if x in reached or mate.get(y) == x:
                continue
            reached.add(x)
            partner = mate[x]
            if partner not in reached:
                reached.add(partner)
                queue.append(partner)
    cover = frozenset([y for y in g.right if y not in reached] + [x for x in g.left if x in reached])
    log(f'koenig_cover: {len(cover)} vertices for matching of {len(m)}')
    return VertexCover(cover)


def dilworth(p: Poset) -> Tuple[Tuple[Chain, ...], Antichain]:
    if not len(p):
        raise EmptyPoset('dilworth')
    g = split_bipartite(p)
    m = max_matching(g)
    cover = koenig_cover(g, m)
    successor = {x.label: y.label for x, y in m.edges}
    has_predecessor = set(successor.values())
    chains = []
    for x in canonical(_ for _ in p.elements if _ not in has_predecessor):
        chain = [x]
        while chain[-1] in successor:
            chain.append(successor[chain[-1]])
        chains.append(tuple(chain))
    antichain = frozenset(x for x in p.elements
                          if SplitVertex(LEFT, x) not in cover.vertices and SplitVertex(RIGHT, x) not in cover.vertices)
    assert len(chains) == len(antichain), 'Koenig cover does not certify the chain partition'
    return tuple(chains), antichain


def width(p: Poset) -> int:
    if not len(p):
        raise EmptyPoset('width')
    return len(dilworth(p)[1])


class _Clock:
    def __init__(self, budget):
        self.limit = budget.time_ms
        self.start = time.monotonic()

    def check(self):
        if self.limit is not None:
            elapsed = (time.monotonic() - self.start) * 1000
            if elapsed > self.limit:
                raise BudgetExceeded('time_ms', int(elapsed))


def _antichain_partitions(order, comparable):
    '''Antichain partitions as block bitmasks, in restricted-growth-string order.'''
    blocks = []

    def place(position):
        if position == len(order):
            yield tuple(blocks)
            return
        bit = 1 << order[position]
        for b, block in enumerate(blocks):
            if not comparable[order[position]] & block:
                blocks[b] = block | bit
                yield from place(position + 1)
                blocks[b] = block
        blocks.append(bit)
        yield from place(position + 1)
        blocks.pop()

    yield from place(0)


def _chains(p, order, comparable):
    '''Nonempty chains as (bitmask, members), longest first then by members.'''
    found = []
    h = _heights(p)
    for size in range(1, len(p) + 1):
        for subset in itertools.combinations(order, size):
            mask = sum(1 << i for i in subset)
            if all((comparable[i] | (1 << i)) & mask == mask for i in subset):
                found.append((mask, tuple(p.elements[i] for i in sorted(subset, key=lambda i: h[i]))))
    found.sort(key=lambda c: (-len(c[1]), [label_key(_) for _ in c[1]]))
    return found


def _fit_chains(blocks, chains, k, disjoint, clock):
    needs = [min(bin(block).count('1'), k) for block in blocks]

    def extend(chosen, counts, start, used, slots):
        if all(c == need for c, need in zip(counts, needs)):
            return list(chosen)
        if not slots:
            return None
        if any(need - c > slots for c, need in zip(counts, needs)):
            return None
        clock.check()
        for position in range(start, len(chains)):
            mask, members = chains[position]
            if disjoint and mask & used:
                continue
            grown = [c + (1 if mask & block else 0) for c, block in zip(counts, blocks)]
            if any(c > need for c, need in zip(grown, needs)):
                continue
            chosen.append(members)
            found = extend(chosen, grown, position + 1, used | mask, slots - 1)
            if found is not None:
                return found
            chosen.pop()
        return None

    return extend([], [0] * len(blocks), 0, 0, k)


def k_witness_search(p: Poset, k: int, budget: SearchBudget = SearchBudget()) -> Optional[KWitness]:
    '''Exhaustive search for k chains and an antichain partition where each
    part A meets exactly min(|A|, k) of the chains.

    Partitions are scanned in restricted-growth order over the canonical
    element order. For each, pairwise disjoint chain tuples are tried before
    overlapping ones. Returns None when no witness exists.
    '''
    if k < 1:
        raise BadParams(f'k must be positive. [{k}]')
    if len(p) > budget.max_elements:
        raise BudgetExceeded('max_elements', len(p))
    if k > budget.max_k:
        raise BudgetExceeded('max_k', k)
    if not len(p):
        return KWitness((), ())
    clock = _Clock(budget)
    n = len(p)
    order = sorted(range(n), key=lambda i: label_key(p.elements[i]))
    comparable = [sum(1 << j for j in np.flatnonzero(p.matrix[i] | p.matrix[:, i])) for i in range(n)]
    chains = _chains(p, order, comparable)
    for disjoint in (True, False):
        for blocks in _antichain_partitions(order, comparable):
            clock.check()
            fitted = _fit_chains(blocks, chains, k, disjoint, clock)
            if fitted is not None:
                partition = tuple(frozenset(p.elements[i] for i in range(n) if block >> i & 1) for block in blocks)
                log(f'k_witness_search: k={k} found with {len(fitted)} chains, disjoint={disjoint}')
                return KWitness(tuple(fitted), partition)
    log(f'k_witness_search: k={k} no witness for {p!r}')
    return None
