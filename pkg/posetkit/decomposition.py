'''Comparability and incomparability graphs, the component chain of Inc(P),
lexicographic and linear sums, and witness combination over a linear sum.'''
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import FrozenSet, Mapping, Sequence, Tuple

import networkx as nx
import numpy as np

from .core import ElementId, Poset, canonical, from_relations, induced, label_key
from .debug import log
from .duality import AntichainPartition
from .errors import BadParams, InvalidPartWitness, LabelCollision


class GraphKind(enum.Enum):
    COMP = 'comp'
    INC = 'inc'


@dataclass(frozen=True)
class GraphView:
    vertices: Tuple[ElementId, ...]
    edges: Tuple[Tuple[ElementId, ElementId], ...]
    kind: GraphKind

    @property
    def edge_set(self):
        return frozenset(frozenset(_) for _ in self.edges)

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class ComponentChain:
    components: Tuple[FrozenSet[ElementId], ...]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def to_list(self):
        return [canonical(_) for _ in self.components]


@dataclass(frozen=True)
class Witness:
    chain: Tuple[ElementId, ...]
    partition: AntichainPartition

    def to_dict(self):
        return {'chain': list(self.chain), 'partition': [canonical(_) for _ in self.partition]}


def graph_view(p: Poset, kind: GraphKind = GraphKind.INC) -> GraphView:
    if kind == GraphKind.INC:
        mask = p.incomparable_mask()
    else:
        mask = p.matrix | p.matrix.T
    rows, cols = np.nonzero(np.triu(mask, k=1))
    return GraphView(p.elements, tuple((p.elements[i], p.elements[j]) for i, j in zip(rows, cols)), kind)


def _precedes(p, a, b):
    x, y = min(a, key=label_key), min(b, key=label_key)
    return -1 if p.lt(x, y) else 1


def inc_components(p: Poset) -> ComponentChain:
    components = [frozenset(_) for _ in nx.connected_components(graph_view(p, GraphKind.INC).to_networkx())]
    components.sort(key=functools.cmp_to_key(functools.partial(_precedes, p)))
    for i, lower in enumerate(components):
        rows = p.indices(lower)
        for upper in components[i + 1:]:
            cols = p.indices(upper)
            assert p.matrix[np.ix_(rows, cols)].all(), \
                f'Inc components are not ordered: {canonical(lower)} / {canonical(upper)}'
    log(f'inc_components: {len(components)} components over {len(p)} elements')
    return ComponentChain(tuple(components))


def is_inc_connected(p: Poset) -> bool:
    return len(inc_components(p)) <= 1


def components_are_intervals(p: Poset, order: Sequence[ElementId]) -> bool:
    '''Each Inc component is a contiguous block of the given linear extension.'''
    position = {x: i for i, x in enumerate(order)}
    for component in inc_components(p):
        spots = sorted(position[_] for _ in component)
        if spots[-1] - spots[0] + 1 != len(spots):
            return False
    return True


def lex_sum(index: Poset, parts: Mapping[ElementId, Poset]) -> Poset:
    '''Lexicographic sum of the parts over the index poset.

    A single index element is accepted as the trivial sum.
    '''
    if not len(index):
        raise BadParams('Lexicographic sum needs a nonempty index.')
    if set(parts) != set(index.elements):
        raise BadParams(f"Parts must be keyed by the index elements. [{', '.join(canonical(map(str, parts)))}]")
    seen = {}
    for key in index.elements:
        for x in parts[key].elements:
            if x in seen:
                raise LabelCollision([x])
            seen[x] = key
    elements = [x for key in index.elements for x in parts[key].elements]
    offsets = np.cumsum([0] + [len(parts[key]) for key in index.elements])
    matrix = np.zeros((len(elements), len(elements)), dtype=bool)
    for i, key in enumerate(index.elements):
        block = slice(offsets[i], offsets[i + 1])
        matrix[block, block] = parts[key].matrix
        for j, other in enumerate(index.elements):
            if index.matrix[i, j]:
                matrix[block, slice(offsets[j], offsets[j + 1])] = True
    return Poset(elements, matrix)


def linear_sum(parts: Sequence[Poset]) -> Poset:
    keys = [f'#{i}' for i in range(len(parts))]
    index = from_relations(keys, zip(keys, keys[1:]))
    return lex_sum(index, dict(zip(keys, parts)))


def component_parts(p: Poset):
    return [induced(p, component) for component in inc_components(p)]


def combine_witnesses(parts: Sequence[Tuple[Poset, Witness]]) -> Witness:
    '''Chain concatenation and partition union over the parts of a linear sum.'''
    from .witness import validate_witness

    chain = []
    partition = []
    for i, (part, witness) in enumerate(parts):
        report = validate_witness(part, witness)
        if not report.ok:
            raise InvalidPartWitness(i, report)
        chain.extend(witness.chain)
        partition.extend(witness.partition)
    return Witness(tuple(chain), tuple(partition))
