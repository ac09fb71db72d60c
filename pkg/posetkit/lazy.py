'''Countable posets given by an enumerator and a comparison oracle.

They are only ever looked at through finite prefixes. The omega+1 split
check classifies prefix elements against a certified ascending chain and
never builds the prefix's full relation.
'''
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable, FrozenSet, Tuple

import networkx as nx
import numpy as np

from .core import ElementId, Poset, Relation, compose
from .debug import log
from .decomposition import GraphView
from .errors import (BadParams, CertificateViolation, DuplicateLabelError, OracleInconsistency, UnknownElement,
                     UnknownFamily)

TOP = 'top'
STRAY = 's'


@dataclass(frozen=True)
class LazyPoset:
    name: str
    enumerate: Callable[[int], ElementId]
    oracle: Callable[[ElementId, ElementId], Relation]


@dataclass(frozen=True)
class OmegaCertificate:
    '''Enumeration indices of an ascending chain c_0 < c_1 < ..., plus an element above all of it.'''
    ascending: Callable[[int], int]
    top: ElementId


@dataclass(frozen=True)
class SplitReport:
    prefix_size: int
    initial: Tuple[ElementId, ...]
    final: Tuple[ElementId, ...]
    crossing_inc_edges: int
    domination_violations: int
    horizon: ElementId

    def to_dict(self):
        return {
            'prefix': self.prefix_size,
            'initial_size': len(self.initial),
            'final': list(self.final),
            'crossing_inc_edges': self.crossing_inc_edges,
            'domination_violations': self.domination_violations,
            'horizon': self.horizon,
        }


@dataclass(frozen=True)
class BfsLayers:
    layers: Tuple[FrozenSet[ElementId], ...]
    unreachable: FrozenSet[ElementId]

    def to_dict(self):
        return {'layers': [sorted(_) for _ in self.layers], 'unreachable': sorted(self.unreachable)}


def prefix(lp: LazyPoset, n: int, check: bool = True) -> Poset:
    '''The poset on the first n enumerated elements.

    With check, the oracle table is verified to be a strict order on the
    prefix (O(n^3)); the first offending pair or triple is reported.
    '''
    if n < 0:
        raise BadParams(f'Prefix size must not be negative. [{n}]')
    labels = [lp.enumerate(i) for i in range(n)]
    seen = set()
    for x in labels:
        if x in seen:
            raise DuplicateLabelError(x)
        seen.add(x)
    lt = np.zeros((n, n), dtype=bool)
    for i, x in enumerate(labels):
        for j, y in enumerate(labels):
            if i == j and not check:
                continue
            relation = lp.oracle(x, y)
            lt[i, j] = relation == Relation.LT
            if not check:
                continue
            if (i == j) != (relation == Relation.EQ):
                raise OracleInconsistency('equality', (x, y) if i != j else (x,))
            if j < i and relation.flip() != lp.oracle(y, x):
                raise OracleInconsistency('asymmetry', (x, y))
    if check:
        broken = compose(lt) & ~lt
        if broken.any():
            i, k = (int(_) for _ in np.argwhere(broken)[0])
            j = int(np.flatnonzero(lt[i] & lt[:, k])[0])
            raise OracleInconsistency('transitivity', (labels[i], labels[j], labels[k]))
    log(f'prefix: {lp.name} n={n}, {int(lt.sum())} pairs')
    return Poset(labels, lt)


def _chain_walk(lp, cert, n, lookahead):
    '''Chain elements inside the prefix, and the first `lookahead` ones beyond it.'''
    inside = []
    beyond = []
    last = -1
    i = 0
    while len(beyond) < lookahead:
        index = cert.ascending(i)
        if index <= last:
            raise CertificateViolation('chain indices must increase', (str(last), str(index)))
        label = lp.enumerate(index)
        if label == cert.top:
            raise CertificateViolation('top lies on the chain', (label,))
        (beyond if index >= n else inside).append(label)
        last = index
        i += 1
    return inside, beyond


def verify_omega_split(lp: LazyPoset, cert: OmegaCertificate, n: int, lookahead: int = 2) -> SplitReport:
    '''Split a prefix into the down-set of the certified chain and the rest.

    The chain is followed `lookahead` elements past the prefix; the last of
    them is the horizon, and x belongs to the down-set iff x lies below it.
    Ladder-top with odd n needs a lookahead of 2. When Inc is locally finite
    both counts come out 0.
    '''
    if n < 0 or lookahead < 1:
        raise BadParams(f'Prefix size must not be negative and lookahead must be positive. [{n}, {lookahead}]')
    labels = [lp.enumerate(i) for i in range(n)]
    inside, beyond = _chain_walk(lp, cert, n, lookahead)
    horizon = beyond[-1]
    chain = inside + beyond
    for x, y in zip(chain, chain[1:]):
        if lp.oracle(x, y) != Relation.LT:
            raise CertificateViolation('chain is not ascending', (x, y))
    if cert.top in set(labels):
        for x in chain:
            if lp.oracle(x, cert.top) != Relation.LT:
                raise CertificateViolation('chain element not below top', (x, cert.top))
    initial = []
    final = []
    for x in labels:
        if lp.oracle(x, horizon) == Relation.LT:
            initial.append(x)
        else:
            final.append(x)
    crossing = 0
    violations = 0
    for x in initial:
        for y in final:
            relation = lp.oracle(x, y)
            if relation == Relation.INC:
                crossing += 1
            if relation != Relation.LT:
                violations += 1
    log(f'verify_omega_split: {lp.name} n={n}, |I|={len(initial)}, |F|={len(final)}, '
        f'crossing={crossing}, violations={violations}')
    return SplitReport(n, tuple(initial), tuple(final), crossing, violations, horizon)


def bfs_layers(g: GraphView, v: ElementId) -> BfsLayers:
    if v not in g.vertices:
        raise UnknownElement(v)
    layers = tuple(frozenset(_) for _ in nx.bfs_layers(g.to_networkx(), [v]))
    reached = frozenset().union(*layers)
    return BfsLayers(layers, frozenset(g.vertices) - reached)


def dual_lazy(lp: LazyPoset) -> LazyPoset:
    return LazyPoset(f'dual({lp.name})', lp.enumerate, lambda x, y: lp.oracle(x, y).flip())


class Family(enum.Enum):
    LADDER = 'ladder'
    LADDER_PLUS_TOP = 'ladder-top'
    OMEGA_PLUS_ONE = 'omega1'
    Z_CHAIN = 'z'
    OMEGA_PLUS_ONE_STRAY = 'omega1-stray'

    @classmethod
    def lookup(cls, name):
        if isinstance(name, cls):
            return name
        for family in cls:
            if name in (family.value, family.name):
                return family
        raise UnknownFamily(name)


def _compare_numbers(a, b):
    if a == b:
        return Relation.EQ
    return Relation.LT if a < b else Relation.GT


_LADDER_LABEL = re.compile(r'x(\d+)$')
_INT_LABEL = re.compile(r'-?\d+$')


def _rung(label):
    match = _LADDER_LABEL.match(str(label))
    if not match:
        raise UnknownElement(label)
    return int(match.group(1))


def _integer(label, signed=False):
    if not _INT_LABEL.match(str(label)) or (not signed and str(label).startswith('-')):
        raise UnknownElement(label)
    return int(label)


def _ladder_oracle(x, y):
    i, j = _rung(x), _rung(y)
    if i == j:
        return Relation.EQ
    if j >= i + 2:
        return Relation.LT
    if i >= j + 2:
        return Relation.GT
    return Relation.INC


def _with_top(oracle):
    def compare_with_top(x, y):
        if x == TOP or y == TOP:
            if x == y:
                return Relation.EQ
            return Relation.GT if x == TOP else Relation.LT
        return oracle(x, y)
    return compare_with_top


def _stray_oracle(x, y):
    if x == STRAY or y == STRAY:
        if x == y:
            return Relation.EQ
        return Relation.INC
    return _compare_numbers(_integer(x), _integer(y))


def _z_index(i):
    return -((i + 1) // 2) if i % 2 else i // 2


def builtin_family(name) -> LazyPoset:
    family = Family.lookup(name)
    if family == Family.LADDER:
        return LazyPoset(family.value, lambda i: f'x{i}', _ladder_oracle)
    if family == Family.LADDER_PLUS_TOP:
        return LazyPoset(family.value, lambda i: TOP if i == 0 else f'x{i - 1}', _with_top(_ladder_oracle))
    if family == Family.OMEGA_PLUS_ONE:
        return LazyPoset(family.value, lambda i: TOP if i == 0 else str(i - 1),
                         _with_top(lambda x, y: _compare_numbers(_integer(x), _integer(y))))
    if family == Family.Z_CHAIN:
        return LazyPoset(family.value, lambda i: str(_z_index(i)),
                         lambda x, y: _compare_numbers(_integer(x, signed=True), _integer(y, signed=True)))
    return LazyPoset(family.value, lambda i: TOP if i == 0 else STRAY if i == 1 else str(i - 2),
                     _with_top(_stray_oracle))


def builtin_certificate(name) -> OmegaCertificate:
    family = Family.lookup(name)
    if family == Family.LADDER_PLUS_TOP:
        return OmegaCertificate(lambda i: 2 * i + 1, TOP)
    if family == Family.OMEGA_PLUS_ONE:
        return OmegaCertificate(lambda i: i + 1, TOP)
    if family == Family.OMEGA_PLUS_ONE_STRAY:
        return OmegaCertificate(lambda i: i + 2, TOP)
    raise UnknownFamily(f'{family.value} (no omega+1 certificate)')
