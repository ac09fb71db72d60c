'''(3+1) and (2+2) patterns, semiorders, and incomparability degrees.'''
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from .core import ElementId, Poset, height, induced, label_key


class Pattern(enum.Enum):
    THREE_PLUS_ONE = '3p1'
    TWO_PLUS_TWO = '2p2'


@dataclass(frozen=True)
class PatternEmbedding:
    pattern: Pattern
    elements: Tuple[ElementId, ElementId, ElementId, ElementId]

    def to_dict(self):
        return {'pattern': self.pattern.value, 'elements': list(self.elements)}


@dataclass(frozen=True)
class IncDegreeProfile:
    degrees: Mapping[ElementId, int]
    max: int
    mean: float

    def to_dict(self):
        return {'degrees': dict(self.degrees), 'max': self.max, 'mean': self.mean}


def _canonical_indices(p):
    return sorted(range(len(p)), key=lambda i: label_key(p.elements[i]))


def _three_plus_one(p):
    lt = p.matrix
    inc = p.incomparable_mask()
    order = _canonical_indices(p)
    for x in order:
        for y in order:
            if not lt[x, y]:
                continue
            for z in order:
                if not lt[y, z]:
                    continue
                free = inc[x] & inc[y] & inc[z]
                for w in order:
                    if free[w]:
                        return (x, y, z, w)
    return None


def _two_plus_two(p):
    lt = p.matrix
    inc = p.incomparable_mask()
    order = _canonical_indices(p)
    for a in order:
        for b in order:
            if not lt[a, b]:
                continue
            free = inc[a] & inc[b]
            for c in order:
                if not free[c]:
                    continue
                for d in order:
                    if lt[c, d] and free[d]:
                        return (a, b, c, d)
    return None


def find_pattern(p: Poset, pattern: Pattern) -> Optional[PatternEmbedding]:
    '''Lexicographically least embedding in role order, or None.'''
    found = _three_plus_one(p) if pattern == Pattern.THREE_PLUS_ONE else _two_plus_two(p)
    if found is None:
        return None
    return PatternEmbedding(pattern, tuple(p.elements[i] for i in found))


def is_three_plus_one_free(p: Poset) -> bool:
    return find_pattern(p, Pattern.THREE_PLUS_ONE) is None


def is_interval_order(p: Poset) -> bool:
    return find_pattern(p, Pattern.TWO_PLUS_TWO) is None


def is_semiorder(p: Poset) -> bool:
    return is_three_plus_one_free(p) and is_interval_order(p)


def inc_degree_profile(p: Poset) -> IncDegreeProfile:
    degrees = p.incomparable_mask().sum(axis=1)
    return IncDegreeProfile(
        {x: int(d) for x, d in zip(p.elements, degrees)},
        int(degrees.max()) if len(p) else 0,
        float(degrees.mean()) if len(p) else 0.0,
    )


def inc_neighborhood_height(p: Poset, x: ElementId) -> int:
    '''Height of the elements incomparable to x; -1 when there are none.'''
    row = p.incomparable_mask()[p.index(x)]
    if not row.any():
        return -1
    return height(induced(p, [p.elements[i] for i in np.flatnonzero(row)]))


def semiorder_from_unit_intervals(reps: Sequence[float]) -> Poset:
    '''Element i lies below j when reps[i] + 1 < reps[j]; a gap of exactly 1 is incomparable.'''
    values = np.asarray(reps, dtype=float).reshape(-1)
    return Poset([str(i) for i in range(len(values))], values[:, None] + 1 < values[None, :])
