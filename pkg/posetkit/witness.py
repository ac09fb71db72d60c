'''Witnesses (a chain meeting every part of an antichain partition) and their validation.'''
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List

from .core import Poset, canonical, induced, is_antichain, is_chain
from .debug import log
from .decomposition import Witness, combine_witnesses, inc_components
from .duality import KWitness, maximum_chain, mirsky_levels
from .errors import EmptyPoset, UnknownElement


class Method(enum.Enum):
    DIRECT = 'direct'
    DECOMPOSED = 'decomposed'


class ViolationKind(enum.Enum):
    NOT_A_CHAIN = 'not a chain'
    NOT_AN_ANTICHAIN = 'not an antichain'
    NOT_A_PARTITION = 'not a partition'
    PART_MISSES_CHAIN = 'part disjoint from chain'
    PART_MEETS_CHAIN_TWICE = 'part meets chain more than once'
    WRONG_CHAIN_COUNT = 'part meets wrong number of chains'
    TOO_MANY_CHAINS = 'more than k chains'
    DUPLICATE_CHAIN = 'chain listed more than once'


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    subject: tuple

    def __str__(self):
        return f"{self.kind.value}: {', '.join(map(str, self.subject))}"


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def kinds(self):
        return [_.kind for _ in self.violations]

    def add(self, kind, subject):
        self.violations.append(Violation(kind, tuple(subject)))

    def to_list(self):
        return [str(_) for _ in self.violations]

    def __str__(self):
        return '; '.join(self.to_list()) or 'valid'


def ak_witness(p: Poset, method: Method = Method.DIRECT) -> Witness:
    if not len(p):
        raise EmptyPoset('ak_witness')
    if method == Method.DIRECT:
        return Witness(maximum_chain(p), mirsky_levels(p))
    parts = [induced(p, component) for component in inc_components(p)]
    log(f'ak_witness: decomposed into {len(parts)} parts')
    return combine_witnesses([(part, ak_witness(part, Method.DIRECT)) for part in parts])


def _check_labels(p, labels):
    for x in labels:
        if x not in p:
            raise UnknownElement(x)


def _check_partition(p, partition, report):
    seen = {}
    for part in partition:
        members = canonical(part)
        if not is_antichain(p, members):
            report.add(ViolationKind.NOT_AN_ANTICHAIN, members)
        for x in members:
            seen[x] = seen.get(x, 0) + 1
    missing = [x for x in p.elements if x not in seen]
    repeated = [x for x, count in seen.items() if count > 1]
    if missing or repeated or any(not part for part in partition):
        report.add(ViolationKind.NOT_A_PARTITION, canonical(missing + repeated))


def validate_witness(p: Poset, w: Witness) -> ValidationReport:
    '''Every violation found, not just the first.'''
    _check_labels(p, list(w.chain) + [x for part in w.partition for x in part])
    report = ValidationReport()
    if not is_chain(p, w.chain):
        report.add(ViolationKind.NOT_A_CHAIN, w.chain)
    _check_partition(p, w.partition, report)
    chain = set(w.chain)
    for part in w.partition:
        hits = len(chain & set(part))
        if hits == 0:
            report.add(ViolationKind.PART_MISSES_CHAIN, canonical(part))
        elif hits > 1:
            report.add(ViolationKind.PART_MEETS_CHAIN_TWICE, canonical(part))
    return report


def validate_k_witness(p: Poset, kw: KWitness, k: int) -> ValidationReport:
    _check_labels(p, [x for chain in kw.chains for x in chain] + [x for part in kw.partition for x in part])
    report = ValidationReport()
    if len(kw.chains) > k:
        report.add(ViolationKind.TOO_MANY_CHAINS, [len(kw.chains)])
    for chain in kw.chains:
        if not is_chain(p, chain):
            report.add(ViolationKind.NOT_A_CHAIN, chain)
    seen = set()
    for chain in kw.chains:
        if frozenset(chain) in seen:
            report.add(ViolationKind.DUPLICATE_CHAIN, chain)
        seen.add(frozenset(chain))
    _check_partition(p, kw.partition, report)
    chains = [set(_) for _ in seen]
    for part in kw.partition:
        hits = [len(chain & set(part)) for chain in chains]
        if any(_ > 1 for _ in hits):
            report.add(ViolationKind.PART_MEETS_CHAIN_TWICE, canonical(part))
        if sum(1 for _ in hits if _) != min(len(part), k):
            report.add(ViolationKind.WRONG_CHAIN_COUNT, canonical(part))
    return report
