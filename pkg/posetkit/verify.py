'''Exhaustive verification of every fast path against the brute-force oracles.'''
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .core import reorder
from .debug import log
from .decomposition import component_parts, inc_components, linear_sum
from .duality import SearchBudget, dilworth, k_witness_search, koenig_cover, max_matching, maximum_chain, \
    mirsky_levels, split_bipartite
from .errors import PosetError
from .oracle import bruteforce_max_antichain, bruteforce_pattern, bruteforce_witness, enumerate_posets
from .recognition import Pattern, find_pattern
from .witness import Method, ak_witness, validate_k_witness, validate_witness


@dataclass
class VerifyResult:
    checked: int = 0
    failures: List[Tuple[int, str, List[str]]] = field(default_factory=list)
    interrupted: bool = False

    @property
    def ok(self):
        return not self.failures and not self.interrupted

    def summary(self):
        text = f'{self.checked} posets checked, {len(self.failures)} failures'
        return text + ' (interrupted)' if self.interrupted else text

    def to_dict(self):
        return {
            'checked': self.checked,
            'failures': [{'index': i, 'poset': p, 'problems': problems} for i, p, problems in self.failures],
            'interrupted': self.interrupted,
        }


def _witnesses(p, problems):
    for method in Method:
        report = validate_witness(p, ak_witness(p, method))
        if not report.ok:
            problems.append(f'{method.value} witness invalid: {report}')
    if bruteforce_witness(p) is None:
        problems.append('brute-force witness search came up empty')


def _duality(p, problems):
    g = split_bipartite(p)
    m = max_matching(g)
    cover = koenig_cover(g, m)
    if len(cover) != len(m) or not all(cover.covers(e) for e in g.edges):
        problems.append('Koenig cover does not certify the matching')
    if any(e[0] in cover.vertices and e[1] in cover.vertices for e in m.edges):
        problems.append('Koenig cover takes both ends of a matching edge')
    chains, antichain = dilworth(p)
    if len(chains) != len(antichain) or len(antichain) != len(bruteforce_max_antichain(p)):
        problems.append(f'Dilworth sizes disagree: {len(chains)} chains, antichain {len(antichain)}')
    levels = mirsky_levels(p)
    chain = maximum_chain(p)
    if len(chain) != len(levels) or any(len(set(chain) & level) != 1 for level in levels):
        problems.append('maximum chain does not meet every Mirsky level once')


def _decomposition(p, problems):
    inc_components(p)
    rebuilt = linear_sum(component_parts(p))
    if reorder(rebuilt, p.elements) != p:
        problems.append('linear sum of Inc components does not rebuild the poset')


def _patterns(p, problems):
    for pattern in Pattern:
        if find_pattern(p, pattern) != bruteforce_pattern(p, pattern):
            problems.append(f'{pattern.value} search disagrees with brute force')


def check_poset(p, k: Optional[int] = None, budget: SearchBudget = SearchBudget()) -> List[str]:
    '''Every disagreement found for one poset; empty when all checks pass.'''
    problems = []
    if not len(p):
        return problems
    for check in (_witnesses, _duality, _decomposition, _patterns):
        try:
            check(p, problems)
        except (PosetError, AssertionError) as e:
            problems.append(f'{check.__name__.strip("_")}: {type(e).__name__}: {e}')
    if k is not None:
        kw = k_witness_search(p, k, budget)
        if kw is None:
            problems.append(f'no {k}-witness found')
        else:
            report = validate_k_witness(p, kw, k)
            if not report.ok:
                problems.append(f'{k}-witness invalid: {report}')
    return problems


def _check_job(job):
    p, k, budget = job
    return check_poset(p, k, budget)


def verify_all(n, k=None, budget=SearchBudget(), jobs=1, allow_seven=False, stop=lambda: False) -> VerifyResult:
    '''Run check_poset over enumerate_posets(n). Results keep enumeration order
    whatever the number of workers; stop() is polled between posets.'''
    result = VerifyResult()
    posets = enumerate_posets(n, allow_seven)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = pool.map(_check_job, ((p, k, budget) for p in posets), chunksize=64)
            for i, (p, problems) in enumerate(zip(enumerate_posets(n, allow_seven), outcomes)):
                if stop():
                    result.interrupted = True
                    pool.shutdown(wait=False, cancel_futures=True)
                    break
                result.checked += 1
                if problems:
                    result.failures.append((i, repr(p), problems))
    else:
        for i, p in enumerate(posets):
            if stop():
                result.interrupted = True
                break
            problems = check_poset(p, k, budget)
            result.checked += 1
            if problems:
                result.failures.append((i, repr(p), problems))
    log(f'verify_all: n={n} k={k} {result.summary()}')
    return result
