'''
Lengths, socles and dimension of cyclic quotients P/A for a monomial ideal A.
A K-basis of P/A is the set of standard monomials, so every length is a count.
'''
import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from sympy.polys.monomials import monomial_divides
from sympy.polys.orderings import grlex

from .errors import UnitComponent
from .monomial import Exponents, Monomial, MonomialIdeal

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class StandardMonomialSet:
    ideal: MonomialIdeal
    monomials: tuple[Monomial, ...]
    box_bounds: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

@dataclass(frozen=True)
class Staircase:
    '''Standard monomials of an Artinian quotient and the corners among them.'''
    standard: tuple[Exponents, ...]
    corners: tuple[Exponents, ...]

def standard_monomials(ideal: MonomialIdeal) -> StandardMonomialSet:
    '''
    Enumerate the box [0, b_1) x ... x [0, b_s) of least pure powers and keep the
    points outside the ideal. This is the reference algorithm for every length.
    '''
    bounds = ideal.box_bounds()
    points = (u for u in product(*(range(b) for b in bounds)) if not ideal.contains(u))
    return StandardMonomialSet(
        ideal,
        tuple(Monomial(u) for u in sorted(points, key=grlex)),
        tuple(bounds))

def _walk(ideal: MonomialIdeal) -> Iterator[tuple[Exponents, bool]]:
    '''
    Walk the standard monomials upward from 1, yielding each with whether it is
    a corner. They form an order ideal, so the walk never leaves the staircase
    and stops at its boundary.
    '''
    ideal.box_bounds() # raises for non-Artinian quotients
    if ideal.is_unit():
        return
    s = ideal.ambient.arity
    # u is standard and v = u*x_i: a generator dividing v must agree with v at i
    buckets: list[defaultdict[int, list[Exponents]]] = [defaultdict(list) for _ in range(s)]
    for g in ideal.gens:
        for i, e in enumerate(g):
            if e:
                buckets[i][e].append(g)

    start = (0,) * s
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        closed = True
        for i in range(s):
            v = u[:i] + (u[i] + 1,) + u[i+1:]
            if any(monomial_divides(g, v) for g in buckets[i].get(v[i], ())):
                continue
            closed = False
            if v not in seen:
                seen.add(v)
                stack.append(v)
        yield u, closed

def staircase(ideal: MonomialIdeal) -> Staircase:
    standard: list[Exponents] = []
    corners: list[Exponents] = []
    for u, corner in _walk(ideal):
        standard.append(u)
        if corner:
            corners.append(u)
    return Staircase(tuple(sorted(standard, key=grlex)), tuple(sorted(corners, key=grlex)))

@lru_cache(maxsize=1024)
def staircase_counts(ideal: MonomialIdeal) -> tuple[int, int]:
    '''(number of standard monomials, number of corners); only the counts are kept.'''
    length = corners = 0
    for _, corner in _walk(ideal):
        length += 1
        corners += corner
    return length, corners

def length_artinian(ideal: MonomialIdeal) -> int:
    '''ℓ(P/A) = dim_K P/A for 𝔪-primary A; 0 for the unit ideal.'''
    return staircase_counts(ideal)[0]

def socle_length_artinian(ideal: MonomialIdeal) -> int:
    '''ℓ((A:𝔪)/A) counted as the corners of the staircase.'''
    return staircase_counts(ideal)[1]

def socle_length_by_colon(ideal: MonomialIdeal) -> int:
    '''ℓ((A:𝔪)/A) counted as the standard monomials of A that lie in A:𝔪.'''
    if ideal.is_unit():
        return 0
    socle = ideal.colon(ideal.ambient.maximal_ideal())
    return sum(1 for u in staircase(ideal).standard if socle.contains(u))

def socle_length_general(ideal: MonomialIdeal) -> int:
    '''
    ℓ((J:𝔪)/J) for any proper J. The monomials of (J:𝔪) outside J are
    collected by a breadth-first search from the generators of J:𝔪; the set
    is finite, so the search ends.
    '''
    if ideal.is_unit():
        raise UnitComponent('The socle of the zero module is not defined here')
    colon = ideal.colon(ideal.ambient.maximal_ideal())
    s = ideal.ambient.arity
    frontier = deque(g for g in colon.gens if not ideal.contains(g))
    found = set(frontier)
    while frontier:
        u = frontier.popleft()
        for i in range(s):
            v = u[:i] + (u[i] + 1,) + u[i+1:]
            if v not in found and not ideal.contains(v):
                found.add(v)
                frontier.append(v)
    logger.debug("socle of P/%s has length %d", ideal, len(found))
    return len(found)

def krull_dimension(ideal: MonomialIdeal) -> int:
    '''
    dim P/J = s - (least number of variables meeting every generator of rad J),
    found by trying covers of increasing size.
    '''
    if ideal.is_unit():
        raise UnitComponent('The zero module has no dimension here')
    s = ideal.ambient.arity
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.radical().gens]
    for size in range(s + 1):
        for cover in combinations(range(s), size):
            chosen = set(cover)
            if all(support & chosen for support in supports):
                return s - size
    raise AssertionError('the full variable set always covers a proper ideal')
