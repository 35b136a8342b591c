'''
Exact polynomial fitting of eventually-polynomial length functions in the
alternating binomial basis

    P(n) = c_0 C(n+D, D) - c_1 C(n+D-1, D-1) + ... + (-1)^D c_D,

which is how Hilbert coefficients e^i and irreducibility coefficients f^i are
written. All arithmetic is on Python ints.
'''
import asyncio
import logging
from dataclasses import dataclass, field
from enum import Enum
from math import comb

from SlyAPI import AsyncLazy, AsyncTrans

from .errors import DegreeExceeded, NotStabilized
from .module import ModulePresentation
from .monomial import MonomialIdeal

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 4
DEFAULT_N_MAX = 30

class GrowthKind(Enum):
    HILBERT         = 'hilbert'
    IRREDUCIBILITY  = 'irreducibility'

@dataclass
class GrowthTable:
    kind: GrowthKind
    values: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.values)

@dataclass(frozen=True)
class BinomialPolynomial:
    degree: int
    coefficients: tuple[int, ...]
    stabilization_index: int
    samples: int = 0

    def __call__(self, n: int) -> int:
        D = self.degree
        return sum((-1)**i * c * comb(n + D - i, D - i) for i, c in enumerate(self.coefficients))

    @property
    def leading(self) -> int:
        return self.coefficients[0]

def differences(values: list[int], order: int) -> list[int]:
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values

def _tail_constant(values: list[int], window: int) -> bool:
    tail = values[-window:]
    return len(tail) == window and len(set(tail)) == 1

def tail_degree(values: list[int], window: int) -> int|None:
    '''Least E whose E-th differences are constant over the last `window` of them.'''
    for E in range(len(values) - window - 1):
        if _tail_constant(differences(values, E), window):
            return E
    return None

def _coefficients(values: list[int], D: int, window: int) -> list[int]:
    '''Peel the binomial basis from the top: the D-th difference of P is c_0.'''
    top = differences(values, D)
    if not _tail_constant(top, window):
        E = tail_degree(values, window)
        if E is not None and E > D:
            raise DegreeExceeded(F"Samples grow like degree {E} > {D}", D)
        raise NotStabilized(
            F"Differences of order {D} still moving in the last {window} samples", len(values))
    c = top[-1]
    if D == 0:
        return [c]
    # the rest is -(c_1 C(n+D-1, D-1) - c_2 C(n+D-2, D-2) + ...)
    rest = [-(v - c * comb(n + D, D)) for n, v in enumerate(values)]
    return [c] + _coefficients(rest, D - 1, window)

def fit(table: GrowthTable, D: int, window: int = DEFAULT_WINDOW) -> BinomialPolynomial:
    '''
    Fit a degree-D polynomial to the tail of the table and report the least
    index n_0 from which it reproduces every sample exactly.
    '''
    values = table.values
    if D < 0 or window < 1:
        raise ValueError(F"Invalid degree {D} or window {window}")
    if len(values) < D + window + 2:
        raise NotStabilized(
            F"Need at least {D + window + 2} samples to fit degree {D}, have {len(values)}",
            len(values))
    coefficients = _coefficients(values, D, window)
    polynomial = BinomialPolynomial(D, tuple(coefficients), 0)
    n0 = len(values)
    while n0 > 0 and polynomial(n0 - 1) == values[n0 - 1]:
        n0 -= 1
    if len(values) - n0 < D + window:
        raise NotStabilized(F"Fitted polynomial only matches {len(values) - n0} samples", len(values))
    logger.debug("fitted %s table: D=%d c=%s n0=%d", table.kind.value, D, coefficients, n0)
    return BinomialPolynomial(D, tuple(coefficients), n0, len(values))

def sample(M: ModulePresentation, ideal: MonomialIdeal, kind: GrowthKind, n: int) -> int:
    match kind:
        case GrowthKind.HILBERT:
            return M.hilbert_value(ideal, n)
        case GrowthKind.IRREDUCIBILITY:
            return M.irreducibility_value(ideal, n)

def growth_table(M: ModulePresentation, ideal: MonomialIdeal, kind: GrowthKind, n_max: int) -> GrowthTable:
    return GrowthTable(kind, [sample(M, ideal, kind, n) for n in range(n_max + 1)])

def fit_growth(M: ModulePresentation, ideal: MonomialIdeal, kind: GrowthKind, D: int,
    n_max: int = DEFAULT_N_MAX, window: int = DEFAULT_WINDOW) -> BinomialPolynomial:
    '''
    Sample n = 0..n_max and fit the tail. Only the last `window` differences
    decide, so a plateau early in the table cannot end the fit prematurely.
    '''
    M.require_finite_colength(ideal)
    polynomial = fit(growth_table(M, ideal, kind, n_max), D, window)
    logger.info("%s function of %r stabilized at n0=%d",
        kind.value, M, polynomial.stabilization_index)
    return polynomial

def hilbert_coefficients(M: ModulePresentation, ideal: MonomialIdeal,
    n_max: int = DEFAULT_N_MAX, window: int = DEFAULT_WINDOW) -> BinomialPolynomial:
    '''e_I^0(M), ..., e_I^t(M): fit of ℓ(M/I^{n+1}M) with degree t = dim M.'''
    return fit_growth(M, ideal, GrowthKind.HILBERT, M.dimension, n_max, window)

def irreducibility_coefficients(M: ModulePresentation, ideal: MonomialIdeal,
    n_max: int = DEFAULT_N_MAX, window: int = DEFAULT_WINDOW) -> BinomialPolynomial:
    '''f_I^0(M), ..., f_I^{t-1}(M): fit of ir_M(I^{n+1}M) with degree max(t-1, 0).'''
    return fit_growth(M, ideal, GrowthKind.IRREDUCIBILITY, max(M.dimension - 1, 0), n_max, window)

@dataclass(frozen=True)
class GrowthRow:
    n: int
    hilbert: int
    irreducibility: int
    hilbert_step: int # ℓ(I^n M / I^{n+1} M)

def _sample_pair(M: ModulePresentation, ideal: MonomialIdeal, n: int) -> tuple[int, int]:
    return M.hilbert_value(ideal, n), M.irreducibility_value(ideal, n)

def growth_rows(M: ModulePresentation, ideal: MonomialIdeal, n_max: int = DEFAULT_N_MAX) -> AsyncTrans[GrowthRow]:
    '''Rows n = 0..n_max, sampled off the event loop; await for a list or iterate.'''
    M.require_finite_colength(ideal)
    async def samples():
        previous = 0
        for n in range(n_max + 1):
            h, ir = await asyncio.to_thread(_sample_pair, M, ideal, n)
            yield n, h, ir, h - previous
            previous = h
    return AsyncLazy(samples()).map(lambda row: GrowthRow(*row))
