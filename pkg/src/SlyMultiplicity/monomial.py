'''
Monomials and monomial ideals of a polynomial ring K[x_1, ..., x_s].
The field never appears: everything here is exponent-vector arithmetic.
'''
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable

from sympy.polys.monomials import (
    monomial_divides, monomial_gcd, monomial_lcm, monomial_ldiv, monomial_mul
)
from sympy.polys.orderings import grlex

from .errors import ArityMismatch, NotArtinian, ZeroColon

Exponents = tuple[int, ...]

@dataclass(frozen=True)
class AmbientRing:
    '''The ring P = K[x_1, ..., x_s]; its maximal ideal is (x_1, ..., x_s).'''
    variable_names: tuple[str, ...]

    def __post_init__(self):
        if not self.variable_names:
            raise ValueError('An ambient ring needs at least one variable')
        if any(not name for name in self.variable_names):
            raise ValueError('Variable names must be nonempty')
        if len(set(self.variable_names)) != len(self.variable_names):
            raise ValueError(F"Duplicate variable names: {self.variable_names}")

    @staticmethod
    def of(*names: str) -> 'AmbientRing':
        return AmbientRing(tuple(names))

    @property
    def arity(self) -> int:
        return len(self.variable_names)

    def one(self) -> 'Monomial':
        return Monomial((0,) * self.arity)

    def variable(self, index: int) -> 'Monomial':
        return Monomial(tuple(int(i == index) for i in range(self.arity)))

    def monomial(self, **powers: int) -> 'Monomial':
        '''`ring.monomial(x=2, y=1)` is x^2*y.'''
        unknown = set(powers) - set(self.variable_names)
        if unknown:
            raise ValueError(F"Unknown variables: {sorted(unknown)}")
        return Monomial(tuple(powers.get(name, 0) for name in self.variable_names))

    def ideal(self, *generators: 'Monomial|Exponents') -> 'MonomialIdeal':
        return MonomialIdeal(self, generators)

    def zero_ideal(self) -> 'MonomialIdeal':
        return MonomialIdeal(self, ())

    def unit_ideal(self) -> 'MonomialIdeal':
        return MonomialIdeal(self, (self.one(),))

    def maximal_ideal(self) -> 'MonomialIdeal':
        return MonomialIdeal(self, (self.variable(i) for i in range(self.arity)))

    def format(self, monomial: 'Monomial|Exponents') -> str:
        exponents = _exponents(monomial)
        factors = [
            name if e == 1 else F"{name}^{e}"
            for name, e in zip(self.variable_names, exponents) if e
        ]
        return '*'.join(factors) or '1'

@dataclass(frozen=True, order=False)
class Monomial:
    exponents: Exponents

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(F"Negative exponent in {self.exponents}")

    @property
    def arity(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def divides(self, other: 'Monomial') -> bool:
        _check_arity(self.arity, other.arity)
        return monomial_divides(self.exponents, other.exponents)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        _check_arity(self.arity, other.arity)
        return Monomial(monomial_mul(self.exponents, other.exponents))

    def lcm(self, other: 'Monomial') -> 'Monomial':
        _check_arity(self.arity, other.arity)
        return Monomial(monomial_lcm(self.exponents, other.exponents))

    def gcd(self, other: 'Monomial') -> 'Monomial':
        _check_arity(self.arity, other.arity)
        return Monomial(monomial_gcd(self.exponents, other.exponents))

def _exponents(m: 'Monomial|Exponents') -> Exponents:
    match m:
        case Monomial(exponents=e):
            return e
        case tuple():
            return tuple(int(e) for e in m)
        case _:
            raise TypeError(F"Expected a Monomial or exponent tuple, got {m!r}")

def _check_arity(left: int, right: int):
    if left != right:
        raise ArityMismatch(left, right)

def _minimal(generators: Iterable[Exponents]) -> tuple[Exponents, ...]:
    '''Divisibility-minimal elements in graded-lex order.'''
    kept: list[Exponents] = []
    lower = 0 # kept[:lower] have strictly smaller degree than the current one
    degree = -1
    for g in sorted(set(generators), key=grlex):
        d = sum(g)
        if d != degree:
            lower, degree = len(kept), d
        # distinct monomials of equal degree never divide each other
        if not any(monomial_divides(h, g) for h in kept[:lower]):
            kept.append(g)
    return tuple(kept)

class MonomialIdeal:
    '''
    An ideal of the ambient ring given by its minimal monomial generators.
    No generators is the zero ideal; the single generator 1 is the unit ideal.
    Instances are immutable and hashable; `==` compares canonical generators.
    '''
    __slots__ = ('ambient', 'gens')
    ambient: AmbientRing
    gens: tuple[Exponents, ...]

    def __init__(self, ambient: AmbientRing, generators: 'Iterable[Monomial|Exponents]'):
        gens = [_exponents(g) for g in generators]
        for g in gens:
            _check_arity(ambient.arity, len(g))
            if any(e < 0 for e in g):
                raise ValueError(F"Negative exponent in {g}")
        object.__setattr__(self, 'ambient', ambient)
        object.__setattr__(self, 'gens', _minimal(gens))

    @classmethod
    def _minimal(cls, ambient: AmbientRing, gens: tuple[Exponents, ...]) -> 'MonomialIdeal':
        ideal = cls.__new__(cls)
        object.__setattr__(ideal, 'ambient', ambient)
        object.__setattr__(ideal, 'gens', gens)
        return ideal

    def __setattr__(self, name: str, value: object):
        raise AttributeError('MonomialIdeal is immutable')

    def __reduce__(self):
        return (MonomialIdeal, (self.ambient, self.gens))

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial(g) for g in self.gens]

    def __len__(self) -> int:
        return len(self.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ambient == other.ambient and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.ambient, self.gens))

    def __repr__(self) -> str:
        return F"MonomialIdeal{self}"

    def __str__(self) -> str:
        if self.is_zero():
            return '(0)'
        return '(' + ', '.join(self.ambient.format(g) for g in self.gens) + ')'

    def _same_ring(self, other: 'MonomialIdeal'):
        if self.ambient != other.ambient:
            raise ArityMismatch(self.ambient.arity, other.ambient.arity)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains(self, u: 'Monomial|Exponents') -> bool:
        e = _exponents(u)
        _check_arity(self.ambient.arity, len(e))
        return any(monomial_divides(g, e) for g in self.gens)

    def __contains__(self, u: 'Monomial|Exponents') -> bool:
        return self.contains(u)

    def issubset(self, other: 'MonomialIdeal') -> bool:
        self._same_ring(other)
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other: 'MonomialIdeal') -> bool:
        return self.issubset(other)

    def __add__(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        self._same_ring(other)
        return MonomialIdeal._minimal(self.ambient, _minimal(self.gens + other.gens))

    def __mul__(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        self._same_ring(other)
        products = (monomial_mul(g, h) for g in self.gens for h in other.gens)
        return MonomialIdeal._minimal(self.ambient, _minimal(products))

    def __pow__(self, n: int) -> 'MonomialIdeal':
        return self.power(n)

    def power(self, n: int, modulo: 'MonomialIdeal|None' = None) -> 'MonomialIdeal':
        '''
        I^n, or I^n + J when `modulo` is J. The second form reduces by J after
        every multiplication, which keeps the generator sets small.
        '''
        if n < 0:
            raise ValueError(F"Negative power {n}")
        if modulo is None:
            return _power(self, n)
        self._same_ring(modulo)
        return _power_modulo(self, n, modulo)

    def __and__(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        return self.intersect(other)

    def intersect(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        self._same_ring(other)
        lcms = (monomial_lcm(g, h) for g in self.gens for h in other.gens)
        return MonomialIdeal._minimal(self.ambient, _minimal(lcms))

    def colon_monomial(self, u: 'Monomial|Exponents') -> 'MonomialIdeal':
        e = _exponents(u)
        _check_arity(self.ambient.arity, len(e))
        quotients = (monomial_ldiv(g, monomial_gcd(g, e)) for g in self.gens)
        return MonomialIdeal._minimal(self.ambient, _minimal(quotients))

    def colon(self, other: 'MonomialIdeal') -> 'MonomialIdeal':
        '''(I : J) = {r : rJ ⊆ I}, the intersection of the colons by J's generators.'''
        self._same_ring(other)
        if other.is_zero():
            raise ZeroColon(F"Colon by the zero ideal is undefined here: {self} : (0)")
        if other.issubset(self):
            return self.ambient.unit_ideal()
        return reduce(MonomialIdeal.intersect, (self.colon_monomial(u) for u in other.gens))

    def radical(self) -> 'MonomialIdeal':
        clamped = (tuple(min(e, 1) for e in g) for g in self.gens)
        return MonomialIdeal._minimal(self.ambient, _minimal(clamped))

    def pure_power_exponents(self) -> list[int|None]:
        '''Least a_i with x_i^a_i in the ideal, None where no pure power exists.'''
        bounds: list[int|None] = [None] * self.ambient.arity
        for g in self.gens:
            support = [i for i, e in enumerate(g) if e]
            if len(support) == 1:
                i = support[0]
                if bounds[i] is None or g[i] < bounds[i]:
                    bounds[i] = g[i]
        return bounds

    def missing_pure_power(self) -> str|None:
        for name, bound in zip(self.ambient.variable_names, self.pure_power_exponents()):
            if bound is None:
                return name
        return None

    def is_m_primary(self) -> bool:
        return self.is_proper() and self.missing_pure_power() is None

    def box_bounds(self) -> list[int]:
        '''Box containing every standard monomial; requires an 𝔪-primary ideal.'''
        if self.is_unit():
            return [0] * self.ambient.arity
        missing = self.missing_pure_power()
        if missing is not None:
            raise NotArtinian(
                F"{self} is not 𝔪-primary: no pure power of {missing}", missing)
        return [b for b in self.pure_power_exponents() if b is not None]

def minimalize(ambient: AmbientRing, generators: 'Iterable[Monomial|Exponents]') -> MonomialIdeal:
    return MonomialIdeal(ambient, generators)

@lru_cache(maxsize=512)
def _power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n == 0:
        return ideal.ambient.unit_ideal()
    if n == 1:
        return ideal
    half = _power(ideal, n // 2)
    square = half * half
    return square * ideal if n % 2 else square

@lru_cache(maxsize=2048)
def _power_modulo(ideal: MonomialIdeal, n: int, modulo: MonomialIdeal) -> MonomialIdeal:
    if n == 0:
        return ideal.ambient.unit_ideal()
    if n == 1:
        return ideal + modulo
    return _power_modulo(ideal, n - 1, modulo) * ideal + modulo
