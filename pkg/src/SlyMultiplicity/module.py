'''
Finitely generated modules M = P/J_1 ⊕ ... ⊕ P/J_c over the ambient ring.
Every submodule met here (I^n M, colons, socles) splits over the summands,
so module quantities are sums or intersections of per-component ideals.
'''
import logging
from functools import cached_property, reduce
from typing import Iterable

from .errors import NotArtinian, NotFoundWithinBound, UnitComponent, ZeroColon
from .monomial import AmbientRing, MonomialIdeal
from .quotient import (
    krull_dimension, length_artinian, socle_length_artinian, socle_length_general
)

logger = logging.getLogger(__name__)

class ModulePresentation:
    ambient: AmbientRing
    components: tuple[MonomialIdeal, ...]

    def __init__(self, ambient: AmbientRing, components: Iterable[MonomialIdeal]):
        self.ambient = ambient
        self.components = tuple(components)
        if not self.components:
            raise ValueError('A module needs at least one component')
        for i, J in enumerate(self.components):
            if J.ambient != ambient:
                raise ValueError(F"Component {i} lives in a different ring")
            if J.is_unit():
                raise UnitComponent(F"Component {i} is P/(1) = 0")

    @staticmethod
    def cyclic(ideal: MonomialIdeal) -> 'ModulePresentation':
        return ModulePresentation(ideal.ambient, [ideal])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModulePresentation):
            return NotImplemented
        return self.ambient == other.ambient and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.ambient, self.components))

    def __repr__(self) -> str:
        return ' ⊕ '.join(F"P/{J}" for J in self.components)

    def __reduce__(self):
        return (ModulePresentation, (self.ambient, self.components))

    def direct_sum(self, other: 'ModulePresentation') -> 'ModulePresentation':
        return ModulePresentation(self.ambient, self.components + other.components)

    @cached_property
    def dimension(self) -> int:
        '''t = dim M, the largest dimension among the summands.'''
        return max(krull_dimension(J) for J in self.components)

    @cached_property
    def maximal_ideal(self) -> MonomialIdeal:
        return self.ambient.maximal_ideal()

    def require_finite_colength(self, ideal: MonomialIdeal):
        '''Raise unless M/IM has finite length, i.e. I + J_i is 𝔪-primary for every i.'''
        for i, J in enumerate(self.components):
            combined = ideal + J
            if not combined.is_m_primary():
                missing = combined.missing_pure_power()
                raise NotArtinian(
                    F"M/{ideal}M has infinite length: component {i} P/{J} "
                    F"has no pure power of {missing} modulo {ideal}", missing)

    def component_at(self, ideal: MonomialIdeal, n: int, i: int) -> MonomialIdeal:
        '''The ideal I^n + J_i, whose quotient by J_i is the i-th summand of I^n M.'''
        if not 0 <= i < len(self.components):
            raise IndexError(F"Component index {i} out of range")
        return ideal.power(n, modulo=self.components[i])

    def levels(self, ideal: MonomialIdeal, n: int) -> list[MonomialIdeal]:
        return [self.component_at(ideal, n, i) for i in range(len(self.components))]

    def hilbert_value(self, ideal: MonomialIdeal, n: int) -> int:
        '''ℓ(M/I^{n+1}M).'''
        self.require_finite_colength(ideal)
        value = sum(length_artinian(A) for A in self.levels(ideal, n + 1))
        logger.debug("H(%d) = %d for %r", n, value, self)
        return value

    def irreducibility_value(self, ideal: MonomialIdeal, n: int) -> int:
        '''ir_M(I^{n+1}M) = ℓ((I^{n+1}M :_M 𝔪)/I^{n+1}M).'''
        self.require_finite_colength(ideal)
        value = sum(socle_length_artinian(A) for A in self.levels(ideal, n + 1))
        logger.debug("IR(%d) = %d for %r", n, value, self)
        return value

    def module_socle_length(self) -> int:
        '''ℓ((0) :_M 𝔪).'''
        return sum(socle_length_general(J) for J in self.components)

    def module_length(self) -> int:
        '''ℓ(M); finite only when every component is 𝔪-primary.'''
        self.require_finite_colength(self.ambient.zero_ideal())
        return sum(length_artinian(J) for J in self.components)

    def length_mod(self, ideal: MonomialIdeal) -> int:
        '''ℓ(M/QM).'''
        self.require_finite_colength(ideal)
        return sum(length_artinian(ideal + J) for J in self.components)

    def minimal_generator_count(self) -> int:
        '''μ(M) = ℓ(M/𝔪M); every J_i lies in 𝔪, so each summand needs one generator.'''
        return len(self.components)

    def colon_ring_ideal(self, ideal: MonomialIdeal, n: int) -> MonomialIdeal:
        '''I^{n+1}M :_R I^n M = {r : r I^n M ⊆ I^{n+1} M}.'''
        self.require_finite_colength(ideal)
        level = ideal.power(n)
        return reduce(MonomialIdeal.intersect, (
            A.colon(level) for A in self.levels(ideal, n + 1)))

    def criterion_holds(self, ideal: MonomialIdeal, n: int) -> bool:
        '''
        Whether I^{n+1}M :_R I^n M = 𝔪, decided on generators:
        𝔪 I^n M ⊆ I^{n+1} M, and I^n M ⊄ I^{n+1} M.
        '''
        self.require_finite_colength(ideal)
        variables = [self.ambient.variable(i).exponents for i in range(self.ambient.arity)]
        escapes = False
        for lower, upper in zip(self.levels(ideal, n), self.levels(ideal, n + 1)):
            for g in lower.gens:
                if not upper.contains(g):
                    escapes = True
                if not all(upper.contains(tuple(a + b for a, b in zip(g, x))) for x in variables):
                    return False
        return escapes

    def level_defect(self, ideal: MonomialIdeal, n: int) -> int:
        '''ℓ(I^n M / [(I^{n+1}M :_M 𝔪) ∩ I^n M]), the slack in the length chain.'''
        self.require_finite_colength(ideal)
        m = self.maximal_ideal
        total = 0
        for lower, upper in zip(self.levels(ideal, n), self.levels(ideal, n + 1)):
            total += length_artinian(upper.colon(m) & lower) - length_artinian(lower)
        return total

    def socle_meets_level(self, ideal: MonomialIdeal, n: int) -> bool:
        '''Whether ((0) :_M 𝔪) ∩ I^n M is nonzero.'''
        m = self.maximal_ideal
        for J, lower in zip(self.components, self.levels(ideal, n)):
            socle = J.colon(m)
            if any(not J.contains(g) for g in (socle & lower).gens):
                return True
        return False

    def artin_rees_identity_holds(self,
        ideal: MonomialIdeal, J: MonomialIdeal, k: int, n: int) -> bool:
        '''I^{n+k}M :_M J = I^n(I^k M :_M J) + (0) :_M J, compared per component.'''
        if J.is_zero():
            raise ZeroColon('Artin-Rees identity needs a nonzero J')
        if k < 0 or n < 1:
            raise ValueError(F"Need k >= 0 and n >= 1, got k={k}, n={n}")
        In = ideal.power(n)
        for i, Ji in enumerate(self.components):
            lhs = self.component_at(ideal, n + k, i).colon(J)
            rhs = In * self.component_at(ideal, k, i).colon(J) + Ji.colon(J)
            if lhs != rhs:
                logger.debug("Artin-Rees k=%d fails at n=%d on component %d: %s != %s",
                    k, n, i, lhs, rhs)
                return False
        return True

    def find_artin_rees_k(self,
        ideal: MonomialIdeal, J: MonomialIdeal, n_max: int = 15, k_max: int = 12) -> int:
        '''Least k <= k_max for which the identity holds for 1 <= n <= n_max.'''
        for k in range(k_max + 1):
            if all(self.artin_rees_identity_holds(ideal, J, k, n) for n in range(1, n_max + 1)):
                logger.info("Artin-Rees exponent k=%d for %r", k, self)
                return k
        raise NotFoundWithinBound(k_max)
