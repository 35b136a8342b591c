'''
Verdicts relating the Hilbert multiplicity e^0 and the irreducible
multiplicity f^0: the main inequality with its equality criterion, the 𝔪-adic
corollary, the Ulrich characterization, the Artin-Rees length chain, the two
worked examples, and the random instance generator used to fuzz all of them.
'''
import logging
import random
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Any, Callable, Iterator

from .errors import ExampleMismatch, MultiplicityError, NotArtinian, NotParameterIdeal
from .fitting import DEFAULT_N_MAX, DEFAULT_WINDOW, hilbert_coefficients, irreducibility_coefficients
from .module import ModulePresentation
from .monomial import AmbientRing, Exponents, MonomialIdeal

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class MultiplicityReport:
    t: int
    e0: int
    f0: int
    socle0: int
    bound: int
    inequality_holds: bool
    # least n from which I^{n+1}M :_R I^n M = 𝔪 holds through n_max
    equality_criterion_n: int|None
    criterion_first_hit: int|None
    equality_holds: bool
    n_max_used: int
    n0_hilbert: int
    n0_irred: int
    hilbert_coefficients: tuple[int, ...] = ()
    irreducibility_coefficients: tuple[int, ...] = ()

    @property
    def verified(self) -> bool:
        return self.inequality_holds and (self.equality_criterion_n is None or self.equality_holds)

@dataclass(frozen=True)
class UlrichReport:
    t: int
    Q: MonomialIdeal
    is_parameter_ideal: bool
    fQ0: int
    colength: int
    eQ0: int
    # None when t == 1: the characterization does not apply there
    certified_ulrich: bool|None
    cohen_macaulay: bool
    mu: int
    e_m0: int
    ulrich: bool

    @property
    def verdict(self) -> str:
        if self.certified_ulrich is None:
            return 'excluded: t = 1'
        return 'certified Ulrich' if self.certified_ulrich else 'not certified by this Q'

def _criterion_scan(M: ModulePresentation, I: MonomialIdeal, n_max: int) -> tuple[int|None, int|None]:
    '''(first n with the criterion, least n from which it persists through n_max)'''
    hits = [M.criterion_holds(I, n) for n in range(1, n_max + 1)]
    first = next((n for n, hit in enumerate(hits, 1) if hit), None)
    persistent = None
    for n in range(n_max, 0, -1):
        if not hits[n - 1]:
            break
        persistent = n
    return first, persistent

def multiplicity_report(M: ModulePresentation, I: MonomialIdeal,
    n_max: int = DEFAULT_N_MAX, window: int = DEFAULT_WINDOW) -> MultiplicityReport:
    M.require_finite_colength(I)
    t = M.dimension
    hilbert = hilbert_coefficients(M, I, n_max, window)
    irreducibility = irreducibility_coefficients(M, I, n_max, window)
    socle0 = M.module_socle_length()
    e0, f0 = hilbert.leading, irreducibility.leading
    bound = e0 + socle0 if t == 1 else e0
    first, persistent = _criterion_scan(M, I, n_max)
    report = MultiplicityReport(
        t=t, e0=e0, f0=f0, socle0=socle0, bound=bound,
        inequality_holds=f0 <= bound,
        equality_criterion_n=persistent,
        criterion_first_hit=first,
        equality_holds=f0 == bound,
        n_max_used=n_max,
        n0_hilbert=hilbert.stabilization_index,
        n0_irred=irreducibility.stabilization_index,
        hilbert_coefficients=hilbert.coefficients,
        irreducibility_coefficients=irreducibility.coefficients)
    logger.info("t=%d e0=%d f0=%d socle0=%d criterion_n=%s", t, e0, f0, socle0, persistent)
    return report

def verify_theorem(M: ModulePresentation, I: MonomialIdeal,
    n_max: int = DEFAULT_N_MAX, window: int = DEFAULT_WINDOW) -> bool:
    return multiplicity_report(M, I, n_max, window).verified

def verify_t0_closed_form(M: ModulePresentation, report: MultiplicityReport) -> bool:
    '''For t = 0: f^0 = ℓ((0):_M 𝔪) and e^0 = ℓ(M), computed directly.'''
    return report.f0 == M.module_socle_length() and report.e0 == M.module_length()

class MadicBranch(Enum):
    EQUALITY    = 'm-adic equality'
    CLOSED_FORM = 't = 0 closed form'

@dataclass(frozen=True)
class MadicVerdict:
    holds: bool
    branch: MadicBranch
    report: MultiplicityReport

    def __bool__(self) -> bool:
        return self.holds

def verify_madic_corollary(M: ModulePresentation,
    n_max: int = DEFAULT_N_MAX, window: int = DEFAULT_WINDOW) -> MadicVerdict:
    '''
    With I = 𝔪: f^0 = e^0 (t != 1) or f^0 = e^0 + ℓ((0):_M 𝔪) (t = 1), and
    𝔪 = 𝔪^{n+1}M :_R 𝔪^n M for every 1 <= n <= n_max. When t = 0 the power
    𝔪^n M vanishes, the criterion cannot hold for large n, and the check
    falls back to the closed form. The verdict is truthy when it holds.
    '''
    m = M.maximal_ideal
    report = multiplicity_report(M, m, n_max, window)
    if report.t == 0:
        logger.info("t = 0: checking the closed form instead of the 𝔪-adic equality")
        return MadicVerdict(verify_t0_closed_form(M, report), MadicBranch.CLOSED_FORM, report)
    holds = report.equality_holds and all(M.criterion_holds(m, n) for n in range(1, n_max + 1))
    return MadicVerdict(holds, MadicBranch.EQUALITY, report)

def is_parameter_ideal(M: ModulePresentation, Q: MonomialIdeal) -> bool:
    if len(Q) != M.dimension:
        return False
    try:
        M.require_finite_colength(Q)
    except NotArtinian:
        return False
    return True

def ulrich_check(M: ModulePresentation, Q: MonomialIdeal,
    n_max: int = DEFAULT_N_MAX, window: int = DEFAULT_WINDOW) -> UlrichReport:
    t = M.dimension
    if not is_parameter_ideal(M, Q):
        raise NotParameterIdeal(
            F"{Q} is not a parameter ideal of M: need {t} generators and ℓ(M/QM) < ∞")
    colength = M.length_mod(Q)
    fQ0 = irreducibility_coefficients(M, Q, n_max, window).leading
    eQ0 = hilbert_coefficients(M, Q, n_max, window).leading
    e_m0 = hilbert_coefficients(M, M.maximal_ideal, n_max, window).leading
    mu = M.minimal_generator_count()
    cohen_macaulay = eQ0 == colength
    return UlrichReport(
        t=t, Q=Q, is_parameter_ideal=True,
        fQ0=fQ0, colength=colength, eQ0=eQ0,
        certified_ulrich=None if t == 1 else fQ0 == colength,
        cohen_macaulay=cohen_macaulay,
        mu=mu, e_m0=e_m0,
        ulrich=cohen_macaulay and mu == e_m0)

def _hilbert_steps(M: ModulePresentation, I: MonomialIdeal, n_hi: int) -> list[int]:
    '''ℓ(I^n M / I^{n+1} M) for n = 0..n_hi.'''
    H = [M.hilbert_value(I, n) for n in range(n_hi + 1)]
    return [h - (H[n - 1] if n else 0) for n, h in enumerate(H)]

def eq1_inequality_check(M: ModulePresentation, I: MonomialIdeal, n_lo: int, n_hi: int,
    k_max: int = 12, n_search: int = 15, k: int|None = None) -> bool:
    '''
    ir_M(I^{n+1}M) <= ℓ(I^n M/I^{n+1}M) + ℓ((0):_M 𝔪) for every n in
    [max(n_lo, k), n_hi], where k is the Artin-Rees exponent for J = 𝔪,
    searched for unless given.
    '''
    if k is None:
        k = M.find_artin_rees_k(I, M.maximal_ideal, n_search, k_max)
    steps = _hilbert_steps(M, I, n_hi)
    socle0 = M.module_socle_length()
    for n in range(max(n_lo, k), n_hi + 1):
        ir = M.irreducibility_value(I, n)
        if ir > steps[n] + socle0:
            logger.warning("length chain fails at n=%d: %d > %d + %d", n, ir, steps[n], socle0)
            return False
    return True

def eq2_identity_check(M: ModulePresentation, I: MonomialIdeal, n_hi: int,
    k_max: int = 12, n_search: int = 15) -> bool:
    '''
    Beyond the Artin-Rees exponent and once the socle has left I^n M, the
    chain is exact: ir_M(I^{n+1}M) = ℓ(I^n M/I^{n+1}M) + ℓ((0):_M 𝔪) - defect(n).
    '''
    k = M.find_artin_rees_k(I, M.maximal_ideal, n_search, k_max)
    separated = next((n for n in range(n_hi + 1) if not M.socle_meets_level(I, n)), None)
    if separated is None:
        return True
    steps = _hilbert_steps(M, I, n_hi)
    socle0 = M.module_socle_length()
    return all(
        M.irreducibility_value(I, n) == steps[n] + socle0 - M.level_defect(I, n)
        for n in range(max(k, separated), n_hi + 1))

@dataclass(frozen=True)
class ExampleCheck:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def __str__(self) -> str:
        mark = 'PASS' if self.passed else 'FAIL'
        return F"[{mark}] {self.name}: expected {self.expected}, got {self.actual}"

def staircase_example(d: int, l: int) -> tuple[ModulePresentation, MonomialIdeal]:
    '''
    R = K[x_1..x_d, y_1..y_l] / [(x)(y) + (y)^2] as a module over itself, with I = 𝔪.
    '''
    if d < 1 or l < 0:
        raise ValueError(F"Need d >= 1 and l >= 0, got d={d}, l={l}")
    ring = AmbientRing(tuple(F"x{i}" for i in range(1, d + 1)) + tuple(F"y{j}" for j in range(1, l + 1)))
    xs = [ring.variable(i) for i in range(d)]
    ys = [ring.variable(d + j) for j in range(l)]
    relations = [x * y for x in xs for y in ys] + [
        ys[i] * ys[j] for i in range(l) for j in range(i, l)]
    return ModulePresentation.cyclic(ring.ideal(*relations)), ring.maximal_ideal()

def staircase_example_checks(d: int, l: int, n_max: int = 10) -> list[ExampleCheck]:
    '''
    ℓ(R/𝔪^{n+1}) = C(n+d, d) + l and ℓ((𝔪^{n+1}:𝔪)/𝔪^{n+1}) = C(n+d-1, d-1) + l
    for n >= 1 (at n = 0 the quotient is R/𝔪 = K), e^0 = 1 and f^0 = 1 + l
    exactly when d = 1.
    '''
    M, m = staircase_example(d, l)
    checks = [
        ExampleCheck('dimension', d, M.dimension),
        ExampleCheck('H(0)', 1, M.hilbert_value(m, 0)),
        ExampleCheck('IR(0)', 1, M.irreducibility_value(m, 0)),
    ]
    for n in range(1, n_max + 1):
        checks.append(ExampleCheck(F"H({n})", comb(n + d, d) + l, M.hilbert_value(m, n)))
        checks.append(ExampleCheck(F"IR({n})", comb(n + d - 1, d - 1) + l, M.irreducibility_value(m, n)))
    checks.append(ExampleCheck('e0', 1, hilbert_coefficients(M, m, n_max).leading))
    checks.append(ExampleCheck('f0', 1 + l if d == 1 else 1, irreducibility_coefficients(M, m, n_max).leading))
    return checks

def direct_sum_example() -> tuple[ModulePresentation, MonomialIdeal]:
    '''M = K[x] ⊕ K over R = K[x], with I = (x).'''
    ring = AmbientRing.of('x')
    x = ring.maximal_ideal()
    return ModulePresentation(ring, [ring.zero_ideal(), x]), x

def direct_sum_example_checks(n_max: int = 20) -> list[ExampleCheck]:
    M, x = direct_sum_example()
    checks = [
        ExampleCheck('dimension', 1, M.dimension),
        ExampleCheck('ℓ(M/xM)', 2, M.length_mod(x)),
    ]
    for n in range(n_max + 1):
        checks.append(ExampleCheck(F"H({n})", n + 2, M.hilbert_value(x, n)))
        checks.append(ExampleCheck(F"IR({n})", 2, M.irreducibility_value(x, n)))
    checks.append(ExampleCheck('e0', 1, hilbert_coefficients(M, x, n_max).leading))
    checks.append(ExampleCheck('f0', 2, irreducibility_coefficients(M, x, n_max).leading))
    ulrich = ulrich_check(M, x, n_max)
    checks.append(ExampleCheck('fQ0 = ℓ(M/QM)', True, ulrich.fQ0 == ulrich.colength))
    checks.append(ExampleCheck('Ulrich certification', 'excluded: t = 1', ulrich.verdict))
    checks.append(ExampleCheck('Ulrich', False, ulrich.ulrich))
    return checks

def _require(checks: list[ExampleCheck]) -> bool:
    failures = [str(c) for c in checks if not c.passed]
    if failures:
        raise ExampleMismatch(failures)
    return True

def reproduce_example_staircase(d: int, l: int, n_max: int = 10) -> bool:
    return _require(staircase_example_checks(d, l, n_max))

def reproduce_example_direct_sum(n_max: int = 20) -> bool:
    return _require(direct_sum_example_checks(n_max))

FUZZ_VARIABLES = ('x', 'y', 'z', 'u', 'v', 'w')

def fuzz_ring(s: int) -> AmbientRing:
    if s <= len(FUZZ_VARIABLES):
        return AmbientRing(FUZZ_VARIABLES[:s])
    return AmbientRing(tuple(F"x{i}" for i in range(1, s + 1)))

def fuzz_instance(seed: int, s_max: int = 3, comp_max: int = 2,
    exp_max: int = 4) -> tuple[ModulePresentation, MonomialIdeal]:
    '''
    A reproducible random (M, I). Components are random proper monomial ideals,
    sometimes zero; I always contains a pure power of every variable.
    '''
    rng = random.Random(seed)
    s = rng.randint(1, s_max)
    ring = fuzz_ring(s)

    def monomial() -> Exponents:
        exponents = [rng.randint(0, exp_max) for _ in range(s)]
        if not any(exponents):
            exponents[rng.randrange(s)] = rng.randint(1, exp_max)
        return tuple(exponents)

    components = []
    for _ in range(rng.randint(1, comp_max)):
        if rng.random() < 0.25:
            components.append(ring.zero_ideal())
        else:
            components.append(ring.ideal(*(monomial() for _ in range(rng.randint(1, 3)))))
    pure_powers = [
        tuple(rng.randint(1, exp_max) if j == i else 0 for j in range(s)) for i in range(s)]
    extras = [monomial() for _ in range(rng.randint(0, 2))]
    return ModulePresentation(ring, components), ring.ideal(*pure_powers, *extras)

def _lowered(g: Exponents) -> Iterator[Exponents]:
    for i, e in enumerate(g):
        if e:
            lower = g[:i] + (e - 1,) + g[i+1:]
            if any(lower):
                yield lower

def _smaller(M: ModulePresentation, I: MonomialIdeal) -> Iterator[tuple[ModulePresentation, MonomialIdeal]]:
    ring, components = M.ambient, list(M.components)
    for i in range(len(components)):
        if len(components) > 1:
            yield ModulePresentation(ring, components[:i] + components[i+1:]), I
    for i, J in enumerate(components):
        for g in J.gens:
            rest = [h for h in J.gens if h != g]
            for J2 in [ring.ideal(*rest)] + [ring.ideal(*rest, h) for h in _lowered(g)]:
                if J2 != J and J2.is_proper():
                    yield ModulePresentation(ring, components[:i] + [J2] + components[i+1:]), I
    for g in I.gens:
        rest = [h for h in I.gens if h != g]
        for I2 in [ring.ideal(*rest)] + [ring.ideal(*rest, h) for h in _lowered(g)]:
            if I2 != I and I2.is_m_primary():
                yield M, I2

def shrink_instance(M: ModulePresentation, I: MonomialIdeal,
    fails: Callable[[ModulePresentation, MonomialIdeal], bool]) -> tuple[ModulePresentation, MonomialIdeal]:
    '''
    Greedy minimization: drop components and generators, lower exponents, and
    keep any change under which `fails` still holds.
    '''
    progress = True
    while progress:
        progress = False
        for candidate in _smaller(M, I):
            try:
                still_failing = fails(*candidate)
            except MultiplicityError:
                continue
            if still_failing:
                M, I = candidate
                logger.debug("shrunk to M=%r I=%s", M, I)
                progress = True
                break
    return M, I
