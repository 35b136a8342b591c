'''
Property campaign over fuzzed instances. Seeds are independent, so they are
checked in a process pool; verdicts come back in seed order regardless of
which worker finishes first.
'''
import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from SlyAPI import AsyncLazy

from .errors import BUDGET_ERRORS, MultiplicityError
from .fitting import DEFAULT_N_MAX, DEFAULT_WINDOW
from .instance import InstanceDocument
from .module import ModulePresentation
from .monomial import MonomialIdeal
from .theorem import (
    MultiplicityReport, eq1_inequality_check, fuzz_instance, multiplicity_report,
    shrink_instance, verify_madic_corollary, verify_t0_closed_form
)

logger = logging.getLogger(__name__)

class Status(Enum):
    PASS        = 'pass'
    VIOLATION   = 'violation'
    BUDGET      = 'budget'
    INPUT       = 'input'

@dataclass(frozen=True)
class CampaignOptions:
    s_max: int = 3
    comp_max: int = 2
    exp_max: int = 4
    n_max: int = DEFAULT_N_MAX
    k_max: int = 12
    window: int = DEFAULT_WINDOW
    # each Artin-Rees candidate k is re-verified for 1 <= n <= n_search
    n_search: int = 15
    # length-chain inequality is checked up to this n; None means n_max
    n_chain: int|None = None
    madic: bool = False
    shrink: bool = True

@dataclass(frozen=True)
class SeedVerdict:
    seed: int
    digest: str
    status: Status
    failures: tuple[str, ...] = ()
    detail: str = ''
    report: MultiplicityReport|None = None
    # minimized failing instance, serialized for replay
    replay: str|None = None

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

def check_instance(M: ModulePresentation, I: MonomialIdeal,
    options: CampaignOptions) -> tuple[list[str], MultiplicityReport]:
    '''Names of the properties the instance violates, and its report.'''
    failures: list[str] = []
    report = multiplicity_report(M, I, options.n_max, options.window)
    if not report.inequality_holds:
        failures.append('inequality')
    if report.equality_criterion_n is not None and not report.equality_holds:
        failures.append('equality')
    if report.t == 0 and not verify_t0_closed_form(M, report):
        failures.append('closed form')
    k = M.find_artin_rees_k(I, M.maximal_ideal, options.n_search, options.k_max)
    n_chain = options.n_max if options.n_chain is None else options.n_chain
    if not eq1_inequality_check(M, I, 0, n_chain, k=k):
        failures.append('length chain')
    if options.madic and not verify_madic_corollary(M, options.n_max, options.window):
        failures.append('madic corollary')
    return failures, report

def _violates(options: CampaignOptions):
    def fails(M: ModulePresentation, I: MonomialIdeal) -> bool:
        return bool(check_instance(M, I, options)[0])
    return fails

def check_seed(seed: int, options: CampaignOptions) -> SeedVerdict:
    M, I = fuzz_instance(seed, options.s_max, options.comp_max, options.exp_max)
    digest = InstanceDocument.of(M, I).digest()
    try:
        failures, report = check_instance(M, I, options)
    except BUDGET_ERRORS as e:
        return SeedVerdict(seed, digest, Status.BUDGET, detail=F"{type(e).__name__}: {e}")
    except MultiplicityError as e:
        return SeedVerdict(seed, digest, Status.INPUT, detail=F"{type(e).__name__}: {e}")
    if not failures:
        return SeedVerdict(seed, digest, Status.PASS, report=report)

    logger.warning("seed %d violates %s: M=%r I=%s", seed, ', '.join(failures), M, I)
    if options.shrink:
        M, I = shrink_instance(M, I, _violates(options))
    replay = InstanceDocument.of(M, I).serialize()
    return SeedVerdict(seed, digest, Status.VIOLATION, tuple(failures),
        detail=F"M = {M!r}, I = {I}", report=report, replay=replay)

def run_campaign(seeds: Iterable[int], options: CampaignOptions = CampaignOptions(),
    workers: int = 1) -> AsyncLazy[SeedVerdict]:
    '''Check every seed; await for the list of verdicts or iterate as they arrive.'''
    seeds = list(seeds)
    async def verdicts():
        if workers <= 1:
            for seed in seeds:
                yield await asyncio.to_thread(check_seed, seed, options)
            return
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pending = [loop.run_in_executor(pool, check_seed, seed, options) for seed in seeds]
            try:
                for future in pending:
                    yield await future
            finally:
                for future in pending:
                    future.cancel()
    return AsyncLazy(verdicts())

@dataclass
class CampaignSummary:
    total: int = 0
    passed: int = 0
    violations: list[int] = field(default_factory=list)
    budget: list[int] = field(default_factory=list)
    invalid: list[int] = field(default_factory=list)

    def add(self, verdict: SeedVerdict):
        self.total += 1
        match verdict.status:
            case Status.PASS:
                self.passed += 1
            case Status.VIOLATION:
                self.violations.append(verdict.seed)
            case Status.BUDGET:
                self.budget.append(verdict.seed)
            case Status.INPUT:
                self.invalid.append(verdict.seed)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def __str__(self) -> str:
        return (F"{self.passed}/{self.total} passed, {len(self.violations)} violations, "
            F"{len(self.budget)} over budget, {len(self.invalid)} invalid")

def summarize(verdicts: Iterable[SeedVerdict]) -> CampaignSummary:
    summary = CampaignSummary()
    for verdict in verdicts:
        summary.add(verdict)
    logger.info("campaign: %s", summary)
    return summary
