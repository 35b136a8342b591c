import sys, asyncio, inspect, logging, os, argparse
from dataclasses import fields
from enum import IntEnum
from pathlib import Path
from typing import Any

from SlyMultiplicity import *

N_MAX_ENV = 'SLYMULTIPLICITY_N_MAX'

class ExitCode(IntEnum):
    OK          = 0
    VIOLATION   = 1
    INPUT       = 2
    BUDGET      = 3

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='SlyMultiplicity',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=inspect.cleandoc("""
        SlyMultiplicity command line: Hilbert and irreducible multiplicities
        of modules over monomial quotient rings.
        Exit codes:
            0  ok
            1  property violation or example mismatch
            2  input error
            3  budget exhausted (raise --n-max or --k-max)
        """))
    parser.add_argument('-v', '--verbose', action='count', default=0,
        help='-v for progress, -vv for every sample')
    commands = parser.add_subparsers(dest='command', required=True)

    def instance_command(name: str, help: str) -> argparse.ArgumentParser:
        command = commands.add_parser(name, help=help)
        command.add_argument('file', type=Path)
        command.add_argument('--n-max', type=int)
        command.add_argument('--window', type=int)
        command.add_argument('--json', action='store_true')
        return command

    instance_command('table', 'n, H(n), IR(n), ΔH(n) for n = 0..n_max')
    instance_command('multiplicities', 'e^0, f^0 and the inequality verdict')
    instance_command('verify', 'exit 0 iff the inequality (and equality, when the criterion holds) verifies')
    instance_command('ulrich', 'Ulrich verdict for the parameter ideal Q of the file')
    instance_command('artin-rees', 'least k for the Artin-Rees identity with the file\'s J') \
        .add_argument('--k-max', type=int)

    examples = commands.add_parser('examples', help='reproduce the worked examples')
    examples.add_argument('--which', choices=['staircase', 'direct-sum'], required=True)
    examples.add_argument('--d', type=int, default=1)
    examples.add_argument('--l', type=int, default=1)
    examples.add_argument('--n-max', type=int)
    examples.add_argument('--json', action='store_true')

    fuzz = commands.add_parser('fuzz', help='property campaign over random instances')
    fuzz.add_argument('--seed', type=int, default=0)
    fuzz.add_argument('--count', type=int, default=100)
    fuzz.add_argument('--vars', type=int, default=3)
    fuzz.add_argument('--components', type=int, default=2)
    fuzz.add_argument('--exp', type=int, default=4)
    fuzz.add_argument('--n-max', type=int)
    fuzz.add_argument('--k-max', type=int, default=12)
    fuzz.add_argument('--n-search', type=int, default=15,
        help='re-verify each Artin-Rees exponent for 1 <= n <= N')
    fuzz.add_argument('--n-chain', type=int,
        help='check the length chain up to N (default: n_max)')
    fuzz.add_argument('--madic', action='store_true', help='also check the 𝔪-adic corollary')
    fuzz.add_argument('--workers', type=int, default=1)
    fuzz.add_argument('--out', type=Path, default=Path('fuzz-failures'),
        help='directory for minimized failing instances')
    fuzz.add_argument('--json', action='store_true')
    return parser

def resolve_n_max(flag: int|None, document: InstanceDocument|None = None, default: int = DEFAULT_N_MAX) -> int:
    '''Flag, then instance file, then environment, then the default.'''
    if flag is not None:
        return flag
    if document is not None and document.n_max is not None:
        return document.n_max
    if env := os.environ.get(N_MAX_ENV):
        try:
            return int(env)
        except ValueError:
            raise ValueError(F"{N_MAX_ENV} must be an integer, got {env!r}")
    return default

def first(*values: int|None) -> int:
    return next(v for v in values if v is not None)

def print_fields(value: Any):
    for f in fields(value):
        print(F"{f.name}: {getattr(value, f.name)}")

def emit(args: argparse.Namespace, argv: list[str], digest: str|None, result: Any, text):
    if args.json:
        print(ReportDocument(' '.join(argv), digest, result).to_json(), end='')
    else:
        text()

async def run(args: argparse.Namespace, argv: list[str]) -> ExitCode:
    match args.command:
        case 'examples':
            n_max = resolve_n_max(args.n_max, default=10 if args.which == 'staircase' else 20)
            checks = (staircase_example_checks(args.d, args.l, n_max) if args.which == 'staircase'
                else direct_sum_example_checks(n_max))
            emit(args, argv, None, checks, lambda: print(*checks, sep='\n'))
            return ExitCode.OK if all(c.passed for c in checks) else ExitCode.VIOLATION
        case 'fuzz':
            return await fuzz(args, argv)

    document = parse_instance(args.file.read_text(encoding='utf-8'))
    M, I = document.module(), document.ideal('I')
    n_max = resolve_n_max(args.n_max, document)
    window = first(args.window, document.window, DEFAULT_WINDOW)
    digest = document.digest()

    match args.command:
        case 'table':
            rows = await growth_rows(M, I, n_max)
            def table():
                print('n\tH(n)\tIR(n)\tΔH(n)')
                for row in rows:
                    print(F"{row.n}\t{row.hilbert}\t{row.irreducibility}\t{row.hilbert_step}")
            emit(args, argv, digest, rows, table)
        case 'multiplicities':
            report = multiplicity_report(M, I, n_max, window)
            emit(args, argv, digest, report, lambda: print_fields(report))
        case 'verify':
            report = multiplicity_report(M, I, n_max, window)
            emit(args, argv, digest, {'verified': report.verified, 'report': report},
                lambda: print('verified' if report.verified else 'VIOLATION'))
            if not report.verified:
                print(F"f0={report.f0} bound={report.bound} criterion_n={report.equality_criterion_n}",
                    file=sys.stderr)
                return ExitCode.VIOLATION
        case 'ulrich':
            Q = document.ideal('Q')
            if Q is None:
                raise InstanceSemanticError('ulrich needs a Q block', 1, 1)
            report = ulrich_check(M, Q, n_max, window)
            def ulrich():
                print_fields(report)
                print(F"verdict: {report.verdict}")
            emit(args, argv, digest, report, ulrich)
        case 'artin-rees':
            J = document.ideal('J')
            if J is None:
                raise InstanceSemanticError('artin-rees needs a J block', 1, 1)
            k_max = first(args.k_max, document.k_max, 12)
            k = M.find_artin_rees_k(I, J, resolve_n_max(args.n_max, document, 15), k_max)
            emit(args, argv, digest, {'k': k}, lambda: print(F"k = {k}"))
    return ExitCode.OK

async def fuzz(args: argparse.Namespace, argv: list[str]) -> ExitCode:
    options = CampaignOptions(
        s_max=args.vars, comp_max=args.components, exp_max=args.exp,
        n_max=resolve_n_max(args.n_max), k_max=args.k_max,
        n_search=args.n_search, n_chain=args.n_chain, madic=args.madic)
    summary = CampaignSummary()
    verdicts: list[SeedVerdict] = []
    async for verdict in run_campaign(range(args.seed, args.seed + args.count), options, args.workers):
        summary.add(verdict)
        verdicts.append(verdict)
        if not args.json:
            print(F"seed {verdict.seed}: {verdict.status.value} {' '.join(verdict.failures)}".rstrip())
        if verdict.replay is not None:
            args.out.mkdir(parents=True, exist_ok=True)
            path = args.out / F"seed-{verdict.seed}.inst"
            path.write_text(verdict.replay, encoding='utf-8')
            print(F"wrote {path}", file=sys.stderr)
    emit(args, argv, None, {'summary': summary, 'verdicts': verdicts}, lambda: print(summary))
    if summary.violations:
        return ExitCode.VIOLATION
    if summary.invalid:
        return ExitCode.INPUT
    if summary.budget:
        return ExitCode.BUDGET
    return ExitCode.OK

async def main(args: list[str]) -> int:
    parsed = build_parser().parse_args(args)
    logging.basicConfig(stream=sys.stderr,
        level={0: logging.WARNING, 1: logging.INFO}.get(parsed.verbose, logging.DEBUG),
        format='%(levelname)s %(name)s: %(message)s')
    try:
        return await run(parsed, args)
    except InstanceError as e:
        print(F"{getattr(parsed, 'file', '')}:{e}", file=sys.stderr)
        return ExitCode.INPUT
    except BUDGET_ERRORS as e:
        print(F"budget exhausted: {type(e).__name__}: {e}", file=sys.stderr)
        return ExitCode.BUDGET
    except (ValueError, OSError) as e:
        print(F"input error: {e}", file=sys.stderr)
        return ExitCode.INPUT

def cli():
    sys.exit(asyncio.run(main(sys.argv[1:])))

if __name__ == '__main__':
    cli()
