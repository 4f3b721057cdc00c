"""
Command-line front end.

Reports go to stdout and are deterministic; logging goes to stderr (and an
optional log file). Exit codes: 0 success, 1 failed verification, 2 bad input.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .config_manager import ConfigManager, generate_config
from .errors import SnakeCalculusError
from .graphs.band import BandGraph
from .graphs.base import Side
from .graphs.snake import SnakeGraph
from .graphs.text_format import format_component, parse_components
from .laurent.expansion import laurent_of
from .matchings.counting import count_component, count_relement
from .matchings.good import enumerate_good_matchings
from .matchings.perfect import enumerate_matchings
from .resolutions.grafting import graft_pair, self_graft
from .resolutions.pair import resolve_pair
from .resolutions.report import ResolutionReport
from .resolutions.self_crossing import resolve_self
from .selftest import FIXTURES, SUITES, run_selftest
from .surface.curves import crossing_monomial, curve_laurent, exchange_relation, f_polynomial, mutated_variable
from .surface.skein import (
    COMPATIBLE, crossing_overlaps, format_smoothing, self_crossing_overlaps, skein_check, smooth, torus_identity,
)
from .surface.triangulation import ArcSpec, Triangulation, fixture_path, load_surface

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def setup_logging(level: str = 'INFO', log_file: Optional[str] = None) -> None:
    """Set up logging configuration."""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, mode='a'))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )
    logging.getLogger().setLevel(getattr(logging, level.upper(), logging.INFO))


def _read(path: str) -> List:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_components(f.read(), path)


def _surface(name: str) -> Triangulation:
    """A surface file, or the name of a shipped fixture."""
    if not Path(name).exists() and name in FIXTURES:
        return load_surface(fixture_path(name))
    return load_surface(name)


def _emit(lines: List[str], golden_dir: Optional[str], name: str) -> int:
    """Print a report; with a golden directory, compare against (or record) ``<name>.txt``."""
    text = '\n'.join(lines) + '\n'
    sys.stdout.write(text)
    if not golden_dir:
        return EXIT_OK
    golden = Path(golden_dir) / f"{name}.txt"
    if not golden.exists():
        golden.parent.mkdir(parents=True, exist_ok=True)
        golden.write_text(text, encoding='utf-8')
        logger.info(f"Recorded golden output {golden}")
        return EXIT_OK
    if golden.read_text(encoding='utf-8') != text:
        logger.error(f"Output differs from golden file {golden}")
        return EXIT_FAILED
    logger.info(f"Output matches golden file {golden}")
    return EXIT_OK


def cmd_matchings(args, config: ConfigManager) -> int:
    lines = []
    both_seeds = args.both_seeds or config.get('engine.both_seeds', False)
    for component in _read(args.file):
        lines.append(format_component(component))
        if isinstance(component, BandGraph):
            matchings = enumerate_good_matchings(component)
            lines.append(f"{len(matchings)} good matchings")
        else:
            matchings = enumerate_matchings(component)
            lines.append(f"{len(matchings)} matchings")
        if both_seeds and isinstance(component, (SnakeGraph, BandGraph)):
            for seed in (1, -1):
                signs = ' '.join('+' if s > 0 else '-' for s in component.signs(seed))
                lines.append(f"signs (seed {'+' if seed > 0 else '-'}): {signs or '-'}")
        if args.list:
            lines.extend(f"  {m}" for m in matchings)
    return _emit(lines, args.golden or config.get('output.golden_dir'), f"matchings-{Path(args.file).stem}")


def _report_lines(report: ResolutionReport, expected: int) -> List[str]:
    lines = report.describe()
    got = count_relement(report.result)
    lines.append(f"matchings: {expected} = {got}")
    lines.append(f"count identity: {'holds' if got == expected else 'FAILS'}")
    return lines


def _snakes(components, count: int) -> List[SnakeGraph]:
    if len(components) != count:
        raise SnakeCalculusError(f"Expected {count} component(s), found {len(components)}")
    return components


def cmd_resolve(args, config: ConfigManager) -> int:
    components = _read(args.file)
    golden_dir = args.golden or config.get('output.golden_dir')
    name = f"resolve-{Path(args.file).stem}"
    if len(components) == 2:
        first, second = _snakes(components, 2)
        found = crossing_overlaps(first, second)
        expected = count_component(first) * count_component(second)

        def resolve(overlap):
            return resolve_pair(first, second, overlap)
    else:
        graph, = _snakes(components, 1)
        found = self_crossing_overlaps(graph)
        expected = count_component(graph)

        def resolve(overlap):
            return resolve_self(graph, overlap)
    if not found:
        return _emit([COMPATIBLE], golden_dir, name)
    if args.list:
        for index, overlap in enumerate(found):
            print(f"[{index}] {overlap}")
        return EXIT_OK
    if not -len(found) <= args.overlap < len(found):
        raise SnakeCalculusError(f"Overlap {args.overlap} requested, {len(found)} crossing overlaps found")
    report = resolve(found[args.overlap])
    status = _emit(_report_lines(report, expected), golden_dir, name)
    return status if count_relement(report.result) == expected else EXIT_FAILED


def cmd_graft(args, config: ConfigManager) -> int:
    components = _read(args.file)
    delta3 = Side(args.edge) if args.edge else None
    if len(components) == 2:
        first, second = components
        report = graft_pair(first, second, args.position, delta3)
        expected = count_component(first) * count_component(second)
    else:
        graph, = _snakes(components, 1)
        report = self_graft(graph, args.position, delta3)
        expected = count_component(graph)
    lines = _report_lines(report, expected)
    status = _emit(lines, args.golden or config.get('output.golden_dir'), f"graft-{Path(args.file).stem}")
    return status if count_relement(report.result) == expected else EXIT_FAILED


def cmd_laurent(args, config: ConfigManager) -> int:
    boundary = frozenset(filter(None, (args.boundary or '').split(',')))
    lines = []
    for component in _read(args.file):
        lines.append(format_component(component))
        lines.append(f"L = {laurent_of(component, boundary)}")
    return _emit(lines, args.golden or config.get('output.golden_dir'), f"laurent-{Path(args.file).stem}")


def cmd_cluster_var(args, config: ConfigManager) -> int:
    surface = _surface(args.surface)
    if args.list:
        for name in sorted(surface.curves):
            print(name)
        return EXIT_OK
    lines = []
    for arc in args.exchange or ():
        first, second = exchange_relation(surface, arc)
        lines.append(f"x{arc} x{arc}' = {first} + {second}")
        lines.append(f"x{arc}' = {mutated_variable(surface, arc)}")
    for name in args.curves or sorted(surface.curves):
        curve = surface.curve(name)
        lines.append(f"{name} = {curve_laurent(surface, name)}")
        if isinstance(curve, ArcSpec) and curve.crossings and not curve.monogon:
            lines.append(f"  cross = {crossing_monomial(curve)}")
            lines.append(f"  F = {f_polynomial(surface, curve)}")
    return _emit(lines, args.golden or config.get('output.golden_dir'), f"cluster-var-{Path(args.surface).stem}")


def cmd_skein(args, config: ConfigManager) -> int:
    surface = _surface(args.surface)
    boundary = frozenset(surface.boundary)
    golden_dir = args.golden or config.get('output.golden_dir')
    stem = Path(args.surface).stem
    if not args.curves:
        identity = torus_identity(surface)
        status = _emit(identity.describe(boundary), golden_dir, f"skein-{stem}")
        return status if identity.ok else EXIT_FAILED
    if len(args.curves) > 2:
        raise SnakeCalculusError("skein takes one or two curves")
    first = args.curves[0]
    second = args.curves[1] if len(args.curves) == 2 else None
    name = f"skein-{stem}-{'-'.join(args.curves)}"
    if args.smooth and second is not None:
        smoothing = smooth(surface, first, second, args.overlap)
        status = _emit(format_smoothing(smoothing, boundary), golden_dir, name)
        return status if smoothing.lhs == smoothing.rhs(boundary) else EXIT_FAILED
    check = skein_check(surface, first, second, args.overlap)
    status = _emit(check.describe(), golden_dir, name)
    return status if check.ok else EXIT_FAILED


def cmd_selftest(args, config: ConfigManager) -> int:
    if args.max_tiles is not None:
        for key in ('max_tiles', 'self_max_tiles', 'graft_max_tiles', 'band_max_tiles'):
            config.set(f"engine.{key}", args.max_tiles)
    errors = config.validate_config()
    if errors:
        raise SnakeCalculusError('; '.join(errors))
    results = run_selftest(config, args.suite)
    for result in results:
        print(result.summary())
    failed = [r.name for r in results if not r.ok]
    print(f"selftest: {'FAILED (' + ', '.join(failed) + ')' if failed else 'passed'}")
    return EXIT_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='snake-calculus',
        description="Snake graph calculus - resolutions, matchings and Laurent identities"
    )
    parser.add_argument('-c', '--config', type=str, help='Path to configuration file')
    parser.add_argument('-v', '--verbose', action='store_true', help='Enable verbose logging')
    parser.add_argument('--log-file', type=str, help='Append log records to this file')
    parser.add_argument('--generate-config', type=str,
                        help='Generate a sample configuration file at the specified path')

    commands = parser.add_subparsers(dest='command')

    def with_golden(sub):
        sub.add_argument('--golden', type=str, metavar='DIR', help='Compare output with DIR/<name>.txt')
        return sub

    sub = with_golden(commands.add_parser('matchings', help='Count (and list) perfect or good matchings'))
    sub.add_argument('file', help='Component file')
    sub.add_argument('--list', action='store_true', help='List every matching')
    sub.add_argument('--both-seeds', action='store_true', help='Print sign words under both sign functions')
    sub.set_defaults(handler=cmd_matchings)

    sub = with_golden(commands.add_parser('resolve', help='Resolve a crossing or self-crossing'))
    sub.add_argument('file', help='File with one or two snake graphs')
    sub.add_argument('--overlap', type=int, default=0, help='Index of the crossing overlap to resolve')
    sub.add_argument('--list', action='store_true', help='List the crossing overlaps')
    sub.set_defaults(handler=cmd_resolve)

    sub = with_golden(commands.add_parser('graft', help='Graft at a tile (empty overlap)'))
    sub.add_argument('file', help='File with one snake graph, or a snake graph and a second component')
    sub.add_argument('--position', '-s', type=int, required=True, help='Tile s of the first graph')
    sub.add_argument('--edge', choices=('N', 'E'), help='Grafting edge when s is the last tile')
    sub.set_defaults(handler=cmd_graft)

    sub = with_golden(commands.add_parser('laurent', help='Laurent polynomials of labeled components'))
    sub.add_argument('file', help='Component file')
    sub.add_argument('--boundary', type=str, help='Comma separated boundary labels (weight 1)')
    sub.set_defaults(handler=cmd_laurent)

    sub = with_golden(commands.add_parser('cluster-var', help='Cluster variables of curves on a surface'))
    sub.add_argument('surface', help=f"Surface file or fixture ({', '.join(FIXTURES)})")
    sub.add_argument('curves', nargs='*', help='Curves to expand (default: all)')
    sub.add_argument('--exchange', action='append', metavar='ARC', help='Print the exchange relation of ARC')
    sub.add_argument('--list', action='store_true', help='List the curves of the surface')
    sub.set_defaults(handler=cmd_cluster_var)

    sub = with_golden(commands.add_parser('skein', help='Check a skein relation on a surface'))
    sub.add_argument('surface', help=f"Surface file or fixture ({', '.join(FIXTURES)})")
    sub.add_argument('curves', nargs='*', help='One or two arcs (none: the torus identity)')
    sub.add_argument('--overlap', type=int, default=0, help='Index of the crossing overlap to smooth')
    sub.add_argument('--smooth', action='store_true', help='Keep smoothing until no self-crossings are left')
    sub.set_defaults(handler=cmd_skein)

    sub = commands.add_parser('selftest', help='Run the exhaustive self-test suites')
    sub.add_argument('--max-tiles', type=int, help='Bound every exhaustive suite by this many tiles')
    sub.add_argument('--suite', action='append', choices=sorted(SUITES), help='Run only this suite')
    sub.set_defaults(handler=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for snake-calculus."""
    parser = build_parser()
    args = parser.parse_args(argv)

    config = ConfigManager(args.config)
    level = 'DEBUG' if args.verbose else config.get('logging.level', 'INFO')
    setup_logging(level, args.log_file or config.get('logging.file'))

    if args.generate_config:
        try:
            generate_config(args.generate_config)
            print(f"Sample configuration saved to {args.generate_config}")
            return EXIT_OK
        except OSError as e:
            print(f"Error generating configuration: {e}", file=sys.stderr)
            return EXIT_INPUT

    if not getattr(args, 'handler', None):
        parser.print_help()
        return EXIT_INPUT

    try:
        return args.handler(args, config)
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return EXIT_FAILED
    except (SnakeCalculusError, OSError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
