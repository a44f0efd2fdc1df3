"""Command line front end."""
import argparse
import json
import logging
import sys
from dataclasses import asdict
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import pandas as pd

from .borel_siebenthal import maximal_rank_subgroups
from .catalog import catalog_entries, verify_all
from .dataclasses import EnumConfig, VerifySettings
from .diagrams import (detect_non_primitive, dim_M, euler_char_M, format_diagram, necessary_filters, parse_diagram,
                       validate_diagram)
from .encoders import CohomoneJsonEncoder
from .enums import GroupFamily, OutputFormat, Verdict
from .enumerator import cross_check_catalog, enumerate_candidates
from .exceptions import CohomoneException
from .groups import center_order, dim, factor_count, format_group, parse_group, rank, weyl_order
from .homogeneous import euler_char
from .models import CatalogRecord
from .spheres import SPHERE_PATTERNS, classify_quotient, pi1_index_circle

EXIT_OK, EXIT_FAILURES, EXIT_INPUT = 0, 1, 2


def _dumps(data: Any) -> str:
    return json.dumps(data, cls=CohomoneJsonEncoder, sort_keys=True)


def _emit(rows: list[dict], fmt: OutputFormat, out=None):
    """Write records as a table, a CSV document or a JSON array."""
    out = out or sys.stdout
    if fmt == OutputFormat.json:
        print(_dumps(rows), file=out)
        return

    frame = pd.DataFrame(rows)
    if fmt == OutputFormat.csv:
        frame.to_csv(out, index=False)
    elif rows:
        print(frame.to_string(index=False), file=out)


def _emit_value(name: str, value: Any, fmt: OutputFormat, **context):
    if fmt == OutputFormat.table:
        print(value)
    else:
        _emit([{**context, name: value}], fmt)


def _plain(value: Any) -> Any:
    return value.value if isinstance(value, Enum) else value


def _read_lines(path: str) -> list[str]:
    """Expressions of an input file: one per line, blank lines and `#` comments skipped."""
    lines = Path(path).read_text(encoding='utf-8').splitlines()
    return [s for s in (line.split('#', 1)[0].strip() for line in lines) if s]


def _inputs(args, name: str) -> list[str]:
    values = list(getattr(args, name) or [])
    if getattr(args, 'file', None):
        values += _read_lines(args.file)
    if not values:
        raise CohomoneException(message=f'Expected at least one {name} expression or --file.',
                                error_code='Usage Error')
    return values


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma separated integers, got '{text}'.")


def cmd_euler(args) -> int:
    G, K = parse_group(args.G), parse_group(args.K)
    _emit_value('euler', euler_char(G, K), args.format, G=format_group(G), K=format_group(K))
    return EXIT_OK


def cmd_invariants(args) -> int:
    rows = []
    for text in _inputs(args, 'groups'):
        g = parse_group(text)
        rows.append({
            'group': format_group(g),
            'rank': rank(g),
            'dim': dim(g),
            'weyl_order': weyl_order(g),
            'factors': factor_count(g),
            'center': _plain(center_order(g)),
        })
    _emit(rows, args.format)
    return EXIT_OK


def cmd_sphere(args) -> int:
    K, H = parse_group(args.K), parse_group(args.H)
    quotient = classify_quotient(K, H)
    if args.format == OutputFormat.table:
        print(quotient.text)
    else:
        row = {'K': format_group(K), 'H': format_group(H), **asdict(quotient), 'type': quotient.type.value}
        _emit([row], args.format)
    return EXIT_OK


def cmd_index(args) -> int:
    _emit_value('index', pi1_index_circle(args.l, args.k, args.n), args.format, l=args.l, k=args.k, n=args.n)
    return EXIT_OK


def cmd_maxrank(args) -> int:
    subgroups = [format_group(K) for K in maximal_rank_subgroups(parse_group(args.G), args.max_factors)]
    if args.format == OutputFormat.json:
        print(_dumps(subgroups))
    elif args.format == OutputFormat.csv:
        _emit([{'subgroup': s} for s in subgroups], args.format)
    else:
        print('\n'.join(subgroups))
    return EXIT_OK


def _diagram_row(text: str) -> dict:
    d = parse_diagram(text)
    validation, filters = validate_diagram(d), necessary_filters(d)
    row = {
        'diagram': format_diagram(d),
        'valid': validation.passed,
        'filters': filters.passed,
        'failed': ','.join(c.check for c in validation.failures() + filters.failures()),
        'l_minus': d.wminus.l,
        'l_plus': d.wplus.l,
        'chi': None,
        'dim_m': None,
        'primitivity': detect_non_primitive(d).value,
    }
    try:
        row['chi'] = euler_char_M(d)
        row['dim_m'] = dim_M(d)
    except CohomoneException as e:
        logging.warning(f'{text}: {e}')
    return row


def cmd_diagram_check(args) -> int:
    rows = [_diagram_row(text) for text in _inputs(args, 'diagrams')]
    _emit(rows, args.format)
    return EXIT_OK if all(r['valid'] and r['filters'] for r in rows) else EXIT_FAILURES


def cmd_verify_catalog(args) -> int:
    ranges, settings = None, VerifySettings(workers=args.workers)
    if args.n:
        families = [GroupFamily(args.family)] if args.family else list(GroupFamily)
        ranges = {family: args.n for family in families}
    elif args.family:
        family = GroupFamily(args.family)
        ranges = {family: sorted({n for e in catalog_entries(family) for n in settings.sample(e.n_min, e.n_max)})}

    summary = verify_all(ranges, settings, covering_correction=not args.no_covering_correction)
    if args.format == OutputFormat.json:
        print(_dumps({'counts': summary.counts(), 'reports': summary.reports}))
    else:
        _emit([{
            'entry': r.entry_id,
            'n': r.n,
            'verdict': r.verdict.value,
            'computed': r.computed_chi,
            'printed': r.printed_chi,
            'printed_value': r.printed_value,
            'dim_m': r.dim_m,
            'checks': 'pass' if r.checks_passed else 'fail',
        } for r in summary.reports], args.format)

    if summary.failed_checks or (args.strict and summary.count(Verdict.discrepancy)):
        return EXIT_FAILURES
    return EXIT_OK


def _config(args) -> EnumConfig:
    return EnumConfig(max_factors=args.max_factors, kmax=args.kmax, wide_kmax=args.wide_kmax,
                      rank_bound=args.rank_bound, include_projective=args.spin)


def cmd_enumerate(args) -> int:
    candidates = enumerate_candidates(parse_group(args.G), _config(args))
    if args.format == OutputFormat.json:
        for d in candidates:
            print(_dumps({'diagram': format_diagram(d), 'chi': euler_char_M(d), 'dim_m': dim_M(d)}))
        return EXIT_OK

    _emit([{
        'H': format_group(d.H),
        'K-': format_group(d.Kminus),
        'K+': format_group(d.Kplus),
        'chi': euler_char_M(d),
        'dim_m': dim_M(d),
    } for d in candidates], args.format)
    return EXIT_OK


def cmd_cross_check(args) -> int:
    report = cross_check_catalog(GroupFamily(args.family), args.n, _config(args))
    if args.format == OutputFormat.table:
        print(f'{report.family} n={report.n}: {len(report.found)} found ({len(report.exact)} exactly), '
              f'{len(report.missing)} missing among {report.candidates} candidates')
        for entry_id in report.missing:
            print(f'missing {entry_id}')
    elif args.format == OutputFormat.json:
        print(_dumps(report))
    else:
        _emit([{'family': report.family, 'n': report.n, 'candidates': report.candidates,
                'found': ';'.join(report.found), 'missing': ';'.join(report.missing),
                'exact': ';'.join(report.exact)}], args.format)
    return EXIT_OK if report.complete else EXIT_FAILURES


def cmd_patterns(args) -> int:
    _emit([p.to_dict() for p in SPHERE_PATTERNS], args.format)
    return EXIT_OK


def cmd_catalog_export(args) -> int:
    entries = list(catalog_entries())
    if args.format == OutputFormat.json:
        print(_dumps(CatalogRecord.Schema().dump(entries, many=True)))
    else:
        _emit(CatalogRecord.Schema().dump(entries, many=True)['entries'], args.format)
    return EXIT_OK


def _add_enum_options(parser: argparse.ArgumentParser):
    parser.add_argument('--kmax', type=int, default=None, help='Bound on circle family parameters (env C1_KMAX).')
    parser.add_argument('--wide-kmax', type=int, default=2,
                        help='Bound on circle family coefficients in free tori of more than two dimensions.')
    parser.add_argument('--max-factors', type=int, default=4, help='Most factors of K+.')
    parser.add_argument('--rank-bound', type=int, default=8, help='Largest rank of G that is enumerated.')
    parser.add_argument('--spin', action='store_true', help='Admit projective quotients K+/H for spin groups.')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.table,
                        help='Output format.')
    common.add_argument('--verbose', action='store_true', help='Log debug output to stderr.')

    parser = argparse.ArgumentParser(prog='cohomone',
                                     description='Group diagrams of cohomogeneity one manifolds with positive Euler '
                                                 'characteristic.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = add('euler', cmd_euler, 'Euler characteristic of G/K.')
    sub.add_argument('G')
    sub.add_argument('K')

    sub = add('invariants', cmd_invariants, 'Rank, dimension, Weyl order, number of factors and center of groups.')
    sub.add_argument('groups', nargs='*')
    sub.add_argument('--file', help='UTF-8 file with one group expression per line.')

    sub = add('sphere', cmd_sphere, 'Recognize K/H as a sphere or a quotient of one.')
    sub.add_argument('K')
    sub.add_argument('H')

    sub = add('index', cmd_index, 'Index of the fundamental group of a circle family in U(n).')
    sub.add_argument('l', type=int)
    sub.add_argument('k', type=int)
    sub.add_argument('n', type=int)

    sub = add('maxrank', cmd_maxrank, 'Proper connected subgroups of maximal rank of G.')
    sub.add_argument('G')
    sub.add_argument('--max-factors', type=int, default=4)

    sub = add('diagram-check', cmd_diagram_check, 'Validate diagrams and apply the necessary conditions.')
    sub.add_argument('diagrams', nargs='*')
    sub.add_argument('--file', help='UTF-8 file with one diagram per line.')

    sub = add('verify-catalog', cmd_verify_catalog, 'Verify the Euler characteristics of the catalog.')
    sub.add_argument('--family', choices=[f.value for f in GroupFamily])
    sub.add_argument('--n', type=_int_list, help='Comma separated parameter values.')
    sub.add_argument('--strict', action='store_true', help='Exit with 1 when there are discrepancies.')
    sub.add_argument('--no-covering-correction', action='store_true',
                     help='Skip the covering correction of spin level entries.')
    sub.add_argument('--workers', type=int, default=1, help='Number of verifying processes.')

    sub = add('enumerate', cmd_enumerate, 'Enumerate candidate diagrams for G.')
    sub.add_argument('G')
    _add_enum_options(sub)

    sub = add('cross-check', cmd_cross_check, 'Check that the catalog entries of a family are enumerated.')
    sub.add_argument('family', choices=[f.value for f in GroupFamily])
    sub.add_argument('n', type=int)
    _add_enum_options(sub)

    add('patterns', cmd_patterns, 'Transitive actions on spheres.')
    add('catalog-export', cmd_catalog_export, 'Export the embedded catalog.')

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    :param argv: Arguments without the program name, `sys.argv[1:]` when omitted.
    :return: 0 on success, 1 when the output contains failed checks, 2 on input errors.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(message)s')

    try:
        return args.handler(args)
    except CohomoneException as e:
        if args.format == OutputFormat.json:
            print(_dumps(e.to_dict()))
        else:
            print(str(e), file=sys.stderr)
        return e.exit_code
    except (OSError, ValueError) as e:
        if args.format == OutputFormat.json:
            print(_dumps({'error': 'Input Error', 'message': str(e), 'offset': None, 'extra': None}))
        else:
            print(f'Input Error: {e}', file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())
