"""
Command-line entry point.

Every subcommand reads its input from --input (default stdin) and writes to
--output (default stdout). Exit codes: 0 on success, 1 on a domain error (one
line on stderr), 2 on a usage error.
"""

import argparse
import logging
import math
import sys

import pandas as pd
import yaml

from . import __version__
from .arrangement.cutting import weak_cutting
from .arrangement.decomposition import vertical_decomposition
from .arrangement.faces import zone_complexities, zone_ratio
from .arrangement.wiring import enumerate_full_allowable, random_wiring_diagram, sweep
from .census.dilworth import PermutationPoset, dilworth_color
from .census.split import check_split_tree, strip_split
from .census.tables import format_bound_table
from .config import load_config, merge_config
from .constructions.grid import DetourChoice, build_grid, realize_geometric
from .constructions.grounded import random_grounded_family
from .constructions.staircase import StaircaseParams, staircase_build
from .exceptions import NotDoubleGrounded
from .geometry.curves import as_rat
from .geometry.predicates import grounds_of, intersection_graph, is_pseudosegment_family
from .session import CensusSession
from .setsystem.codec import decode, encode
from .setsystem.packing import packing_check
from .setsystem.shatter import dual_shatter, primal_shatter, vc_dimension
from .utils import serialization
from .utils.log import configure_logging


logger = logging.getLogger(__name__)

SEED_LIMIT = 2**64


def rational(text):
    try:
        return as_rat(text)
    except (ValueError, ZeroDivisionError) as error:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from error


def seed(text):
    try:
        value = int(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"not an integer seed: {text!r}") from error
    if not 0 <= value < SEED_LIMIT:
        raise argparse.ArgumentTypeError(f"seed must lie in [0, 2^64), got {value}")
    return value


def _read_text(path):
    if path == '-':
        return sys.stdin.read()
    with open(path, encoding='utf-8') as handle:
        return handle.read()


def _read_bytes(path):
    if path == '-':
        return sys.stdin.buffer.read()
    with open(path, 'rb') as handle:
        return handle.read()


def _write(path, payload):
    if isinstance(payload, bytes):
        if path == '-':
            sys.stdout.buffer.write(payload)
            sys.stdout.buffer.flush()
        else:
            with open(path, 'wb') as handle:
                handle.write(payload)
        return
    if path == '-':
        sys.stdout.write(payload)
    else:
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(payload)


def _json(payload):
    return serialization.dumps_json({'version': __version__, **payload})


def _table(rows, fmt, columns=None):
    if fmt == 'csv':
        return serialization.dumps_csv(pd.DataFrame(rows, columns=columns), __version__)
    return _json({'rows': rows})


def _family(args):
    return serialization.loads_family(_read_text(args.input))


# Generators

def cmd_gen_grid(args, session):
    grid = build_grid(args.n, args.k)
    if args.choices == 'all-cross':
        choice = DetourChoice.all_cross(grid)
    elif args.choices == 'all-avoid':
        choice = DetourChoice.all_avoid(grid)
    elif args.choices == 'bits':
        if args.bits is None:
            raise UsageError("--choices bits needs --bits")
        choice = DetourChoice.from_bits(grid, args.bits)
    else:
        if args.seed is None:
            raise UsageError("--choices random needs --seed")
        choice = DetourChoice.random(grid, args.seed)
    family = realize_geometric(grid, choice, args.scale)
    return serialization.dumps_family(family, __version__)


def cmd_gen_staircase(args, session):
    if args.seed is not None:
        params = StaircaseParams.random(args.k, args.h, args.seed)
    else:
        params = StaircaseParams.from_index(args.k, args.h, args.index)
    return serialization.dumps_family(staircase_build(params), __version__)


def cmd_gen_grounded(args, session):
    family = random_grounded_family(args.m, args.seed, config=session.config)
    return serialization.dumps_family(family, __version__)


def cmd_gen_wiring(args, session):
    diagram = random_wiring_diagram(args.m, args.seed, config=session.config)
    return serialization.dumps_wiring(diagram, __version__)


# Curve analyzers

def cmd_graph(args, session):
    graph = intersection_graph(_family(args))
    return serialization.dumps_json(serialization.graph_to_dict(graph, __version__))


def cmd_validate(args, session):
    family = _family(args)
    check = is_pseudosegment_family(family)
    grounds = grounds_of(family)
    return _json({
        'curves': len(family),
        'pseudo_segments': check.ok,
        'violation': None if check.ok else list(check.violation),
        'double_grounded': grounds is not None,
        'grounds': None if grounds is None else [serialization.rat_to_pair(x) for x in grounds],
    })


def _grounds(family):
    grounds = grounds_of(family)
    if grounds is None:
        raise NotDoubleGrounded("input curves must share two grounds")
    return grounds


def _restricted(diagram, args):
    if not args.wires:
        return diagram
    return diagram.restrict(label.strip() for label in args.wires.split(','))


def cmd_sweep(args, session):
    return serialization.dumps_wiring(_restricted(sweep(_family(args)), args), __version__)


def cmd_vdecomp(args, session):
    family = _family(args)
    queries = serialization.loads_family(_read_text(args.queries)) if args.queries else None
    decomposition = vertical_decomposition(family, *_grounds(family), queries=queries)
    return _json(decomposition.to_dict())


def cmd_cut(args, session):
    result = weak_cutting(_family(args), args.r, args.seed, config=session.config)
    return _json(result.to_dict())


def cmd_split(args, session):
    family = _family(args)
    root = strip_split(family)
    return _json({
        'depth': root.depth(),
        'leaves': len(root.leaves()),
        'violations': check_split_tree(root, family),
        'tree': root.to_dict(),
    })


def cmd_dilworth(args, session):
    if args.perm:
        poset = PermutationPoset(tuple(int(v) for v in args.perm.split(',')))
    else:
        poset = PermutationPoset.from_through_curves(_family(args))
    classes = dilworth_color(poset)
    return _json({
        'permutation': list(poset.permutation),
        'class_count': len(classes),
        'classes': classes,
    })


# Set systems

def _set_family(args):
    return serialization.loads_set_family(_read_text(args.input))


def cmd_shatter(args, session):
    family = _set_family(args)
    if args.dual:
        value = dual_shatter(family, args.z, config=session.config)
    else:
        value = primal_shatter(family, args.z, config=session.config)
    return _json({'z': args.z, 'direction': 'dual' if args.dual else 'primal', 'value': value})


def cmd_vc(args, session):
    family = _set_family(args)
    return _json({'n': family.n, 'm': family.m, 'vc_dimension': vc_dimension(family, config=session.config)})


def cmd_encode(args, session):
    return serialization.dumps_codec(encode(_set_family(args), session.config['setsystem']['header_bits']))


def cmd_decode(args, session):
    header_bits = session.config['setsystem']['header_bits']
    output = serialization.loads_codec(_read_bytes(args.input), header_bits)
    return serialization.dumps_set_family(decode(output, header_bits), __version__)


def cmd_pack_check(args, session):
    report = packing_check(_set_family(args), args.c, args.d, args.z_max, config=session.config)
    return _json(report.to_dict())


# Arrangements

def cmd_zone(args, session):
    diagram = _restricted(serialization.loads_wiring(_read_text(args.input)), args)
    if args.wire is not None:
        diagram.check_wire(args.wire)
    zones = zone_complexities(diagram)
    ratio, ok = zone_ratio(diagram, config=session.config)
    payload = {'m': diagram.m, 'max_ratio': ratio, 'ok': ok}
    if args.wire is not None:
        payload['wire'] = args.wire
        payload['zone'] = zones[args.wire]
    else:
        payload['zones'] = zones
    return _json(payload)


def cmd_allowable(args, session):
    return _json({'m': args.m, 'count': enumerate_full_allowable(args.m, config=session.config)})


# Experiments

def cmd_census(args, session):
    fmt = args.format or session.config['cli']['format']
    if args.family == 'grid':
        if args.n is None or args.k is None:
            raise UsageError("grid census needs --n and --k")
        grid = build_grid(args.n, args.k)
        result = session.run('grid', n=args.n, k=args.k)
        row = {'n': grid.n, 'k': grid.k, 'I': grid.total_incidences,
               'count_log2': grid.total_incidences, 'verified': result.verified}
        columns = ['n', 'k', 'I', 'count_log2', 'verified']
    elif args.family == 'staircase':
        if args.k is None or args.h is None:
            raise UsageError("staircase census needs --k and --h")
        result = session.run('staircase', k=args.k, h=args.h)
        row = {'k': args.k, 'h': args.h, 'n': 3 * args.k + args.h,
               'count_log2': 3 * args.h * math.log2(args.k), 'distinct': result.distinct,
               'verified': result.verified}
        columns = ['k', 'h', 'n', 'count_log2', 'distinct', 'verified']
    else:
        if args.m is None:
            raise UsageError("grounded census needs --m")
        row = session.run('grounded', m=args.m).to_dict()
        columns = ['m', 'graph_count', 'class_count']
    return _table([row], fmt, columns)


def cmd_verify_eq1(args, session):
    fmt = args.format or session.config['cli']['format']
    pairs = args.pair or [(as_rat(2), 1), (as_rat(2), 2)]
    relations = session.run('verify-eq1', pairs=pairs, ns=args.n, ms=args.m)
    rows = [relation.to_dict() for relation in relations]
    if fmt == 'csv':
        for row in rows:
            row['h_distinct'] = ' '.join(str(v) for v in row['h_distinct'])
    return _table(rows, fmt, ['n', 'm', 'c', 'd', 'h', 'h_distinct', 'rhs', 'holds'])


def cmd_trace_check(args, session):
    fmt = args.format or session.config['cli']['format']
    results = session.run(
        'trace-check', trials=args.trials, z=args.z, seed=args.seed,
        max_a=args.max_a, max_b=args.max_b, dual=args.dual,
    )
    rows = [dict(trial=i, **result.to_dict()) for i, result in enumerate(results)]
    if fmt == 'csv':
        return _table(rows, fmt, ['trial', 'z', 'max_primal', 'bound', 'ok', 'dual_max', 'dual_ok'])
    return _json({
        'trials': len(results),
        'z': args.z,
        'bound': results[0].bound if results else None,
        'max_primal': max((r.max_primal for r in results), default=None),
        'all_ok': all(r.ok and r.dual_ok for r in results),
        'rows': rows,
    })


def cmd_bound_table(args, session):
    fmt = args.format or 'csv'
    experiments = None
    if args.experiments:
        experiments = yaml.safe_load(_read_text(args.experiments)) or {}
    table = session.run('bound-table', experiments=experiments)
    if fmt == 'csv':
        return serialization.dumps_csv(format_bound_table(table, session.config), __version__)
    return _json({'rows': table.astype(object).where(table.notna(), None).to_dict(orient='records')})


class UsageError(Exception):
    """Flag combination the parser cannot express."""


def _eq1_pair(text):
    try:
        c, d = text.split(':')
        return rational(c), int(d)
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"expected c:d, got {text!r}") from error


def build_parser():
    """
    Argument parser with one subparser per command.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help="YAML file merged over the default configuration")
    common.add_argument('--log-level', help="Logging level (default from config)")
    common.add_argument('--log-format', choices=['json', 'text'], help="Log record format")
    common.add_argument('--jobs', type=int, help="Worker processes for census loops")
    common.add_argument('--format', choices=['json', 'csv'], help="Output format where both apply")
    common.add_argument('--input', default='-', help="Input file (default stdin)")
    common.add_argument('--output', default='-', help="Output file (default stdout)")

    parser = argparse.ArgumentParser(
        prog='pseudoseg_census',
        description="Pseudo-segment intersection graph constructions, codecs and censuses.",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest='command', required=True)

    def add(name, handler, help_text):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = add('gen-grid', cmd_gen_grid, "Realize a grid family as curve JSON")
    sub.add_argument('--n', type=int, required=True)
    sub.add_argument('--k', type=int, required=True)
    sub.add_argument('--choices', choices=['all-cross', 'all-avoid', 'random', 'bits'], default='all-cross')
    sub.add_argument('--bits', type=int, help="Choice vector, least significant bit first")
    sub.add_argument('--scale', type=rational, help="Point-segment length")
    sub.add_argument('--seed', type=seed)

    sub = add('gen-staircase', cmd_gen_staircase, "Realize a staircase family as curve JSON")
    sub.add_argument('--k', type=int, required=True)
    sub.add_argument('--h', type=int, required=True)
    sub.add_argument('--index', type=int, default=0, help="Choice vector number")
    sub.add_argument('--seed', type=seed, help="Draw random choices instead of --index")

    sub = add('gen-grounded', cmd_gen_grounded, "Random double-grounded segments on [0, 1]")
    sub.add_argument('--m', type=int, required=True)
    sub.add_argument('--seed', type=seed, required=True)

    sub = add('gen-wiring', cmd_gen_wiring, "Random wiring diagram")
    sub.add_argument('--m', type=int, required=True)
    sub.add_argument('--seed', type=seed, required=True)

    add('graph', cmd_graph, "Intersection graph of a curve family")
    add('validate', cmd_validate, "Pseudo-segment and grounding report")
    sub = add('sweep', cmd_sweep, "Wiring diagram of a double-grounded family")
    sub.add_argument('--wires', help="Comma-separated wires to keep")

    sub = add('vdecomp', cmd_vdecomp, "Vertical decomposition of a double-grounded family")
    sub.add_argument('--queries', help="Curve family whose cell crossings are recorded")

    sub = add('cut', cmd_cut, "Weak cutting by random sampling")
    sub.add_argument('--r', type=rational, required=True)
    sub.add_argument('--seed', type=seed, required=True)

    add('split', cmd_split, "Median strip split tree with invariant report")

    sub = add('dilworth', cmd_dilworth, "Dilworth coloring of a permutation or of through-curves")
    sub.add_argument('--perm', help="Comma separated permutation of 1..t")

    sub = add('shatter', cmd_shatter, "Exact shatter function value")
    sub.add_argument('--z', type=int, required=True)
    sub.add_argument('--dual', action='store_true')

    add('vc', cmd_vc, "Exact VC-dimension")
    sub = add('encode', cmd_encode, "Encode a set family to the binary codec format")
    sub.description = (
        "Writes raw binary: two big-endian header fields (n, m), the payload bits, "
        "zero padding to a byte. Unlike the text and JSON outputs the binary file "
        "carries no version field."
    )
    add('decode', cmd_decode, "Decode the binary codec format")

    sub = add('pack-check', cmd_pack_check, "Packing ratios of the greedy ordering")
    sub.add_argument('--c', type=rational, required=True)
    sub.add_argument('--d', type=int, required=True)
    sub.add_argument('--z-max', type=int)

    sub = add('zone', cmd_zone, "Zone complexities of a wiring diagram")
    sub.add_argument('--wire')
    sub.add_argument('--wires', help="Comma-separated wires to keep")

    sub = add('allowable', cmd_allowable, "Count complete allowable sequences")
    sub.add_argument('--m', type=int, required=True)

    sub = add('census', cmd_census, "Labelled graph census")
    sub.add_argument('--family', choices=['grid', 'staircase', 'grounded'], required=True)
    sub.add_argument('--n', type=int)
    sub.add_argument('--k', type=int)
    sub.add_argument('--h', type=int)
    sub.add_argument('--m', type=int)

    sub = add('verify-eq1', cmd_verify_eq1, "Multiset/set counting identity by brute force")
    sub.add_argument('--n', type=int, nargs='+', default=[1, 2, 3])
    sub.add_argument('--m', type=int, nargs='+', default=[1, 2, 3, 4])
    sub.add_argument('--pair', type=_eq1_pair, action='append', help="c:d, repeatable")

    sub = add('trace-check', cmd_trace_check, "Randomized trace-bound trials")
    sub.add_argument('--z', type=int, required=True)
    sub.add_argument('--trials', type=int, default=200)
    sub.add_argument('--seed', type=seed, required=True)
    sub.add_argument('--max-a', type=int, default=15)
    sub.add_argument('--max-b', type=int, default=10)
    sub.add_argument('--dual', action='store_true')

    sub = add('bound-table', cmd_bound_table, "Census sizes against their exponent models")
    sub.add_argument('--experiments', help="YAML experiment description (default from config)")

    return parser


def _session(args):
    config = load_config(args.config) if args.config else {}
    if args.jobs is not None:
        config = merge_config(config, {'cli': {'jobs': args.jobs}})
    return CensusSession(config)


def run(argv=None):
    """
    Run one command.

    Args:
        argv (list, optional): Arguments without the program name.

    Returns:
        int: Exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else 2

    try:
        session = _session(args)
        general = session.config['general']
        configure_logging(args.log_level or general['log_level'], args.log_format or general['log_format'])
        payload = args.handler(args, session)
        _write(args.output, payload)
        logger.info("command finished", extra={'command': args.command})
    except UsageError as error:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {error}", file=sys.stderr)
        return 2
    except (ValueError, OSError, yaml.YAMLError) as error:
        message = str(error).splitlines()[0] if str(error) else type(error).__name__
        print(f"error: {type(error).__name__}: {message}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
