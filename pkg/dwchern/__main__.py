"""This is the main script used to run DWChern.

Every subcommand prints a human-readable result followed by canonical JSON
on the last line; ``--json`` prints only the JSON. The exit code is ``0``
on success, ``1`` for invalid input and ``2`` if a verification fails.
"""

import argparse
import json
import logging
import sys
import webbrowser

from dwchern.cohomology.chains import RingMismatchError, VerificationError
from dwchern.cohomology.cmtype import (
    cm_check, default_candidates, revalidate, sylow_reduction)
from dwchern.cohomology.homology import effective_cap, homology_group
from dwchern.cohomology.transfer import transfer_cochain
from dwchern.global_constants import DOCS_URL, VERSION
from dwchern.topology.dw import (
    GroupRingElement, covering_records, hom_values, linking_pairing)
from dwchern.topology.manifolds import enumerate_homs
from dwchern.ui import specs, table
from test_dwchern.run_tests.run_tests import run_tests


logger = logging.getLogger('dwchern')


### Command-line arguments ###

parser = argparse.ArgumentParser(
    prog='dwchern',
    description='Exact Dijkgraaf-Witten invariants and second Chern '
                'classes of finite groups')
parser.add_argument('--version', action='version', version=VERSION)

# -d and -t don't need a subcommand.
parser.add_argument('-d', '--docs', action='store_true',
                    help='open documentation in a web browser and exit')
parser.add_argument('-t', '--test', action='store_true',
                    help='run tests and exit')
parser.add_argument('-v', '--verbose', action='count', default=0,
                    help='log progress (-v) or everything (-vv)')
parser.add_argument('--debug', action='store_true',
                    help='show tracebacks instead of one-line errors')
parser.add_argument('--threads', type=int, default=1,
                    help='the number of worker threads (default 1)')
parser.add_argument('--snf-cap', type=int, default=None,
                    help='the largest group order for Smith normal forms')
parser.add_argument('--json', action='store_true',
                    help='print canonical JSON only')

subparsers = parser.add_subparsers(dest='command')

dw_parser = subparsers.add_parser(
    'dw', help='compute a Dijkgraaf-Witten invariant')
dw_parser.add_argument('--manifold', required=True)
dw_parser.add_argument('--group', required=True)
dw_parser.add_argument('--cocycle', required=True,
                       help='a cocycle on the group, or on the subgroup '
                            'with --covering')
dw_parser.add_argument('--covering', metavar='GENERATORS',
                       help='evaluate through coverings for the subgroup '
                            'generated by these comma-separated elements')
dw_parser.add_argument('-m', type=int, default=1,
                       help='the multiplier of the covering route')
dw_parser.add_argument('--table', action='store_true',
                       help='print one row per homomorphism')

pair_parser = subparsers.add_parser(
    'pair', help='evaluate linking pairings over all homomorphisms')
pair_parser.add_argument('--manifold', required=True)
pair_parser.add_argument('--group', required=True)
pair_parser.add_argument('--phi', required=True)
pair_parser.add_argument('--phi2')
pair_parser.add_argument('--table', action='store_true')

cocycle_parser = subparsers.add_parser(
    'cocycle', help='build a cocycle and report its class')
cocycle_parser.add_argument('--group', required=True)
cocycle_parser.add_argument('--cocycle', required=True)

homology_parser = subparsers.add_parser(
    'homology', help='compute integral group homology')
homology_parser.add_argument('--group', required=True)
homology_parser.add_argument('-n', '--degree', type=int, default=3)

cm_parser = subparsers.add_parser(
    'cmcheck', help='check whether a group is of type C_m')
cm_parser.add_argument('--group', required=True)
cm_parser.add_argument('-m', type=int, default=1)
cm_parser.add_argument('--candidates',
                       help='a JSON list of induced representations')
cm_parser.add_argument('--sylow', action='store_true',
                       help='apply the Sylow reduction instead')

transfer_parser = subparsers.add_parser(
    'transfer', help='transfer a cocycle from a subgroup')
transfer_parser.add_argument('--group', required=True)
transfer_parser.add_argument('--subgroup', required=True,
                             help='comma-separated generators')
transfer_parser.add_argument('--cocycle', required=True,
                             help='a cocycle on the subgroup')

subparsers.add_parser('selftest', help='run the test suite')


### Subcommands ###

def _generators(text, path):
    try:
        return [int(g) for g in text.split(',') if g.strip()]
    except ValueError as error:
        raise specs.SpecError(f'invalid generator list {text!r}', path) \
            from error


def _emit(args, human, data):
    if not args.json and human:
        print(human)
    print(json.dumps(data, ensure_ascii=False, sort_keys=True,
                     separators=(',', ':')))


def cmd_dw(args):
    model = specs.parse_manifold(args.manifold)
    group = specs.parse_group(args.group)
    gens = list(model.images)
    homs = enumerate_homs(model, group, args.threads)
    if args.covering:
        subgroup, _ = specs.parse_subgroup(
            group, _generators(args.covering, 'covering'), 'covering')
        psi = specs.parse_cocycle(subgroup.group, args.cocycle,
                                  cap=args.snf_cap)
        records = covering_records(model, group, subgroup, psi, args.m,
                                   homs, args.threads, args.snf_cap)
        result = GroupRingElement.from_values(r.lhs for r in records)
        details = table.covering_table(records, gens) if args.table else ''
    else:
        psi = specs.parse_cocycle(group, args.cocycle, cap=args.snf_cap)
        values = hom_values(model, group, psi, homs, args.threads)
        result = GroupRingElement.from_values(v for _, v in values)
        details = table.hom_table(values, gens) if args.table else ''
    human = '\n\n'.join(x for x in (details, str(result)) if x)
    _emit(args, human, result.to_json())


def cmd_pair(args):
    model = specs.parse_manifold(args.manifold)
    group = specs.parse_group(args.group)
    phi = specs.parse_character(group, specs.load(args.phi, 'phi'))
    phi2 = specs.parse_character(group, specs.load(args.phi2, 'phi2'),
                                 'phi2') if args.phi2 else phi
    homs = enumerate_homs(model, group, args.threads)
    values = [(f, linking_pairing(model, f, phi, phi2)) for f in homs]
    result = GroupRingElement.from_values(v for _, v in values)
    details = table.hom_table(values, list(model.images)) \
        if args.table else ''
    human = '\n\n'.join(x for x in (details, str(result)) if x)
    _emit(args, human, result.to_json())


def _class_data(cocycle, cap):
    """Return the class of *cocycle* in H^n, or None beyond the cap."""
    if cocycle.group.order > effective_cap(cap):
        return None
    homology = homology_group(cocycle.group, cocycle.degree, cap)
    return {'divisors': homology.divisors,
            'coordinates': list(homology.cohomology_coordinates(cocycle))}


def cmd_cocycle(args):
    group = specs.parse_group(args.group)
    cocycle = specs.parse_cocycle(group, args.cocycle, cap=args.snf_cap)
    if not cocycle.is_cocycle():
        raise VerificationError('the result is not a cocycle')
    data = {'cochain': cocycle.to_json(),
            'class': _class_data(cocycle, args.snf_cap)}
    human = 'a cocycle (class not computed beyond the cap)'
    if data['class'] is not None:
        human = (f'class {data["class"]["coordinates"]} in '
                 + (' + '.join(f'Z/{d}' for d in data['class']['divisors'])
                    or '0'))
    _emit(args, human, data)


def cmd_homology(args):
    group = specs.parse_group(args.group)
    homology = homology_group(group, args.degree, args.snf_cap)
    homology.check()
    data = {'group': group.name, 'degree': args.degree,
            'divisors': homology.divisors,
            'generators': [z.to_json() for z in homology.generators]}
    _emit(args, table.homology_table(homology), data)


def cmd_cmcheck(args):
    group = specs.parse_group(args.group)
    if args.sylow:
        report = sylow_reduction(group, args.m, cap=args.snf_cap,
                                 threads=args.threads)
        _emit(args, f'verdict: {report.verdict.value}', report.to_json())
        return
    if args.candidates:
        data = specs.load(args.candidates, 'candidates')
        if not isinstance(data, list):
            raise specs.SpecError('expected a list', 'candidates')
        candidates = [specs.parse_rep(group, c, f'candidates[{i}]')
                      for i, c in enumerate(data)]
    else:
        candidates = default_candidates(group)
    certificate = cm_check(group, args.m, candidates, args.snf_cap,
                           args.threads)
    revalidate(certificate, args.snf_cap)
    _emit(args, table.certificate_table(certificate),
          certificate.to_json())


def cmd_transfer(args):
    group = specs.parse_group(args.group)
    subgroup, _ = specs.parse_subgroup(
        group, _generators(args.subgroup, 'subgroup'))
    inner = specs.parse_cocycle(subgroup.group, args.cocycle,
                                cap=args.snf_cap)
    result = transfer_cochain(subgroup, inner)
    data = {'index': subgroup.index, 'cochain': result.to_json()}
    human = f'transfer from a subgroup of index {subgroup.index}'
    data['class'] = _class_data(result, args.snf_cap)
    if data['class'] is not None:
        human += f', class {data["class"]["coordinates"]}'
    _emit(args, human, data)


def cmd_selftest(args):
    if not run_tests():
        return 2
    return 0


COMMANDS = {
    'dw': cmd_dw,
    'pair': cmd_pair,
    'cocycle': cmd_cocycle,
    'homology': cmd_homology,
    'cmcheck': cmd_cmcheck,
    'transfer': cmd_transfer,
    'selftest': cmd_selftest,
}


### The main part of the script ###

def main(argv=None):
    """Execute the script and return the exit code."""
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                      logging.DEBUG)
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')

    if args.docs:
        webbrowser.open(DOCS_URL)
        return 0
    if args.test:
        return 0 if run_tests() else 2
    if args.command is None:
        parser.print_help()
        return 1

    try:
        return COMMANDS[args.command](args) or 0
    except VerificationError as error:
        if args.debug:
            raise
        print(f'verification failed: {error}', file=sys.stderr)
        return 2
    except (ValueError, RingMismatchError) as error:
        # SpecError, GroupError and SizeBoundError are ValueErrors.
        if args.debug:
            raise
        print(f'error: {error}', file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
