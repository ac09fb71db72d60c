import sys
import json
import argparse
import threading
from interrupt_handler import InterruptHandler

import posetkit as pk
from posetkit import documents, lazy
from posetkit.config import load_config
from posetkit.core import canonical, height
from posetkit.debug import log
from posetkit.decomposition import GraphKind, graph_view, inc_components
from posetkit.duality import SearchBudget, dilworth, k_witness_search, mirsky_levels, width
from posetkit.errors import BudgetExceeded, PosetError
from posetkit.generate import MODELS, generate
from posetkit.recognition import Pattern, find_pattern, inc_degree_profile, is_semiorder
from posetkit.verify import verify_all
from posetkit.witness import Method, ak_witness, validate_k_witness, validate_witness

APP_NAME = 'posetkit'
DESCRIPTION = 'Chain and antichain duality toolkit for finite and lazily enumerated posets.'

common = argparse.ArgumentParser(add_help=False)
common.add_argument('--json', action='store_true', help='Report errors (and verify results) as JSON.')
common.add_argument('--config', metavar='CONFIG_FILENAME', type=str, default=None,
                    help='Select configuration file. (default: .posetkit.yaml when present)')

parser = argparse.ArgumentParser(prog=APP_NAME, description=DESCRIPTION)
parser.add_argument('-v', '--version', action='version', version=pk.__version__)
commands = parser.add_subparsers(dest='command', metavar='COMMAND', required=True)


def command(name, help, needs_input=True):
    sub = commands.add_parser(name, help=help, parents=[common])
    if needs_input:
        sub.add_argument('document', metavar='FILENAME', type=str, help='Poset document (.json, .yaml).')
    return sub


command('analyze', 'Summarize a poset.')
command('witness', 'Chain meeting every part of an antichain partition.').add_argument(
    '--method', choices=[_.value for _ in Method], default=Method.DIRECT.value)
command('kwitness', 'Exhaustive search for k chains and an antichain partition.').add_argument(
    '--k', type=int, default=1)
command('dilworth', 'Minimum chain partition with a maximum antichain.')
command('mirsky', 'Antichain partition by element height.')
command('components', 'Ordered components of the incomparability graph.')
command('recognize', 'Find (3+1) and (2+2) patterns.').add_argument(
    '--pattern', choices=[_.value for _ in Pattern], default=None)
sub = command('omega', 'Check the omega+1 split on a prefix of a built-in family.', needs_input=False)
sub.add_argument('--family', choices=[_.value for _ in lazy.Family], required=True)
sub.add_argument('--prefix', type=int, default=10)
sub.add_argument('--lookahead', type=int, default=2, help='Chain elements followed past the prefix.')
sub = command('layers', 'Breadth-first layers of the incomparability graph.', needs_input=False)
sub.add_argument('document', metavar='FILENAME', type=str, nargs='?', default=None)
sub.add_argument('--family', choices=[_.value for _ in lazy.Family], default=None)
sub.add_argument('--prefix', type=int, default=10)
sub.add_argument('--source', type=str, default=None, help='Start vertex. (default: first element)')
sub.add_argument('--view', choices=['inc', 'comp'], default='inc')
sub = command('verify', 'Check every poset on n elements against the brute-force oracles.', needs_input=False)
sub.add_argument('--n', type=int, required=True)
sub.add_argument('--k', type=int, default=None)
sub.add_argument('--jobs', type=int, default=None)
sub = command('generate', 'Write a seeded random or structured poset document.', needs_input=False)
sub.add_argument('model', choices=MODELS)
sub.add_argument('--n', type=int, default=None)
sub.add_argument('--dims', type=int, default=None)
sub.add_argument('--rows', type=int, default=None)
sub.add_argument('--cols', type=int, default=None)
sub.add_argument('--p', type=float, default=None)
sub.add_argument('--spread', type=float, default=None)
sub.add_argument('--seed', type=int, default=0)
sub.add_argument('--format', choices=documents.FORMATS, default='json')
sub.add_argument('--out', metavar='FILENAME', type=str, default=None)
sub = command('export-dot', 'Graphviz view of a poset.')
sub.add_argument('--view', choices=documents.VIEWS, default='hasse')
sub.add_argument('--out', metavar='FILENAME', type=str, default=None)


def exit_with_message(message, exitcode=1):
    print(message, file=sys.stderr)
    return exitcode


def emit(body):
    print(json.dumps(body, indent=2, ensure_ascii=False))


def write(text, path):
    if path:
        with open(path, 'wt', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def do_analyze(args, config):
    p = documents.load_document(args.document)
    body = {'elements': len(p), 'relations': len(p.relation())}
    if len(p):
        body.update({
            'height': height(p),
            'width': width(p),
            'components': len(inc_components(p)),
            'max_inc_degree': inc_degree_profile(p).max,
            'semiorder': is_semiorder(p),
        })
    emit(body)
    return 0


def do_witness(args, config):
    p = documents.load_document(args.document)
    w = ak_witness(p, Method(args.method))
    report = validate_witness(p, w)
    emit(w.to_dict() if report.ok else {**w.to_dict(), 'violations': report.to_list()})
    return 0 if report.ok else 1


def do_kwitness(args, config):
    p = documents.load_document(args.document)
    kw = k_witness_search(p, args.k, SearchBudget.from_config(config))
    if kw is None:
        emit({'k': args.k, 'found': False})
        return 1
    report = validate_k_witness(p, kw, args.k)
    emit({'k': args.k, 'found': True, **kw.to_dict(), 'violations': report.to_list()})
    return 0 if report.ok else 1


def do_dilworth(args, config):
    chains, antichain = dilworth(documents.load_document(args.document))
    emit({'width': len(antichain), 'chains': [list(_) for _ in chains], 'antichain': canonical(antichain)})
    return 0


def do_mirsky(args, config):
    levels = mirsky_levels(documents.load_document(args.document))
    emit({'height': len(levels) - 1, 'levels': [canonical(_) for _ in levels]})
    return 0


def do_components(args, config):
    emit({'components': inc_components(documents.load_document(args.document)).to_list()})
    return 0


def do_recognize(args, config):
    p = documents.load_document(args.document)
    patterns = [Pattern(args.pattern)] if args.pattern else list(Pattern)
    found = {pattern.value: find_pattern(p, pattern) for pattern in patterns}
    emit({
        'patterns': {k: (v.elements if v else None) for k, v in found.items()},
        'semiorder': is_semiorder(p),
        'inc_degrees': inc_degree_profile(p).to_dict(),
    })
    return 0


def do_omega(args, config):
    family = lazy.builtin_family(args.family)
    report = lazy.verify_omega_split(family, lazy.builtin_certificate(args.family), args.prefix,
                                      args.lookahead)
    emit({'family': family.name, **report.to_dict()})
    return 0


def do_layers(args, config):
    if args.document:
        p = documents.load_document(args.document)
    elif args.family:
        p = lazy.prefix(lazy.builtin_family(args.family), args.prefix, config.check_oracle)
    else:
        return exit_with_message('Give a poset document or --family.', 2)
    if not len(p):
        return exit_with_message('Poset is empty.', 2)
    g = graph_view(p, GraphKind(args.view))
    emit(lazy.bfs_layers(g, args.source if args.source is not None else p.elements[0]).to_dict())
    return 0


def do_verify(args, config):
    if args.n > config.max_n and not (args.n == 7 and config.allow_seven):
        raise BudgetExceeded('enumeration n', args.n)
    stop = threading.Event()

    def interrupted():
        log('verify: interrupted')
        stop.set()
        return True

    with InterruptHandler(interrupted):
        result = verify_all(args.n, args.k, SearchBudget.from_config(config), args.jobs or config.jobs,
                            config.allow_seven, stop.is_set)
    if args.json:
        emit({**result.to_dict(), 'summary': result.summary()})
    else:
        print(result.summary())
        for index, poset, problems in result.failures:
            print(f'  #{index} {poset}: {"; ".join(problems)}')
    return 0 if result.ok else 1


def do_generate(args, config):
    params = {'n': args.n, 'dims': args.dims, 'rows': args.rows, 'cols': args.cols, 'p': args.p,
              'spread': args.spread}
    doc = generate(args.model, params, args.seed)
    text = documents.dumps_document(doc, args.format)
    write(text if text.endswith('\n') else text + '\n', args.out)
    return 0


def do_export_dot(args, config):
    write(documents.to_dot(documents.load_document(args.document), args.view), args.out)
    return 0


HANDLERS = {
    'analyze': do_analyze,
    'witness': do_witness,
    'kwitness': do_kwitness,
    'dilworth': do_dilworth,
    'mirsky': do_mirsky,
    'components': do_components,
    'recognize': do_recognize,
    'omega': do_omega,
    'layers': do_layers,
    'verify': do_verify,
    'generate': do_generate,
    'export-dot': do_export_dot,
}


def run(argv=None):
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return HANDLERS[args.command](args, config)
    except PosetError as e:
        log(f'{args.command}: {type(e).__name__}: {e}')
        if args.json:
            return exit_with_message(json.dumps(e.to_dict()), e.exit_code)
        return exit_with_message(f'{type(e).__name__}: {e}', e.exit_code)


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
