# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function, unicode_literals

import argparse
import hashlib
import io
import logging
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import six

from cychom import __version__, settings
from cychom.base.errors import BaseCychomException
from cychom.chern import chern_weil, connection_independence, idempotent_chern, verify_factorization
from cychom.config import ConfigError, SessionConfig
from cychom.galois import RowIsomorphism, check_translation_map, es_coring, solve_strong_connection
from cychom.galois.errors import NotHopfError
from cychom.homology import (bar_contraction, conjugation_homotopy, homology_dims, kill_contractible, matrix_stability,
                             random_invertible, random_split_sequence, tot_cc)
from cychom.io import load_document
from cychom.io.errors import InputOutputError
from cychom.report import Report
from cychom.rowext import certify_epsilon_equivalence, random_augmented_module, row_extension
from cychom.structures import (cotrace_basis, dual_numbers, enough_characters, function_algebra_of_group,
                               ground_field, matrix_element, product_algebra, small_groups)
from cychom.utils import u

__all__ = ('main', 'run')

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

LEMMAS = ('kill', 'bar', 'matrix', 'conj', 'rowext')


class Session(object):
    """
    One invocation: options, the documents read and the digest over them.
    """

    def __init__(self, config, argv):
        self.config = config
        self.argv = argv
        self.documents = []

    @property
    def field(self):
        return self.config.field

    def load(self, path):
        document = load_document(path, field=self.field)
        self.documents.append(document)
        return document

    def digest(self):
        sha = hashlib.sha256()
        for document in self.documents:
            sha.update(document.raw)
        sha.update(self.config.describe().encode('utf-8'))
        sha.update(' '.join(self.argv).encode('utf-8'))
        return sha.hexdigest()


# subcommands

def cmd_check(session, args):
    return session.load(args.file).check()


def cmd_homology(session, args):
    document = session.load(args.file)
    degree = session.config.max_degree
    total = tot_cc(document.algebra, args.mode, max_degree=degree)
    report = Report('homology of %s (%s) through degree %d' % (document.name, args.mode, degree))
    report.extend(total.check_d_squared())
    report.data['dims'] = homology_dims(total, degree)
    return report


def _group_catalogue(field):
    report = Report('cotraces of k^G for groups of order at most 8')
    counts = {}
    for name, group in small_groups():
        coalgebra = function_algebra_of_group(group, field).coalgebra
        dim = len(cotrace_basis(coalgebra))
        classes = group.conjugacy_class_count()
        report.add('%s: cotraces match conjugacy classes' % name, dim == classes,
                   None if dim == classes else {'cotraces': dim, 'classes': classes})
        counts[name] = dim
    report.data['dims'] = counts
    return report


def cmd_cotraces(session, args):
    if args.file is None:
        return _group_catalogue(session.field)
    document = session.load(args.file)
    coalgebra = document.coalgebra
    basis = cotrace_basis(coalgebra)
    report = Report('cotraces of %s' % coalgebra.name)
    report.data['dims'] = {'cotraces': len(basis)}
    report.data['basis'] = [coalgebra.format(c.element) for c in basis]
    comodules = list(document.comodules.values())
    if comodules:
        report.add('characters span the cotraces', enough_characters(coalgebra, comodules))
    return report


def _connection(document):
    return solve_strong_connection(document.comodule_algebra)


def cmd_strong_connection(session, args):
    document = session.load(args.file)
    connection = _connection(document)
    report = connection.check()
    report.extend(check_translation_map(connection.canonical, connection.entwining))
    report.data['connection'] = connection.format()
    return report


def cmd_es_coring(session, args):
    document = session.load(args.file)
    ca = document.comodule_algebra
    es = es_coring(ca, _connection(document))
    report = es.check()
    try:
        report.extend(RowIsomorphism(es).report(), prefix='row isomorphism')
    except NotHopfError:
        logger.info('%s has no Hopf structure, skipping the row isomorphism', ca.name)
    report.extend(certify_epsilon_equivalence(es.row_extension, max_degree=args.depth, cyclic_degree=args.depth),
                  prefix='epsilon')
    return report


def cmd_chern(session, args):
    document = session.load(args.idempotent)
    size, e = document.idempotent
    b = document.algebra
    report = Report('Chern character of an idempotent of M%d(%s)' % (size, b.name))
    previous = None
    for n in six.moves.range(args.n + 1):
        character = idempotent_chern(b, size, e, n)
        report.extend(character.report, prefix='ch_%d' % n)
        if previous is not None:
            witness = previous.homologous_to(character.periodicity())
            report.add('S ch_%d ~ ch_%d' % (n, n - 1), witness is not None)
        previous = character
    report.data['dims'] = {'size': size, 'algebra': b.dim}
    return report


def cmd_chern_weil(session, args):
    document = session.load(args.file)
    ca = document.comodule_algebra
    connection = _connection(document)
    es = es_coring(ca, connection)
    cotrace = document.cotrace(args.cotrace)
    report = Report('Chern-Weil of %s on %s' % (ca.name, args.cotrace))
    previous = None
    for n in six.moves.range(args.n + 1):
        result = chern_weil(es, connection, cotrace, n)
        report.extend(result.report, prefix='chw_%d' % n)
        if previous is not None:
            witness = previous.homologous_to(result.b_level.periodicity())
            report.add('S chw_%d ~ chw_%d' % (n, n - 1), witness is not None)
        previous = result.b_level
    report.data['dims'] = {'M': es.space.dim, 'B': es.base.algebra.dim}
    return report


def cmd_diagram(session, args):
    document = session.load(args.file)
    ca = document.comodule_algebra
    connection = _connection(document)
    es = es_coring(ca, connection)
    if args.comodule is not None:
        comodules = [document.comodule(args.comodule)]
    else:
        comodules = list(document.comodules.values())
    report = Report('factorization diagram for %s' % ca.name)
    for v in comodules:
        for n in six.moves.range(args.n + 1):
            report.extend(verify_factorization(ca, connection, v, n, es=es), prefix='%s/%d' % (v.name, n))
        if connection.family:
            other = connection.shifted([1])
            independence = connection_independence(ca, v, connection, other, args.n)
            report.extend(independence, prefix='%s/independence' % v.name)
    return report


# seeded lemma runs

def _gamma(rng, field):
    m, _ = random_invertible(rng, 2, field)
    entries = {}
    for i in six.moves.range(2):
        for j, value in six.iteritems(m.row(i)):
            entries[(i, j)] = {0: value}
    return matrix_element(ground_field(field), 2, entries)


def _lemma_report(lemma, seed, config):
    rng = random.Random(seed)
    field = config.field
    if lemma == 'kill':
        return kill_contractible(*random_split_sequence(rng, field).args()).report
    if lemma == 'bar':
        algebra = rng.choice([ground_field(field), product_algebra(2, field), dual_numbers(field)])
        return bar_contraction(algebra, max_degree=min(config.max_degree, 3)).report
    if lemma == 'matrix':
        algebra = rng.choice([ground_field(field), product_algebra(2, field)])
        return matrix_stability(algebra, 2, max_degree=min(config.max_degree, 3)).report
    if lemma == 'conj':
        return conjugation_homotopy(ground_field(field), 2, _gamma(rng, field),
                                    max_degree=min(config.max_degree, 2)).report
    am, sigma = random_augmented_module(rng, field)
    return certify_epsilon_equivalence(row_extension(am, sigma), max_degree=min(config.max_degree, 3))


def _guarded(lemma, seed, config):
    try:
        return _lemma_report(lemma, seed, config)
    except BaseCychomException as e:
        report = Report('%s lemma' % lemma)
        report.add('computation', False, u(e))
        return report


def cmd_verify(session, args):
    config = session.config
    count = args.seeds
    if count is None:
        count = settings.ROWEXT_SEEDS if args.lemma == 'rowext' else settings.LEMMA_SEEDS
    seeds = [config.seed + k for k in six.moves.range(count)]
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        reports = list(pool.map(lambda seed: _guarded(args.lemma, seed, config), seeds))
    report = Report('%s lemma over %d seeds' % (args.lemma, len(seeds)))
    for seed, result in zip(seeds, reports):
        report.add('seed %d' % seed, result.passed, None if result.passed else [u(c) for c in result.failures])
    report.data['dims'] = {'passed': sum(1 for r in reports if r.passed), 'seeds': len(seeds)}
    return report


COMMANDS = {
    'check': cmd_check,
    'homology': cmd_homology,
    'cotraces': cmd_cotraces,
    'strong-connection': cmd_strong_connection,
    'es-coring': cmd_es_coring,
    'chern': cmd_chern,
    'chern-weil': cmd_chern_weil,
    'verify': cmd_verify,
    'diagram': cmd_diagram,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--field', choices=('Q', 'Fp'), default=settings.DEFAULT_FIELD)
    common.add_argument('--prime', type=int)
    common.add_argument('-D', '--max-degree', dest='max_degree', type=int, default=settings.DEFAULT_MAX_DEGREE)
    common.add_argument('--seed', type=int, default=settings.DEFAULT_SEED)
    common.add_argument('--report', metavar='PATH', help='write the JSON report here')
    common.add_argument('--timings', action='store_true', help='include wall-clock timings in the report')
    common.add_argument('-v', '--verbose', action='count', default=0)

    parser = argparse.ArgumentParser(prog='cychom', description='Exact cyclic homology and Chern characters.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    p = commands.add_parser('check', parents=[common], help='algebra, coalgebra and coaction axioms')
    p.add_argument('file')
    p = commands.add_parser('homology', parents=[common], help='homology dimensions of Tot CC')
    p.add_argument('file')
    p.add_argument('--mode', choices=('full', 'cc1', 'cc2', 'bar'), default='full')
    p = commands.add_parser('cotraces', parents=[common], help='cotrace space; group catalogue without a file')
    p.add_argument('file', nargs='?')
    p = commands.add_parser('strong-connection', parents=[common], help='solve for a strong connection')
    p.add_argument('file')
    p = commands.add_parser('es-coring', parents=[common], help='Ehresmann-Schauenburg coring certificates')
    p.add_argument('file')
    p.add_argument('--depth', type=int, default=2, help='degree of the HH/HC comparison of M and B')
    p = commands.add_parser('chern', parents=[common], help='Chern character of an idempotent')
    p.add_argument('--idempotent', metavar='FILE', required=True)
    p.add_argument('-n', type=int, default=1)
    p = commands.add_parser('chern-weil', parents=[common], help='Chern-Weil character of a cotrace')
    p.add_argument('file')
    p.add_argument('--cotrace', metavar='NAME', required=True)
    p.add_argument('-n', type=int, default=1)
    p = commands.add_parser('verify', parents=[common], help='seeded homotopy lemma runs')
    p.add_argument('--lemma', choices=LEMMAS, required=True)
    p.add_argument('--seeds', type=int,
                   help='default %d, or %d for rowext' % (settings.LEMMA_SEEDS, settings.ROWEXT_SEEDS))
    p = commands.add_parser('diagram', parents=[common], help='Chern-Weil against Chern-Galois')
    p.add_argument('file')
    p.add_argument('--comodule', metavar='NAME')
    p.add_argument('-n', type=int, default=1)
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')


def _write(path, text):
    with io.open(path, 'w', encoding='utf-8') as fp:
        fp.write(u(text))


def run(argv=None, stdout=None, stderr=None):
    """
    :rtype: int exit code, 0 when every certificate passes
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    started = time.time()
    try:
        config = SessionConfig(field=args.field, prime=args.prime, max_degree=args.max_degree, seed=args.seed)
        session = Session(config, argv)
        try:
            report = COMMANDS[args.command](session, args)
        except (InputOutputError, ConfigError):
            raise
        except BaseCychomException as e:
            report = Report(args.command)
            report.add('computation', False, u(e))
    except (InputOutputError, ConfigError) as e:
        print(u(e), file=stderr)
        return EXIT_INPUT

    report.data['inputs-digest'] = session.digest()
    if args.timings:
        report.data['timings'] = {'seconds': round(time.time() - started, 3)}
    print(u(report), file=stdout)
    if args.report:
        _write(args.report, report.to_json())
    logger.info('%s finished: %s', args.command, 'pass' if report.passed else 'FAIL')
    return EXIT_OK if report.passed else EXIT_FAILED


def main():
    sys.exit(run())
