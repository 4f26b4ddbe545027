'''# -*- coding: utf-8 -*-'''

import logging
import os
import sys
import argparse
import datetime
from fractions import Fraction
import pandas as pd
import extensions.utilities as utilities
from mlqueues import asep_chain, macdonald_ops, matrix_ansatz, mlq_core, queue_tableaux
from mlqueues.exceptions import CharacterizationFailed, TruncationUnstable

pd.options.display.width = 200

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    '''Bad command line.'''


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def _get_args(argv=None):
    """Get input arguments."""
    parser = _Parser(prog='main.py', formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    parser.add_argument("--config_path",
                        default="config.yml",
                        help="path to configfile  path.",
                        type=str)

    parser.add_argument("--log_path",
                        default="log/"+'{:%Y%m%d-%H:%M:%S}'.format(datetime.datetime.now())+"-mlqueues.log", help="path to log path.",
                        type=str)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mu", help="composition, e.g. 0,1,2,2", type=utilities.parse_composition)
    common.add_argument("--lambda", dest="lam", help="partition, e.g. 2,1,0", type=utilities.parse_composition)
    common.add_argument("--t", help="exact rational value of t, e.g. 1/2", type=str)
    common.add_argument("--q", help="exact rational value of q", type=str)
    common.add_argument("--format", help="output format", choices=['text', 'json'])
    common.add_argument("--out", help="write the output to this file instead of stdout", type=str)
    common.add_argument("--seed", help="seed of the simulation", type=int)
    common.add_argument("--steps", help="number of simulation steps", type=int)
    common.add_argument("--trunc", help="truncation dimension of the matrix ansatz", type=int)

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True
    for name, text in [('enumerate', 'list the multiline queues of type mu'),
                       ('fmu', 'print F_mu'),
                       ('zlambda', 'print Z_lambda'),
                       ('nonsym', 'print E_lambda after checking its characterization'),
                       ('verify-qkz', 'check the exchange and cyclic relations for the rearrangements of lambda'),
                       ('tableaux', 'list the queue tableaux of type mu'),
                       ('stationary', 'exact stationary distribution of the ASEP'),
                       ('martin-check', 'compare the stationary distribution with F_mu(1..1; 1, t)'),
                       ('ansatz', 'compare the matrix product traces with F_mu')]:
        commands.add_parser(name, parents=[common], help=text,
                            formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    return parser.parse_args(argv)


def _require(value, flag):
    if value is None:
        raise UsageError('{} is required for this command'.format(flag))
    return value


def _rational(text, flag):
    try:
        return utilities.parse_rational(_require(text, flag))
    except (ValueError, TypeError) as error:
        raise UsageError('{}: {}'.format(flag, error))


def _report_output(report):
    text = report.to_string(index=False)
    data = {'passed': utilities.report_passed(report), 'identities': report.to_dict(orient='records')}
    for key, value in report.attrs.items():
        text += '\n{}: {}'.format(key, utilities.format_rational(value) if isinstance(value, Fraction) else value)
        data[key] = value
    return text, data, data['passed']


def _enumerate(args, defaults):
    queues = mlq_core.enumerate_mlq(_require(args.mu, '--mu'))
    blocks = []
    for k, Q in enumerate(queues, start=1):
        blocks.append('queue {}: weight {}\n{}'.format(k, mlq_core.queue_weight(Q), Q.render()))
    blocks.append('{} multiline queues of type {}'.format(len(queues), utilities.format_composition(args.mu)))
    data = {'mu': list(args.mu), 'count': len(queues),
            'queues': [dict(Q.to_json(), weight=mlq_core.queue_weight(Q).to_json()) for Q in queues]}
    return '\n\n'.join(blocks), data, True


def _polynomial_output(f, args):
    if args.q is not None or args.t is not None:
        f = f.specialize(_rational(args.q, '--q'), _rational(args.t, '--t'))
    return str(f), f.to_json(), True


def _fmu(args, defaults):
    return _polynomial_output(macdonald_ops.F(_require(args.mu, '--mu')), args)


def _zlambda(args, defaults):
    return _polynomial_output(macdonald_ops.Z(_require(args.lam, '--lambda')), args)


def _nonsym(args, defaults):
    return _polynomial_output(macdonald_ops.E_nonsymmetric(_require(args.lam, '--lambda')), args)


def _verify_qkz(args, defaults):
    return _report_output(macdonald_ops.check_qkz(_require(args.lam, '--lambda')))


def _tableaux(args, defaults):
    tableaux = queue_tableaux.enumerate_qt(_require(args.mu, '--mu'))
    blocks = ['tableau {}: weight {}\n{}'.format(k, T.weighted_monomial(), T.render())
              for k, T in enumerate(tableaux, start=1)]
    blocks.append('{} queue tableaux of type {}'.format(len(tableaux), utilities.format_composition(args.mu)))
    data = {'mu': list(args.mu), 'count': len(tableaux),
            'tableaux': [dict(T.to_json(), weight=T.weight().to_json()) for T in tableaux]}
    return '\n\n'.join(blocks), data, True


def _stationary(args, defaults):
    lam = _require(args.lam, '--lambda')
    t = _rational(args.t if args.t is not None else defaults['t'], '--t')
    pi = asep_chain.stationary(lam, t)
    frame = pd.DataFrame({'state': pi.index, 'pi': [utilities.format_rational(v) for v in pi]})
    data = {'lambda': list(lam), 't': utilities.format_rational(t), 'states': list(pi.index),
            'pi': [utilities.format_rational(v) for v in pi]}
    if args.steps:
        seed = args.seed if args.seed is not None else defaults['seed']
        frequency = asep_chain.simulate(lam, t, args.steps, seed)
        frame['simulated'] = frequency.values
        data['simulated'] = [float(v) for v in frequency]
        data['total_variation'] = asep_chain.total_variation(pi, frequency)
    return frame.to_string(index=False), data, True


def _martin_check(args, defaults):
    lam = _require(args.lam, '--lambda')
    t = _rational(args.t if args.t is not None else defaults['t'], '--t')
    return _report_output(asep_chain.martin_check(lam, t))


def _ansatz(args, defaults):
    return _report_output(matrix_ansatz.check_ansatz(_require(args.lam, '--lambda'), args.trunc))


COMMANDS = {
    'enumerate': _enumerate,
    'fmu': _fmu,
    'zlambda': _zlambda,
    'nonsym': _nonsym,
    'verify-qkz': _verify_qkz,
    'tableaux': _tableaux,
    'stationary': _stationary,
    'martin-check': _martin_check,
    'ansatz': _ansatz,
}


def run(argv=None):
    """
    Parses argv, runs one command and writes its output.

    Returns 0 on success, 2 when a verification fails and 1 on usage errors.
    """
    try:
        args = _get_args(argv)
        config = utilities.load_config(args.config_path) if os.path.exists(args.config_path) else {}
        defaults = dict({'format': 'text', 't': '1/2', 'seed': asep_chain.SEED}, **config.get('defaults', {}))
        output_format = args.format or defaults['format']
        text, data, passed = COMMANDS[args.command](args, defaults)
    except (UsageError, ValueError, TypeError, IndexError, ZeroDivisionError) as error:
        sys.stderr.write('error: {}\n'.format(error))
        return EXIT_USAGE
    except (CharacterizationFailed, TruncationUnstable) as error:
        logging.info('verification failed: {}'.format(error))
        sys.stderr.write('verification failed: {}\n'.format(error))
        return EXIT_FAILED
    utilities.write_output(utilities.dump_json(data) if output_format == 'json' else text, args.out)
    logging.info('{} finished, passed={}'.format(args.command, passed))
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    try:
        args = _get_args()
    except UsageError as error:
        sys.stderr.write('error: {}\n'.format(error))
        sys.exit(EXIT_USAGE)
    log_filename = args.log_path
    os.makedirs(os.path.dirname(log_filename), exist_ok=True)
    logging.basicConfig(filename=log_filename, filemode='w+', level=logging.INFO)
    sys.exit(run())
