#!/usr/bin/env python
# -*- coding: utf-8 -*-

# config - zsindex command line and config file parser
# available under the ISC license, see LICENSE

import argparse
import io
import json
import os

from zsindex.audit import AUDITS

# Configuration defaults to use if not specified otherwise
DEFAULT_WORKERS = 1
DEFAULT_OUTPUT = "jsonl"
DEFAULT_H = 1001
DEFAULT_SEED = 0
WORKERS_ENV = "ZSINDEX_WORKERS"

# Keys carried into the runtime configuration per command (besides command/output/quiet)
COMMAND_KEYS = {
    'index': ('n', 'seq'),
    'enumerate': ('n', 'exploratory', 'normalized'),
    'verify': ('n_min', 'n_max', 'workers', 'checkpoint', 'exploratory'),
    'constants': (),
}
AUDIT_KEYS = {
    's0s1': ('n', 'a', 'b', 'H'),
    'starsum': ('n', 'A', 'H'),
    'kstar': ('n', 'A', 'H', 'k'),
    'relations': (),
    'theorem': ('n', 'a', 'b', 'H'),
}
RANDOM_KEYS = ('random', 'seed', 'n_max', 'H_min', 'H_max')


# @brief parse "1,1,2,3" into a list of integers
def int_list(value):
    try:
        return [int(x) for x in value.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got '{}'".format(value))


def positive_int(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got '{}'".format(value))
    if number < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got {}".format(number))
    return number


# @brief update config[name] with value from command line>config file>default
def update_config_value(config, name, args, fileconfig, default):
    value = getattr(args, name, None)
    if value is not None:
        config[name] = value
    else:
        config[name] = fileconfig.get(name, default)


# @brief load a JSON (or, failing that, YAML) configuration file
def load_config_file(path):
    if not path:
        return dict()
    with io.open(path) as config_fd:
        try:
            fileconfig = json.load(config_fd)
        except ValueError:
            import yaml
            config_fd.seek(0)
            fileconfig = yaml.safe_load(config_fd)
    if not isinstance(fileconfig, dict):
        raise ValueError("Configuration file {} does not contain a mapping".format(path))
    return fileconfig


def _default_workers():
    value = os.environ.get(WORKERS_ENV)
    if value is None:
        return DEFAULT_WORKERS
    try:
        workers = int(value)
    except ValueError:
        raise ValueError("{} must be a positive integer, got '{}'".format(WORKERS_ENV, value))
    if workers < 1:
        raise ValueError("{} must be a positive integer, got {}".format(WORKERS_ENV, workers))
    return workers


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-c", "--config-file", nargs="?", help="configuration file (JSON or YAML)")
    common.add_argument("--output", choices=("jsonl", "csv"), help="record format (default='{}')".format(DEFAULT_OUTPUT))
    common.add_argument("--quiet", action="store_true", default=None, help="only log warnings and errors")
    return common


def _random_parser():
    batch = argparse.ArgumentParser(add_help=False)
    batch.add_argument("--random", type=positive_int, metavar="COUNT", help="audit COUNT random admissible instances")
    batch.add_argument("--seed", type=int, help="random seed (default={})".format(DEFAULT_SEED))
    batch.add_argument("--n-max", type=positive_int, help="largest modulus drawn in random mode")
    batch.add_argument("--H-min", type=positive_int, help="H is drawn above this value in random mode")
    batch.add_argument("--H-max", type=positive_int, help="largest H drawn in random mode")
    return batch


def build_parser():
    common = _common_parser()
    batch = _random_parser()
    parser = argparse.ArgumentParser(prog="zsindex",
                                     description="zsindex - index of zero-sum sequences over Z/n and audits of its lower bounds")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    p = commands.add_parser("index", parents=[common], help="index of a single sequence")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--seq", type=int_list, required=True, help="four entries, e.g. 1,1,2,3")

    p = commands.add_parser("enumerate", parents=[common], help="list the minimal zero-sum quadruples of one modulus")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--exploratory", action="store_true", default=None, help="allow entries sharing a factor with n")
    p.add_argument("--normalized", action="store_true", default=None, help="only sequences containing the entry 1")

    p = commands.add_parser("verify", parents=[common], help="verify that every minimal quadruple has index 1")
    p.add_argument("--n-min", type=positive_int, required=True)
    p.add_argument("--n-max", type=positive_int, required=True)
    p.add_argument("--workers", type=positive_int,
                   help="worker processes (default=${} or {})".format(WORKERS_ENV, DEFAULT_WORKERS))
    p.add_argument("--checkpoint", nargs="?", help="append completed n to this file and resume from it")
    p.add_argument("--exploratory", action="store_true", default=None, help="include n with gcd(n, 6) != 1")

    p = commands.add_parser("audit", help="check one of the bound inequalities")
    audits = p.add_subparsers(dest="audit", metavar="AUDIT")
    audits.required = True
    for name in AUDITS:
        parents = [common] if name == 'relations' else [common, batch]
        ap = audits.add_parser(name, parents=parents)
        for key in AUDIT_KEYS[name]:
            if key == 'k':
                ap.add_argument("--k", type=int)
            elif key == 'n':
                ap.add_argument("--n", type=positive_int)
            else:
                ap.add_argument("--{}".format(key), type=positive_int if key == 'H' else int)

    commands.add_parser("constants", parents=[common], help="recompute the constants ledger")
    return parser


# @brief parse the command line into the runtime configuration
# @param argv argument list (defaults to sys.argv)
def load(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fileconfig = load_config_file(args.config_file)

    runtimeconfig = dict()
    runtimeconfig['command'] = args.command
    update_config_value(runtimeconfig, 'output', args, fileconfig, DEFAULT_OUTPUT)
    update_config_value(runtimeconfig, 'quiet', args, fileconfig, False)
    if runtimeconfig['output'] not in ('jsonl', 'csv'):
        parser.error("unsupported output format '{}'".format(runtimeconfig['output']))

    if args.command == 'audit':
        runtimeconfig['audit'] = args.audit
        keys = AUDIT_KEYS[args.audit] + (RANDOM_KEYS if args.audit != 'relations' else ())
    else:
        keys = COMMAND_KEYS[args.command]

    for key in keys:
        if key == 'workers':
            update_config_value(runtimeconfig, key, args, fileconfig, _default_workers())
        elif key == 'H':
            update_config_value(runtimeconfig, key, args, fileconfig, DEFAULT_H)
        elif key == 'seed':
            update_config_value(runtimeconfig, key, args, fileconfig, DEFAULT_SEED)
        elif key in ('exploratory', 'normalized'):
            update_config_value(runtimeconfig, key, args, fileconfig, False)
        elif key in ('n', 'seq', 'n_min', 'a', 'b', 'A', 'k'):
            # instance parameters only come from the command line
            runtimeconfig[key] = getattr(args, key, None)
        else:
            update_config_value(runtimeconfig, key, args, fileconfig, None)

    if args.command == 'index' and len(runtimeconfig['seq']) != 4:
        parser.error("--seq needs exactly 4 entries, got {}".format(len(runtimeconfig['seq'])))
    if args.command == 'verify' and not 5 <= runtimeconfig['n_min'] <= runtimeconfig['n_max']:
        parser.error("verification range needs 5 <= n-min <= n-max")
    if int(runtimeconfig.get('workers') or 1) < 1:
        parser.error("workers must be positive")

    return runtimeconfig
