#!/usr/bin/env python
# -*- coding: utf-8 -*-

# zsindex - index of zero-sum sequences over Z/n and numerical audits of its lower bounds
# available under the ISC license, see LICENSE

from zsindex import configuration, tools
from zsindex.arith import Modulus
from zsindex.audit import audit_handler
from zsindex.audit.ledger import constants_ledger
from zsindex.audit.sums import UniquenessError
from zsindex.tools import log
from zsindex.zerosum import (ZSequence, enumerate_minimal_quadruples, index, index_with_witness, is_minimal,
                             is_zero_sum, verify_range)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


# @brief index of a single sequence
# @param config the runtime configuration
# @param writer the record writer
def cmd_index(config, writer):
    s = ZSequence(Modulus(config['n']), config['seq'])
    record = {"n": s.n, "seq": list(s.entries), "zero_sum": is_zero_sum(s),
              "minimal": None, "index": None, "witness_g": None}
    if not record['zero_sum']:
        writer.write(record)
        log("{} is not a zero-sum sequence".format(s), error=True)
        return EXIT_USAGE
    record['minimal'] = is_minimal(s)
    record['index'], record['witness_g'] = index_with_witness(s)
    writer.write(record)
    return EXIT_OK


# @brief stream the minimal quadruples of one modulus together with their index
def cmd_enumerate(config, writer):
    m = Modulus(config['n'])
    count = 0
    for s in enumerate_minimal_quadruples(m, coprime_only=not config['exploratory'],
                                          normalized=config['normalized']):
        writer.write({"n": m.n, "seq": list(s.entries), "index": index(s)})
        count += 1
    log("n={}: {} minimal quadruples".format(m.n, count))
    return EXIT_OK


# @brief verify a range of moduli; exit 1 as soon as any witness was reported
def cmd_verify(config, writer):
    witnesses = 0
    for report in verify_range(config['n_min'], config['n_max'], workers=int(config['workers']),
                               checkpoint=config['checkpoint'], exploratory=config['exploratory']):
        writer.write(report.to_record())
        if not report.all_index_one:
            witnesses += 1
            log("n={}: {} has index {}".format(report.n, report.witness, report.witness_index), warning=True)
    if witnesses:
        log("{} moduli with a sequence of index greater than 1".format(witnesses), warning=True)
        return EXIT_VIOLATION
    return EXIT_OK


# @brief run one audit, for a single instance or a random batch
def cmd_audit(config, writer):
    settings = {k: v for k, v in config.items() if k not in ('command', 'output', 'quiet')}
    handler = audit_handler(settings)
    batch = bool(config.get('random'))
    failed = 0
    exceptions = list()
    for instance in handler.instances():
        try:
            reports = handler.reports(instance)
        except UniquenessError as e:
            if not batch:
                raise
            log("Audit of {} found several k*: {}".format(instance, e), warning=True)
            failed += 1
            continue
        except Exception as e:
            if not batch:
                raise
            log("Audit of {} failed".format(instance), e, error=True)
            exceptions.append(e)
            continue
        for report in reports:
            writer.write(report.to_record())
            if not report.passed:
                failed += 1
                log("{} violated: lhs={} rhs={} ({})".format(report.name, report.lhs, report.rhs, report.inputs),
                    warning=True)

    # throw a RuntimeError with all exceptions caught while working if there were any
    if len(exceptions) > 0:
        raise RuntimeError("{} exception(s) occurred during the audit batch".format(len(exceptions)))
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_constants(config, writer):
    ledger = constants_ledger()
    for record in ledger.to_records():
        writer.write(record)
        if not record['pass']:
            log("Ledger entry {} does not satisfy {} {}".format(record['name'], record['relation'], record['claim']),
                warning=True)
    return EXIT_OK if ledger.satisfied else EXIT_VIOLATION


COMMAND_HANDLERS = {
    'index': cmd_index,
    'enumerate': cmd_enumerate,
    'verify': cmd_verify,
    'audit': cmd_audit,
    'constants': cmd_constants,
}


# @brief command line entry point
# @param argv argument list (defaults to sys.argv)
# @return the process exit code
def main(argv=None):
    try:
        config = configuration.load(argv)
    except SystemExit as e:
        # argparse reports usage errors with 2 and --help with 0
        return EXIT_OK if not e.code else EXIT_USAGE
    except (IOError, OSError, ValueError) as e:
        log("Could not load configuration", e, error=True)
        return EXIT_USAGE

    tools.set_quiet(config['quiet'])
    try:
        writer = tools.RecordWriter(config['output'])
        return COMMAND_HANDLERS[config['command']](config, writer)
    except UniquenessError as e:
        log("Violation: {}".format(e), error=True)
        return EXIT_VIOLATION
    except tools.CheckpointError as e:
        log("Checkpoint failure: {}".format(e), error=True)
        return EXIT_USAGE
    except ValueError as e:
        log("Invalid input: {}".format(e), error=True)
        return EXIT_USAGE
    except Exception as e:
        log("{} failed".format(config['command']), e, error=True)
        return EXIT_USAGE
