#!/usr/bin/env python
# -*- coding: utf-8 -*-

# zsindex - various support functions
# available under the ISC license, see LICENSE

import csv
import io
import json
import os
import sys
import traceback

# Messages without error/warning flag are dropped while quiet
_settings = {'quiet': False}


class CheckpointError(Exception):
    pass


# @brief a simple, portable indent function
def indent(text, spaces=0):
    ind = ' ' * spaces
    return os.linesep.join(ind + line for line in text.splitlines())


# @brief enable or disable informational log output
def set_quiet(quiet):
    _settings['quiet'] = bool(quiet)


# @brief wrapper for log output (stdout is reserved for records, so everything goes to stderr)
def log(msg, exc=None, error=False, warning=False):
    if error:
        prefix = "Error: "
    elif warning:
        prefix = "Warning: "
    else:
        if _settings['quiet']:
            return
        prefix = ""

    output = prefix + msg
    if exc:
        formatted_exc = traceback.format_exception(type(exc), exc, getattr(exc, '__traceback__', None))
        output += os.linesep + indent(''.join(formatted_exc), len(prefix))

    sys.stderr.write(output + os.linesep)
    sys.stderr.flush()  # force flush buffers after message was written for immediate display


# @brief flatten a record value for a csv cell
def _csv_cell(value):
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True, separators=(',', ':'))
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return value


# @brief writes one record per line in jsonl or csv format
class RecordWriter:
    def __init__(self, output_format='jsonl', stream=None):
        if output_format not in ('jsonl', 'csv'):
            raise ValueError("Unsupported output format: {}".format(output_format))
        self.output_format = output_format
        self.stream = stream if stream is not None else sys.stdout
        self._csv = None
        self._columns = None

    def write(self, record):
        if self.output_format == 'jsonl':
            self.stream.write(json.dumps(record, separators=(',', ':')) + '\n')
        else:
            if self._csv is None:
                self._columns = list(record.keys())
                self._csv = csv.writer(self.stream, lineterminator='\n')
                self._csv.writerow(self._columns)
            self._csv.writerow([_csv_cell(record.get(column)) for column in self._columns])
        self.stream.flush()


# @brief load completed entries from a checkpoint file
# @param path checkpoint location (missing file means nothing was completed yet)
# @return dict mapping n to (status, sequences_checked)
def read_checkpoint(path):
    done = dict()
    if not os.path.exists(path):
        return done
    try:
        with io.open(path, 'r', encoding='ascii') as f:
            for lineno, line in enumerate(f, 1):
                line = line.strip()
                if not line:
                    continue
                fields = line.split(',')
                if len(fields) != 3:
                    raise CheckpointError("Malformed checkpoint line {} in {}: {}".format(lineno, path, line))
                done[int(fields[0])] = (fields[1], int(fields[2]))
    except (IOError, OSError) as e:
        raise CheckpointError("Could not read checkpoint {}: {}".format(path, e))
    except ValueError as e:
        raise CheckpointError("Malformed checkpoint {}: {}".format(path, e))
    return done


# @brief make sure the checkpoint location can be appended to before any work starts
def ensure_checkpoint_writable(path):
    try:
        with io.open(path, 'a', encoding='ascii'):
            pass
    except (IOError, OSError) as e:
        raise CheckpointError("Checkpoint {} is not writable: {}".format(path, e))


# @brief append one completed entry, flushed to disk before returning
def append_checkpoint(path, n, status, sequences_checked):
    line = "{},{},{}\n".format(n, status, sequences_checked)
    try:
        with io.open(path, 'a', encoding='ascii') as f:
            f.write(line)
            f.flush()
            if hasattr(os, 'fsync'):
                os.fsync(f.fileno())
    except (IOError, OSError) as e:
        raise CheckpointError("Could not append to checkpoint {}: {}".format(path, e))
