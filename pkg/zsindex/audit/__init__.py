#!/usr/bin/env python
# -*- coding: utf-8 -*-

# audit - audit handler package
# available under the ISC license, see LICENSE

import importlib
import json

AUDITS = ('s0s1', 'starsum', 'kstar', 'relations', 'theorem')

audit_handlers = dict()


# @brief find or create the audit handler for the given settings
# @param settings the audit options (the 'audit' key selects the handler module)
def audit_handler(settings):
    key = json.dumps(settings, sort_keys=True)
    if key in audit_handlers:
        return audit_handlers[key]
    else:
        name = settings.get("audit")
        if name not in AUDITS:
            raise ValueError("Unknown audit: {}".format(name))

        handler_module = importlib.import_module("zsindex.audit.{0}".format(name))
        handler_class = getattr(handler_module, "AuditHandler")
        handler_obj = handler_class(settings)
        audit_handlers[key] = handler_obj
        return handler_obj
