# -*- coding: utf-8 -*-
"""
The JSON report every command emits. The layout is documented in
docs/report_schema.rst; bump SCHEMA_VERSION on incompatible changes.
"""
import json
import math
import time

import jsonpickle

from .baseapi import JSONReadError

SCHEMA_VERSION = 1

# certificate kinds understood by Manager.replay
LEADER_SET = "leader_set"
FORCING_TRACE = "forcing_trace"
WALK = "walk"
DOMINATION_SEQUENCE = "domination_sequence"


def plain(value):
    """
        Turns a value into JSON friendly data: tuples become lists,
        infinities the strings "inf" and "-inf", sets sorted lists.
    """
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, (list, tuple)):
        return [plain(x) for x in value]
    if isinstance(value, (set, frozenset)):
        return sorted(plain(x) for x in value)
    if isinstance(value, dict):
        return dict((str(k), plain(v)) for k, v in value.items())
    return value


def human_labels(graph, vertices):
    """Labels of the given ids: element lists, RREF rows or digit arrays."""
    return [plain(graph.labels[v]) for v in vertices]


class Report(object):
    """
    Args:
        command (list): the command line or sweep row that produced it

    Attributes:
        * spec (dict): FamilySpec.to_dict() of the graph, if any
        * values (dict): computed numbers
        * predicted (dict): closed forms with their hypothesis tags
        * certificates (list): certificates in human labels
        * verification (dict): verdicts
        * timing (dict): seconds per phase
        * capped (bool): a search hit a cap and values are bounds only
    """
    def __init__(self, **kwargs):
        self.schema_version = SCHEMA_VERSION
        self.command = None
        self.spec = None
        self.values = {}
        self.predicted = {}
        self.certificates = []
        self.verification = {}
        self.timing = {}
        self.capped = False
        self.notes = []

        for attr in kwargs.keys():
            setattr(self, attr, kwargs[attr])
        self._started = time.time()

    def set_spec(self, spec):
        self.spec = spec.to_dict() if spec is not None else None

    def add_certificate(self, kind, graph, vertices, **extra):
        """vertices is an ordered list of ids, stored as labels and ids."""
        certificate = {"kind": kind, "ids": list(vertices),
                       "labels": human_labels(graph, vertices)}
        certificate.update(extra)
        self.certificates.append(certificate)
        return certificate

    def add_trace(self, graph, trace, name=None):
        return self.add_certificate(
            FORCING_TRACE, graph, trace.initial, name=name,
            steps=[[v, w] for v, w in trace.steps],
            step_labels=[[plain(graph.labels[v]), plain(graph.labels[w])]
                         for v, w in trace.steps])

    def stop_clock(self, phase="total"):
        self.timing[phase] = round(time.time() - self._started, 6)

    @property
    def ok(self):
        """False when some verdict failed."""
        def flat(value):
            if isinstance(value, dict):
                return all(flat(v) for v in value.values())
            return value is not False
        return flat(self.verification)

    def to_dict(self):
        data = dict((k, v) for k, v in self.__dict__.items()
                    if not k.startswith("_"))
        return plain(data)

    def to_json(self):
        return jsonpickle.encode(self.to_dict(), unpicklable=False)

    def save(self, path):
        with open(path, "w") as f:
            f.write(self.to_json())

    @classmethod
    def load(cls, path):
        try:
            with open(path, "r") as f:
                data = json.load(f)
        except ValueError as e:
            raise JSONReadError("%s: %s" % (path, e))
        if not isinstance(data, dict):
            raise JSONReadError("%s: a report is a JSON object" % path)
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise JSONReadError("%s: unsupported schema version %r" %
                                (path, version))
        return cls(**data)

    def __str__(self):
        return "<Report: %s>" % (self.command,)
