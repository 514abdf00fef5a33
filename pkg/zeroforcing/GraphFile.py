# -*- coding: utf-8 -*-
"""
Graph persistence.

The binary cache is a fixed header (magic, format version, v_count, length
of the JSON block) followed by a JSON block holding the FamilySpec and the
vertex labels, followed by v_count adjacency rows packed with
numpy.packbits (little bit order, each row padded to whole bytes).

The edge list is plain text: ``#`` comment lines carry v_count and the
labels, every other line is one edge as two 0-based vertex ids.
"""
import json
import logging
import struct

import numpy as np

from .baseapi import DataReadError, JSONReadError
from .FamilySpec import FamilySpec
from .Graph import Graph, GraphError

log = logging.getLogger(__name__)

MAGIC = b"ZFGR"
FORMAT_VERSION = 1
HEADER = struct.Struct("<4sHII")


def _tupleize(value):
    if isinstance(value, list):
        return tuple(_tupleize(x) for x in value)
    return value


def _listify(value):
    if isinstance(value, tuple):
        return [_listify(x) for x in value]
    return value


def save_graph(graph, path):
    meta = {
        "spec": graph.spec.to_dict() if graph.spec is not None else None,
        "labels": [_listify(label) for label in graph.labels],
    }
    meta_bytes = json.dumps(meta).encode("utf-8")
    packed = np.packbits(graph.adjacency_matrix(), axis=1, bitorder='little')

    with open(path, "wb") as f:
        f.write(HEADER.pack(MAGIC, FORMAT_VERSION, graph.v_count,
                            len(meta_bytes)))
        f.write(meta_bytes)
        f.write(packed.tobytes())
    log.debug("saved %s to %s", graph, path)


def load_graph(path):
    with open(path, "rb") as f:
        data = f.read()

    if len(data) < HEADER.size:
        raise DataReadError("%s: truncated header" % path)
    magic, version, v_count, meta_len = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise DataReadError("%s: not a graph cache file" % path)
    if version != FORMAT_VERSION:
        raise DataReadError("%s: unsupported format version %s" %
                            (path, version))

    offset = HEADER.size
    try:
        meta = json.loads(data[offset:offset + meta_len].decode("utf-8"))
    except ValueError as e:
        raise DataReadError("%s: corrupt metadata: %s" % (path, e))
    offset += meta_len

    row_bytes = (v_count + 7) // 8
    body = data[offset:]
    if len(body) != v_count * row_bytes:
        raise DataReadError("%s: expected %s bytes of adjacency, found %s" %
                            (path, v_count * row_bytes, len(body)))
    packed = np.frombuffer(body, dtype=np.uint8).reshape(v_count, row_bytes)
    adj = [int.from_bytes(row.tobytes(), 'little') for row in packed]

    spec = FamilySpec.from_dict(meta["spec"]) if meta.get("spec") else None
    labels = [_tupleize(label) for label in meta["labels"]]
    graph = Graph(v_count, adj, labels, spec)
    try:
        graph.validate()
    except GraphError as e:
        raise DataReadError("%s: %s" % (path, e))
    return graph


def write_edge_list(graph, path):
    with open(path, "w") as f:
        f.write("# zeroforcing edge list\n")
        if graph.spec is not None:
            f.write("# spec %s\n" % json.dumps(graph.spec.to_dict()))
        f.write("# v_count %s\n" % graph.v_count)
        for v, label in enumerate(graph.labels):
            f.write("# label %s %s\n" % (v, json.dumps(_listify(label))))
        for v, w in graph.edges():
            f.write("%s %s\n" % (v, w))


def read_edge_list(path):
    """
        Reads an edge list. Without a ``# v_count`` line the vertex count is
        one more than the largest id seen; missing labels default to ids.
    """
    v_count = None
    spec = None
    labels = {}
    edges = []
    with open(path, "r") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                if line.startswith("#"):
                    words = line[1:].split(None, 2)
                    if not words:
                        continue
                    if words[0] == "v_count":
                        v_count = int(words[1])
                    elif words[0] == "label":
                        labels[int(words[1])] = _tupleize(json.loads(words[2]))
                    elif words[0] == "spec":
                        spec = FamilySpec.from_dict(
                            json.loads(line[1:].split(None, 1)[1]))
                    continue
                v, w = [int(x) for x in line.split()]
            except (ValueError, IndexError, KeyError) as e:
                raise DataReadError("%s:%s: cannot parse %r (%s)" %
                                    (path, lineno, line, e))
            edges.append((v, w))

    if v_count is None:
        ids = [x for e in edges for x in e] + list(labels)
        v_count = max(ids) + 1 if ids else 0
    label_list = [labels.get(v, v) for v in range(v_count)]
    try:
        adj = [0] * v_count
        for v, w in edges:
            if v == w or not (0 <= v < v_count and 0 <= w < v_count):
                raise GraphError("bad edge %s-%s" % (v, w))
            adj[v] |= 1 << w
            adj[w] |= 1 << v
        graph = Graph(v_count, adj, label_list, spec)
        graph.validate()
    except GraphError as e:
        raise DataReadError("%s: %s" % (path, e))
    return graph


def read_vertex_set(path, graph):
    """
        Reads a vertex set for graph from JSON: {"labels": [...]},
        {"ids": [...]} or a bare list of labels. Returns sorted ids.
    """
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except ValueError as e:
        raise JSONReadError("%s: %s" % (path, e))

    if isinstance(data, dict) and "ids" in data:
        ids = [int(v) for v in data["ids"]]
        bad = [v for v in ids if not 0 <= v < graph.v_count]
        if bad:
            raise DataReadError("%s: ids out of range: %s" % (path, bad))
        return sorted(set(ids))

    labels = data.get("labels") if isinstance(data, dict) else data
    if not isinstance(labels, list):
        raise JSONReadError("%s: expected labels or ids" % path)
    try:
        return sorted(set(graph.ids_of(_tupleize(x) for x in labels)))
    except GraphError as e:
        raise DataReadError("%s: %s" % (path, e))


def write_vertex_set(graph, vertices, path):
    with open(path, "w") as f:
        json.dump({"labels": [_listify(graph.labels[v])
                              for v in sorted(vertices)]}, f)
