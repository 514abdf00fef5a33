# -*- coding: utf-8 -*-
import itertools
import logging

import numpy as np

from .baseapi import Error, check_cap, VERTEX_CAP_ENV_VAR
from .Combinatorics import (bits, popcount, enumerate_k_subsets,
                            subset_elements, to_mask)
from .FamilySpec import (FamilySpec, GENERALIZED_JOHNSON,
                         GENERALIZED_GRASSMANN, HAMMING)
from .Field import field_table
from .Subspace import enumerate_k_subspaces, span_points

log = logging.getLogger(__name__)

# rows of the intersection matrix computed per numpy block
BLOCK_ROWS = 1024


class GraphError(Error):
    pass


class Graph(object):
    """
    A simple graph on vertices 0..v_count-1.

    Args:
        v_count (int): number of vertices
        adj (list): adj[v] is an int whose bit w is set iff v ~ w
        labels (list, optional): human readable vertex labels, defaulting
            to the vertex ids
        spec (FamilySpec, optional): provenance of a family graph
    """
    def __init__(self, v_count, adj, labels=None, spec=None):
        self.v_count = v_count
        self.adj = list(adj)
        self.labels = list(labels) if labels is not None \
            else list(range(v_count))
        self.spec = spec
        self._index = None

    def validate(self):
        """Raises GraphError unless the graph is simple and well labeled."""
        if len(self.adj) != self.v_count or len(self.labels) != self.v_count:
            raise GraphError("expected %s adjacency rows and labels, got %s "
                             "and %s" % (self.v_count, len(self.adj),
                                         len(self.labels)))
        full = (1 << self.v_count) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError("row %s has bits beyond v_count" % v)
            if row >> v & 1:
                raise GraphError("loop at vertex %s" % v)
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError("edge %s-%s is not symmetric" % (v, w))
        if len(set(self.labels)) != self.v_count:
            raise GraphError("vertex labels are not distinct")
        return True

    @property
    def full_mask(self):
        return (1 << self.v_count) - 1

    def neighbors(self, v):
        return list(bits(self.adj[v]))

    def has_edge(self, v, w):
        return bool(self.adj[v] >> w & 1)

    def degree(self, v):
        return popcount(self.adj[v])

    def degrees(self):
        return [popcount(row) for row in self.adj]

    def edge_count(self):
        return sum(self.degrees()) // 2

    def edges(self):
        """Yields each edge once as (v, w) with v < w."""
        for v, row in enumerate(self.adj):
            for w in bits(row >> (v + 1)):
                yield v, v + 1 + w

    def index_of(self, label):
        if self._index is None:
            self._index = dict((lab, i) for i, lab in enumerate(self.labels))
        try:
            return self._index[label]
        except KeyError:
            raise GraphError("no vertex labeled %r" % (label,))

    def ids_of(self, labels):
        return [self.index_of(label) for label in labels]

    def mask_of(self, vertices):
        return to_mask(vertices)

    def adjacency_matrix(self):
        A = np.zeros((self.v_count, self.v_count), dtype=bool)
        for v, w in self.edges():
            A[v, w] = A[w, v] = True
        return A

    def __getstate__(self):
        state = self.__dict__.copy()
        state['_index'] = None
        return state

    def __str__(self):
        name = str(self.spec) if self.spec is not None else "graph"
        return "<Graph: %s, %s vertices, %s edges>" % (
            name, self.v_count, self.edge_count())

    def __repr__(self):
        return str(self)


def _rows_to_masks(block):
    """Turns the rows of a boolean numpy array into int bitsets."""
    packed = np.packbits(block, axis=1, bitorder='little')
    return [int.from_bytes(row.tobytes(), 'little') for row in packed]


def _adjacency_from_indicator(P, allowed):
    """
        P is a 0/1 matrix with one row per vertex. Vertices u, v are
        adjacent iff (P P^T)[u, v] is in allowed. Computed in row blocks.
    """
    P = P.astype(np.float64)
    allowed = np.array(sorted(allowed), dtype=np.float64)
    adj = []
    for start in range(0, P.shape[0], BLOCK_ROWS):
        counts = np.rint(P[start:start + BLOCK_ROWS] @ P.T)
        block = np.isin(counts, allowed)
        rows = np.arange(block.shape[0])
        block[rows, start + rows] = False
        adj.extend(_rows_to_masks(block))
    return adj


def build_generalized_johnson(spec, cap=None):
    """
        J_S(n,k): the k-subsets of [n] in colex order, u ~ v iff
        |u ∩ v| is in S.
    """
    spec.validate()
    if spec.family != GENERALIZED_JOHNSON:
        raise GraphError("%r is not a generalized Johnson spec" % spec)
    n, k = spec.n, spec.k
    subsets = enumerate_k_subsets(n, k, cap)

    M = np.zeros((len(subsets), n), dtype=np.uint8)
    for i, mask in enumerate(subsets):
        M[i, list(bits(mask))] = 1
    adj = _adjacency_from_indicator(M, spec.S)

    labels = [subset_elements(mask) for mask in subsets]
    graph = Graph(len(subsets), adj, labels, spec)
    log.debug("built %s", graph)
    return graph


def build_generalized_grassmann(spec, cap=None):
    """
        J_{q,S}(n,k): the k-subspaces of GF(q)^n in RREF order, u ~ v iff
        dim(u ∩ v) is in S. Two subspaces share exactly q^dim(u ∩ v)
        vectors, so intersection dimensions come from point counts.
    """
    spec.validate()
    if spec.family != GENERALIZED_GRASSMANN:
        raise GraphError("%r is not a generalized Grassmann spec" % spec)
    n, k, q = spec.n, spec.k, spec.q
    field = field_table(q)
    spaces = enumerate_k_subspaces(n, k, q, cap, field)

    P = np.zeros((len(spaces), q ** n), dtype=np.float32)
    for i, U in enumerate(spaces):
        P[i, span_points(U.rows, n, field)] = 1
    adj = _adjacency_from_indicator(P, [q ** s for s in spec.S])

    labels = [U.rows for U in spaces]
    graph = Graph(len(spaces), adj, labels, spec)
    log.debug("built %s", graph)
    return graph


def hamming_index(digits, q):
    """Vertex id of a tuple; the last coordinate is most significant."""
    index = 0
    for a in reversed(digits):
        index = index * q + a
    return index


def hamming_digits(index, n, q):
    digits = []
    for _ in range(n):
        index, a = divmod(index, q)
        digits.append(a)
    return tuple(digits)


def build_hamming(n, q, cap=None):
    """H(n,q): q-ary n-tuples, adjacent iff they differ in one coordinate."""
    spec = FamilySpec(HAMMING, n, q=q)
    spec.validate()
    v_count = check_cap(q ** n, VERTEX_CAP_ENV_VAR, cap)

    adj = []
    for v in range(v_count):
        row = 0
        rest = v
        weight = 1
        for _ in range(n):
            rest, a = divmod(rest, q)
            base = v - a * weight
            for b in range(q):
                if b != a:
                    row |= 1 << (base + b * weight)
            weight *= q
        adj.append(row)

    labels = [hamming_digits(v, n, q) for v in range(v_count)]
    graph = Graph(v_count, adj, labels, spec)
    log.debug("built %s", graph)
    return graph


def build_graph(spec, cap=None):
    """Dispatches on spec.family."""
    if spec.family == GENERALIZED_JOHNSON:
        return build_generalized_johnson(spec, cap)
    if spec.family == GENERALIZED_GRASSMANN:
        return build_generalized_grassmann(spec, cap)
    if spec.family == HAMMING:
        return build_hamming(spec.n, spec.q, cap)
    raise GraphError("unknown family %r" % spec.family)


def from_edges(v_count, edges, labels=None):
    adj = [0] * v_count
    for v, w in edges:
        if v == w:
            raise GraphError("loop at vertex %s" % v)
        if not (0 <= v < v_count and 0 <= w < v_count):
            raise GraphError("edge %s-%s out of range" % (v, w))
        adj[v] |= 1 << w
        adj[w] |= 1 << v
    return Graph(v_count, adj, labels)


def complete_graph(m):
    full = (1 << m) - 1
    return Graph(m, [full ^ (1 << v) for v in range(m)])


def path_graph(m):
    return from_edges(m, [(v, v + 1) for v in range(m - 1)])


def cycle_graph(m):
    if m < 3:
        raise GraphError("a cycle needs at least 3 vertices, got %s" % m)
    return from_edges(m, [(v, (v + 1) % m) for v in range(m)])


def cartesian_product(G, H, cap=None):
    """
        G □ H. Vertex (g, h) gets id g + |G|·h, so the copies of G are
        contiguous blocks.
    """
    n_g = G.v_count
    v_count = check_cap(n_g * H.v_count, VERTEX_CAP_ENV_VAR, cap)
    adj = []
    for h in range(H.v_count):
        for g in range(n_g):
            row = G.adj[g] << (n_g * h)
            for h2 in bits(H.adj[h]):
                row |= 1 << (g + n_g * h2)
            adj.append(row)
    labels = [(gl, hl) for hl in H.labels for gl in G.labels]
    return Graph(v_count, adj, labels)


def induced_subgraph(G, vertex_set):
    """G[vertex_set] with vertices renumbered in increasing id order."""
    keep = sorted(set(vertex_set))
    if keep and (keep[0] < 0 or keep[-1] >= G.v_count):
        raise GraphError("vertex set is not a subset of V")
    position = dict((v, i) for i, v in enumerate(keep))
    keep_mask = to_mask(keep)
    adj = []
    for v in keep:
        adj.append(to_mask(position[w] for w in bits(G.adj[v] & keep_mask)))
    return Graph(len(keep), adj, [G.labels[v] for v in keep])


def reachable(G, source, within=None):
    """Bitset of vertices reachable from source inside the mask within."""
    within = G.full_mask if within is None else within
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_connected(G):
    if G.v_count == 0:
        return True
    return reachable(G, 0) == G.full_mask


def is_connected_set(G, mask):
    """G[mask] is connected (the empty set counts as connected)."""
    if not mask:
        return True
    source = (mask & -mask).bit_length() - 1
    return reachable(G, source, mask) == mask


def has_isolated_vertex(G):
    return any(row == 0 for row in G.adj)


def has_isolated_in_set(G, mask):
    """Some vertex of G[mask] has no neighbour inside mask."""
    return any(not G.adj[v] & mask for v in bits(mask))


def components(G):
    left = G.full_mask
    result = []
    while left:
        source = (left & -left).bit_length() - 1
        comp = reachable(G, source)
        result.append(comp)
        left &= ~comp
    return result


def degree_sequence(G):
    return sorted(G.degrees())


def regular_degree(G):
    """The common degree, or None when degrees differ."""
    degrees = set(G.degrees())
    if len(degrees) == 1:
        return degrees.pop()
    return None if degrees else 0


def twin_masks(G):
    """
        twins[u] has bit w set iff G(u) \\ {w} == G(w) \\ {u}, u != w.
    """
    twins = [0] * G.v_count
    for u, w in itertools.combinations(range(G.v_count), 2):
        if G.adj[u] & ~(1 << w) == G.adj[w] & ~(1 << u):
            twins[u] |= 1 << w
            twins[w] |= 1 << u
    return twins
