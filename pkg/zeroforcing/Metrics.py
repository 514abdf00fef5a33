# -*- coding: utf-8 -*-
import logging

from .baseapi import Error, HypothesisError
from .Combinatorics import bits
from .FamilySpec import GENERALIZED_GRASSMANN
from .Field import field_table
from .Subspace import (SubspaceRep, intersection_basis, extend_within,
                       extend_avoiding)

log = logging.getLogger(__name__)

INF = float("inf")

COMPLETE = "complete"
ADJACENT_OR_TWO = "adjacent_or_two"
LONG_DISTANCE = "long_distance"


class WalkError(Error):
    pass


def bfs_distances(G, v):
    """Distances from v, INF for unreachable vertices."""
    dist = [INF] * G.v_count
    dist[v] = 0
    seen = 1 << v
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= G.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
        for u in bits(frontier):
            dist[u] = d
    return dist


def eccentricity(G, v):
    """Largest distance from v, INF when some vertex is unreachable."""
    seen = 1 << v
    frontier = seen
    d = 0
    while True:
        nxt = 0
        for u in bits(frontier):
            nxt |= G.adj[u]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        d += 1
    return d if seen == G.full_mask else INF


def diameter(G):
    best = 0
    for v in range(G.v_count):
        ecc = eccentricity(G, v)
        if ecc == INF:
            return INF
        best = max(best, ecc)
    return best


def girth(G):
    """
        Length of a shortest cycle (INF for forests). A BFS from every
        vertex; a non-tree edge u-w closes a walk of length
        dist[u] + dist[w] + 1, and the minimum over all sources is exact.
    """
    best = INF
    for source in range(G.v_count):
        dist = {source: 0}
        parent = {source: None}
        queue = [source]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(G.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


def _check_grassmann(spec):
    spec.validate()
    if spec.family != GENERALIZED_GRASSMANN:
        raise HypothesisError("%s is not a generalized Grassmann spec" % spec)
    if not spec.is_proper:
        raise HypothesisError("S must be a proper subset of {0..%s}" %
                              (spec.k - 1))


def grassmann_distance_formula(spec, t_int):
    """
        Distance between two k-spaces of J_{q,S}(n,k), n >= 2k, meeting in
        dimension t_int: 0 when equal, 1 when t_int is in S, 2 when
        s <= t_int and t_int is not in S, else ceil((k - t_int)/(k - s)).
    """
    _check_grassmann(spec)
    n, k, s = spec.n, spec.k, spec.s
    if n < 2 * k:
        raise HypothesisError("n >= 2k violated: %s < %s" % (n, 2 * k))
    if not 0 <= t_int <= k:
        raise HypothesisError("intersection dimension %s outside [0, %s]" %
                              (t_int, k))
    if t_int == k:
        return 0
    if t_int in spec.S:
        return 1
    if t_int >= s:
        return 2
    return -(-(k - t_int) // (k - s))


def effective_S(spec):
    """
        The part of S that can occur between distinct vertices: intersection
        dimensions of distinct k-spaces lie in [max(0, 2k - n), k - 1].
    """
    low = max(0, 2 * spec.k - spec.n)
    return tuple(x for x in spec.S if low <= x <= spec.k - 1)


def grassmann_diameter_evaluation(spec):
    """
        Returns (diameter, tag). tag is COMPLETE when every achievable
        intersection dimension is adjacent, LONG_DISTANCE when the
        ceiling term applies and ADJACENT_OR_TWO for the value 2.
    """
    _check_grassmann(spec)
    n, k = spec.n, spec.k
    if n < 2 * k - spec.t:
        raise HypothesisError("n >= 2k - max(S) violated: %s < %s" %
                              (n, 2 * k - spec.t))
    S_eff = effective_S(spec)
    low = max(0, 2 * k - n)
    if not S_eff:
        raise HypothesisError("no achievable intersection dimension in S")
    if len(S_eff) == k - low:
        return 1, COMPLETE
    s = S_eff[0]
    if s in (0, 2 * k - n):
        return 2, ADJACENT_OR_TWO
    return -(-min(k, n - k) // (k - s)), LONG_DISTANCE


def grassmann_diameter_formula(spec):
    """2 if s is 0 or 2k - n, else ceil(min(k, n - k)/(k - s))."""
    return grassmann_diameter_evaluation(spec)[0]


class WalkCertificate(object):
    """
    A walk in a graph.

    Args:
        vertices (list): vertex ids v, u_1, ..., w
        claimed_length (int): number of steps the walk should have
    """
    def __init__(self, vertices, claimed_length):
        self.vertices = list(vertices)
        self.claimed_length = claimed_length

    @property
    def length(self):
        return len(self.vertices) - 1

    def validate(self, G):
        if self.length != self.claimed_length:
            raise WalkError("walk has %s steps, claimed %s" %
                            (self.length, self.claimed_length))
        for a, b in zip(self.vertices, self.vertices[1:]):
            if not G.has_edge(a, b):
                raise WalkError("%s and %s are not adjacent" % (a, b))
        return True

    def __str__(self):
        return "<WalkCertificate: %s>" % self.vertices


def _bridge(a, b, s, n, field):
    """
        A k-space meeting a and b in s-spaces, for two k-spaces with
        dim(a ∩ b) = t'. For t' < s it contains s-spaces of a and of b
        through a ∩ b, otherwise an s-space of a ∩ b; it meets a and b in
        nothing more.
    """
    k = a.k
    common = intersection_basis(a, b, field)
    if len(common) >= s:
        pi = common[:s]
        core = list(pi)
    else:
        core = common + extend_within(common, a, s, field) \
            + extend_within(common, b, s, field)
    rows = extend_avoiding(core, [a.rows, b.rows], k - len(core), n, field)
    return SubspaceRep.from_vectors(rows, n, a.q, field)


def build_distance_walk(G, v, w):
    """
        A walk of length dist(v, w) between vertices v and w of a generalized
        Grassmann graph with n >= 2k, following the basis mixing argument:
        v = <x, y>, w = <x, z> with x a basis of v ∩ w, and
        u_i = <x, y_{i(k-s)+1..k-t}, z_1..z_{i(k-s)}>, closed by one
        intermediate vertex.
    """
    spec = G.spec
    if spec is None:
        raise HypothesisError("walks need a generalized Grassmann graph")
    _check_grassmann(spec)
    n, k, q, s = spec.n, spec.k, spec.q, spec.s
    if n < 2 * k:
        raise HypothesisError("n >= 2k violated: %s < %s" % (n, 2 * k))
    field = field_table(q)

    V = SubspaceRep(n, q, G.labels[v])
    W = SubspaceRep(n, q, G.labels[w])
    x = intersection_basis(V, W, field)
    t_int = len(x)
    target = grassmann_distance_formula(spec, t_int)

    if target == 0:
        return WalkCertificate([v], 0)
    if target == 1:
        return WalkCertificate([v, w], 1)

    walk = [v]
    last = V
    if t_int < s:
        y = extend_within(x, V, k, field)
        z = extend_within(x, W, k, field)
        step = k - s
        for i in range(1, target - 1):
            U = SubspaceRep.from_vectors(x + y[i * step:] + z[:i * step],
                                         n, q, field)
            walk.append(G.index_of(U.rows))
            last = U
    middle = _bridge(last, W, s, n, field)
    walk.append(G.index_of(middle.rows))
    walk.append(w)

    cert = WalkCertificate(walk, target)
    log.debug("walk %s -> %s: %s", v, w, walk)
    return cert
