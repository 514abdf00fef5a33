# -*- coding: utf-8 -*-
import logging

from .baseapi import Error, HypothesisError, check_cap, GRUNDY_CAP_ENV_VAR
from .Combinatorics import bits, popcount
from .Graph import has_isolated_vertex

GRUNDY = "grundy"
Z_GRUNDY = "z_grundy"

log = logging.getLogger(__name__)


class DominationError(Error):
    pass


class DominationSequence(object):
    """
    A (Z-)Grundy dominating sequence.

    Args:
        sequence (list): vertex ids v_1..v_m
        footprints (list): footprints[i] is the sorted list of vertices
            first dominated by sequence[i] (closed neighbourhood for
            grundy, open for z_grundy)
        variant (str): grundy or z_grundy
    """
    def __init__(self, sequence, footprints, variant):
        self.sequence = list(sequence)
        self.footprints = [sorted(f) for f in footprints]
        self.variant = variant

    def __len__(self):
        return len(self.sequence)

    def footprinted(self):
        """One footprinted vertex per sequence vertex, the least one."""
        return [f[0] for f in self.footprints]

    def __str__(self):
        return "<DominationSequence: %s %s>" % (self.variant, self.sequence)


def _neighbourhoods(G, variant):
    closed = [row | 1 << v for v, row in enumerate(G.adj)]
    reach = G.adj if variant == Z_GRUNDY else closed
    return closed, reach


def footprints_of(G, sequence, variant=GRUNDY):
    """
        Footprints of a vertex sequence. Raises DominationError when some
        vertex footprints nothing.
    """
    closed, reach = _neighbourhoods(G, variant)
    dominated = 0
    result = []
    for i, v in enumerate(sequence):
        new = reach[v] & ~dominated
        if not new:
            raise DominationError("vertex %s at position %s footprints "
                                  "nothing" % (v, i))
        result.append(list(bits(new)))
        dominated |= closed[v]
    return result


def validate_sequence(G, seq):
    """Checks the footprint condition and that footprints are disjoint."""
    expected = footprints_of(G, seq.sequence, seq.variant)
    if expected != seq.footprints:
        raise DominationError("footprints do not match the sequence")
    seen = 0
    for f in seq.footprints:
        mask = 0
        for v in f:
            mask |= 1 << v
        if not mask or mask & seen:
            raise DominationError("footprints must be nonempty and disjoint")
        seen |= mask
    return True


def grundy_exact(G, variant=GRUNDY, cap=None):
    """
        Longest (Z-)Grundy dominating sequence by depth first search over
        the dominated set, memoized on that set. Returns (length,
        DominationSequence). Ties go to the smallest next vertex.
    """
    if variant not in (GRUNDY, Z_GRUNDY):
        raise DominationError("unknown variant %r" % variant)
    check_cap(G.v_count, GRUNDY_CAP_ENV_VAR, cap)
    closed, reach = _neighbourhoods(G, variant)
    full = G.full_mask
    memo = {}

    def best(dominated):
        # longest continuation from this dominated set, and its first vertex
        if dominated in memo:
            return memo[dominated]
        room = popcount(full & ~dominated)
        result = (0, None)
        for v in range(G.v_count):
            if not reach[v] & ~dominated:
                continue
            length = 1 + best(dominated | closed[v])[0]
            if length > result[0]:
                result = (length, v)
                if length == room:
                    break
        memo[dominated] = result
        return result

    sequence = []
    dominated = 0
    while True:
        length, v = best(dominated)
        if v is None:
            break
        sequence.append(v)
        dominated |= closed[v]

    seq = DominationSequence(sequence, footprints_of(G, sequence, variant),
                             variant)
    log.debug("%s of %s: %s (%s states)", variant, G, len(seq), len(memo))
    return len(seq), seq


def zf_from_grundy(G, cap=None):
    """Z(G) = |V| - Z-Grundy number, for graphs without isolated vertices."""
    if has_isolated_vertex(G):
        raise HypothesisError("graph has an isolated vertex")
    return G.v_count - grundy_exact(G, Z_GRUNDY, cap)[0]


def grundy_lower_bound(G, cap=None):
    """|V| - Grundy number, a lower bound on Z(G) without isolated vertices."""
    if has_isolated_vertex(G):
        raise HypothesisError("graph has an isolated vertex")
    return G.v_count - grundy_exact(G, GRUNDY, cap)[0]
