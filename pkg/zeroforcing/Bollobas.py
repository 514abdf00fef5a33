# -*- coding: utf-8 -*-
"""
Set-pair conditions of Bollobás type.

For pairs (X_i, Y_i) with |X_i| = r, |Y_i| = s, |X_i ∩ Y_i| <= t and
|X_i ∩ Y_j| >= t + 1 for i < j, the number of pairs is at most
C(r + s - 2t, r - t). The same holds for subspaces with dimensions in place
of cardinalities.
"""
from .baseapi import HypothesisError
from .Combinatorics import binomial, popcount, subset_mask
from .FamilySpec import GENERALIZED_GRASSMANN
from .Subspace import SubspaceRep, intersection_dim

SETS = "set"
SUBSPACES = "subspace"

JOHNSON_MODE = "johnson"
KNESER_MODE = "kneser"


class BollobasInstance(object):
    """
    Args:
        pairs (list): (X_i, Y_i) pairs, both bitsets of [n] (bit i is
            element i + 1) or both SubspaceReps
        t (int): the intersection threshold
        kind (str): set or subspace
    """
    def __init__(self, pairs, t, kind=SETS):
        self.pairs = list(pairs)
        self.t = t
        self.kind = kind

    def size(self, X):
        return X.k if self.kind == SUBSPACES else popcount(X)

    def meet(self, X, Y):
        if self.kind == SUBSPACES:
            return intersection_dim(X, Y)
        return popcount(X & Y)


class BollobasVerdict(object):
    def __init__(self, **kwargs):
        self.m = 0
        self.r = None
        self.s = None
        self.t = None
        self.condition_i = True
        self.condition_ii = True
        self.bound = None
        self.within_bound = True
        self.violations = []

        for attr in kwargs.keys():
            setattr(self, attr, kwargs[attr])

    @property
    def conditions_hold(self):
        return self.condition_i and self.condition_ii

    def __str__(self):
        return "<BollobasVerdict: m=%s bound=%s conditions=%s>" % (
            self.m, self.bound, self.conditions_hold)


def bollobas_check(inst):
    """
        Evaluates both conditions and the bound. A violation is recorded as
        (condition, i, j) with 0-based pair indices.
    """
    t = inst.t
    verdict = BollobasVerdict(m=len(inst.pairs), t=t)
    if not inst.pairs:
        return verdict

    r_sizes = set(inst.size(X) for X, _ in inst.pairs)
    s_sizes = set(inst.size(Y) for _, Y in inst.pairs)
    if len(r_sizes) > 1 or len(s_sizes) > 1:
        raise HypothesisError("pairs must have uniform sizes, got r in %s "
                              "and s in %s" % (sorted(r_sizes),
                                               sorted(s_sizes)))
    verdict.r = r = r_sizes.pop()
    verdict.s = s = s_sizes.pop()

    for i, (X, Y) in enumerate(inst.pairs):
        if inst.meet(X, Y) > t:
            verdict.condition_i = False
            verdict.violations.append(("i", i, i))
    for i, (X, _) in enumerate(inst.pairs):
        for j in range(i + 1, len(inst.pairs)):
            if inst.meet(X, inst.pairs[j][1]) < t + 1:
                verdict.condition_ii = False
                verdict.violations.append(("ii", i, j))

    verdict.bound = binomial(r + s - 2 * t, r - t) if r + s >= 2 * t else 0
    verdict.within_bound = verdict.m <= verdict.bound
    return verdict


def pairing_from_sequence(G, seq, mode):
    """
        The set pairs behind the Grundy lower bounds. Each v_i is paired
        with the least vertex w_i it footprints.

        johnson mode (Grundy sequences, S = {s..k-1}): X_i = v_i,
        Y_i = [n] minus w_i, threshold k - s.
        kneser mode (Z-Grundy sequences, S = {0..t}): X_i = v_i,
        Y_i = w_i, threshold t. Works on subspaces too.
    """
    spec = G.spec
    if spec is None or spec.S is None:
        raise HypothesisError("pairings need a generalized Johnson or "
                              "Grassmann graph")
    subspaces = spec.family == GENERALIZED_GRASSMANN
    ws = seq.footprinted()

    if mode == JOHNSON_MODE:
        if subspaces:
            raise HypothesisError("johnson pairing is defined for sets only")
        ground = (1 << spec.n) - 1
        pairs = [(subset_mask(G.labels[v]), ground & ~subset_mask(G.labels[w]))
                 for v, w in zip(seq.sequence, ws)]
        return BollobasInstance(pairs, spec.k - spec.s, SETS)

    if mode == KNESER_MODE:
        if subspaces:
            def rep(v):
                return SubspaceRep(spec.n, spec.q, G.labels[v])
            pairs = [(rep(v), rep(w)) for v, w in zip(seq.sequence, ws)]
            return BollobasInstance(pairs, spec.t, SUBSPACES)
        pairs = [(subset_mask(G.labels[v]), subset_mask(G.labels[w]))
                 for v, w in zip(seq.sequence, ws)]
        return BollobasInstance(pairs, spec.t, SETS)

    raise HypothesisError("unknown pairing mode %r" % mode)
