# -*- coding: utf-8 -*-
from .baseapi import HypothesisError
from .Field import prime_power

GENERALIZED_JOHNSON = "generalized_johnson"
GENERALIZED_GRASSMANN = "generalized_grassmann"
HAMMING = "hamming"

FAMILIES = (GENERALIZED_JOHNSON, GENERALIZED_GRASSMANN, HAMMING)

# short names accepted by the command line
ALIASES = {
    "johnson": GENERALIZED_JOHNSON,
    "kneser": GENERALIZED_JOHNSON,
    "grassmann": GENERALIZED_GRASSMANN,
    "hamming": HAMMING,
}


class FamilySpecError(HypothesisError):
    pass


class FamilySpec(object):
    """
    The parameter record of a graph family.

    Args:
        family (str): one of generalized_johnson, generalized_grassmann,
            hamming (or a short alias)
        n (int): ground set size, ambient dimension or tuple length
        k (int): subset size or subspace dimension (unused for hamming)
        q (int): field order or alphabet size (unused for
            generalized_johnson)
        S (iterable): allowed intersection sizes/dimensions (unused for
            hamming)

    Derived:
        * s (int): min(S)
        * t (int): max(S)
    """
    def __init__(self, family, n, k=None, q=None, S=None):
        self.family = ALIASES.get(family, family)
        self.n = n
        self.k = k
        self.q = q
        self.S = tuple(sorted(set(S))) if S is not None else None

    @property
    def s(self):
        return self.S[0] if self.S else None

    @property
    def t(self):
        return self.S[-1] if self.S else None

    @property
    def is_proper(self):
        """S is a proper subset of {0..k-1}. S = {0..k-1} gives K_V."""
        return self.S is not None and len(self.S) < self.k

    def validate(self):
        """
            Raises FamilySpecError naming the violated condition. The full
            S = {0..k-1} is accepted so that K_q = J_{q,{0}}(2,1) and
            similar complete graphs can be built; formula evaluators
            require a proper S themselves.
        """
        if self.family not in FAMILIES:
            raise FamilySpecError("unknown family %r" % self.family)

        if self.family == HAMMING:
            if self.n is None or self.n < 1:
                raise FamilySpecError("hamming needs n >= 1, got %s" % self.n)
            if self.q is None or self.q < 2:
                raise FamilySpecError("hamming needs q >= 2, got %s" % self.q)
            return True

        n, k = self.n, self.k
        if k is None or n is None or not n >= k >= 1:
            raise FamilySpecError("n >= k >= 1 violated: n=%s k=%s" % (n, k))
        if not self.S:
            raise FamilySpecError("S must be nonempty")
        if self.S[0] < 0 or self.S[-1] > k - 1:
            raise FamilySpecError("S must be a subset of {0..%s}, got %s" %
                                  (k - 1, list(self.S)))
        if self.family == GENERALIZED_GRASSMANN:
            if self.q is None or prime_power(self.q) is None:
                raise FamilySpecError("q must be a prime power, got %s" %
                                      self.q)
        return True

    def to_dict(self):
        data = {"family": self.family, "n": self.n}
        if self.family != HAMMING:
            data["k"] = self.k
            data["S"] = list(self.S) if self.S is not None else None
        if self.family != GENERALIZED_JOHNSON:
            data["q"] = self.q
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(data["family"], data["n"], k=data.get("k"),
                   q=data.get("q"), S=data.get("S"))

    def __eq__(self, other):
        if not isinstance(other, FamilySpec):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.family, self.n, self.k, self.q, self.S))

    def __str__(self):
        if self.family == HAMMING:
            return "H(%s,%s)" % (self.n, self.q)
        S = "{%s}" % ",".join(str(x) for x in self.S or ())
        if self.family == GENERALIZED_GRASSMANN:
            return "J_%s,%s(%s,%s)" % (self.q, S, self.n, self.k)
        return "J_%s(%s,%s)" % (S, self.n, self.k)

    def __repr__(self):
        return "<FamilySpec: %s>" % self


def johnson(n, k, S):
    return FamilySpec(GENERALIZED_JOHNSON, n, k=k, S=S)


def grassmann(n, k, q, S):
    return FamilySpec(GENERALIZED_GRASSMANN, n, k=k, q=q, S=S)


def hamming(n, q):
    return FamilySpec(HAMMING, n, q=q)


def dual_spec(spec):
    """
        The complement map sends J_S(n,k) to J_S'(n,n-k) with
        S' = {s + n - 2k}; intersection sizes that cannot occur are dropped.
    """
    spec.validate()
    if spec.family == HAMMING:
        raise FamilySpecError("hamming graphs have no complement dual")
    n, k = spec.n, spec.k
    if n - k < 1:
        raise FamilySpecError("dual needs n - k >= 1, got n=%s k=%s" % (n, k))
    S = [s + n - 2 * k for s in spec.S if 0 <= s + n - 2 * k <= n - k - 1]
    dual = FamilySpec(spec.family, n, k=n - k, q=spec.q, S=S)
    dual.validate()
    return dual
