# -*- coding: utf-8 -*-
import itertools
import logging

import numpy as np

from .baseapi import HypothesisError, DimensionError, check_cap, \
    VERTEX_CAP_ENV_VAR
from .Combinatorics import gaussian_binomial
from .Field import field_table

log = logging.getLogger(__name__)


class SubspaceRep(object):
    """
    A k-subspace of GF(q)^n in canonical form.

    Args:
        n (int): ambient dimension
        q (int): field order
        rows (tuple): the k nonzero rows of the reduced row echelon form,
            each a tuple of n field elements
        id (int, optional): ordinal in the enumeration order of
            enumerate_k_subspaces

    Two SubspaceReps compare equal iff they describe the same subspace.
    """
    def __init__(self, n, q, rows, id=None):
        self.n = n
        self.q = q
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.k = len(self.rows)
        self.id = id

    @classmethod
    def from_vectors(cls, vectors, n, q, field=None):
        """Span of the given vectors (need not be independent)."""
        field = field or field_table(q)
        if not len(vectors):
            return cls(n, q, ())
        reduced, rank = rref(vectors, field)
        return cls(n, q, reduced[:rank])

    def matrix(self):
        if not self.rows:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)

    @property
    def pivots(self):
        return tuple(next(j for j, x in enumerate(row) if x)
                     for row in self.rows)

    @property
    def label(self):
        return self.rows

    def __eq__(self, other):
        if not isinstance(other, SubspaceRep):
            return NotImplemented
        return (self.q, self.n, self.rows) == (other.q, other.n, other.rows)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.q, self.n, self.rows))

    def __str__(self):
        return "<SubspaceRep: dim %s of GF(%s)^%s %s>" % (
            self.k, self.q, self.n, list(self.rows))

    def __repr__(self):
        return str(self)


def rref(mat, field):
    """
        Reduced row echelon form over GF(q).

        Returns (matrix, rank): a numpy array of the input's shape whose
        first rank rows are the canonical nonzero rows, followed by zero
        rows.
    """
    M = np.array(mat, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.size and (M.min() < 0 or M.max() >= field.q):
        raise ValueError("entries must lie in GF(%s)" % field.q)

    add, mul = field.add_table, field.mul_table
    n_rows, n_cols = M.shape
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if not len(nz):
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = mul[field.inv_table[M[r, c]], M[r]]
        for i in range(n_rows):
            if i != r and M[i, c]:
                M[i] = add[M[i], mul[field.neg_table[M[i, c]], M[r]]]
        r += 1
    return M, r


def rank(mat, field):
    if not len(mat):
        return 0
    return rref(mat, field)[1]


def _check_compatible(U, W):
    if U.n != W.n or U.q != W.q:
        raise DimensionError("subspaces live in GF(%s)^%s and GF(%s)^%s" %
                             (U.q, U.n, W.q, W.n))


def sum_dim(U, W, field=None):
    """dim(U + W), the rank of the stacked rows."""
    _check_compatible(U, W)
    if not U.k and not W.k:
        return 0
    field = field or field_table(U.q)
    return rank(list(U.rows) + list(W.rows), field)


def intersection_dim(U, W, field=None):
    """dim(U ∩ W) = dim U + dim W - dim(U + W)."""
    return U.k + W.k - sum_dim(U, W, field)


def encode_vector(vec, q):
    """Integer code of a vector; the first coordinate is most significant."""
    code = 0
    for x in vec:
        code = code * q + int(x)
    return code


def decode_vector(code, n, q):
    vec = [0] * n
    for i in range(n - 1, -1, -1):
        code, vec[i] = divmod(code, q)
    return vec


def span_points(rows, n, field):
    """Numpy array with the codes of all vectors in the span of rows."""
    q = field.q
    points = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(q)[:, None]
    for row in rows:
        scaled = field.mul_table[scalars, np.array(row, dtype=np.int64)[None, :]]
        points = field.add_table[points[:, None, :],
                                 scaled[None, :, :]].reshape(-1, n)
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return np.unique(points @ weights)


def enumerate_k_subspaces(n, k, q, cap=None, field=None):
    """
        All k-subspaces of GF(q)^n, each exactly once, sorted
        lexicographically on the concatenation of their RREF rows. The list
        position is stored as the id of each SubspaceRep.
    """
    if k < 0 or k > n:
        raise ValueError("enumerate_k_subspaces needs 0 <= k <= n, "
                         "got n=%s k=%s" % (n, k))
    count = check_cap(gaussian_binomial(n, k, q), VERTEX_CAP_ENV_VAR, cap,
                      "%s-subspaces" % k)
    field = field or field_table(q)

    matrices = []
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots)
                for j in range(p + 1, n) if j not in pivot_set]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), x in zip(free, values):
                rows[i][j] = x
            matrices.append(tuple(tuple(row) for row in rows))

    matrices.sort(key=lambda rows: tuple(itertools.chain.from_iterable(rows)))
    if len(matrices) != count:
        raise AssertionError("enumerated %s subspaces, expected %s" %
                             (len(matrices), count))
    log.debug("enumerated %s %s-subspaces of GF(%s)^%s", count, k, q, n)
    return [SubspaceRep(n, q, rows, id=i) for i, rows in enumerate(matrices)]


class AvoidanceRequest(object):
    """
    Ask for an m-space meeting every given k-space trivially.

    Args:
        n (int): ambient dimension
        m (int): dimension of the space to find
        spaces (list): SubspaceReps, all of the same dimension k
        q (int): field order
    """
    def __init__(self, n, m, spaces, q):
        self.n = n
        self.m = m
        self.spaces = list(spaces)
        self.q = q

    @property
    def k(self):
        return self.spaces[0].k if self.spaces else 0

    def validate(self):
        dims = set(S.k for S in self.spaces)
        if len(dims) > 1:
            raise HypothesisError("given spaces have mixed dimensions %s" %
                                  sorted(dims))
        for S in self.spaces:
            if S.n != self.n or S.q != self.q:
                raise DimensionError("space %s is not in GF(%s)^%s" %
                                     (S, self.q, self.n))
        k = self.k
        if self.n < k + self.m:
            raise HypothesisError("n >= k + m violated: %s < %s + %s" %
                                  (self.n, k, self.m))
        bound = self.q ** (self.n - k - self.m + 1)
        if len(self.spaces) > bound:
            raise HypothesisError(
                "a <= q^(n-k-m+1) violated: %s spaces > %s" %
                (len(self.spaces), bound))
        return True


def find_avoiding_subspace(req, field=None):
    """
        Greedy basis construction: step i takes the least vector (in the
        integer order of encode_vector) outside <x_1..x_{i-1}> and outside
        every <x_1..x_{i-1}, S_j>.
    """
    req.validate()
    field = field or field_table(req.q)
    basis = extend_avoiding([], [S.rows for S in req.spaces], req.m,
                            req.n, field)
    result = SubspaceRep.from_vectors(basis, req.n, req.q, field)
    log.debug("avoiding %s-space for %s spaces: %s",
              req.m, len(req.spaces), result)
    return result


def extend_avoiding(base, avoid, count, n, field):
    """
        Appends count vectors to the independent rows base so that the
        span of the result meets each space in avoid only inside <base>.
        Each new vector is the least code outside <base, chosen> and outside
        every <base, chosen, A>. Returns base plus the new vectors.
    """
    q = field.q
    basis = [list(v) for v in base]
    for i in range(count):
        forbidden = set(span_points(basis, n, field).tolist())
        for rows in avoid:
            forbidden.update(span_points(basis + [list(r) for r in rows],
                                         n, field).tolist())
        code = next((c for c in range(1, q ** n) if c not in forbidden), None)
        if code is None:
            raise HypothesisError("no admissible vector at step %s" % (i + 1))
        basis.append(decode_vector(code, n, q))
    return basis


def intersection_basis(U, W, field=None):
    """Independent rows spanning U ∩ W."""
    _check_compatible(U, W)
    field = field or field_table(U.q)
    common = np.intersect1d(span_points(U.rows, U.n, field),
                            span_points(W.rows, W.n, field))
    common = common[common != 0]
    if not len(common):
        return []
    vectors = [decode_vector(int(c), U.n, U.q) for c in common]
    reduced, r = rref(vectors, field)
    return [list(row) for row in reduced[:r].tolist()]


def extend_within(base, U, dim, field):
    """
        Extends the independent rows base by rows of U until the span has
        dimension dim. Returns the added rows.
    """
    current = [list(v) for v in base]
    added = []
    for row in U.rows:
        if len(current) == dim:
            break
        if rank(current + [list(row)], field) > len(current):
            current.append(list(row))
            added.append(list(row))
    if len(current) != dim:
        raise DimensionError("cannot extend to dimension %s inside %s" %
                             (dim, U))
    return added
