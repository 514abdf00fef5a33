# -*- coding: utf-8 -*-
"""Integer combinatorics and bit-vector helpers shared by every module."""
from .baseapi import SizingError, check_cap, VERTEX_CAP_ENV_VAR

# Counts must fit a signed 64 bit word.
WORD_LIMIT = 2 ** 63


def _checked(value, what):
    if value >= WORD_LIMIT:
        raise SizingError("%s overflows the native word width" % what)
    return value


def binomial(n, k):
    """
        C(n, k), with 0 when k < 0 or k > n.

        Raises SizingError when the value does not fit a 64 bit word.
    """
    if n < 0:
        raise ValueError("binomial needs n >= 0, got %s" % n)
    if k < 0 or k > n:
        return 0
    if k > n - k:
        k = n - k
    res = 1
    for i in range(k):
        # res * (n - i) is always divisible by i + 1
        res = res * (n - i) // (i + 1)
    return _checked(res, "binomial(%s, %s)" % (n, k))


def gaussian_binomial(n, k, q):
    """
        Number of k-subspaces of GF(q)^n, from the product formula
        prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1).
    """
    if q < 2:
        raise ValueError("gaussian_binomial needs q >= 2, got %s" % q)
    if k < 0 or k > n:
        raise ValueError("gaussian_binomial needs 0 <= k <= n, got n=%s k=%s"
                         % (n, k))
    num = 1
    denom = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        denom *= q ** (i + 1) - 1
    return _checked(num // denom, "gaussian_binomial(%s, %s, %s)" % (n, k, q))


def popcount(x):
    return bin(x).count("1")


def bits(mask):
    """Yields the positions of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(positions):
    mask = 0
    for p in positions:
        mask |= 1 << p
    return mask


def subset_mask(elements):
    """Bit vector of a subset of [n] given by its 1-based elements."""
    return to_mask(e - 1 for e in elements)


def subset_elements(mask):
    """Sorted 1-based elements of a subset bit vector."""
    return tuple(p + 1 for p in bits(mask))


def enumerate_k_subsets(n, k, cap=None):
    """
        All k-subsets of [n] as bit vectors (bit i stands for element i + 1)
        in colexicographic order, which is increasing integer order of the
        bit vectors. The list position is the vertex id.
    """
    if k < 0 or k > n:
        raise ValueError("enumerate_k_subsets needs 0 <= k <= n, got n=%s k=%s"
                         % (n, k))
    check_cap(binomial(n, k), VERTEX_CAP_ENV_VAR, cap, "%s-subsets" % k)
    if k == 0:
        return [0]

    subsets = []
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        subsets.append(x)
        # Gosper's hack: next integer with the same popcount
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r
    return subsets
