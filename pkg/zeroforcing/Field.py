# -*- coding: utf-8 -*-
import logging

import numpy as np

from .baseapi import FieldError, check_cap, FIELD_CAP_ENV_VAR

log = logging.getLogger(__name__)

# Irreducible polynomials, coefficients lowest degree first.
DEFAULT_MODULI = {
    4: (1, 1, 1),         # x^2 + x + 1 over GF(2)
    8: (1, 1, 0, 1),      # x^3 + x + 1 over GF(2)
    9: (1, 0, 1),         # x^2 + 1 over GF(3)
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1 over GF(2)
}


def prime_power(q):
    """Returns (p, d) with q = p^d, or None when q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    d = 0
    rest = q
    while rest % p == 0:
        rest //= p
        d += 1
    if rest != 1:
        return None
    return p, d


def _digits(x, p, d):
    return [(x // p ** i) % p for i in range(d)]


def _from_digits(coeffs, p):
    value = 0
    for i, c in enumerate(coeffs):
        value += (c % p) * p ** i
    return value


def _poly_mulmod(a, b, modulus, p):
    d = len(modulus) - 1
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic, reduce from the top
    for deg in range(len(prod) - 1, d - 1, -1):
        c = prod[deg]
        if c:
            for i, m in enumerate(modulus):
                prod[deg - d + i] = (prod[deg - d + i] - c * m) % p
    return prod[:d]


class FieldTable(object):
    """
    Table arithmetic for GF(q).

    Elements are the integers 0..q-1; for q = p^d the element x stands for the
    polynomial whose coefficient of X^i is the i-th base-p digit of x.

    Args:
        q (int): field order
        p (int): characteristic
        modulus (tuple): irreducible polynomial, lowest degree first, or
            None for prime q
        add_table, mul_table (numpy.ndarray): q x q tables
    """
    def __init__(self, q, p, modulus, add_table, mul_table):
        self.q = q
        self.p = p
        self.modulus = modulus
        self.add_table = add_table
        self.mul_table = mul_table
        self.neg_table = np.argmin(add_table, axis=1)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.nonzero(mul_table[a] == 1)[0]
            if len(hits) != 1:
                raise FieldError("element %s of GF(%s) has no inverse; the "
                                 "modulus %s is reducible" % (a, q, modulus))
            inv[a] = hits[0]
        self.inv_table = inv
        for arr in (self.add_table, self.mul_table,
                    self.neg_table, self.inv_table):
            arr.setflags(write=False)

    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(%s)" % self.q)
        return int(self.inv_table[a])

    def check_axioms(self):
        """
            Exhaustively checks the field axioms. Raises FieldError on the
            first failure, returns True otherwise.
        """
        q = self.q
        add, mul = self.add_table, self.mul_table
        a, b, c = np.ix_(range(q), range(q), range(q))
        checks = [
            ("addition is commutative", np.array_equal(add, add.T)),
            ("multiplication is commutative", np.array_equal(mul, mul.T)),
            ("addition is associative",
             np.array_equal(add[add[a, b], c], add[a, add[b, c]])),
            ("multiplication is associative",
             np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]])),
            ("multiplication distributes",
             np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]])),
            ("0 is the additive identity",
             np.array_equal(add[0], np.arange(q))),
            ("1 is the multiplicative identity",
             np.array_equal(mul[1], np.arange(q))),
        ]
        multiple = np.zeros(q, dtype=np.int64)
        for _ in range(self.p):
            multiple = add[multiple, np.arange(q)]
        checks.append(("characteristic %s" % self.p, not multiple.any()))
        for name, ok in checks:
            if not ok:
                raise FieldError("GF(%s) table fails: %s" % (q, name))
        return True

    def __str__(self):
        return "<FieldTable: GF(%s)>" % self.q


_cache = {}


def field_table(q, modulus=None, cap=None):
    """
        Builds (and caches) the arithmetic tables of GF(q).

        Args:
            q (int): a prime power no larger than the field cap
            modulus (sequence, optional): monic irreducible polynomial of
                degree log_p(q), lowest degree first. Required for non-prime
                q without a built-in default.
    """
    check_cap(q, FIELD_CAP_ENV_VAR, cap, "field order")
    pp = prime_power(q)
    if pp is None:
        raise FieldError("%s is not a prime power" % q)
    p, d = pp

    if d == 1:
        modulus = None
    else:
        if modulus is None:
            modulus = DEFAULT_MODULI.get(q)
        if modulus is None:
            raise FieldError("GF(%s) needs a modulus of degree %s" % (q, d))
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != d + 1 or modulus[-1] != 1:
            raise FieldError("modulus %s is not monic of degree %s" %
                             (modulus, d))

    key = (q, modulus)
    if key in _cache:
        return _cache[key]

    add_table = np.zeros((q, q), dtype=np.int64)
    mul_table = np.zeros((q, q), dtype=np.int64)
    for x in range(q):
        dx = _digits(x, p, d)
        for y in range(q):
            dy = _digits(y, p, d)
            add_table[x, y] = _from_digits([s + t for s, t in zip(dx, dy)], p)
            if d == 1:
                mul_table[x, y] = (x * y) % p
            else:
                mul_table[x, y] = _from_digits(
                    _poly_mulmod(dx, dy, modulus, p), p)

    table = FieldTable(q, p, modulus, add_table, mul_table)
    table.check_axioms()
    log.debug("built GF(%s) tables (modulus %s)", q, modulus)
    _cache[key] = table
    return table
