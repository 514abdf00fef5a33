import unittest

import numpy as np

from zeroforcing.baseapi import DimensionError, HypothesisError, SizingError
from zeroforcing.Construction import hamming_size
from zeroforcing.F2Matrix import (EVEN_Q, ODD_Q, F2Matrix, KernelBasis,
                                  build_Bn, even_terms_identity, f2_nullity,
                                  f2_rank, f2_tensor, kernel_basis,
                                  vector_tensor)
from zeroforcing.FamilySpec import hamming
from zeroforcing.Graph import build_graph

from .BaseTest import BaseTest


class TestF2Matrix(BaseTest):

    def test_arrays(self):
        A = np.array([[1, 0, 1], [0, 1, 1]])
        M = F2Matrix.from_array(A)
        self.assertEqual(M.bits, [0b101, 0b110])
        self.assertTrue((M.to_array() == A).all())
        self.assertEqual(M.entry(1, 2), 1)
        self.assertEqual(M.shape, (2, 3))

    def test_arithmetic(self):
        I = F2Matrix.identity(3)
        J = F2Matrix.ones(3)
        self.assertEqual(I * J, J)
        self.assertEqual(J + J, F2Matrix.zeros(3))
        # J^2 = 3J = J over GF(2)
        self.assertEqual(J * J, J)
        self.assertEqual((I + J).diagonal(), [0, 0, 0])
        self.assertTrue(F2Matrix.zeros(2, 5).is_zero())
        self.assertEqual(J.apply(0b011), 0)
        self.assertEqual(J.apply(0b001), 0b111)

    def test_tensor(self):
        A = F2Matrix.from_array([[0, 1], [1, 0]])
        B = F2Matrix.from_array([[1, 1], [0, 1]])
        expected = np.kron(A.to_array(), B.to_array())
        self.assertTrue((f2_tensor(A, B).to_array() == expected).all())
        a = np.array([1, 0, 1])
        b = np.array([0, 1])
        packed = vector_tensor(0b101, 0b10, 2)
        unpacked = [packed >> i & 1 for i in range(6)]
        self.assertEqual(unpacked, list(np.kron(a, b)))

    def test_dimension_errors(self):
        self.assertRaises(DimensionError, F2Matrix, 2, 2, [1])
        self.assertRaises(DimensionError, F2Matrix, 1, 2, [0b100])
        self.assertRaises(DimensionError, lambda: F2Matrix.identity(2) +
                          F2Matrix.identity(3))
        self.assertRaises(DimensionError, lambda: F2Matrix.ones(2, 3) *
                          F2Matrix.ones(2, 3))
        self.assertRaises(DimensionError, F2Matrix.from_array, [1, 0])

    def test_rank(self):
        self.assertEqual(f2_rank([0b011, 0b110, 0b101]), 2)
        self.assertEqual(f2_rank([0, 0]), 0)
        self.assertEqual(f2_nullity(F2Matrix.identity(4)), 0)
        self.assertEqual(f2_nullity(F2Matrix.ones(4)), 3)


class TestBn(BaseTest):

    def test_small(self):
        self.assertEqual(build_Bn(1, 3), F2Matrix.ones(3))
        self.assertEqual(build_Bn(2, 2).bits,
                         [0b0110, 0b1001, 0b1001, 0b0110])

    def test_pattern(self):
        for n, q in ((2, 2), (2, 3), (3, 2), (3, 3), (2, 4)):
            B = build_Bn(n, q)
            G = build_graph(hamming(n, q))
            for v in range(G.v_count):
                off = B.bits[v] & ~(1 << v)
                self.assertEqual(off, G.adj[v], (n, q, v))
            self.assertEqual(B.diagonal(), [n % 2] * q ** n)

    def test_nullity(self):
        for n in range(1, 4):
            for q in range(2, 6):
                if q ** n > 200:
                    continue
                self.assertEqual(f2_nullity(build_Bn(n, q)),
                                 hamming_size(n, q), (n, q))

    def test_caps(self):
        self.assertRaises(SizingError, build_Bn, 3, 3, 26)
        self.assertRaises(HypothesisError, build_Bn, 0, 3)
        self.assertRaises(HypothesisError, build_Bn, 2, 1)


class TestKernel(BaseTest):

    def test_q2(self):
        basis = kernel_basis(2, 2)
        self.assertEqual(basis.vectors, [0b0110, 0b1001])
        self.assertEqual(basis.construction, EVEN_Q)

    def test_verified(self):
        for n in range(1, 4):
            for q in range(2, 7):
                if q ** n > 250:
                    continue
                basis = kernel_basis(n, q)
                self.assertEqual(basis.construction,
                                 ODD_Q if q % 2 else EVEN_Q)
                verdicts = basis.verify()
                self.assertTrue(all(verdicts.values()), (n, q, verdicts))

    def test_rejects_wrong_vectors(self):
        basis = KernelBasis(2, 2, [0b0110, 0b0110], EVEN_Q)
        verdicts = basis.verify()
        self.assertTrue(verdicts["in_kernel"])
        self.assertFalse(verdicts["independent"])
        verdicts = KernelBasis(2, 2, [0b0001, 0b1001], EVEN_Q).verify()
        self.assertFalse(verdicts["in_kernel"])


class TestIdentity(BaseTest):

    def test_even_terms(self):
        for n in range(1, 8):
            for q in range(2, 8):
                self.assertTrue(even_terms_identity(n, q)["equal"], (n, q))
        self.assertEqual(even_terms_identity(2, 3),
                         {"lhs": 5, "rhs": 5, "equal": True})
        self.assertRaises(HypothesisError, even_terms_identity, 0, 3)


if __name__ == '__main__':
    unittest.main()
