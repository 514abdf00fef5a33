import random
import unittest

from zeroforcing.baseapi import HypothesisError, SizingError
from zeroforcing.FamilySpec import johnson
from zeroforcing.Forcing import zero_forcing_number_exact
from zeroforcing.Graph import (build_graph, complete_graph, cycle_graph,
                               from_edges, path_graph)
from zeroforcing.Grundy import (GRUNDY, Z_GRUNDY, DominationError,
                                DominationSequence, footprints_of,
                                grundy_exact, grundy_lower_bound,
                                validate_sequence, zf_from_grundy)

from .BaseTest import BaseTest


class TestGrundy(BaseTest):

    def test_path(self):
        length, seq = grundy_exact(path_graph(4), GRUNDY)
        self.assertEqual(length, 3)
        self.assertTrue(validate_sequence(path_graph(4), seq))
        self.assertEqual(grundy_lower_bound(path_graph(4)), 1)

    def test_zero_forcing_from_z_grundy(self):
        self.assertEqual(zf_from_grundy(cycle_graph(4)), 2)
        self.assertEqual(zf_from_grundy(path_graph(5)), 1)
        self.assertEqual(zf_from_grundy(complete_graph(4)), 3)
        self.assertEqual(zf_from_grundy(build_graph(johnson(5, 2, [0]))), 5)
        self.assertEqual(zf_from_grundy(build_graph(johnson(5, 2, [1]))), 7)

    def test_sequences_validate(self):
        for seed in range(5):
            G = self.random_graph(10, 0.3, seed, connected=True)
            for variant in (GRUNDY, Z_GRUNDY):
                length, seq = grundy_exact(G, variant)
                self.assertEqual(len(seq), length)
                self.assertEqual(seq.variant, variant)
                self.assertTrue(validate_sequence(G, seq))
            # the Grundy bound never exceeds Z(G) = |V| - Z-Grundy
            self.assertTrue(grundy_lower_bound(G) <= zf_from_grundy(G))

    def test_footprints(self):
        G = path_graph(3)
        self.assertEqual(footprints_of(G, [0, 2], GRUNDY), [[0, 1], [2]])
        self.assertEqual(footprints_of(G, [0, 1], Z_GRUNDY), [[1], [2]])
        self.assertRaises(DominationError, footprints_of, G, [0, 0], GRUNDY)
        self.assertRaises(DominationError, footprints_of, G, [1, 1],
                          Z_GRUNDY)

    def test_footprinted(self):
        seq = DominationSequence([0, 2], [[1, 0], [2]], GRUNDY)
        self.assertEqual(seq.footprinted(), [0, 2])

    def test_bad_sequence(self):
        G = path_graph(3)
        seq = DominationSequence([0, 2], [[0], [2]], GRUNDY)
        self.assertRaises(DominationError, validate_sequence, G, seq)

    def test_hypotheses(self):
        isolated = from_edges(3, [(0, 1)])
        self.assertRaises(HypothesisError, zf_from_grundy, isolated)
        self.assertRaises(HypothesisError, grundy_lower_bound, isolated)
        self.assertRaises(DominationError, grundy_exact, path_graph(3),
                          "total")

    def test_cap(self):
        self.assertRaises(SizingError, grundy_exact, cycle_graph(30),
                          GRUNDY, 24)


class TestGrundyAgainstSearch(BaseTest):

    def test_random_connected_graphs(self):
        rng = random.Random(2)
        for seed in range(200):
            v_count = rng.randint(4, 12)
            G = self.random_graph(v_count, rng.uniform(0.15, 0.5), seed,
                                  connected=True)
            z = zero_forcing_number_exact(G).value
            z_grundy, _ = grundy_exact(G, Z_GRUNDY)
            self.assertEqual(z, v_count - z_grundy, seed)
            self.assertEqual(z, zf_from_grundy(G), seed)
            self.assertTrue(z >= grundy_lower_bound(G), seed)


if __name__ == '__main__':
    unittest.main()
