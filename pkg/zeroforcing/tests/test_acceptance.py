"""
End to end checks on larger instances. They take minutes, so they only run
with ZEROFORCING_SLOW_TESTS set.
"""
import os
import unittest

from zeroforcing import Manager
from zeroforcing.Construction import (grassmann_zfs, hamming_size,
                                      hamming_zfs, kneser_zfs_edge,
                                      predicted_zf)
from zeroforcing.FamilySpec import johnson, hamming
from zeroforcing.Forcing import zero_forcing_number_exact
from zeroforcing.Graph import build_graph
from zeroforcing.Manager import EXACT

from .BaseTest import BaseTest

SLOW = bool(os.environ.get("ZEROFORCING_SLOW_TESTS"))


@unittest.skipUnless(SLOW, "set ZEROFORCING_SLOW_TESTS to run")
class TestAcceptance(BaseTest):

    def setUp(self):
        super(TestAcceptance, self).setUp()
        self.manager = Manager()

    def exact(self, spec):
        report = self.manager.zf(self.manager.get_graph(spec), mode=EXACT)
        self.assertFalse(report.capped)
        return report

    def test_exact_matches_closed_forms(self):
        for spec, value in ((johnson(7, 2, [0]), 15),
                            (johnson(6, 3, [2]), 14),
                            (hamming(2, 5), 17),
                            (hamming(3, 3), 14)):
            report = self.exact(spec)
            self.assertEqual(report.values["value"], value, str(spec))
            self.assertTrue(report.verification["matches_prediction"])
        for n, q in ((2, 5), (3, 3)):
            result = hamming_zfs(n, q)
            self.assertEqual(len(result.leader), hamming_size(n, q))
            self.assertTrue(result.verify(build_graph(hamming(n, q)))["zfs"])

    def test_kneser_edge_with_room(self):
        result = kneser_zfs_edge(9, 3, 0)
        self.assertFalse(result.notes)
        self.assertTrue(result.verify(build_graph(result.spec))["zfs"])
        self.assertEqual(predicted_zf(result.spec).upper, len(result.leader))

    def test_no_leader_set_of_size_29_for_7_3_1(self):
        graph = build_graph(johnson(7, 3, [0, 1]))
        result = zero_forcing_number_exact(graph)
        self.assertGreater(result.value, 29)

        edge = kneser_zfs_edge(7, 3, 1, graph=graph)
        self.assertEqual(len(edge.leader), 29)
        self.assertTrue(edge.notes)
        self.assertFalse(edge.verify(graph)["zfs"])

    def test_q_kneser(self):
        result = grassmann_zfs(7, 2, 2, 0)
        self.assertTrue(result.verify(build_graph(result.spec))["zfs"])
        self.assertEqual(predicted_zf(result.spec).value, 2661)

    def test_nullity(self):
        for n, q in ((4, 4), (3, 6), (5, 3)):
            report = self.manager.nullity(n, q)
            self.assertTrue(report.ok, (n, q))


if __name__ == '__main__':
    unittest.main()
