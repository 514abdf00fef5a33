import itertools
import random
import unittest

from zeroforcing.baseapi import CapExceededError
from zeroforcing.Combinatorics import to_mask
from zeroforcing.Construction import hamming_size, hamming_zfs
from zeroforcing.FamilySpec import johnson, hamming
from zeroforcing.Forcing import (PLAIN, TOTAL, CONNECTED, LIFO, EXHAUSTIVE,
                                 LOWER_HINT, MIN_DEGREE, NO_VARIANT_SET,
                                 Coloring, ExactSearch, ForcingError,
                                 ForcingTrace, closure, closure_mask,
                                 closure_naive, greedy_zero_forcing_set,
                                 is_connected_zfs, is_total_zfs,
                                 is_zero_forcing, replay_trace, run_forcing,
                                 whites_forceable, zero_forcing_number_exact)
from zeroforcing.Graph import (build_graph, complete_graph, cycle_graph,
                               from_edges, path_graph)

from .BaseTest import BaseTest


def petersen():
    return build_graph(johnson(5, 2, [0]))


class TestClosure(BaseTest):

    def test_path(self):
        black, trace = closure(path_graph(4), [0])
        self.assertEqual(black, frozenset(range(4)))
        self.assertEqual(trace.steps, [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(trace.pivots, [0, 1, 2])
        self.assertEqual(trace.initial, [0])

    def test_stalls(self):
        G = cycle_graph(4)
        self.assertEqual(closure(G, [0, 2])[0], frozenset([0, 2]))
        self.assertFalse(is_zero_forcing(G, [0, 2]))
        self.assertTrue(is_zero_forcing(G, [0, 1]))
        self.assertTrue(is_zero_forcing(G, 0b0011))

    def test_counter_engine_matches_naive(self):
        rng = random.Random(7)
        for seed in range(1000):
            G = self.random_graph(12, 0.15 + 0.05 * (seed % 5), seed)
            for _ in range(2):
                B = [v for v in range(G.v_count) if rng.random() < 0.4]
                expected = closure_naive(G, B)
                self.assertEqual(closure_mask(G, B), expected)
                coloring, steps = run_forcing(G, to_mask(B), policy=LIFO)
                self.assertEqual(coloring.black, expected)
                self.assertTrue(coloring.check(G))

    def test_trace_replays(self):
        for seed in range(10):
            G = self.random_graph(12, 0.3, seed, connected=True)
            leader = greedy_zero_forcing_set(G, seed=seed)
            black, trace = closure(G, leader)
            self.assertEqual(replay_trace(G, trace), G.full_mask)
            self.assertEqual(len(trace), G.v_count - len(leader))

    def test_replay_rejects_bad_steps(self):
        G = path_graph(4)
        self.assertRaises(ForcingError, replay_trace, G,
                          ForcingTrace([0], [(1, 2)]))
        self.assertRaises(ForcingError, replay_trace, G,
                          ForcingTrace([0, 1], [(0, 1)]))
        self.assertRaises(ForcingError, replay_trace, cycle_graph(4),
                          ForcingTrace([0], [(0, 1)]))

    def test_replay_rejects_truncated_trace(self):
        G = path_graph(4)
        self.assertRaises(ForcingError, replay_trace, G,
                          ForcingTrace([0], [(0, 1)]))
        self.assertRaises(ForcingError, replay_trace, G, ForcingTrace([0]))
        # a stalled set replays up to its closure
        black, trace = closure(cycle_graph(6), [0, 3])
        self.assertEqual(replay_trace(cycle_graph(6), trace), to_mask(black))

    def test_stale_counter(self):
        G = path_graph(3)
        self.assertRaises(ForcingError, Coloring(0b001, [0, 0, 0]).check, G)
        self.assertTrue(Coloring.start(G, 0b001).check(G))

    def test_whites_forceable(self):
        G = cycle_graph(4)
        self.assertTrue(whites_forceable(G.adj, 0b1100))
        self.assertFalse(whites_forceable(G.adj, 0b0101))
        self.assertTrue(whites_forceable(G.adj, 0))


class TestClosureProperties(BaseTest):

    def random_sets(self, G, rng):
        small = to_mask(v for v in range(G.v_count) if rng.random() < 0.3)
        extra = to_mask(v for v in range(G.v_count) if rng.random() < 0.3)
        return small, small | extra

    def test_monotone(self):
        rng = random.Random(3)
        for seed in range(1000):
            G = self.random_graph(12, 0.15 + 0.05 * (seed % 5), seed)
            small, large = self.random_sets(G, rng)
            self.assertEqual(
                closure_mask(G, small) & ~closure_mask(G, large), 0)

    def test_idempotent(self):
        rng = random.Random(5)
        for seed in range(1000):
            G = self.random_graph(12, 0.15 + 0.05 * (seed % 5), seed)
            black = closure_mask(G, self.random_sets(G, rng)[0])
            self.assertEqual(closure_mask(G, black), black)
            self.assertEqual(closure(G, black)[1].steps, [])

    def test_order_independent(self):
        rng = random.Random(9)
        for seed in range(1000):
            G = self.random_graph(12, 0.15 + 0.05 * (seed % 5), seed)
            B = self.random_sets(G, rng)[0]
            self.assertEqual(closure_mask(G, B, policy=LIFO),
                             closure_mask(G, B))


class TestVariants(BaseTest):

    def test_checks(self):
        P = path_graph(4)
        self.assertTrue(is_connected_zfs(P, [0]))
        self.assertFalse(is_total_zfs(P, [0]))
        self.assertTrue(is_total_zfs(P, [0, 1]))
        self.assertFalse(is_connected_zfs(cycle_graph(5), [0, 2]))

    def test_greedy_variants(self):
        for seed in range(6):
            G = self.random_graph(12, 0.3, seed, connected=True)
            self.assertTrue(is_zero_forcing(G, greedy_zero_forcing_set(G)))
            self.assertTrue(is_total_zfs(
                G, greedy_zero_forcing_set(G, seed=seed, variant=TOTAL)))
            self.assertTrue(is_connected_zfs(
                G, greedy_zero_forcing_set(G, seed=seed, variant=CONNECTED)))

    def test_variant_order(self):
        for seed in range(40):
            G = self.random_graph(8 + seed % 3, 0.25, seed, connected=True)
            z, zt, zc = [zero_forcing_number_exact(G, variant=v).value
                         for v in (PLAIN, TOTAL, CONNECTED)]
            self.assertTrue(z <= zt, seed)
            self.assertTrue(z <= zc, seed)
            # a one vertex connected leader set is isolated in itself;
            # only paths have one, and there Z_t = 2
            if zc == 1:
                self.assertEqual((z, zt), (1, 2))
            else:
                self.assertTrue(zt <= zc, seed)


class TestExactSearch(BaseTest):

    def value(self, G, variant=PLAIN, **kwargs):
        return zero_forcing_number_exact(G, variant=variant, **kwargs).value

    def test_known_values(self):
        self.assertEqual(self.value(cycle_graph(4)), 2)
        self.assertEqual(self.value(cycle_graph(7)), 2)
        for m in range(2, 7):
            self.assertEqual(self.value(complete_graph(m)), m - 1)
            self.assertEqual(self.value(path_graph(m)), 1)
        self.assertEqual(self.value(petersen()), 5)
        self.assertEqual(self.value(build_graph(johnson(4, 2, [1]))), 4)
        self.assertEqual(self.value(build_graph(johnson(5, 2, [1]))), 7)

    def test_certificate(self):
        result = zero_forcing_number_exact(path_graph(4))
        self.assertEqual(result.certificate, [0])
        result = zero_forcing_number_exact(cycle_graph(4))
        self.assertEqual(result.certificate, [0, 1])
        self.assertTrue(result.exact)
        self.assertEqual(result.lower, result.upper)

        G = petersen()
        result = zero_forcing_number_exact(G)
        self.assertEqual(len(result.certificate), 5)
        self.assertTrue(is_zero_forcing(G, result.certificate))

    def test_certificate_is_lex_least(self):
        for seed in range(20):
            G = self.random_graph(9, 0.3, seed, connected=True)
            result = zero_forcing_number_exact(G)
            first = next(list(B) for B in itertools.combinations(
                range(G.v_count), result.value) if is_zero_forcing(G, B))
            self.assertEqual(result.certificate, first, seed)

    def test_hamming_values(self):
        orders = [(1, q) for q in range(2, 7)] + \
            [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2)]
        for n, q in orders:
            G = build_graph(hamming(n, q))
            self.assertEqual(self.value(G), hamming_size(n, q), (n, q))
            result = hamming_zfs(n, q)
            self.assertEqual(len(result.leader), hamming_size(n, q))
            self.assertTrue(result.verify(G)["zfs"], (n, q))

    def test_proofs(self):
        self.assertEqual(zero_forcing_number_exact(complete_graph(4)).proof,
                         MIN_DEGREE)
        self.assertEqual(zero_forcing_number_exact(petersen()).proof,
                         EXHAUSTIVE)
        result = zero_forcing_number_exact(petersen(), lower_hint=5)
        self.assertEqual(result.proof, LOWER_HINT)
        self.assertEqual(result.value, 5)

    def test_upper_hint(self):
        result = zero_forcing_number_exact(petersen(), upper_hint=5)
        self.assertEqual(result.value, 5)
        self.assertTrue(is_zero_forcing(petersen(), result.certificate))

    def test_variants(self):
        P = path_graph(4)
        self.assertEqual(self.value(P, TOTAL), 2)
        self.assertEqual(self.value(P, CONNECTED), 1)

        two_k2 = from_edges(4, [(0, 1), (2, 3)])
        self.assertEqual(self.value(two_k2), 2)
        self.assertEqual(self.value(two_k2, TOTAL), 4)
        result = zero_forcing_number_exact(two_k2, variant=CONNECTED)
        self.assertFalse(result.feasible)
        self.assertEqual(result.proof, NO_VARIANT_SET)
        self.assertEqual(result.value, None)

    def test_unknown_variant(self):
        self.assertRaises(ForcingError, zero_forcing_number_exact,
                          path_graph(3), variant="fast")

    def test_search_cap(self):
        G = petersen()
        with self.assertRaises(CapExceededError) as cm:
            zero_forcing_number_exact(G, search_cap=5)
        partial = cm.exception.partial
        self.assertFalse(partial.exact)
        self.assertEqual(partial.lower, 3)
        self.assertTrue(partial.upper >= 5)
        self.assertTrue(is_zero_forcing(G, partial.certificate))

    def test_workers_agree(self):
        G = petersen()
        one = ExactSearch(workers=1).run(G)
        two = ExactSearch(workers=2).run(G)
        self.assertEqual(one.value, two.value)
        self.assertEqual(one.certificate, two.certificate)


if __name__ == '__main__':
    unittest.main()
