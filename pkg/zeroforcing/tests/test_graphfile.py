import os
import shutil
import tempfile
import unittest

from zeroforcing.baseapi import DataReadError, JSONReadError
from zeroforcing.FamilySpec import johnson, grassmann
from zeroforcing.Graph import build_graph, cycle_graph
from zeroforcing.GraphFile import (save_graph, load_graph, write_edge_list,
                                   read_edge_list, read_vertex_set,
                                   write_vertex_set)

from .BaseTest import BaseTest


class TestGraphFile(BaseTest):

    def setUp(self):
        super(TestGraphFile, self).setUp()
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def path(self, name):
        return os.path.join(self.tmp, name)

    def test_cache_round_trip(self):
        for spec in (johnson(5, 2, [0]), grassmann(4, 2, 2, [1])):
            G = build_graph(spec)
            save_graph(G, self.path("g.zfg"))
            H = load_graph(self.path("g.zfg"))
            self.assertEqual(H.adj, G.adj)
            self.assertEqual(H.labels, G.labels)
            self.assertEqual(H.spec, G.spec)

    def test_cache_without_spec(self):
        G = cycle_graph(9)
        save_graph(G, self.path("c.zfg"))
        H = load_graph(self.path("c.zfg"))
        self.assertEqual(H.adj, G.adj)
        self.assertEqual(H.spec, None)

    def test_corrupt_cache(self):
        with open(self.path("bad.zfg"), "wb") as f:
            f.write(b"NOPE")
        self.assertRaises(DataReadError, load_graph, self.path("bad.zfg"))

        save_graph(cycle_graph(5), self.path("cut.zfg"))
        with open(self.path("cut.zfg"), "rb") as f:
            data = f.read()
        with open(self.path("cut.zfg"), "wb") as f:
            f.write(data[:-1])
        self.assertRaises(DataReadError, load_graph, self.path("cut.zfg"))

    def test_edge_list_round_trip(self):
        G = build_graph(johnson(4, 2, [1]))
        write_edge_list(G, self.path("g.edges"))
        H = read_edge_list(self.path("g.edges"))
        self.assertEqual(H.adj, G.adj)
        self.assertEqual(H.labels, G.labels)
        self.assertEqual(H.spec, G.spec)

    def test_edge_list_fixture(self):
        G = read_edge_list(self.data_path("c4.edges"))
        self.assertEqual(G.v_count, 4)
        self.assertEqual(G.adj, cycle_graph(4).adj)

    def test_bad_edge_list(self):
        with open(self.path("bad.edges"), "w") as f:
            f.write("0 1\n1 x\n")
        self.assertRaises(DataReadError, read_edge_list, self.path("bad.edges"))
        with open(self.path("loop.edges"), "w") as f:
            f.write("0 0\n")
        self.assertRaises(DataReadError, read_edge_list,
                          self.path("loop.edges"))

    def test_vertex_sets(self):
        G = build_graph(johnson(4, 2, [1]))
        ids = read_vertex_set(self.data_path("johnson_4_2_white.json"), G)
        self.assertEqual(ids, [1, 3])

        write_vertex_set(G, [5, 0], self.path("set.json"))
        self.assertEqual(read_vertex_set(self.path("set.json"), G), [0, 5])

        with open(self.path("ids.json"), "w") as f:
            f.write('{"ids": [2, 4]}')
        self.assertEqual(read_vertex_set(self.path("ids.json"), G), [2, 4])

        with open(self.path("broken.json"), "w") as f:
            f.write('{"labels": [')
        self.assertRaises(JSONReadError, read_vertex_set,
                          self.path("broken.json"), G)

        with open(self.path("unknown.json"), "w") as f:
            f.write('{"labels": [[1, 5]]}')
        self.assertRaises(DataReadError, read_vertex_set,
                          self.path("unknown.json"), G)


if __name__ == '__main__':
    unittest.main()
