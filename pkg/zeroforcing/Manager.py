# -*- coding: utf-8 -*-
import csv
import itertools
import json
import os

from .baseapi import BaseAPI, Error, CapExceededError, HypothesisError, \
    JSONReadError
from .Bollobas import (bollobas_check, pairing_from_sequence, JOHNSON_MODE,
                       KNESER_MODE)
from .Construction import (johnson_zfs, kneser_zfs, kneser_zfs_edge,
                           grassmann_zfs, grassmann_special_set_j2_4_2,
                           hamming_zfs, hamming_size, kneser_lower_bound,
                           predicted_zf)
from .F2Matrix import build_Bn, f2_nullity, kernel_basis, even_terms_identity
from .FamilySpec import (FamilySpec, GENERALIZED_JOHNSON,
                         GENERALIZED_GRASSMANN, HAMMING, johnson, hamming)
from .Forcing import (ExactSearch, ForcingTrace, ForcingError, PLAIN, TOTAL,
                      CONNECTED, closure, greedy_zero_forcing_set,
                      is_zero_forcing, is_total_zfs, is_connected_zfs,
                      replay_trace)
from .Graph import build_graph, is_connected, regular_degree
from .GraphFile import (MAGIC, load_graph, read_edge_list, save_graph,
                        _tupleize)
from .Grundy import (GRUNDY, Z_GRUNDY, DominationError, footprints_of,
                     grundy_exact)
from .Metrics import (WalkCertificate, WalkError, build_distance_walk,
                      diameter, girth, grassmann_diameter_evaluation,
                      bfs_distances)
from .Report import (Report, LEADER_SET, FORCING_TRACE, WALK,
                     DOMINATION_SEQUENCE, plain)

CLOSURE = "closure"
VERIFY = "verify"
EXACT = "exact"
GRUNDY_MODE = "grundy"
ZF_MODES = (CLOSURE, VERIFY, EXACT, GRUNDY_MODE)

# H(n,q) up to this order gets an exhaustive Z next to its nullity
NULLITY_EXACT_LIMIT = 16

CONSTRUCTIONS = ("johnson", "kneser", "kneser_edge", "grassmann",
                 "grassmann_special", "hamming")

_CHECKS = {PLAIN: is_zero_forcing, TOTAL: is_total_zfs,
           CONNECTED: is_connected_zfs}


class Manager(BaseAPI):
    """
        Facade over the package: every command of the command line is a
        method returning a Report. Caps come from the environment and can
        be overridden with keyword arguments, e.g.
        ``Manager(search_cap=30, workers=4)``.
    """
    def __init__(self, *args, **kwargs):
        super(Manager, self).__init__(*args, **kwargs)

    def get_graph(self, spec=None, path=None):
        """Builds a family graph, or loads a graph cache or edge list."""
        if path is not None:
            with open(path, "rb") as f:
                head = f.read(len(MAGIC))
            if head == MAGIC:
                return load_graph(path)
            return read_edge_list(path)
        if spec is None:
            raise HypothesisError("need a family spec or a graph file")
        spec.validate()
        return build_graph(spec, cap=self.vertex_cap)

    def build(self, spec, out=None):
        report = Report(command=["build", str(spec)])
        report.set_spec(spec)
        graph = self.get_graph(spec)
        report.values = {"v_count": graph.v_count,
                         "edge_count": graph.edge_count(),
                         "regular_degree": regular_degree(graph)}
        if out:
            save_graph(graph, out)
            report.values["path"] = out
        self._log.info("built %s", graph)
        report.stop_clock()
        return report

    def metrics(self, graph, with_diameter=True, with_girth=True,
                check_formula=False, walk_pair=None):
        """
            BFS diameter and girth. check_formula compares the diameter
            with the closed form when the graph is a generalized Grassmann
            graph satisfying its hypotheses. walk_pair=(v, w) asks for a
            walk certificate of length dist(v, w).
        """
        report = Report(command=["metrics"])
        report.set_spec(graph.spec)
        if with_diameter:
            report.values["diameter"] = diameter(graph)
            report.values["connected"] = is_connected(graph)
        if with_girth:
            report.values["girth"] = girth(graph)

        spec = graph.spec
        if check_formula:
            if spec is not None and spec.family == GENERALIZED_GRASSMANN:
                try:
                    value, tag = grassmann_diameter_evaluation(spec)
                    report.predicted["diameter"] = {"value": value,
                                                    "tags": [tag]}
                    if with_diameter:
                        report.verification["diameter_formula"] = \
                            value == report.values["diameter"]
                except HypothesisError as e:
                    report.predicted["diameter"] = {"value": None,
                                                    "tags": ["not_covered"],
                                                    "reason": str(e)}
            else:
                report.predicted["diameter"] = {
                    "value": None, "tags": ["not_covered"],
                    "reason": "no closed form for this graph"}

        if walk_pair is not None:
            v, w = walk_pair
            walk = build_distance_walk(graph, v, w)
            walk.validate(graph)
            report.add_certificate(WALK, graph, walk.vertices,
                                   length=walk.length)
            report.verification["walk_is_shortest"] = \
                bfs_distances(graph, v)[w] == walk.length
        report.stop_clock()
        return report

    def zf(self, graph, mode=CLOSURE, vertices=None, complement=False,
           variant=PLAIN, lower_hint=None, upper_hint=None):
        """
            closure and verify start from vertices (or their complement);
            exact runs the descending search, grundy the (Z-)Grundy DFS.
            A capped exact search yields a bounds-only report with capped
            set.
        """
        report = Report(command=["zf", mode, variant])
        report.set_spec(graph.spec)
        if mode in (CLOSURE, VERIFY):
            if vertices is None:
                raise HypothesisError("mode %s needs a vertex set" % mode)
            leader = sorted(set(range(graph.v_count)) - set(vertices)) \
                if complement else sorted(vertices)
            self._zf_closure(report, graph, leader, mode, variant)
        elif mode == EXACT:
            self._zf_exact(report, graph, variant, lower_hint, upper_hint)
        elif mode == GRUNDY_MODE:
            self._zf_grundy(report, graph, variant)
        else:
            raise HypothesisError("unknown mode %r, use one of %s" %
                                  (mode, ", ".join(ZF_MODES)))
        report.stop_clock()
        return report

    def _zf_closure(self, report, graph, leader, mode, variant):
        black, trace = closure(graph, leader)
        report.values["leader_size"] = len(leader)
        report.values["closure_size"] = len(black)
        report.add_trace(graph, trace)
        if mode == VERIFY:
            report.verification[variant] = _CHECKS[variant](graph, leader)
        else:
            report.values["zero_forcing"] = len(black) == graph.v_count

    def _zf_exact(self, report, graph, variant, lower_hint, upper_hint):
        search = ExactSearch(search_cap=self.search_cap,
                             max_seconds=self.max_seconds,
                             workers=self.workers)
        try:
            result = search.run(graph, lower_hint, upper_hint, variant)
        except CapExceededError as e:
            result = e.partial
            report.capped = True
            report.notes.append(str(e))
        report.values.update({
            "variant": variant, "value": result.value, "lower": result.lower,
            "upper": result.upper, "exact": result.exact,
            "proof": result.proof, "feasible": result.feasible,
            "levels": result.levels})
        if result.certificate is not None:
            report.add_certificate(LEADER_SET, graph, result.certificate,
                                   variant=variant)
        if graph.spec is not None and variant == PLAIN:
            prediction = predicted_zf(graph.spec)
            report.predicted["zero_forcing_number"] = prediction.to_dict()
            if result.exact and prediction.value is not None:
                report.verification["matches_prediction"] = \
                    prediction.value == result.value

    def _zf_grundy(self, report, graph, variant):
        kind = Z_GRUNDY if variant in (Z_GRUNDY, "z") else GRUNDY
        length, seq = grundy_exact(graph, kind, self.grundy_cap)
        report.values[kind] = length
        report.values["zero_forcing_" +
                      ("number" if kind == Z_GRUNDY else "lower_bound")] = \
            graph.v_count - length
        report.add_certificate(DOMINATION_SEQUENCE, graph, seq.sequence,
                               variant=kind)
        spec = graph.spec
        if spec is None or spec.family == HAMMING:
            return
        mode = None
        if kind == GRUNDY and spec.family == GENERALIZED_JOHNSON and \
                spec.S == tuple(range(spec.s, spec.k)):
            mode = JOHNSON_MODE
        elif kind == Z_GRUNDY and spec.S == tuple(range(spec.t + 1)):
            mode = KNESER_MODE
        if mode is not None:
            verdict = bollobas_check(pairing_from_sequence(graph, seq, mode))
            report.verification["set_pairs"] = {
                "conditions": verdict.conditions_hold,
                "within_bound": verdict.within_bound}
            report.values["set_pair_bound"] = verdict.bound

    def construct(self, name, verify=False, **params):
        """
            Runs a construction by name (johnson, kneser, kneser_edge,
            grassmann, grassmann_special, hamming) with its parameters.
        """
        report = Report(command=["construct", name, plain(params)])
        result, graph = self._construction(name, params)
        report.set_spec(result.spec)
        self._record_construction(report, result, graph, verify)
        if result.companion is not None:
            self._record_construction(report, result.companion, graph,
                                      verify, prefix="companion_")
        if verify:
            report.predicted["zero_forcing_number"] = \
                predicted_zf(result.spec).to_dict()
        report.stop_clock()
        return report

    def _construction(self, name, params):
        n, k, q = params.get("n"), params.get("k"), params.get("q")
        t, S = params.get("t"), params.get("S")
        cap = self.vertex_cap
        if name == "johnson":
            result = johnson_zfs(n, k, S, cap=cap)
        elif name == "kneser":
            result = kneser_zfs(n, k, t, S, cap=cap)
        elif name == "kneser_edge":
            result = kneser_zfs_edge(n, k, t, S, cap=cap)
        elif name == "grassmann":
            result = grassmann_zfs(n, k, q, t, S, cap=cap)
        elif name == "grassmann_special":
            result = grassmann_special_set_j2_4_2()
        elif name == "hamming":
            result = hamming_zfs(n, q, cap=cap)
        else:
            raise HypothesisError("unknown construction %r, use one of %s" %
                                  (name, ", ".join(CONSTRUCTIONS)))
        graph = self.get_graph(result.spec)
        return result, graph

    def _record_construction(self, report, result, graph, verify,
                             prefix=""):
        report.values[prefix + "leader_size"] = len(result.leader)
        report.values[prefix + "white_size"] = len(result.white)
        report.values[prefix + "predicted_size"] = result.predicted_size
        report.values[prefix + "claims"] = result.claims
        report.add_certificate(LEADER_SET, graph, result.leader,
                               variant=PLAIN, name=prefix + result.name)
        if result.trace is not None:
            report.add_trace(graph, result.trace, name=prefix + result.name)
        if verify:
            report.verification[prefix + result.name] = result.verify(graph)
        report.notes.extend(result.notes)

    def nullity(self, n, q, exact=None):
        """
            Nullity of B_n over GF(2), its kernel basis and the identity.
            exact also runs the exhaustive search on H(n,q) and checks
            nullity <= Z; by default it does so for q^n up to
            NULLITY_EXACT_LIMIT.
        """
        report = Report(command=["nullity", n, q])
        report.spec = {"family": HAMMING, "n": n, "q": q}
        B = build_Bn(n, q, cap=self.matrix_cap)
        nu = f2_nullity(B)
        basis = kernel_basis(n, q, cap=self.matrix_cap)
        z = hamming_size(n, q)
        report.values = {"order": B.rows, "nullity": nu, "z": z,
                         "kernel_vectors": len(basis),
                         "construction": basis.construction,
                         # nullity of a matrix with the graph's pattern
                         "zero_forcing_lower_bound": nu}
        report.verification = {"kernel_basis": basis.verify(B),
                               "identity": even_terms_identity(n, q)["equal"],
                               "nullity_equals_z": nu == z}
        if exact is None:
            exact = q ** n <= NULLITY_EXACT_LIMIT
        if exact:
            self._nullity_exact(report, n, q, nu)
        report.stop_clock()
        return report

    def _nullity_exact(self, report, n, q, nu):
        graph = self.get_graph(hamming(n, q))
        search = ExactSearch(search_cap=self.search_cap,
                             max_seconds=self.max_seconds,
                             workers=self.workers)
        try:
            result = search.run(graph)
        except CapExceededError as e:
            report.capped = True
            report.notes.append(str(e))
            report.values["zero_forcing_upper"] = e.partial.upper
            return
        report.values["zero_forcing_number"] = result.value
        report.verification["nullity_at_most_zero_forcing"] = \
            nu <= result.value

    def run(self, command, params):
        """One sweep row: a command with its parameters as a dict."""
        params = dict(params)
        if command == "nullity":
            return self.nullity(params["n"], params["q"])
        if command == "construct":
            name = params.pop("construction")
            verify = params.pop("verify", True)
            return self.construct(name, verify=verify, **params)

        spec = FamilySpec(params.pop("family"), params.pop("n"),
                          k=params.pop("k", None), q=params.pop("q", None),
                          S=params.pop("S", None))
        if command == "build":
            return self.build(spec)
        graph = self.get_graph(spec)
        if command == "metrics":
            return self.metrics(graph, check_formula=params.pop(
                "check_formula", True))
        if command == "zf":
            return self.zf(graph, mode=params.pop("mode", EXACT),
                           variant=params.pop("variant", PLAIN))
        raise HypothesisError("unknown command %r" % command)

    def sweep(self, config, out=None):
        """
            config: {"command": ..., "grid": {param: [values]}} or a
            path to such a JSON file. Rows follow the sorted parameter
            names and the given value order; a failing row records its
            error and the sweep continues. Writes CSV when out ends in
            .csv, JSON otherwise. Returns the rows.
        """
        if not isinstance(config, dict):
            try:
                with open(config, "r") as f:
                    config = json.load(f)
            except ValueError as e:
                raise JSONReadError("%s: %s" % (config, e))
        command = config["command"]
        grid = config.get("grid", {})
        names = sorted(grid)
        rows = []
        for combo in itertools.product(*[grid[name] for name in names]):
            params = dict(zip(names, combo))
            params.update(config.get("fixed", {}))
            row = {"command": command, "params": params}
            try:
                report = self.run(command, params)
                row.update(status="capped" if report.capped else "ok",
                           values=report.values,
                           predicted=report.predicted,
                           verified=report.ok)
            except Error as e:
                row.update(status="error", error="%s: %s" %
                           (e.__class__.__name__, e))
            self._log.debug("sweep row %s", row)
            rows.append(plain(row))
        if out:
            _write_rows(rows, out)
        return rows

    def replay(self, path):
        """Re-verifies every certificate of a saved report."""
        saved = Report.load(path)
        report = Report(command=["replay", path])
        report.spec = saved.spec
        if saved.spec is None:
            raise HypothesisError("%s: report has no graph spec" % path)
        graph = self.get_graph(FamilySpec.from_dict(saved.spec))
        for i, cert in enumerate(saved.certificates):
            key = "%s_%s" % (i, cert.get("kind"))
            report.verification[key] = self._replay_one(graph, cert)
        report.stop_clock()
        return report

    def _replay_one(self, graph, cert):
        ids = graph.ids_of(_tupleize(x) for x in cert["labels"])
        kind = cert["kind"]
        try:
            if kind == LEADER_SET:
                return _CHECKS[cert.get("variant", PLAIN)](graph, ids)
            if kind == FORCING_TRACE:
                steps = [tuple(graph.ids_of(_tupleize(x) for x in pair))
                         for pair in cert["step_labels"]]
                replay_trace(graph, ForcingTrace(ids, steps))
                return True
            if kind == WALK:
                return WalkCertificate(ids, cert["length"]).validate(graph)
            if kind == DOMINATION_SEQUENCE:
                footprints_of(graph, ids, cert.get("variant", GRUNDY))
                return True
        except (ForcingError, WalkError, DominationError) as e:
            self._log.info("certificate rejected: %s", e)
            return False
        raise HypothesisError("unknown certificate kind %r" % kind)

    def heuristic_kneser(self, n, k, t, attempts=20, seed=0):
        """
            Seeded greedy search for a leader set of J_{0..t}(n,k) meeting
            the lower bound, for instances without a construction.
        """
        spec = johnson(n, k, range(t + 1))
        report = Report(command=["heuristic_kneser", n, k, t])
        report.set_spec(spec)
        graph = self.get_graph(spec)
        target = kneser_lower_bound(n, k, t)
        best = None
        for attempt in range(attempts):
            leader = greedy_zero_forcing_set(graph, seed=seed + attempt)
            if best is None or len(leader) < len(best):
                best = leader
                self._log.debug("attempt %s: %s", attempt, len(leader))
            if len(best) == target:
                break
        report.values = {"target": target, "best": len(best),
                         "attempts": attempt + 1,
                         "meets_lower_bound": len(best) == target}
        report.add_certificate(LEADER_SET, graph, best, variant=PLAIN)
        report.verification["zero_forcing"] = is_zero_forcing(graph, best)
        report.stop_clock()
        return report


def _write_rows(rows, out):
    if os.path.splitext(out)[1] == ".csv":
        with open(out, "w") as f:
            writer = csv.writer(f)
            writer.writerow(["command", "params", "status", "values",
                             "verified", "error"])
            for row in rows:
                writer.writerow([row["command"], json.dumps(row["params"]),
                                 row["status"],
                                 json.dumps(row.get("values")),
                                 row.get("verified"), row.get("error", "")])
    else:
        with open(out, "w") as f:
            json.dump(rows, f, indent=1)
