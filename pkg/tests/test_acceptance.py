"""Exit criteria. Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""

import itertools
import math
import subprocess
import sys
import time

import networkx as nx
import numpy as np
import pytest

from figdist import (
    adjacency_graph,
    alpha,
    closed_form_fit,
    distance,
    edge_disproportionality,
    Graph,
    ipfp_fit,
    is_isomorphic,
    load_reference,
    rho,
    scale_figure,
)
from figdist.cli import main
from figdist.figure import dump_figure
from figdist.reference import reference_dir

import published as pub
from conftest import random_family, triangle_figure
from oracles import brute_force_isomorphic_np, edge_mask, orbit_masks

TOL = 5e-4


def report(a, b, **kw):
    return distance(load_reference(a), load_reference(b), **kw)


def check_pair(key):
    exp = pub.PAIRS[key]
    r = report(*key)
    assert abs(r.alpha - exp["alpha"]) <= TOL
    assert abs(r.rho - exp["rho"]) <= TOL
    assert abs(r.d - exp["d"]) <= TOL
    assert abs(r.slope - exp["m"]) <= TOL
    assert math.isclose(r.alpha_result.shift_sum, exp["shift_sum"], rel_tol=1e-12)
    assert abs(r.edge_result.deviation_sum - exp["deviation_sum"]) <= 5e-3
    return r, exp


@pytest.mark.criterion(1, "hexagon pair regression")
def test_criterion_1_hexagon_pair():
    start = time.perf_counter()
    r, exp = check_pair(("gamma1", "gamma2"))
    elapsed = time.perf_counter() - start
    np.testing.assert_allclose(r.edge_result.line.fitted[0], exp["first_fitted_row"], atol=TOL)
    np.testing.assert_allclose(r.edge_result.deviations, exp["deviations"], atol=TOL)
    np.testing.assert_allclose(r.alpha_result.shifts, exp["shifts"], atol=1e-12)
    assert elapsed < 1.0


@pytest.mark.criterion(2, "parallelogram-and-triangle pair regression")
def test_criterion_2_parallelogram_pair():
    r, exp = check_pair(("gamma3", "gamma4"))
    assert len(r.alpha_result.shifts) == 7
    np.testing.assert_allclose(r.alpha_result.shifts, exp["shifts"], atol=1e-12)
    np.testing.assert_allclose(r.edge_result.deviations, exp["deviations"], atol=TOL)


@pytest.mark.criterion(3, "hexagon-and-triangles pair regression (z=24, n=18)")
def test_criterion_3_eighteen_edges():
    r, exp = check_pair(("gamma5", "gamma6"))
    assert len(r.alpha_result.shifts) == exp["z"] == 24
    assert r.edge_result.edge_count == exp["n"] == 18


@pytest.mark.criterion(4, "octagon-and-quadrilaterals pair and IPF step tables")
def test_criterion_4_values():
    r, exp = check_pair(("gamma7", "gamma8"))
    assert len(r.alpha_result.shifts) == exp["z"]
    assert r.edge_result.edge_count == exp["n"]
    # the results table disagrees with the worked computation for this pair
    assert abs(r.rho - pub.RESULTS_TABLE_LAST_ROW["rho"]) > TOL
    assert abs(r.d - pub.RESULTS_TABLE_LAST_ROW["d"]) > TOL
    assert abs(r.alpha - pub.RESULTS_TABLE_LAST_ROW["alpha"]) <= TOL


@pytest.mark.criterion(4, "octagon-and-quadrilaterals pair and IPF step tables")
def test_criterion_4_step_tables():
    a, b = load_reference("gamma7"), load_reference("gamma8")
    line = ipfp_fit(a.edge_lengths, b.edge_lengths, tolerance=TOL, trace=True)
    labels = [label for label, _ in line.trace]
    assert labels == ["target", "seed", "row fit 1", "column fit 1"]
    target, seed, row_fitted, col_fitted = (t for _, t in line.trace)

    np.testing.assert_allclose(target.sum(axis=1), pub.ROW_TOTALS, atol=5e-3)
    np.testing.assert_allclose(target.sum(axis=0), pub.COLUMN_TOTALS, atol=5e-3)
    np.testing.assert_array_equal(seed, np.ones((28, 2)))

    printed = np.array(pub.ROW_FITTED, dtype=float)
    totals = np.array(pub.ROW_TOTALS, dtype=float)
    mismatched = np.abs(row_fitted - printed) > 5e-3
    # rows whose printed cells do not add up to their own printed total
    inconsistent_rows = np.abs(printed.sum(axis=1) - totals) > 5e-3
    assert sorted(np.flatnonzero(mismatched.any(axis=1)) + 1) == sorted(np.flatnonzero(inconsistent_rows) + 1) == [10, 12, 26]
    assert mismatched.sum() == 3
    for h in np.flatnonzero(inconsistent_rows):
        good = int(np.flatnonzero(~mismatched[h])[0])
        bad = 1 - good
        assert abs(row_fitted[h, good] - printed[h, good]) <= 5e-3
        assert abs(row_fitted[h, bad] - (totals[h] - printed[h, good])) <= 5e-3
    np.testing.assert_allclose(row_fitted.sum(axis=0), pub.ROW_FITTED_COLUMN_TOTALS, atol=5e-3)

    np.testing.assert_allclose(col_fitted, np.array(pub.COLUMN_FITTED), atol=5e-3)
    np.testing.assert_allclose(col_fitted.sum(axis=0), pub.COLUMN_TOTALS, atol=5e-3)
    assert line.iterations == 1
    assert abs(line.slope - 1.5832) <= TOL


@pytest.mark.criterion(5, "metric axioms on 1000 random triples")
def test_criterion_5_metric_axioms():
    rng = np.random.default_rng(1729)
    start = time.perf_counter()
    for trial in range(1000):
        a, b, c = random_family(rng, 3, 4, 12)
        beta = float(rng.uniform(0, 1))
        pairs = {}
        for x, y in itertools.permutations((a, b, c), 2):
            pairs[x.name, y.name] = distance(x, y, beta)
        for (x, y), r in pairs.items():
            assert abs(r.d - pairs[y, x].d) <= 1e-12
            for v in (r.alpha, r.rho, r.d):
                assert 0 <= v < 1
        for x, y, w in itertools.permutations(("f0", "f1", "f2")):
            for attr in ("alpha", "rho", "d"):
                lhs = getattr(pairs[x, w], attr)
                rhs = getattr(pairs[x, y], attr) + getattr(pairs[y, w], attr)
                assert lhs <= rhs + 1e-9, (trial, attr)
    assert time.perf_counter() - start < 30.0


@pytest.mark.criterion(6, "zero distance on scaled copies and self")
def test_criterion_6_equivalence_classes():
    rng = np.random.default_rng(6)
    for _ in range(100):
        (f,) = random_family(rng, 1, 2, 12)
        k = float(rng.uniform(0.01, 100))
        assert distance(f, scale_figure(f, k)).d == 0.0
        assert distance(f, f).d == 0.0


@pytest.mark.criterion(7, "IPF agrees with the closed form on 1000 random inputs")
def test_criterion_7_ipfp_oracle():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        n = int(rng.integers(1, 51))
        a = rng.uniform(0.1, 100, size=n)
        b = rng.uniform(0.1, 100, size=n)
        fit = ipfp_fit(a, b, tolerance=TOL, trace=True)
        exact = closed_form_fit(a, b)
        np.testing.assert_allclose(fit.fitted, exact.fitted, rtol=1e-6)
        assert fit.iterations == 1
        grand = a.sum() + b.sum()
        for _, table in fit.trace[2:]:
            assert math.isclose(table.sum(), grand, rel_tol=1e-9)


def _random_relabel(rng, n, edges):
    perm = rng.permutation(n)
    return [(int(perm[x]), int(perm[y])) for x, y in edges]


def _degree_preserving_swap(rng, n, edges):
    edges = [tuple(e) for e in edges]
    present = {frozenset(e) for e in edges}
    for _ in range(20):
        if len(edges) < 2:
            break
        i, j = rng.choice(len(edges), size=2, replace=False)
        (a, b), (c, d) = edges[i], edges[j]
        if len({a, b, c, d}) < 4 or frozenset((a, d)) in present or frozenset((c, b)) in present:
            continue
        present -= {frozenset((a, b)), frozenset((c, d))}
        present |= {frozenset((a, d)), frozenset((c, b))}
        edges[i], edges[j] = (a, d), (c, b)
        break
    return edges


@pytest.mark.criterion(8, "isomorphism gate against exhaustive search")
def test_criterion_8_small_graphs_exhaustive():
    rng = np.random.default_rng(8)
    reps = [g for g in nx.graph_atlas_g() if g.number_of_nodes() <= 6]
    assert len(reps) == 1 + 1 + 2 + 4 + 11 + 34 + 156
    atlas = [(g.number_of_nodes(), [tuple(e) for e in g.edges()]) for g in reps]
    orbits = [orbit_masks(n, e) for n, e in atlas]
    for i, (na, ea) in enumerate(atlas):
        ga = Graph.from_edges(na, ea)
        for nb, eb in atlas:
            eb_relabelled = _random_relabel(rng, nb, eb)
            gb = Graph.from_edges(nb, eb_relabelled)
            expected = na == nb and edge_mask(eb_relabelled, nb) in orbits[i]
            assert is_isomorphic(ga, gb) == expected
            assert is_isomorphic(gb, ga) == expected


@pytest.mark.criterion(8, "isomorphism gate against exhaustive search")
def test_criterion_8_random_seven_and_eight_vertices():
    rng = np.random.default_rng(88)
    outcomes = set()
    for trial in range(500):
        n = int(rng.integers(7, 9))
        p = rng.uniform(0.2, 0.7)
        ea = [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
        mode = trial % 3
        if mode == 0:
            eb = _random_relabel(rng, n, ea)
        elif mode == 1:
            eb = _random_relabel(rng, n, _degree_preserving_swap(rng, n, ea))
        else:
            eb = [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p]
        expected = brute_force_isomorphic_np(n, ea, eb)
        outcomes.add(expected)
        assert is_isomorphic(Graph.from_edges(n, ea), Graph.from_edges(n, eb)) == expected
    assert outcomes == {True, False}


@pytest.mark.criterion(8, "isomorphism gate against exhaustive search")
def test_criterion_8_compare_exit_status(tmp_path):
    tri = tmp_path / "triangle.figure.json"
    dump_figure(triangle_figure(), tri)
    hexagon = reference_dir() / "gamma1.figure.json"
    assert main(["compare", str(hexagon), str(tri)]) == 1


@pytest.mark.criterion(9, "matrix CSV is byte-identical across runs")
def test_criterion_9_determinism(tmp_path):
    outputs = []
    for run in range(2):
        out = tmp_path / f"run{run}.csv"
        subprocess.run(
            [sys.executable, "-m", "figdist.cli", "matrix", str(reference_dir()), "-o", str(out)],
            check=True,
        )
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    assert outputs[0].count(b"\n") == 9
