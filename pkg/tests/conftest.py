from __future__ import annotations

import math

import numpy as np
import pytest

from figdist import Figure, load_reference

TWO_PI = 2 * math.pi


def random_graph(rng: np.random.Generator, n_vertices: int, extra: float = 0.3):
    """Connected random graph: a random tree plus each other pair with prob ``extra``."""
    order = rng.permutation(n_vertices)
    edges = set()
    for k in range(1, n_vertices):
        parent = order[rng.integers(0, k)]
        a, b = sorted((int(order[k]), int(parent)))
        edges.add((a, b))
    for a in range(n_vertices):
        for b in range(a + 1, n_vertices):
            if (a, b) not in edges and rng.random() < extra:
                edges.add((a, b))
    return sorted(edges)


def adjacent_edge_pairs(edges) -> int:
    deg: dict[int, int] = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    return sum(d * (d - 1) // 2 for d in deg.values())


def random_figure(rng, name, n_vertices, edges, z):
    lengths = rng.uniform(0.5, 50.0, size=len(edges))
    # open interval (0, 2pi)
    angles = rng.uniform(np.nextafter(0.0, 1.0), TWO_PI, size=z)
    return Figure(
        name,
        tuple(f"v{i}" for i in range(n_vertices)),
        tuple((f"v{a}", f"v{b}") for a, b in edges),
        tuple(lengths),
        tuple(angles),
    )


def random_family(rng, count, low=4, high=12):
    """``count`` figures on one shared random graph of ``low..high`` vertices."""
    nv = int(rng.integers(low, high + 1))
    edges = random_graph(rng, nv)
    z = max(1, adjacent_edge_pairs(edges))
    return [random_figure(rng, f"f{i}", nv, edges, z) for i in range(count)]


def triangle_figure(name="triangle"):
    return Figure(
        name,
        ("A", "B", "C"),
        (("A", "B"), ("B", "C"), ("C", "A")),
        (3.0, 4.0, 5.0),
        (math.pi / 2, math.atan2(3, 4), math.atan2(4, 3)),
    )


@pytest.fixture(scope="session")
def ref():
    return load_reference


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


# one PASS/FAIL line per acceptance criterion in the terminal summary

def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", (m.args[0], m.args[1])))


_criteria: dict[int, list] = {}


def pytest_runtest_logreport(report):
    for key, value in report.user_properties:
        if key != "criterion":
            continue
        number, title = value
        entry = _criteria.setdefault(number, [title, True, False])
        if report.when == "call":
            entry[2] = True
        if report.failed:
            entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok, ran = _criteria[number]
        status = "PASS" if ok and ran else ("FAIL" if ran or not ok else "SKIP")
        terminalreporter.write_line(f"{status}  criterion {number}: {title}")
