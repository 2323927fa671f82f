import json

import pytest

from dgspec import (
    bounds_certificate,
    check_graph,
    double,
    enumerate_digraphs,
    gen_cycle,
    new_digraph,
    sweep,
)
from dgspec.errors import BadParameterError
from dgspec.oracle import PROPERTY_NAMES, arc_pairs, code_of, digraph_of_code


def test_property_name_roster():
    assert len(PROPERTY_NAMES) == 12
    assert len(set(PROPERTY_NAMES)) == 12


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 64), (4, 4096)])
def test_enumeration_counts(n, count):
    graphs = list(enumerate_digraphs(n))
    assert len(graphs) == count
    assert len({g.arcs for g in graphs}) == count  # duplicate-free
    for i, g in enumerate(graphs):
        assert code_of(g) == i  # increasing code order


def test_code_round_trip():
    pairs = arc_pairs(3)
    assert pairs == ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))
    for code in (0, 1, 5, 63):
        assert code_of(digraph_of_code(3, code)) == code


def test_enumeration_rejects_bad_n():
    with pytest.raises(BadParameterError):
        list(enumerate_digraphs(0))
    with pytest.raises(BadParameterError):
        list(enumerate_digraphs(6))


def test_check_graph_digon_triangle(digon_triangle):
    outcome = check_graph(digon_triangle, 1e-9)
    assert outcome.ok()
    assert set(outcome.results) == set(PROPERTY_NAMES)
    prod = outcome.results["pair_product"]
    assert prod.witness == "arc (2, 0)"  # the tight pair
    assert abs(prod.slack) <= 1e-9


def test_check_graph_cycle_equalities():
    outcome = check_graph(gen_cycle(4), 1e-9)
    assert outcome.ok()
    assert abs(outcome.results["lower_equality_iff"].slack) <= 1e-12
    assert abs(outcome.results["upper_equality_iff"].slack) <= 1e-12


def test_check_graph_transitive_triangle(unsplittable):
    outcome = check_graph(unsplittable, 1e-9)
    assert outcome.ok()
    # strict inequality on the lower bound, consistent with no splitting
    assert outcome.results["lower_equality_iff"].slack > 1e-3


def test_check_graph_vacuous_on_single_vertex():
    outcome = check_graph(new_digraph(1, []), 1e-9)
    assert outcome.ok()
    assert outcome.results["pair_product"].slack is None
    assert outcome.results["pair_product"].witness is None


def test_check_outcome_deterministic(digon_triangle):
    fresh = new_digraph(3, [(0, 1), (1, 2), (0, 2), (2, 0)])
    a = json.dumps(check_graph(digon_triangle, 1e-9).to_dict(), sort_keys=True)
    b = json.dumps(check_graph(fresh, 1e-9).to_dict(), sort_keys=True)
    assert a == b


def test_sweep_3():
    summary = sweep(3, 1e-9)
    assert summary.total == 69
    assert summary.ok()
    assert all(summary.pass_counts[name] == 69 for name in PROPERTY_NAMES)
    assert summary.min_pair_product >= 1 - 1e-9
    assert summary.min_lower_slack >= -1e-9
    assert summary.min_upper_slack >= -1e-9


def test_sweep_parallel_matches_serial():
    serial = sweep(2, 1e-9, jobs=1)
    parallel = sweep(2, 1e-9, jobs=2)
    assert serial.to_dict() == parallel.to_dict()


def test_sweep_rejects_bad_max_n():
    with pytest.raises(BadParameterError):
        sweep(0)
    with pytest.raises(BadParameterError):
        sweep(6)


def test_lower_equality_counts_cross_validate():
    """Count equality graphs two ways: numeric slack vs double completeness."""
    numeric = 0
    structural = 0
    for G in enumerate_digraphs(3):
        if abs(bounds_certificate(G).lower_slack) <= 1e-8:
            numeric += 1
        # independent completeness check over the double's components
        H = double(G).graph
        adj = {v: set() for v in range(H.n)}
        for a, b in H.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        complete = True
        for v in range(H.n):
            if v in seen or not adj[v]:
                continue
            comp = {v}
            frontier = [v]
            while frontier:
                x = frontier.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        frontier.append(y)
            seen |= comp
            minus = {x for x in comp if x < H.n // 2}
            plus = comp - minus
            edge_count = sum(len(adj[x] & plus) for x in minus)
            if edge_count != len(minus) * len(plus):
                complete = False
        if complete:
            structural += 1
    assert numeric == structural
