"""Structured dynamic programming: merge formulas and the full solver.

The merge-formula expectations were frozen from the closed forms and then
cross-checked against brute force on concrete realizations, including the
two-triangles instance whose value the enumeration oracle pins at 2.
"""

import random

import pytest

from minrank import (
    BudgetExceededError,
    Graph,
    SimpleTreeStructure,
    StructureError,
    default_registry,
    dp_minrank,
    minrank_bnb,
    minrank_bruteforce,
    parse_registry_spec,
    recognize,
)
from minrank.dp import combine_shared_vertex, star_merge
from minrank.generator import generate_member
from conftest import random_connected_in_budget


@pytest.mark.parametrize(
    "args, want",
    [
        ((1, 1, 1, 1), 2),  # bowtie: two triangles sharing a vertex
        ((2, 2, 3, 2), 4),
        ((3, 2, 1, 0), 3),  # pendant absorbed when both ranks drop
        ((2, 1, 2, 1), 3),
        ((1, 0, 1, 0), 1),
    ],
)
def test_combine_shared_vertex_frozen(args, want):
    assert combine_shared_vertex(*args) == want


def test_combine_rejects_out_of_range():
    with pytest.raises(ValueError):
        combine_shared_vertex(2, 0, 1, 1)  # m1v below m1-1
    with pytest.raises(ValueError):
        combine_shared_vertex(1, 2, 1, 1)  # m1v above m1


def test_combine_matches_bruteforce_on_glued_graphs():
    rng = random.Random(600)
    for _ in range(30):
        g1 = random_connected_in_budget(rng, 4, edge_cap=4)
        g2 = random_connected_in_budget(rng, 4, edge_cap=4)
        v1 = rng.randrange(g1.n)
        v2 = rng.randrange(g2.n)
        # identify v2 of g2 with v1 of g1
        remap = {}
        nxt = g1.n
        for v in range(g2.n):
            if v == v2:
                remap[v] = v1
            else:
                remap[v] = nxt
                nxt += 1
        union = Graph(
            nxt, g1.edges + [(remap[a], remap[b]) for a, b in g2.edges]
        )
        got = combine_shared_vertex(
            minrank_bruteforce(g1).value,
            minrank_bruteforce(g1.remove_vertices([v1])).value,
            minrank_bruteforce(g2).value,
            minrank_bruteforce(g2.remove_vertices([v2])).value,
        )
        assert got == minrank_bruteforce(union).value


@pytest.mark.parametrize(
    "children, want",
    [
        ([(2, 1)], (2, 2)),
        ([(2, 2)], (3, 2)),
        ([(1, 1), (1, 0), (2, 2)], (4, 4)),
        ([(1, 0)], (1, 1)),
        ([(1, 1), (1, 1)], (3, 2)),
    ],
)
def test_star_merge_frozen(children, want):
    assert star_merge(children) == want


def test_star_merge_rejects_empty_and_bad_pairs():
    with pytest.raises(ValueError):
        star_merge([])
    with pytest.raises(ValueError):
        star_merge([(2, 0)])


def test_star_merge_matches_bruteforce_realizations():
    """Build the hub graph explicitly: a fresh vertex joined to one chosen
    vertex of each child graph."""
    rng = random.Random(601)
    built = drop_seen = nodrop_seen = 0
    while built < 30:
        r = rng.randint(1, 3)
        children, edges, uc_map = [], [], []
        nxt = 1  # vertex 0 is the hub
        for _ in range(r):
            child = random_connected_in_budget(rng, 4, edge_cap=4)
            off = nxt
            edges += [(a + off, b + off) for a, b in child.edges]
            uc = rng.randrange(child.n) + off
            edges.append((0, uc))
            children.append(child)
            uc_map.append((uc - off, off))
            nxt += child.n
        if len(edges) > 9:
            continue
        pairs = []
        for child, (uc_local, _) in zip(children, uc_map):
            m = minrank_bruteforce(child).value
            mv = minrank_bruteforce(child.remove_vertices([uc_local])).value
            pairs.append((m, mv))
        hub_graph = Graph(nxt, edges)
        want = minrank_bruteforce(hub_graph).value
        want_minus = minrank_bruteforce(hub_graph.remove_vertices([0])).value
        got = star_merge(pairs)
        assert got == (want, want_minus)
        if any(mv == m - 1 for m, mv in pairs):
            drop_seen += 1
        else:
            nodrop_seen += 1
        built += 1
    assert drop_seen and nodrop_seen  # both formula branches exercised


def two_triangles_instance():
    g = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
    t = SimpleTreeStructure.derive(g, [(0, 1, 2), (3, 4, 5)], [-1, 0])
    return g, t


def test_two_triangles_joined_by_edge():
    g, t = two_triangles_instance()
    res = dp_minrank(g, t, default_registry())
    assert res.value == 2
    assert res.value == minrank_bruteforce(g).value
    assert res.method == "dp"
    assert res.exact


def test_single_part_degenerates_to_family_oracle():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    t = SimpleTreeStructure.derive(g, [(0, 1, 2, 3)], [-1])
    assert dp_minrank(g, t, default_registry()).value == 2


def test_dp_handles_connector_coincidence():
    """Middle part whose upward connector is also its downward connector."""
    g = Graph(
        7,
        [(0, 1), (0, 2), (1, 2), (3, 4), (5, 6), (0, 3), (3, 5)],
    )
    t = SimpleTreeStructure.derive(
        g, [(0, 1, 2), (3, 4), (5, 6)], [-1, 0, 1]
    )
    assert t.uc[1] == 3 and 3 in t.dc[1]  # the coincidence is real
    res = dp_minrank(g, t, default_registry())
    assert res.value == minrank_bruteforce(g).value


def test_dp_agrees_with_bnb_on_generated_members():
    reg = default_registry()
    checked = 0
    seed = 0
    while checked < 40:
        g, t = generate_member(seed, k=2 + seed % 3, c=2, part_order=(2, 5))
        seed += 1
        if g.n > 13:
            continue
        assert dp_minrank(g, t, reg).value == minrank_bnb(g).value
        checked += 1


def test_dp_value_is_structure_independent():
    """A second structure for the same graph gives the same value."""
    reg = default_registry()
    for seed in (2, 5, 11):
        g, t = generate_member(seed, k=3, c=2, part_order=(2, 4))
        outcome = recognize(g, 2, reg)
        assert outcome.member
        a = dp_minrank(g, t, reg).value
        b = dp_minrank(g, outcome.structure, reg).value
        assert a == b


def test_dp_rejects_invalid_structure():
    g, t = two_triangles_instance()
    broken = SimpleTreeStructure(t.parts, (-1, -1), {}, {})
    with pytest.raises(StructureError):
        dp_minrank(g, broken, default_registry())


def test_dp_rejects_unregistered_parts():
    g, t = two_triangles_instance()
    with pytest.raises(StructureError):
        dp_minrank(g, t, parse_registry_spec("bounded:2"))


def test_dp_subset_budget():
    # a part with three downward connectors needs 2^3 subsets at the fold
    g = Graph(
        6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
    )
    t = SimpleTreeStructure.derive(
        g, [(0, 1, 2), (3,), (4,), (5,)], [-1, 0, 0, 0]
    )
    assert dp_minrank(g, t, default_registry()).value == minrank_bruteforce(g).value
    with pytest.raises(BudgetExceededError):
        dp_minrank(g, t, default_registry(), max_subsets=4)


def test_dp_trace_records_tables():
    g, t = two_triangles_instance()
    res = dp_minrank(g, t, default_registry(), trace=True)
    trace = res.stats["trace"]
    assert trace["order"] == [1, 0]  # leaf first
    leaf = next(node for node in trace["nodes"] if node["part"] == 1)
    assert leaf["m_full"] == 1 and leaf["m_minus"] == 1
    root = next(node for node in trace["nodes"] if node["part"] == 0)
    # hub over connector 2: one child without rank drop gives (sum+1, sum)
    assert root["hub_values"]["2"] == [2, 1]
    assert res.stats["oracle_calls"] > 0
