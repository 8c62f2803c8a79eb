import pytest

from splitword.families import (
    FAMILY_NAMES,
    FamilySpec,
    c3_members,
    c_members,
    c3_members_up_to,
    generate,
)
from splitword.graph import Graph, find_split_partition, is_isomorphic
from splitword.labelling import find_wr_labelling

ALL_SPECS = [
    FamilySpec(name) for name in ("B1", "B2", "B3", "B4", "K1_join_tent", "M4", "M5", "F0")
] + [
    FamilySpec(name, k)
    for name, ks in {
        "odd_sun_center": (3, 5, 7),
        "even_sun": (4, 6, 8),
        "M2": (4, 6),
        "M3": (3, 4, 6),
        "F1": (5, 7, 9),
        "F2": (5, 7),
    }.items()
    for k in ks
]


def nbhd(g, v):
    return set(g.neighbours_by_name(v))


def with_apex(g):
    n = g.n
    return Graph.from_edges(n + 1, g.edges() + [(v, n) for v in range(n)], list(g.names) + ["apex"])


@pytest.mark.parametrize(
    "name, k",
    [
        ("even_sun", 3), ("even_sun", 2), ("odd_sun_center", 4), ("odd_sun_center", 1),
        ("M2", 5), ("M3", 5), ("M3", 2), ("F1", 3), ("F1", 6), ("F2", 4),
        ("F0", 5), ("B1", 1), ("nope", None), ("F1", None),
    ],
)
def test_bad_parameters_are_rejected(name, k):
    with pytest.raises(ValueError):
        FamilySpec(name, k)


def test_spec_string_and_order():
    assert str(FamilySpec("F1", 5)) == "F1(5)"
    assert str(FamilySpec("F0")) == "F0"
    assert FamilySpec("M3", 3).order == 7


@pytest.mark.parametrize("spec", ALL_SPECS, ids=str)
def test_generated_partition_is_canonical(spec):
    g, p = generate(spec)
    assert g.n == spec.order
    assert find_split_partition(g) == p
    assert len(set(g.names)) == g.n


def test_even_sun_four():
    g, p = generate("even_sun", 4)
    assert g.n == 8
    assert {g.names[c] for c in p.clique} == {"c1", "c2", "c3", "c4"}
    assert nbhd(g, "a1") == {"c1", "c2"}
    assert nbhd(g, "a3") == {"c3", "c4"}
    assert nbhd(g, "a4") == {"c1", "c4"}


def test_f1_five():
    g, p = generate("F1", 5)
    assert {g.names[a] for a in p.independent} == {"b1", "b2", "a1", "a2", "a3"}
    assert {g.names[c] for c in p.clique} == {"c1", "c2", "c3", "c4"}
    assert nbhd(g, "b1") == {"c1", "c2", "c3"}
    assert nbhd(g, "b2") == {"c2", "c3", "c4"}


def test_f0_is_b4_plus_apex():
    f0, _ = generate("F0")
    b4, _ = generate("B4")
    assert f0.n == 8
    assert f0.degree(f0.index("0")) == 7
    assert is_isomorphic(f0, with_apex(b4))


def test_k1_join_tent_is_tent_plus_apex():
    g, _ = generate("K1_join_tent")
    tent, _ = generate("B2")
    assert is_isomorphic(g, with_apex(tent))


def test_m3_three_matches_formula_and_net_plus_apex():
    g, _ = generate("M3", 3)
    # N(b) = {c2, c4}, a1 on c1 c2, a2 on c2 c3, clique c1..c4
    names = ["c1", "c2", "c3", "c4", "a1", "a2", "b"]
    idx = {x: i for i, x in enumerate(names)}
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(idx[a], idx[c]) for a, cs in {"a1": "c1 c2", "a2": "c2 c3", "b": "c2 c4"}.items() for c in cs.split()]
    assert is_isomorphic(g, Graph.from_edges(7, edges, names))
    net, _ = generate("B1")
    assert is_isomorphic(g, with_apex(net))


@pytest.mark.parametrize("k", [4, 6, 8])
def test_m3_degree_of_b(k):
    g, _ = generate("M3", k)
    assert g.degree(g.index("b")) == k - 1


def test_m4_and_m5_neighbourhoods():
    g, p = generate("M4")
    assert len(p.clique) == 6
    assert nbhd(g, "a4") == {"c2", "c4", "c6"}
    g, p = generate("M5")
    assert len(p.clique) == 5
    assert nbhd(g, "a3") == {"c4", "c5", "c1"}


def test_odd_sun_centre_sees_whole_clique_only():
    g, p = generate("odd_sun_center", 5)
    assert nbhd(g, "c") == {f"c{i}" for i in range(1, 6)}
    assert all(g.degree(a) == 2 for a in p.independent)


def test_b_family_orders():
    for name, n in (("B1", 6), ("B2", 6), ("B3", 7), ("B4", 7)):
        g, _ = generate(name)
        assert g.n == n


def test_c3_members():
    assert [str(s) for s in c3_members(5)] == ["F0", "even_sun(4)", "F1(5)", "F2(5)"]
    assert [str(s) for s in c3_members(6)] == ["F0", "even_sun(4)", "even_sun(6)", "F1(5)", "F2(5)"]
    assert set(map(str, c3_members(7))) - set(map(str, c3_members(6))) == {"F1(7)", "F2(7)"}
    with pytest.raises(ValueError):
        c3_members(4)


def test_c_members_respect_order_bound():
    specs = c_members(10)
    assert all(s.order <= 10 for s in specs)
    assert FamilySpec("M4") in specs and FamilySpec("odd_sun_center", 5) not in specs
    assert [s.order for s in specs] == sorted(s.order for s in specs)
    assert set(c3_members_up_to(10)) == {s for s in c3_members(9) if s.order <= 10}


@pytest.mark.parametrize("spec", [s for s in ALL_SPECS if s.name not in ("B1", "B2", "B3", "B4")], ids=str)
def test_word_representability_of_circle_obstructions(spec):
    g, p = generate(spec)
    representable = spec.name in ("F0", "even_sun", "F1", "F2")
    assert (find_wr_labelling(g, p) is not None) == representable


def test_every_family_name_generates():
    seen = {s.name for s in ALL_SPECS}
    assert seen == set(FAMILY_NAMES)

