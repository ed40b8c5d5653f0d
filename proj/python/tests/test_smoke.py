import itertools

import pytest

import primewit as pw


def path(n):
    return pw.Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def brute_force_prime(g):
    n = g.order
    for k in range(2, n):
        for s in itertools.combinations(range(n), k):
            inside = set(s)
            if all(
                len({g.adjacent(u, v) for v in s}) == 1 for u in range(n) if u not in inside
            ):
                return False
    return n >= 3


def test_graph6_round_trip():
    g = pw.generate("half-graph:2")
    assert g.to_graph6() == "CY"
    assert pw.Graph.from_graph6("CY") == g
    with pytest.raises(ValueError):
        pw.Graph.from_graph6("A")


def test_primality_matches_brute_force():
    assert pw.is_prime(path(4))
    c4 = pw.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not pw.is_prime(c4)
    s = pw.find_homogeneous_set(c4)
    assert pw.is_homogeneous_set(c4, s)
    for spec in ["thin-spider:3", "line-k2n:3!", "half-split:3", "half-graph:3"]:
        g = pw.generate(spec)
        assert pw.is_prime(g) == brute_force_prime(g), spec


def test_bad_spec():
    with pytest.raises(ValueError):
        pw.generate("k2:")


def test_chains():
    p4 = path(4)
    seq = pw.find_chain(p4, (0, 1), 3)
    assert seq is not None and sorted(seq[:2]) == [0, 1] and seq[2:] == [2, 3]
    assert pw.is_chain(p4, seq)
    assert pw.chain_induces_prime(p4, seq)
    trimmed = pw.trim_chain_to_prime(path(5), [0, 1, 2, 3, 4])
    assert len(trimmed) == 4


def test_bounds():
    b = pw.bounds(3)
    assert b["half_split"] == "19"
    assert b["matching"][0] == "3"


def test_witness_on_half_graph():
    g = pw.generate("half-graph:12")
    w = pw.unavoidable_witness(g, 4)
    assert w["family"] == "half-graph"
    assert w["n"] == 4
    assert pw.validate_witness(g, w)


def test_witness_non_prime():
    k5 = pw.generate("matching:5").complement()
    w = pw.unavoidable_witness(k5, 3)
    assert "nonprime" in w
    assert pw.is_homogeneous_set(k5, w["nonprime"])


def test_complemented_witness():
    g = pw.generate("subdivided-star:10!")
    w = pw.unavoidable_witness(g, 4)
    assert w["complemented"] is True
    assert pw.validate_witness(g, w)
