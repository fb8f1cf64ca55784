import json

import pytest

import cubecat


def test_twisted_square():
    g = cubecat.cube("twisted", 2)
    assert g["dimension"] == 2
    assert g["vertices"] == ["00", "01", "10", "11"]
    arrows = [tuple(e) for e in g["edges"] if e[0] != e[1]]
    assert arrows == [("00", "10"), ("01", "00"), ("01", "11"), ("10", "11")]


def test_definitions_agree():
    for kind in ("standard", "twisted"):
        for n in range(5):
            assert cubecat.rec_nonrec_isomorphic(kind, n)


def test_graph_json_matches_dict():
    g = cubecat.cube("standard", 3)
    assert json.loads(cubecat.graph_json("standard", 3)) == {
        "dimension": 3,
        "vertices": g["vertices"],
        "edges": [list(e) for e in g["edges"]],
    }


def test_ternary():
    assert cubecat.ternary_compose("0**", "1*") == "00*"
    assert cubecat.ternary_compose("***", "01*") == "01*"
    assert cubecat.untwisted_compose("0**", "1*") == "01*"
    assert cubecat.hom_table("ternary", 2)[1] == [1, 3, 8]
    assert cubecat.ternary_to_graphdim("0*") == {"0": "01", "1": "00"}


def test_bch():
    f = json.dumps({"m": 2, "n": 3, "map": ["j2", "b1"]})
    g = json.dumps({"m": 3, "n": 1, "map": ["b0", "b1", "j0"]})
    assert json.loads(cubecat.bch_compose(g, f)) == {"m": 2, "n": 1, "map": ["j0", "b1"]}
    assert len(cubecat.homs("bchop", 1, 1)) == 3


def test_counts_agree_across_presentations():
    tables = [cubecat.hom_table(c, 3) for c in ("bchop", "graphmeet", "graphdim")]
    assert tables[0] == tables[1] == tables[2]
    assert cubecat.hom_table("twgraphdim", 3) == cubecat.hom_table("ternary", 3)


def test_twisted_order():
    assert cubecat.hamiltonian_path(3) == ["011", "010", "000", "001", "101", "100", "110", "111"]
    assert [cubecat.order_g(v) for v in cubecat.hamiltonian_path(3)] == [format(k, "03b") for k in range(8)]
    assert cubecat.tensor("0", "01") == "010"


def test_suites_pass():
    reports = cubecat.run_suite("all", 3)
    assert reports
    assert all(r["passed"] for r in reports), [r for r in reports if not r["passed"]]


def test_errors():
    with pytest.raises(cubecat.CapacityError):
        cubecat.hom_count("graphcube", 4, 4)
    with pytest.raises(ValueError):
        cubecat.ternary_compose("0*x", "1*")
    with pytest.raises(ValueError):
        cubecat.hom_count("nope", 1, 1)
