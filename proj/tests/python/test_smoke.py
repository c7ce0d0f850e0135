import pytest

import tropocalc

LINE = "1 + 0*x + 0*y"
CONIC = "10+5.5x+0x^2+8.5y+6.5y^2+4.5xy"

THETA = {
    "vertices": ["u", "v"],
    "edges": [
        {"ends": ["u", "v"], "length": "2"},
        {"ends": ["u", "v"], "length": "3"},
        {"ends": ["u", "v"], "length": "5"},
    ],
    "divisor": [
        {"edge": 0, "offset": "1", "weight": 1},
        {"vertex": "u", "weight": -1},
    ],
}


def test_evaluate_and_canonicalize():
    assert tropocalc.evaluate(LINE, ["3", "5"]) == "5"
    assert tropocalc.evaluate(LINE, ["-inf", "-inf"]) == "1"
    assert tropocalc.canonicalize("0 + 0x^2") == "0 + 0*x + 0*x^2"
    assert tropocalc.essential_support("0 + -1x + 0x^2") == [(0,), (2,)]


def test_curve_and_balancing():
    curve = tropocalc.build_curve(CONIC)
    assert len(curve["vertices"]) == 4
    assert len(curve["edges"]) == 9
    assert tropocalc.is_balanced(curve)


def test_line_meets_conic():
    z = tropocalc.stable_intersection(LINE, CONIC)
    assert [p["pos"] for p in z["points"]] == [["3/2", "3/2"], ["2", "2"]]
    assert [p["weight"] for p in z["points"]] == [1, 1]


def test_count():
    result = tropocalc.count_curves(2, seed=4)
    assert result["N_trop"] == 1
    assert result["W_trop"] == 1
    points = tropocalc.sample_configuration(1, 0, 2)
    assert len(points) == 2
    assert tropocalc.count_curves(1, points=points)["seed"] is None


def test_graphs():
    assert tropocalc.genus(THETA) == 2
    jac = tropocalc.jacobian(THETA)
    assert jac["genus"] == 2
    assert len(jac["gram"]) == 2
    assert len(tropocalc.abel_jacobi(THETA)) == 2
    ok, tree = tropocalc.is_tree_metric(["0"] * 6)
    assert ok
    assert sorted(tree["markings"]) == ["x1", "x2", "x3", "x4"]
    z = tropocalc.moduli_distance_vector(tree)
    assert z["Z"] == ["0"] * 6
    assert tropocalc.is_tree_metric(["1", "0", "0", "0", "0", "1"]) == (False, None)


def test_errors():
    with pytest.raises(tropocalc.TropocalcError, match="DegenerateInput"):
        tropocalc.build_curve("5")
    with pytest.raises(tropocalc.TropocalcError, match="ParseError"):
        tropocalc.canonicalize("bad ++")
    with pytest.raises(ValueError, match="UnsupportedDegree"):
        tropocalc.count_curves(4)
