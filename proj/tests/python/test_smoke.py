import pytest

import thicklat


def test_nc_a2():
    doc = thicklat.nc_lattice("A2")
    assert doc["count"] == 5
    assert len(doc["edges"]) == 6
    ids = {n["id"] for n in doc["nodes"]}
    assert {"(1,2,3)", "(1),(2),(3)", "(1,2),(3)", "(1),(2,3)", "(1,3),(2)"} == ids


@pytest.mark.parametrize("type,count", [("A1", 2), ("A3", 14), ("D4", 50)])
def test_nc_counts(type, count):
    assert thicklat.nc_lattice(type)["count"] == count


def test_thick_with_bijection():
    doc = thicklat.thick("A3", field=3, verify=True)
    assert doc["count"] == 14
    assert doc["bijection"]["ok"]


def test_orientation_changes_nothing_in_count():
    assert thicklat.thick("A3", orientation="1>2,3>2")["count"] == 14


def test_spec_functions():
    assert thicklat.spec_functions("A2", "chain2")["count"] == 12
    assert thicklat.spec_functions("A2", "chain2", mode="all")["count"] == 25
    with pytest.raises(thicklat.SizeGuardError):
        thicklat.spec_functions("A2", "chain2", mode="all", cap=10)


def test_koszul():
    origin = thicklat.koszul("x,y", ["x", "y"], "0,0", module=("A2", [1, 1]))
    assert [d["homology"] for d in origin["degrees"]] == [1, 2, 1]
    assert [d["module_homology"] for d in origin["degrees"]] == [[1, 1], [2, 2], [1, 1]]
    off = thicklat.koszul("x,y", ["x", "y"], "1/2,0")
    assert off["acyclic"]


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="position 1"):
        thicklat.koszul("x,y", ["2x"], "0,0")


def test_tree_module_and_closure():
    m = thicklat.tree_module("D4", [1, 2, 1, 1])
    assert m["zero_one"]
    assert m["dim"] == [1, 2, 1, 1]
    assert thicklat.wide_closure("A2", [[1, 0], [0, 1]]) == [[0, 1], [1, 0], [1, 1]]


def test_bad_type():
    with pytest.raises(thicklat.Error):
        thicklat.nc_lattice("B2")
