import pytest

import domination


def test_truth_table_rows():
    assert domination.decide("product", "SFS(g=1;b=0)")["decision"]["verdict"] is True
    assert domination.decide("ntbundle", "SFS(g=1;b=0)")["decision"]["verdict"] is False
    assert domination.decide("ntbundle", "SFS(g=1;b=-1)")["decision"]["verdict"] is True
    assert domination.decide("product", "Hyperbolic")["decision"]["verdict"] is False


def test_normalize():
    assert domination.normalize("SFS(g=2;b=3;(5,-7),(3,2))") == "SFS(g=2;b=1;(3,2),(5,3))"
    assert domination.normalize("SFS(g=0;b=0)") == "S2xS1"


def test_errors():
    with pytest.raises(ValueError):
        domination.decide("product", "SFS(g=1;b=0;(4,2))")
    with pytest.raises(domination.InputError):
        domination.decide("presentable", "S3")
    with pytest.raises(domination.OracleBoundError):
        domination.rank_oracle(0, [7, 11], max_order=10)


def test_free_cover_rank_matches_oracle():
    assert domination.free_cover_rank(0, [2, 2]) == (1, 4)
    assert domination.free_cover_rank(2, [3, 4]) == (30, 12)
    assert domination.rank_oracle(2, [3, 4]) == 30


def test_schema_round_trip_and_fault():
    doc = domination.schema("ntbundle", 3)
    assert domination.verify(doc)["passed"] is True
    doc["fiber_sum"]["total_euler_number"] = 4
    assert domination.verify(doc)["passed"] is False


def test_cli_entry():
    code, out, _ = domination.run_cli(["decide", "product", "S2xS1 # Spherical(2)"])
    assert code == 0
    assert out.startswith("YES (")
