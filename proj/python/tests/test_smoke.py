import pytest

import idemgeo


def test_witness_for_unipotent():
    w = idemgeo.witness([[1, 1], [0, 1]])
    assert w["u"]["rows"] == [["1/1", "0/1"], ["0/1", "-1/1"]]
    assert w["r"]["rows"] == [["2/1", "0/1"], ["0/1", "1/1"]]


def test_theorem_c_verdicts():
    assert idemgeo.theorem_c([[1, 1], [0, 1]])["verdict"] is True
    assert idemgeo.theorem_c([[1, 0], [0, -1]])["verdict"] is False
    assert idemgeo.theorem_c("[[1,1],[0,1]]", domain="fp", mode="exhaustive")["verdict"] is True
    assert idemgeo.is_class_two([["1", "1/2"], [0, 1]])


def test_counts():
    assert idemgeo.enumerate("idempotent")["count"] == 32
    assert idemgeo.enumerate("invertible")["count"] == 480
    sizes = sorted(d["size"] for d in idemgeo.delta_sets())
    assert sizes == [1, 1] + [5] * 12


def test_run_report_is_deterministic():
    a = idemgeo.run("classtwo", domain="q", dim=2, samples=10, t_samples=5, seed=3, workers=1)
    b = idemgeo.run("classtwo", domain="q", dim=2, samples=10, t_samples=5, seed=3, workers=2)
    a.pop("wall_seconds")
    b.pop("wall_seconds")
    assert a == b
    assert a["ok"] and a["cases"] == 30


def test_errors():
    with pytest.raises(ValueError):
        idemgeo.run("thmC", domain="q", mode="exhaustive")
    with pytest.raises(ValueError):
        idemgeo.witness([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        idemgeo.theorem_c("[[1,2]")
    assert "thmD" in idemgeo.subcommands()
