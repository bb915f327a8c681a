import json

import pytest

import coprime


def test_number_theory():
    assert coprime.gcd(12, 18) == 6
    assert coprime.is_prime(1_000_003)
    assert not coprime.is_prime(1)
    assert coprime.find_s(21) == 9
    assert coprime.find_s(15) is None
    assert coprime.prime_factors(360) == [2, 3, 5]


def test_prism_construction_verifies():
    c = coprime.construct("prism", n=11)
    assert c.max_label == 23
    assert c.certificate.theorem == "n-prime"
    rep = coprime.verify(c.graph, c.labels)
    assert rep.ok
    assert rep.describe(c.graph) == "coprime labeling"


def test_chosen_rule_and_guard():
    c = coprime.construct("prism", n=9, theorem="2n+1-prime")
    assert c.max_label == 19
    with pytest.raises(coprime.HypothesisViolated):
        coprime.construct("prism", n=9, theorem="n-prime")
    with pytest.raises(coprime.ParameterOutOfRange):
        coprime.construct("prism", n=8)


def test_other_families():
    assert coprime.construct("gp2", n=9).max_label == 21
    assert coprime.construct("y3", n=6).max_label == 23
    assert coprime.construct("y5", n=6).max_label == 35
    g = coprime.construct("gpstar", k=3)
    assert coprime.verify(g.graph, g.labels).prime_labeling


def test_conflicts_reported():
    g = coprime.graph("prism", n=3)
    rep = coprime.verify(g, [2, 4, 3, 7, 5, 9])
    assert not rep.ok
    assert sorted(c[2] for c in rep.conflicts) == [2, 3]
    with pytest.raises(coprime.MissingVertex):
        coprime.verify(g, [1, 2, 3])


def test_solver():
    r = coprime.solve(coprime.graph("prism", n=5))
    assert r.pr == 11
    assert r.proven_optimal
    assert coprime.verify(coprime.graph("prism", n=5), r.labels).ok
    assert coprime.lower_bound(coprime.graph("gp2", n=5)) == 11
    assert coprime.confirm_no_prime_labeling(coprime.graph("gpstar", k=2))
    with pytest.raises(coprime.BudgetExceeded):
        coprime.solve(coprime.graph("prism", n=9), budget=10)


def test_scan_and_json():
    rows = coprime.scan("prism", 3, 21, workers=2)
    assert [r["params"]["n"] for r in rows] == list(range(3, 22, 2))
    assert all(r["verified"] and r["max_label"] == r["formula_value"] for r in rows)
    c = coprime.construct("y5", n=2)
    doc = json.loads(c.to_json())
    g, labels = coprime.load(doc)
    assert labels == c.labels
    assert g.name == "Y(5,2)"
    assert "x2_5" in coprime.graph("y5", n=2).to_dot()
