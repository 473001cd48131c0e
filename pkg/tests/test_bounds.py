import pytest

from ogcoh import bounds
from ogcoh.bounds import BettiEntry, BoundsInconsistencyError, betti_bounds, theorem_check


def test_m_default():
    r = betti_bounds("M")
    assert (r[10].lower, r[10].upper) == (87101, 117877)
    assert r[0].value == 1
    assert r[16].value == 277
    assert r[16].binding == ["sym-refined-upper", "e2-lower"]
    assert r.euler == 123606


def test_k_default():
    r = betti_bounds("K")
    assert (r[5].lower, r[5].upper) == (113, 276)
    assert r[5].lower > 0
    assert (r[6].lower, r[6].upper) == (1178, 1502)
    assert r[0].value == 1
    assert r[2].value == 7
    assert r[10].value == 7 and r[11].value == 0
    assert "d0-rank-pinned" in r[10].binding
    assert any("b_2 = 23" in w for w in r.warnings)
    assert any("1503" in w for w in r.warnings)
    assert any("weight" in m for m in r.metadata)


def test_cor1_sets():
    m = betti_bounds("M", "cor1")
    assert (m[6].lower, m[6].upper) == (2323, 2599)
    assert (m[18].lower, m[18].upper) == (23, 24)
    k = betti_bounds("K", "cor1")
    assert (k[4].lower, k[4].upper) == (28, 198)
    assert (k[10].lower, k[10].upper) == (7, 8)


@pytest.mark.parametrize("v,name", [("M", "cor1"), ("M", "cor2"), ("K", "cor1"), ("K", "prop2")])
def test_report_invariants(v, name):
    r = betti_bounds(v, name)
    assert r.top_degree == 20 if v == "M" else 12
    for e in r:
        assert e.upper is not None and e.lower <= e.upper
    # odd widths follow even widths
    for q in range(0, r.top_degree - 1, 2):
        assert r[q + 1].upper - r[q + 1].lower == r[q].upper - r[q].lower
    # every consistent choice has the right Euler characteristic
    lo_even_choice = sum(r[q].lower - r[q + 1].lower for q in range(0, r.top_degree, 2)) + r[r.top_degree].lower
    assert lo_even_choice == r.euler
    hi_choice = sum(r[q].upper - r[q + 1].upper for q in range(0, r.top_degree, 2)) + r[r.top_degree].upper
    assert hi_choice == r.euler


def test_custom_rules_and_errors():
    r = betti_bounds("M", ["e2-lower", "odd-relation"])
    assert r.ruleset == "custom"
    assert r[6].upper is None
    assert r[7].upper is None
    with pytest.raises(ValueError):
        betti_bounds("M", "prop2")
    with pytest.raises(ValueError):
        betti_bounds("M", ["no-such-rule"])


def test_empty_interval_names_rules():
    e = BettiEntry(4)
    e.add("a", "lower", 5)
    with pytest.raises(BoundsInconsistencyError, match="a=5"):
        e.add("b", "upper", 4)


def test_theorem_check():
    m = theorem_check("M")
    assert m.ok, m.failures
    assert any("Poincare" in c.name and c.ok for c in m.checks)
    k = theorem_check("K")
    assert k.ok, k.failures
    assert any(c.name == "b5(K) != 0" for c in k.checks)


def test_rule_metadata():
    for rid, rule in bounds.RULES.items():
        assert rule.id == rid
        assert rule.direction in ("lower", "upper", "exact", "odd_relation")
        assert rule.citation and rule.formula
    for sets in bounds.RULESETS.values():
        for ids in sets.values():
            assert set(ids) <= set(bounds.RULES)
