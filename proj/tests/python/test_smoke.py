"""Smoke tests for the python bindings (pytest)."""

import pytest

iz = pytest.importorskip("izroupoid")

TRIVIAL = iz.FiniteAlgebra([[0]])
OR = iz.FiniteAlgebra([[0, 1], [1, 1]])  # a -> b = a or b
IMP = iz.FiniteAlgebra([[1, 1], [0, 1]])  # Boolean implication
CONST0 = iz.FiniteAlgebra([[0, 0], [0, 0]])


def test_parsing_expands_sugar():
    assert iz.parse_term("x'") == "x -> 0"
    assert iz.parse_term("x ^ y") == "(x -> y -> 0) -> 0"
    assert iz.parse_identity("x'' = x") == "(x -> 0) -> 0 = x"
    assert iz.variables_of("x ^ (y v z')") == ["x", "y", "z"]
    assert iz.is_transfer_shape("(x -> y) -> z = (y -> x) -> z")
    assert not iz.is_transfer_shape("x'' = x")


def test_evaluation_and_satisfaction():
    assert iz.eval_term(OR, "x'", {"x": 1}) == 1
    assert iz.eval_term(IMP, "0''", {}) == 0
    assert iz.satisfies(IMP, "x'' = x")
    assert iz.is_izroupoid(IMP)
    assert iz.is_izroupoid(OR)
    assert not iz.is_izroupoid(iz.FiniteAlgebra([[1, 0], [0, 0]]))

    w = iz.find_witness(iz.FiniteAlgebra([[1, 0], [0, 0]]),
                        "(x -> y) -> z = ((z' -> x) -> (y -> z)')'")
    assert w == {"assignment": {"x": 1, "y": 0, "z": 0}, "lhs": 1, "rhs": 0}
    assert iz.find_witness(IMP, "x'' = x") is None


def test_derived_algebra():
    meet, join = iz.derive_bimagma(IMP)
    assert meet == [[0, 0], [0, 1]]  # AND
    assert join == [[0, 1], [1, 1]]  # OR
    meet, join = iz.derive_bimagma(OR)
    assert meet == join == OR.rows()


def test_isomorphism_and_canonical_form():
    a = iz.FiniteAlgebra([[0, 1, 2], [1, 1, 2], [2, 2, 2]])
    assert iz.isomorphism(a, a) == [0, 1, 2]
    assert iz.isomorphism(IMP, OR) is None
    assert iz.canonical_form(CONST0) == CONST0


def test_enumeration_counts():
    assert iz.count_classes(1, "i") == 1
    assert iz.count_classes(2, "i") == 3
    assert iz.count_classes(3, "i") == 17
    assert iz.count_classes(2, "s") == 2
    r = iz.enumerate_algebras(2, "i")
    assert r["complete"] and r["count"] == 3
    assert CONST0 in r["algebras"]
    with pytest.raises(ValueError):
        iz.count_classes(2, "bogus")


def test_classification():
    report = iz.classify(IMP)
    assert report["in_S"] is True
    assert report["derived_is_birkhoff_system"] is True
    assert report["derived_essentially_semigroup"] is False

    report = iz.classify(CONST0)
    assert report["in_I"] is True
    assert report["in_I20"] is False
    assert report["derived_is_birkhoff_bisemigroup"] is True
    assert "in_I20" in report["witnesses"]


def test_verification_suites():
    assert "main" in iz.suite_names()
    result = iz.verify("main", 3)
    assert result["verdict"] == "pass"
    assert result["checked"] == 21
    assert iz.verify("catalog-l2", 3)["verdict"] == "pass"


def test_counterexample_search():
    found = iz.search_birkhoff_not_bisemilattice(3)
    assert len(found) == 15
    assert found[0] == CONST0
