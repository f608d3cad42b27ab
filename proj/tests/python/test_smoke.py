"""Smoke tests for the python bindings. Runnable directly or under pytest."""

import sgideals


EXAMPLE = """\
elements: a b c
zero: a
table:
a a a
a b a
a a c
"""


def make_semilattice():
    return sgideals.parse(EXAMPLE)


def test_parse_and_accessors():
    s = make_semilattice()
    assert s.order == 3
    assert s.names == ["a", "b", "c"]
    assert s.zero == "a"
    assert s.product("b", "c") == "a"
    assert s.table() == [[0, 0, 0], [0, 1, 0], [0, 0, 2]]
    assert sgideals.parse(s.serialize()) == s


def test_parse_errors_are_value_errors():
    try:
        sgideals.parse("elements: a b\ntable:\na a\n")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_from_table_checks_associativity():
    try:
        sgideals.Semigroup.from_table(
            ["a", "b", "c", "d"],
            [0, 2, 1, 3, 2, 3, 3, 3, 1, 3, 3, 3, 3, 3, 3, 3],
        )
    except ValueError as e:
        assert "not associative" in str(e)
    else:
        raise AssertionError("expected ValueError")


def test_ideals_and_profiles():
    s = make_semilattice()
    assert sgideals.ideals(s, "interior") == [
        ["a"],
        ["a", "b"],
        ["a", "c"],
        ["a", "b", "c"],
    ]
    assert sgideals.is_ideal(s, ["a"], "interior")
    assert not sgideals.is_ideal(s, ["b"], "left")
    assert sgideals.profile(s, ["a", "b", "c"])["strongly_prime"]
    assert not sgideals.profile(s, ["a"])["strongly_prime"]
    assert sgideals.principal(s, "b", "interior") == ["a", "b"]


def test_classify_and_green():
    s = make_semilattice()
    c = sgideals.classify(s)
    assert c["regular"]
    assert c["duo"]
    assert not c["interior_simple"]
    assert sgideals.green(s, "I") == [["a"], ["b"], ["c"]]
    assert sgideals.green(s, "H") == [["a"], ["b"], ["c"]]


def test_verify_and_witnesses():
    s = make_semilattice()
    assert len(sgideals.theorems()) == 26
    assert sgideals.theorem_summary("T-INTERSECTION")
    v = sgideals.verify(s, "T-INTERSECTION")
    assert v["status"] == "holds"
    assert v["witness"] is None

    null2 = sgideals.Semigroup.from_table(["a", "b"], [0, 0, 0, 0])
    v = sgideals.verify(null2, "T-SIMPLE-IFF")
    assert v["status"] == "fails"
    assert v["witness"]["items"] == [True, False, True]
    assert v["degeneracy"] == ["zero-degenerate"]


def test_suite_report():
    report = sgideals.verify_order(2)
    assert report["schema"] == 1
    assert report["corpus"] == {"order": 2, "count": 8, "dedup": "labeled"}
    assert len(report["theorems"]) == 26
    assert len(report["errata"]) == 1
    assert report["errata"][0]["id"] == "T-SIMPLE-IFF"


def test_enumeration():
    assert sgideals.count_semigroups(3) == 113
    assert sgideals.count_semigroups(3, up_to_iso=True) == 24
    first = sgideals.enumerate_tables(2, limit=1)
    assert first == [[[0, 0], [0, 0]]]
    s = make_semilattice()
    assert sgideals.canonical_table(s) == sgideals.canonical_table(s)


def test_counterexample_search():
    assert sgideals.find_counterexample("T-IDEAL-IS-INTERIOR", 3) is None
    found = sgideals.find_counterexample("T-SIMPLE-IFF", 2)
    assert found is not None
    assert found["semigroup"]["table"] == [[0, 0], [0, 0]]


def main():
    tests = [f for name, f in sorted(globals().items())
             if name.startswith("test_") and callable(f)]
    for f in tests:
        f()
        print(f"ok {f.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
