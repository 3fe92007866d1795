import pytest

import clusterdenom as cd


def test_version():
    assert cd.version().startswith("clusterdenom ")


def test_standard_matrix_and_mutation():
    b = cd.standard_matrix("A3")
    assert len(b) == 3
    assert all(b[i][i] == 0 for i in range(3))
    assert cd.mutate(cd.mutate(b, 1), 1) == b


def test_non_skew_symmetrizable_matrix_is_rejected():
    with pytest.raises(ValueError):
        cd.mutate([[0, 1], [1, 0]], 0)


def test_symmetrizer_of_b2():
    b = cd.standard_matrix("B2")
    d = cd.symmetrizer(b)
    assert d[0] * b[0][1] == -d[1] * b[1][0]
    assert d != [1, 1]


def test_finite_type_and_classes():
    assert cd.is_finite_type("D4")
    assert not cd.is_finite_type([[0, 3], [-3, 0]])
    assert len(cd.mutation_classes("A3")) == 4


@pytest.mark.parametrize("type_name,clusters", [("A2", 5), ("A3", 14), ("D4", 50), ("G2", 8)])
def test_enumerate_counts(type_name, clusters):
    pattern = cd.enumerate(type_name)
    assert pattern["clusters"] == clusters
    assert len(pattern["dmatrices"]) == clusters


def test_verify_a2():
    report = cd.verify("A2")
    assert report["verdict"] == "verified"
    assert report["class_count"] == 1
    assert report["feasible"] == []


def test_verify_matrix_input_matches_type_input():
    by_type = cd.verify("B3")
    by_rows = cd.verify(cd.standard_matrix("B3"))
    assert by_type["systems_checked"] == by_rows["systems_checked"]
    assert by_rows["verdict"] == "verified"


def test_extended_budget_is_not_verified():
    report = cd.verify("E7", extended=True, max_seconds=0.5)
    assert report["verdict"] == "budget-exceeded"


def test_disc_counts():
    assert len(cd.tagged_arcs(4)) == 16
    assert cd.triangulation_count(4) == 50
    with pytest.raises(ValueError):
        cd.tagged_arcs(3)


def test_injectivity_and_crosscheck():
    assert cd.injectivity(4, 2)["collisions"] == []
    table = cd.crosscheck(4)
    assert table["failures"] == []
    assert len(table["entries"]) == 16
    assert all(e["int_vector"] == e["d_vector"] for e in table["entries"])


def test_cli_round_trip():
    code, out, _ = cd.run_cli(["--version"])
    assert code == 0
    assert "clusterdenom" in out
    code, _, err = cd.run_cli(["verify", "--type", "Z9"])
    assert code == 1
    assert err
