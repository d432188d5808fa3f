"""Smoke tests for the pencil_orbits python bindings."""

import pencil_orbits as po


O6_PENCIL = {
    "Q": ["1", "0", "0", "0", "0", "0"],
    "Qp": ["0", "1", "0", "0", "0", "0"],
    "field": {"type": "Q"},
}


def test_classify_dict():
    result = po.classify(O6_PENCIL)
    assert result["orbit"] == "O6"
    assert result["certificate"]["rank1_locus"]["degree"] == 2


def test_classify_prime_field():
    pencil = {
        "Q": ["1", "0", "0", "0", "0", "1/2"],
        "Qp": ["0", "0", "0", "0", "1/2", "0"],
        "field": {"type": "Fp", "p": 10007},
    }
    assert po.classify(pencil)["orbit"] == "O4"


def test_expand_class():
    assert po.expand_class("s[1]*s[1]") == "s[2] + s[1,1]"
    assert po.expand_class("z*z") == "s[1]*z - s[1,1]"


def test_schubert_degree():
    assert po.schubert_degree(2, 0) == 9
    assert po.schubert_degree(0, 0) == 14
    assert po.schubert_degree(3, 1, n=5) == 3


def test_chern_classes():
    assert po.chern_principal_parts(2) == "6*s[1]*z - 3*s[1,1]"
    assert po.chern_principal_parts(4) == "18*s[3,1] + 27*s[2,2]"
    assert po.chern_sym3() == po.chern_principal_parts(4)


def test_table():
    table = po.table()
    assert table["all_ok"] is True
    assert len(table["rows"]) == 8
    assert table["fano"]["degree"] == 108
    degrees = [row["degree"] for row in table["rows"]]
    assert degrees == [14, 84, 36, 99, 56, 21, 24, 18]


def test_verify_deterministic():
    first = po.verify("secantJ", trials=10, seed=5)
    second = po.verify("secantJ", trials=10, seed=5)
    for report in (first, second):
        report.pop("elapsed")
    assert first == second
    assert first["successes"] == 10
    assert first["failures"] == []


def test_malformed_pencil_raises():
    import pytest

    with pytest.raises(ValueError):
        po.classify({"Q": ["1", "0", "0", "0", "0", "0"], "field": {"type": "Q"}})
