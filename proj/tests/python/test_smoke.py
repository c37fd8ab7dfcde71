"""Smoke tests for the python bindings; the heavy verification lives in ctest."""

import bisetkit


def test_group_parsing():
    assert bisetkit.group_order("A5") == 60
    assert bisetkit.group_name("C2xC2") == "V4"
    assert bisetkit.subgroup_class_count("A5") == 9


def test_basis_sizes():
    assert len(bisetkit.basis("C2", "C2")) == 5
    assert len(bisetkit.basis("1", "1")) == 1


def test_subquotients():
    assert set(bisetkit.subquotients("A4")) == {"1", "C2", "C3", "V4", "A4"}


def test_delta_and_simple_dimensions():
    assert bisetkit.dim_delta("A5", "A4", "sgn") == 1
    assert bisetkit.dim_delta("A5", "C3", "sgn") == 1
    assert bisetkit.dim_simple("A5", "C3", "sgn") == 0
    assert bisetkit.dim_simple("A5", "A4", "sgn") == 1


def test_nv():
    nv, offenders = bisetkit.nv("C4")
    assert nv and offenders == []
    nv, offenders = bisetkit.nv("A5")
    assert not nv
    assert ("C3", "sgn") in offenders


def test_qh():
    assert bisetkit.qh_verdict("C2")
    report = bisetkit.report("C6")
    assert report["qh"]["verdict"] == "pass"
