"""Smoke tests for the python module: exercises the main operations end to
end on small fixtures."""

import pytest

import mlfact


@pytest.fixture
def ctx2():
    return mlfact.make_context("finab:p=2")


def hom_file(tmp_path, name, body, files):
    for fname, text in files.items():
        (tmp_path / fname).write_text(text)
    p = tmp_path / name
    p.write_text(body)
    return str(p)


def test_context_tags():
    for tag in ["ab", "finab:p=2", "fingrp", "finring", "xmod"]:
        assert mlfact.make_context(tag).tag == tag
    with pytest.raises(TypeError):
        mlfact.make_context("nope")


def test_parse_and_describe(ctx2):
    z12 = mlfact.parse_object("abgroup 1 1\n12\n")
    assert z12.kind == "abgroup"
    assert ctx2.describe(z12) == "Z/12"
    assert ctx2.order(z12) == 12
    assert not ctx2.is_torsion(z12)
    assert not ctx2.is_torsion_free(z12)


def test_parse_error():
    with pytest.raises(ValueError):
        mlfact.parse_object("abgroup 1\n")


def test_radical(ctx2):
    z12 = mlfact.parse_object("abgroup 1 1\n12\n")
    rad = ctx2.radical(z12)
    assert ctx2.order(rad["torsion"]) == 4
    assert ctx2.order(rad["reflection"]) == 3
    assert ctx2.is_torsion(rad["torsion"])
    assert ctx2.is_torsion_free(rad["reflection"])


def test_ml_factorise(tmp_path, ctx2):
    f = mlfact.read_morphism(
        hom_file(
            tmp_path,
            "f.hom",
            "hom z12.ab z2.ab\n1\n",
            {"z12.ab": "abgroup 1 1\n12\n", "z2.ab": "abgroup 1 1\n2\n"},
        )
    )
    fac = ctx2.ml_factorise(f)
    assert ctx2.order(fac["middle"]) == 6
    flags_q = ctx2.classify(fac["q"])
    flags_m = ctx2.classify(fac["m"])
    assert flags_q["in_Ebar"] == "true"
    assert flags_m["in_Mbar"] == "true"
    assert flags_m["in_M"] == "true"


def test_reflective_factorise(tmp_path, ctx2):
    f = mlfact.read_morphism(
        hom_file(
            tmp_path,
            "f.hom",
            "hom z4.ab z2.ab\n1\n",
            {"z4.ab": "abgroup 1 1\n4\n", "z2.ab": "abgroup 1 1\n2\n"},
        )
    )
    fac = ctx2.reflective_factorise(f)
    assert ctx2.classify(fac["m"])["in_M"] == "true"


def test_identity_classifies_everywhere(ctx2):
    z4 = mlfact.parse_object("abgroup 1 1\n4\n")
    flags = ctx2.classify(ctx2.identity(z4))
    assert flags["in_E"] == "true"
    assert flags["in_Ebar"] == "true"
    assert flags["in_Mbar"] == "true"
    assert flags["in_M"] == "true"


def test_orthogonality_and_condition_n(tmp_path, ctx2):
    e = mlfact.read_morphism(
        hom_file(
            tmp_path,
            "e.hom",
            "hom z12.ab z6.ab\n1\n",
            {"z12.ab": "abgroup 1 1\n12\n", "z6.ab": "abgroup 1 1\n6\n"},
        )
    )
    z3 = mlfact.parse_object("abgroup 1 1\n3\n")
    rep = ctx2.check_orthogonality(e, ctx2.identity(z3))
    assert rep["status"] == "PASS"
    assert rep["squares_examined"] == 3

    text = ctx2.check_condition_n(mlfact.parse_object("abgroup 1 1\n12\n"))
    assert "summary" in text and "fail=0" in text


def test_group_context_roundtrip(tmp_path):
    g = mlfact.make_context("fingrp")
    z2 = mlfact.parse_object("fingroup 2\n0 1\n1 0\n")
    assert g.order(z2) == 2
    assert z2.text() == "fingroup 2\n0 1\n1 0\n"
    assert mlfact.parse_object(z2.text()).kind == "fingroup"
    with pytest.raises(TypeError):
        # handing a group to an abelian context is a context mismatch
        mlfact.make_context("ab").order(z2)
