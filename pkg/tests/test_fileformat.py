"""Structured text formats: round-trips are bit-exact, errors carry lines."""

import pytest
from fractions import Fraction as Q

from superkit.families import build_gl, build_osp1, build_product, build_sl, build_toy
from superkit.fileformat import (
    ParseError,
    parse_algebra,
    parse_module,
    parse_supercomm,
    serialize_algebra,
    serialize_module,
    serialize_supercomm,
)
from superkit.reps import induced_trivial
from superkit.supercomm import catalog_pairs

ALL_FAMILIES = [
    build_gl(1, 1),
    build_gl(2, 1),
    build_sl(2, 1),
    build_osp1(1),
    build_osp1(2),
    build_toy("toy_odd_nilpotent"),
    build_toy("toy_odd_semisimple"),
    build_product([build_osp1(1), build_gl(1, 0)]),
]


@pytest.mark.parametrize("g", ALL_FAMILIES, ids=lambda g: repr(g))
def test_algebra_roundtrip_bit_exact(g):
    text = serialize_algebra(g, "roundtrip")
    g2, name, warnings = parse_algebra(text)
    assert name == "roundtrip"
    assert warnings == []
    assert g2.parity == g.parity
    assert g2.names == g.names
    assert g2.cartan == g.cartan
    for i in range(g.dim):
        for j in range(g.dim):
            assert g2.bracket_basis(i, j) == g.bracket_basis(i, j)
    assert (g2.faithful_rep is None) == (g.faithful_rep is None)
    if g.faithful_rep is not None:
        assert g2.faithful_rep.parity == g.faithful_rep.parity
        for a, b in zip(g2.faithful_rep.action, g.faithful_rep.action):
            assert a == b


def test_rational_strings_roundtrip():
    g = build_gl(1, 1)
    text = serialize_algebra(g, "with-fraction")
    text = text.replace("bracket E11 E12 E12 1", "bracket E11 E12 E12 2/2")
    g2, _, _ = parse_algebra(text)
    assert g2.structure_constant(0, 1, 1) == Q(1)


def test_parse_error_reports_line():
    bad = "algebra x\nbasis a even\nbracket a a a nonsense\n"
    with pytest.raises(ParseError) as err:
        parse_algebra(bad)
    assert "line 3" in str(err.value)


def test_parse_unknown_directive():
    with pytest.raises(ParseError) as err:
        parse_algebra("algebra x\nbasis a even\nfrobnicate 1\n")
    assert "line 3" in str(err.value)


def test_strict_mode_rejects_invalid_axioms_lax_warns():
    text = (
        "algebra broken\n"
        "basis x even\n"
        "basis u odd\n"
        "bracket x u u 1\n"      # antisymmetric partner missing
    )
    with pytest.raises(ParseError):
        parse_algebra(text, strict=True)
    g, _, warnings = parse_algebra(text, strict=False)
    assert warnings


def test_module_roundtrip():
    g = build_gl(1, 1)
    m = induced_trivial(g)
    text = serialize_module(m, g, "induced")
    m2, name, warnings = parse_module(text, g)
    assert name == "induced" and warnings == []
    assert m2.parity == m.parity
    for a, b in zip(m2.action, m.action):
        assert a == b


def test_module_missing_action_matrix():
    g = build_gl(1, 1)
    text = "module m\nparity even odd\naction E11\n0 0\n0 0\n"
    with pytest.raises(ParseError) as err:
        parse_module(text, g)
    assert "missing action" in str(err.value)


def test_supercomm_roundtrip():
    for name, (a, d) in catalog_pairs().items():
        text = serialize_supercomm(a, d, name)
        a2, d2, name2 = parse_supercomm(text)
        assert name2 == name
        assert a2.parity == a.parity
        assert a2.table == a.table
        assert a2.unit == a.unit
        assert d2 == d


def test_supercomm_requires_unit():
    with pytest.raises(ParseError):
        parse_supercomm("algebra a\nbasis one even\n")
