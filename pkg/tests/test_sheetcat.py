import pytest

from weylslice.fields import gf
from weylslice.matgroups import GroupContext
from weylslice.rootsys import (
    build_root_system,
    is_bruhat_max_in_class,
    minus_one_rank,
)
from weylslice.sheetcat import (
    CatalogError,
    SphericalTag,
    a_type_pi,
    catalog_w_S,
    classify_spherical,
    expected_w_element,
    sheet_catalog,
    smoothness_verdict,
)


def test_component_counts_are_catalog_data():
    expect = {
        ("B", 2, "S"): 8, ("B", 3, "S"): 32, ("B", 4, "S"): 128,
        ("B", 3, "Sprime"): 4,
        ("C", 3, "S1"): 4, ("C", 3, "S2"): 8, ("C", 4, "S2"): 16,
        ("D", 4, "S"): 4, ("D", 4, "Sprime"): 4, ("D", 5, "R"): 4,
        ("E", 6, "S"): 2, ("E", 7, "S"): 8,
    }
    for (t, n, label), count in expect.items():
        d = next(x for x in sheet_catalog(t, n) if x.label == label)
        assert d.expected_components == count


def test_empty_exceptional_catalogs():
    assert sheet_catalog("G", 2) == []
    assert sheet_catalog("F", 4) == []
    assert sheet_catalog("E", 8) == []


def test_hypothesis_bounds():
    with pytest.raises(CatalogError):
        sheet_catalog("C", 2)
    with pytest.raises(CatalogError):
        sheet_catalog("B", 1)
    with pytest.raises(CatalogError):
        sheet_catalog("D", 3)


def test_w_S_invariants():
    """Every catalog w_S: involution, fixes Pi pointwise, Bruhat-maximal."""
    for t, n in [("A", 3), ("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4),
                 ("D", 4), ("D", 5)]:
        for d in sheet_catalog(t, n):
            w = d.w_S()
            assert w.is_involution()
            sys = d.weyl_system()
            for i in d.pi:
                a = sys.simple_roots[i]
                assert w.apply_root(a) == a
            assert is_bruhat_max_in_class(w), (t, n, d.label)


def test_theta_twist_facts():
    # D_{2h}: theta(w_S) != w_S; D_{2h+1}: theta(w_R) = w_R
    assert catalog_w_S("D", 4, "S") != catalog_w_S("D", 4, "thetaS")
    assert catalog_w_S("D", 5, "R") == catalog_w_S("D", 5, "thetaR")


def test_a_type_pi_resolution():
    # the nested involution is w0*w_Pi for Pi = {a_{m+1}..a_{n-m}}
    from weylslice.rootsys import w0_wPi

    for n, m in [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2)]:
        w = catalog_w_S("A", n, f"S_{m}")
        sys = build_root_system("A", n)
        assert w.is_involution()
        assert minus_one_rank(w) == m
        assert w == w0_wPi(sys, a_type_pi(n, m))
        assert is_bruhat_max_in_class(w)


def test_dimension_formula_cross_module():
    """dim of each member class equals l(w_S) + rk(1 - w_S)."""
    from weylslice.families import family_for

    F = gf(1009)
    cases = [
        ("B", 2, "S", 0), ("B", 3, "S", 5), ("B", 3, "Sprime", 3),
        ("C", 3, "S1", 5), ("C", 3, "S2", 7), ("D", 4, "S", 9),
        ("D", 4, "Sprime", 3), ("D", 5, "R", 11),
    ]
    for t, n, label, coord in cases:
        d = next(x for x in sheet_catalog(t, n) if x.label == label)
        fam = family_for(t, n, label)
        w = d.w_S()
        target = w.length() + minus_one_rank(w)
        comp = fam.components()[0]
        pt = comp.point(F, F.of(coord) if coord else F.of(7))
        assert fam.membership(F, pt).member
        assert fam.ctx.class_dimension(F, pt) == target, (t, n, label)


def test_b2_c2_crosslisting():
    vb = smoothness_verdict("B", 2, "B2:unip(3,1^2)")
    vc = smoothness_verdict("C", 2, "anything")
    assert not vb.smooth and not vc.smooth
    assert "(2^2)" in vb.witness
    assert "B_2" in vc.reason or "B2" in vc.reason


def test_smoothness_verdicts():
    # sheets always smooth; only the two listed stratum families fail
    for t, n in [("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 4),
                 ("A", 3), ("E", 6), ("E", 7)]:
        for d in sheet_catalog(t, n):
            assert d.sheet_smooth
            v = smoothness_verdict(t, n, d.stratum_id)
            assert v.smooth == d.stratum_smooth
    assert not smoothness_verdict("D", 5, "D5:R-thetaR").smooth
    assert smoothness_verdict("D", 5, "D5:Sprime").smooth
    with pytest.raises(CatalogError):
        smoothness_verdict("B", 3, "nonsense")


def test_classify_spherical_examples():
    F = gf(5)
    sp = GroupContext("Sp", 2)
    assert classify_spherical(sp, F, sp.torus(F, [1, 1])).dim == 0
    beta = sp.system.highest_root()
    t = classify_spherical(sp, F, sp.root_element(F, beta, 1))
    assert t.dim == 4 and t.w_class == "long-root-reflection"
    ol = classify_spherical(sp, F, sp.torus(F, [2, 2]))
    assert ol.dim == 6 and ol.w_class == "w0"
    # regular semisimple is not spherical in Sp4 (4 distinct eigenvalues)
    F7 = gf(7)
    assert classify_spherical(sp, F7, sp.torus(F7, [2, 3])) is None
    so = GroupContext("SO-odd", 2)
    rho = so.torus(F, [4, 4])  # diag(1,-1,-1,-1,-1)
    t = classify_spherical(so, F, rho)
    assert t is not None and t.dim == 4
    sl3 = GroupContext("SL", 2)
    t = classify_spherical(sl3, F, ((2, 0, 0), (0, 2, 0), (0, 0, 4)))
    assert t is not None and t.dim == 4 and t.sheet == "S_1"
    assert classify_spherical(sl3, F, ((2, 0, 0), (0, 3, 0), (0, 0, 1))) is None


def test_expected_w_element():
    b2 = build_root_system("B", 2)
    from weylslice.rootsys import longest_element

    assert expected_w_element(b2, "w0") == longest_element(b2, range(2))
    assert expected_w_element(b2, "identity").is_identity()
    assert expected_w_element(b2, "long-root-reflection").length() == 3
    with pytest.raises(CatalogError):
        expected_w_element(b2, "nonsense")


def test_catalog_report_strings():
    for d in sheet_catalog("B", 3):
        assert d.semisimple_members
        assert d.unipotent_members


def test_slice_representative_and_schema():
    from weylslice.sheetcat import RootDatumOnly, slice_representative

    F = gf(7)
    d = next(x for x in sheet_catalog("C", 3) if x.label == "S2")
    wd, schema = slice_representative(d, F)
    assert "V unipotent" in schema
    ctx = GroupContext("Sp", 3)
    assert ctx.in_group(F, wd)
    assert ctx.bruhat_word(F, wd) == d.w_S()
    for t, n, label in [("B", 3, "S"), ("D", 4, "S"), ("D", 5, "R"),
                        ("B", 4, "Sprime"), ("A", 3, "S_2")]:
        d = next(x for x in sheet_catalog(t, n) if x.label == label)
        wd, schema = slice_representative(d, F)
        assert schema
    with pytest.raises(RootDatumOnly):
        slice_representative(sheet_catalog("E", 6)[0])


def test_catalog_table_export():
    from weylslice.sheetcat import catalog_table

    table = catalog_table("C", 3)
    assert "S2" in table and "components" in table
    assert "(2^3)" in table
