from fractions import Fraction as F

import pytest

from bihermite.coeffs import Coeff
from bihermite.ncqm import (
    AlphaPoint,
    OperatorDictionary,
    alpha_matrix,
    build_dictionary,
    ncqm_commutator_suite,
    qp_representation_suite,
)
from bihermite.weyl import WeylOp, commutator


def test_alpha_point_pythagorean_values():
    pt = AlphaPoint.make(F(3, 5))
    assert pt.beta_im == F(4, 5) and pt.theta == F(24, 25)
    pt = AlphaPoint.make(F(5, 13))
    assert pt.beta_im == F(12, 13) and pt.theta == F(120, 169)
    pt = AlphaPoint.make(F(8, 17))
    assert pt.beta_im == F(15, 17) and pt.theta == F(240, 289)


def test_alpha_point_rejects_irrational_root_in_exact_mode():
    with pytest.raises(ValueError, match="float backend"):
        AlphaPoint.make(F(1, 3))
    # the same point is fine on the float backend
    pt = AlphaPoint.make(1 / 3, exact=False)
    assert pt.beta_im == pytest.approx((8 / 9) ** 0.5)


def test_alpha_point_domain():
    for bad in (0, 1, -1, F(7, 5)):
        with pytest.raises(ValueError):
            AlphaPoint.make(bad)


def test_theta_one_needs_float():
    # theta = 1 forces alpha^2 = 1/2, which has no exact representative
    with pytest.raises(ValueError):
        AlphaPoint.make(F(1, 2)).theta  # 1/2 itself has irrational beta
    pt = AlphaPoint.make(0.5**0.5, exact=False)
    assert pt.theta == pytest.approx(1.0)


def test_alpha_matrix_is_hermitian_with_unit_row_norm():
    pt = AlphaPoint.make(F(3, 5))
    g = alpha_matrix(pt)
    assert g.conj_transpose() == g
    assert g.g11 * g.g11 + g.g12 * g.g12.conj() == Coeff(1)


def test_ncqm_suite_exact_points():
    for a in (F(3, 5), F(5, 13), F(8, 17)):
        rep = ncqm_commutator_suite(AlphaPoint.make(a))
        assert rep.ok, (a, rep.payload)


def test_ncqm_suite_float_point():
    rep = ncqm_commutator_suite(AlphaPoint.make(0.3, exact=False))
    assert rep.ok


def test_theta_consistency_with_cross_commutator():
    from bihermite.deform import deformed_lowering, deformed_raising

    pt = AlphaPoint.make(F(5, 13))
    g = alpha_matrix(pt)
    a1, _ = deformed_lowering(g)
    _, ad2 = deformed_raising(g)
    c = commutator(a1, ad2)
    assert c == WeylOp.scalar(Coeff(0, pt.theta))


def test_qp_suite_independent_parameters():
    rep = qp_representation_suite(F(3, 5), F(16, 15))
    assert rep.ok, [c for c in rep.payload["checks"] if not c["ok"]]


def test_qp_suite_equal_parameters_includes_modified_bosons():
    rep = qp_representation_suite(F(3, 5), F(3, 5))
    assert rep.ok
    names = [c["relation"] for c in rep.payload["checks"]]
    assert any("[A1, Ad2] == i*theta" in n for n in names)


def test_qp_frozen_momentum_commutator():
    d = build_dictionary(theta=F(3, 5), gamma=F(16, 15), branch=1)
    got = commutator(d["P1"], d["P2"])
    assert got == WeylOp.scalar(Coeff(0, F(16, 15)))
    got = commutator(d["Q1"], d["Q2"])
    assert got == WeylOp.scalar(Coeff(0, F(3, 5)))
    got = commutator(d["Q1"], d["P1"])
    assert got == WeylOp.scalar(Coeff(0, 1))


def test_qp_both_branches_differ_but_both_work():
    d1 = build_dictionary(theta=F(3, 5), gamma=F(16, 15), branch=1)
    d2 = build_dictionary(theta=F(3, 5), gamma=F(16, 15), branch=-1)
    assert d1["P1"] != d2["P1"]
    for d in (d1, d2):
        assert commutator(d["P1"], d["P2"]) == WeylOp.scalar(Coeff(0, F(16, 15)))


def test_qp_rejects_irrational_kappa_in_exact_mode():
    # kappa = 1 - 1/6 = 5/6 is not a rational square
    with pytest.raises(ValueError, match="float backend"):
        build_dictionary(theta=F(1, 2), gamma=F(1, 3))
    rep = qp_representation_suite(0.5, 1 / 3, exact=False)
    assert rep.ok


def test_qp_rejects_gamma_reciprocal_theta():
    with pytest.raises(ValueError, match="excluded"):
        build_dictionary(theta=F(1, 2), gamma=2)


def test_build_dictionary_alpha_route():
    d = build_dictionary(alpha=F(3, 5))
    for name in (
        "a1",
        "ad2",
        "q1",
        "p2",
        "J1",
        "J4",
        "a1_alpha",
        "ad2_alpha",
        "A1",
        "Ad2",
        "Q1",
        "P2",
        "J3_alpha",
        "X1",
        "Y",
        "Z3",
    ):
        assert name in d, name
    # Q/P built from the deformed ladders still satisfy the table
    assert commutator(d["Q1"], d["Q2"]) == WeylOp.scalar(Coeff(0, F(24, 25)))
    assert commutator(d["Q1"], d["P1"]) == WeylOp.scalar(Coeff(0, 1))
    assert commutator(d["P1"], d["P2"]) == WeylOp.scalar(Coeff(0, F(24, 25)))


def test_build_dictionary_entries_rederivable():
    d = build_dictionary(alpha=F(3, 5))
    d2 = build_dictionary(alpha=F(3, 5))
    for name in d.names():
        assert d[name] == d2[name]


def test_build_dictionary_rejects_mixed_parameters():
    with pytest.raises(ValueError):
        build_dictionary(alpha=F(3, 5), theta=F(1, 2), gamma=F(1, 2))


def test_dictionary_json():
    d = build_dictionary(theta=F(3, 5), gamma=F(3, 5))
    obj = d.to_json()
    assert obj["params"]["theta"] == "3/5"
    assert "Q1" in obj["operators"]
    assert isinstance(d, OperatorDictionary)
