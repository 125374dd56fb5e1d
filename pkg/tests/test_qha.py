from qhopf.exactmath import Scalar, basis_vector, vec_eq
from qhopf import tensorspace as ts
from qhopf.tensorspace import Tensor
from qhopf.qha import (
    drinfeld_element,
    drinfeld_twist,
    monodromy,
    validate,
)
from qhopf.presets import build_algebra, mutate
from qhopf.coend import tensor_as_matrix


def test_trivial_algebra_all_pass(presets):
    rep = validate(presets["trivial"].algebra)
    assert rep.ok
    names = [r.name for r in rep.results]
    assert "three_cocycle" in names and "hexagon_coproduct_left" in names


def test_double_all_pass(presets):
    assert validate(presets["double_Z2"].algebra).ok


def test_mutation_fails_with_witness(presets):
    alg = presets["double_Z2"].algebra
    bad = mutate(alg, ("mult", (1, 1, 0)), Scalar.rational(1))
    rep = validate(bad)
    assert not rep.ok
    assert any(r.witness is not None for r in rep.failures())


def test_twist_trivial_for_hopf_presets(presets):
    for name in ("trivial", "group_Z2_trivialR", "double_Z2"):
        alg = presets[name].algebra
        f, f_inv, gamma = drinfeld_twist(alg)
        unit2 = Tensor.unit(alg.dim, 2, alg.order)
        assert f == unit2, name
        assert f_inv == unit2
        assert gamma == unit2


def test_twist_conjugation_identity(presets):
    # f Delta(S(a)) f^-1 = (S x S)(flip(Delta(a))) for all basis elements
    for name in ("double_Z2", "twisted_double_Z2"):
        alg = presets[name].algebra
        f, f_inv, _ = drinfeld_twist(alg)
        mt = alg.mult_table
        for i in range(alg.dim):
            sa = alg.antipode_of(basis_vector(alg.dim, i, alg.order))
            lhs = ts.mul(ts.mul(f, alg.delta_of(sa), mt), f_inv, mt)
            rhs = ts.permute(alg.coproduct[i], (2, 1))
            rhs = ts.leg_map(ts.leg_map(rhs, 1, alg.antipode), 2, alg.antipode)
            assert lhs == rhs, (name, i)


def test_twist_nontrivial_for_twisted_double(presets):
    alg = presets["twisted_double_Z2"].algebra
    f, _, _ = drinfeld_twist(alg)
    assert f != Tensor.unit(alg.dim, 2, alg.order)


def test_drinfeld_element_trivial(presets):
    alg = presets["trivial"].algebra
    u, u_tilde, u_inv = drinfeld_element(alg)
    assert vec_eq(u, alg.unit())
    assert vec_eq(u_tilde, alg.unit())
    assert vec_eq(u_inv, alg.unit())


def test_drinfeld_element_triangular_preset(presets):
    # R = 1 x 1 collapses the defining sum to the unit
    alg = presets["group_Z2_trivialR"].algebra
    u, _, _ = drinfeld_element(alg)
    assert vec_eq(u, alg.unit())


def test_drinfeld_element_conjugates_antipode_square(presets):
    for name in ("double_Z2", "twisted_double_Z2"):
        alg = presets[name].algebra
        u, u_tilde, u_inv = drinfeld_element(alg)
        assert vec_eq(alg.product(u, u_inv), alg.unit())
        s2 = alg.antipode * alg.antipode
        assert s2 == alg.lmult_of(u) * alg.rmult_of(u_inv)
        # the inverse-braiding variant is the antipode of the inverse
        assert vec_eq(u_tilde, alg.antipode_of(u_inv))


def test_hopf_preset_u_short_form(presets):
    # with trivial coassociator and alpha = beta = 1 the element collapses
    # to the antipode-contraction of the flipped R-matrix
    for name in ("trivial", "group_Z2_trivialR", "double_Z2"):
        alg = presets[name].algebra
        u, _, _ = drinfeld_element(alg)
        short = ts.merge_legs(
            ts.leg_map(ts.permute(alg.r_matrix, (2, 1)), 1, alg.antipode),
            ((1, 2),),
            alg.mult_table,
        ).to_vector()
        assert vec_eq(u, short), name


def test_monodromy_trivial_r(presets):
    alg = presets["group_Z2_trivialR"].algebra
    assert monodromy(alg) == Tensor.unit(alg.dim, 2, alg.order)


def test_monodromy_full_rank_for_double(presets):
    alg = presets["double_Z2"].algebra
    assert tensor_as_matrix(monodromy(alg)).rank() == 4


def test_invert_element_roundtrip(presets):
    alg = presets["twisted_double_Z2"].algebra
    inv = alg.invert_element(alg.r_matrix)
    assert inv == alg.r_inv
    assert alg.invert_element(Tensor.zero(alg.dim, 2, alg.order)) is None


def test_validate_reports_singular_antipode():
    alg, _ = build_algebra("group_Z2_trivialR")
    bad = mutate(alg, ("antipode", (1, 1)), Scalar.rational(-1))
    rep = validate(bad)
    assert not rep["antipode_invertible"].ok


def test_report_as_dict_shape(presets):
    d = validate(presets["trivial"].algebra).as_dict()
    assert d["ok"] is True
    assert all(set(c) == {"name", "ok", "witness"} for c in d["checks"])
