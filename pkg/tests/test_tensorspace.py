import pytest
from hypothesis import given, settings, strategies as st

from qhopf.exactmath import Scalar
from qhopf import tensorspace as ts
from qhopf.tensorspace import LegError, Tensor


@pytest.fixture(scope="module")
def z2(presets):
    return presets["group_Z2_trivialR"].algebra


def basis_tensor(dim, legs, idx, order=1):
    t = Tensor.zero(dim, legs, order)
    t[idx] = Scalar.one(order)
    return t


def test_unit_times_unit(z2):
    u = Tensor.unit(2, 2)
    assert ts.mul(u, u, z2.mult_table) == u


def test_group_element_squares_to_unit(z2):
    gg = basis_tensor(2, 2, (1, 1))
    assert ts.mul(gg, gg, z2.mult_table) == Tensor.unit(2, 2)


def test_coassociator_times_inverse(presets):
    alg = presets["twisted_double_Z2"].algebra
    assert ts.mul(alg.phi, alg.phi_inv, alg.mult_table) == Tensor.unit(4, 3, 4)


def test_leg_map_identity_and_antipode(z2):
    u = Tensor.unit(2, 2)
    assert ts.leg_map(u, 1, z2.antipode) == u
    g1 = basis_tensor(2, 2, (1, 0))
    assert ts.leg_map(g1, 1, z2.antipode) == g1  # S = id on Q[Z/2]


def test_coproduct_of_unit_leg(z2):
    one = Tensor.unit(2, 1)
    assert ts.coproduct_leg(one, 1, z2.cop_table) == Tensor.unit(2, 2)


def test_counit_middle_leg_of_coassociator(presets):
    for p in presets.values():
        alg = p.algebra
        got = ts.counit_leg(alg.phi, 2, alg.counit)
        assert got == Tensor.unit(alg.dim, 2, alg.order), p.name


def test_counitality_roundtrip(presets):
    for p in presets.values():
        alg = p.algebra
        t = alg.r_matrix
        for j in (1, 2):
            assert ts.counit_leg(
                ts.coproduct_leg(t, j, alg.cop_table), j, alg.counit) == t


def test_permute_swap():
    t = basis_tensor(3, 2, (1, 2))
    assert ts.permute(t, (2, 1)) == basis_tensor(3, 2, (2, 1))


def test_permute_matches_subscript_notation(presets):
    phi = presets["twisted_double_Z2"].algebra.phi
    p231 = ts.permute(phi, (2, 3, 1))
    for idx, c in phi.nonzero():
        assert p231[idx[1], idx[2], idx[0]] == c


def test_permute_group_action():
    t = basis_tensor(2, 3, (1, 0, 1))
    sigma, tau = (2, 3, 1), (3, 1, 2)
    composed = tuple(tau[s - 1] for s in sigma)
    assert ts.permute(ts.permute(t, tau), sigma) == ts.permute(t, composed)


def test_permute_inverse_roundtrip():
    t = basis_tensor(2, 3, (1, 1, 0))
    sigma = (2, 3, 1)
    inverse = tuple(sigma.index(l) + 1 for l in (1, 2, 3))
    assert ts.permute(ts.permute(t, sigma), inverse) == t


def test_embed_r_into_positions(z2):
    r13 = ts.embed(z2.r_matrix, 3, (1, 3))
    for idx, c in z2.r_matrix.nonzero():
        assert r13[idx[0], 0, idx[1]] == c
    assert r13 == Tensor.unit(2, 3)  # R = 1 x 1 here


def test_embed_rejects_bad_positions(z2):
    with pytest.raises(LegError):
        ts.embed(z2.r_matrix, 3, (3, 1))
    with pytest.raises(LegError):
        ts.embed(z2.r_matrix, 1, (1, 2))


def test_leg_out_of_range(z2):
    with pytest.raises(LegError):
        ts.leg_map(z2.r_matrix, 3, z2.antipode)
    with pytest.raises(LegError):
        ts.counit_leg(z2.r_matrix, 0, z2.counit)


def test_mul_mismatch(z2):
    with pytest.raises(LegError):
        ts.mul(Tensor.unit(2, 2), Tensor.unit(2, 3), z2.mult_table)


def test_merge_legs_requires_partition(z2):
    with pytest.raises(LegError):
        ts.merge_legs(z2.r_matrix, ((1, 1),), z2.mult_table)


def test_mul_associative_and_unital(presets):
    alg = presets["double_Z2"].algebra
    mt = alg.mult_table
    u = Tensor.unit(4, 2)
    a = alg.r_matrix
    b = alg.delta_of(alg.ribbon)
    c = ts.permute(alg.r_matrix, (2, 1))
    assert ts.mul(ts.mul(a, b, mt), c, mt) == ts.mul(a, ts.mul(b, c, mt), mt)
    assert ts.mul(u, a, mt) == a
    assert ts.mul(a, u, mt) == a


def _random_tensor(dim, legs, order, draw_fraction):
    coeffs = [Scalar.rational(draw_fraction(), order=order) for _ in range(dim**legs)]
    return Tensor(dim, legs, order, coeffs)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_mul_associativity_random_tensors(presets, data):
    alg = presets["twisted_double_Z2"].algebra
    mt = alg.mult_table
    legs = data.draw(st.integers(1, 2))

    def frac():
        return data.draw(st.fractions(min_value=-2, max_value=2, max_denominator=3))

    a = _random_tensor(alg.dim, legs, alg.order, frac)
    b = _random_tensor(alg.dim, legs, alg.order, frac)
    c = _random_tensor(alg.dim, legs, alg.order, frac)
    u = Tensor.unit(alg.dim, legs, alg.order)
    assert ts.mul(ts.mul(a, b, mt), c, mt) == ts.mul(a, ts.mul(b, c, mt), mt)
    assert ts.mul(u, a, mt) == a
    assert ts.mul(a, u, mt) == a


def test_coproduct_leg_is_multiplicative(presets):
    # coproduct_leg distributes over mul exactly when the coproduct is an
    # algebra map, which holds on the presets
    for name in ("double_Z2", "twisted_double_Z2"):
        alg = presets[name].algebra
        mt = alg.mult_table
        s, t = alg.r_matrix, ts.permute(alg.r_matrix, (2, 1))
        for j in (1, 2):
            lhs = ts.coproduct_leg(ts.mul(s, t, mt), j, alg.cop_table)
            rhs = ts.mul(
                ts.coproduct_leg(s, j, alg.cop_table),
                ts.coproduct_leg(t, j, alg.cop_table),
                mt,
            )
            assert lhs == rhs


def test_merge_legs_orders_products(presets):
    alg = presets["twisted_double_Z2"].algebra
    t = basis_tensor(4, 2, (1, 2), order=4)
    merged = ts.merge_legs(t, ((1, 2),), alg.mult_table)
    assert merged == basis_tensor(4, 1, (3,), order=4)  # t * t^2 = t^3
    swapped = ts.merge_legs(t, ((2, 1),), alg.mult_table)
    assert swapped == basis_tensor(4, 1, (3,), order=4)  # commutative algebra


def test_tensor_product_concatenates(z2):
    a = basis_tensor(2, 1, (1,))
    b = basis_tensor(2, 2, (0, 1))
    assert ts.tensor_product(a, b) == basis_tensor(2, 3, (1, 0, 1))
