"""Centre, integrals/cointegrals and the projective SL(2,Z) action.

No square roots are ever taken: the pairing value of the integral is
carried along and all modular relations are asserted in their exactly
scaled forms (see the invariants exercised in the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import (
    ExactMatrix,
    Scalar,
    basis_vector,
    matrix_from_columns,
    stack_rows,
    zero_vector,
)
from . import tensorspace as ts
from .tensorspace import Tensor
from .qha import QuasiHopfAlgebra
from .coend import CoendMaps, coend_maps, q_hat_apply


@dataclass
class IntegralResult:
    functional: list[Scalar] | None   # two-sided solution, echelon-normalised
    space_dim: int
    pairing_value: Scalar | None      # <lam x lam, omega>


@dataclass
class CointegralResult:
    element: list[Scalar] | None
    dim_two_sided: int
    dim_left: int
    dim_right: int
    normalized: bool                   # scaled so the integral pairs to 1


@dataclass
class ModularData:
    center_basis: list[list[Scalar]]
    integral: list[Scalar]
    pairing_value: Scalar
    cointegral: list[Scalar]
    s_hat: ExactMatrix
    t_hat: ExactMatrix
    s_z: ExactMatrix                   # in center_basis coordinates
    t_z: ExactMatrix
    lam: Scalar
    lam_note: str


# ---------------------------------------------------------------------------
# centre


def center(A: QuasiHopfAlgebra) -> list[list[Scalar]]:
    """Basis of the centre: kernel of the stacked commutator maps."""
    mats = [A.left_mult[i] - A.right_mult[i] for i in range(A.dim)]
    return stack_rows(mats).kernel()


def in_span(vectors: list[list[Scalar]], v: list[Scalar], order: int) -> list[Scalar] | None:
    """Coordinates of v in the given spanning set, or None."""
    return matrix_from_columns(vectors, order).solve(v)


# ---------------------------------------------------------------------------
# integral of the universal Hopf algebra


def integral_L(A: QuasiHopfAlgebra, maps: CoendMaps) -> IntegralResult:
    """Solve the two-sided invariance conditions for a functional on A.

    The conditions say that contracting either output leg of the
    transposed product against the functional collapses to the
    evaluation element times the functional.  The solution space is
    1-dimensional exactly in the factorisable case; the dimension is
    reported either way.
    """
    dim, order = A.dim, A.order
    mu = maps.mu_hat
    rows: list[list[Scalar]] = []
    for a in range(dim):
        for j in range(dim):
            # sum_k mu[(j,k), a] lam_k = alpha_j lam_a
            row = [mu.data[j * dim + k][a] for k in range(dim)]
            row[a] = row[a] - A.alpha[j]
            rows.append(row)
            # sum_k mu[(k,j), a] lam_k = alpha_j lam_a
            row = [mu.data[k * dim + j][a] for k in range(dim)]
            row[a] = row[a] - A.alpha[j]
            rows.append(row)
    system = ExactMatrix(len(rows), dim, order, rows)
    sols = system.kernel()
    if len(sols) != 1:
        return IntegralResult(None, len(sols), None)
    lam = sols[0]
    k = pairing_of(lam, lam, maps.omega_hat, order)
    return IntegralResult(lam, 1, k)


def pairing_of(f: list[Scalar], g: list[Scalar], omega_hat: Tensor, order: int) -> Scalar:
    """<f x g, omega> with the flipped contraction convention."""
    acc = Scalar.zero(order)
    for (i, j), c in omega_hat.nonzero():
        acc = acc + c * f[j] * g[i]
    return acc


def cointegral_L(A: QuasiHopfAlgebra, integral: list[Scalar] | None = None) -> CointegralResult:
    """Two-sided integral of A, which spans the cointegrals of the
    universal Hopf algebra; normalised against the integral if given."""
    dim, order = A.dim, A.order
    ident = ExactMatrix.identity(dim, order)
    left_mats = [A.left_mult[i] - ident.scale(A.counit[i]) for i in range(dim)]
    right_mats = [A.right_mult[i] - ident.scale(A.counit[i]) for i in range(dim)]
    left = stack_rows(left_mats).kernel()
    right = stack_rows(right_mats).kernel()
    both = stack_rows(left_mats + right_mats).kernel()
    if len(both) == 0:
        return CointegralResult(None, 0, len(left), len(right), False)
    c = both[0]
    normalized = False
    if integral is not None:
        val = sum((integral[i] * c[i] for i in range(dim)), Scalar.zero(order))
        if not val.is_zero():
            inv = val.inverse()
            c = [inv * x for x in c]
            normalized = True
    return CointegralResult(c, len(both), len(left), len(right), normalized)


# ---------------------------------------------------------------------------
# modular transformations


def s_t_hat(A: QuasiHopfAlgebra, maps: CoendMaps, integral: list[Scalar]):
    """The S-transformation on A (via the monodromy bilinear map and the
    integral) and the T-transformation (left multiplication by the
    inverse ribbon element)."""
    if A.ribbon_inv is None:
        raise ValueError("modular transformations require ribbon data")
    dim, order = A.dim, A.order
    cols = []
    for a in range(dim):
        q = q_hat_apply(A, maps.x_q, basis_vector(dim, a, order), A.alpha)
        cols.append(ts.contract_leg(q, 1, integral).to_vector())
    s_hat = matrix_from_columns(cols, order)
    t_hat = A.lmult_of(A.ribbon_inv)
    return s_hat, t_hat


def s_hat_pairing_form(A: QuasiHopfAlgebra, maps: CoendMaps, integral: list[Scalar]) -> ExactMatrix:
    """Equivalent route to the S-transformation through the self-pairing
    element and the transposed coproduct; agrees entry by entry with
    :func:`s_t_hat` and serves as its oracle."""
    dim, order = A.dim, A.order
    delta_hat = maps.delta_hat
    omega = maps.omega_hat
    out = ExactMatrix.zeros(dim, dim, order)
    pair_cache: dict[tuple[int, int], ExactMatrix] = {}

    def sandwich(r1: int, r2: int) -> ExactMatrix:
        # x -> S(e_r1) x e_r2
        if (r1, r2) not in pair_cache:
            s_r1 = [A.antipode.data[r][r1] for r in range(dim)]
            pair_cache[(r1, r2)] = A.lmult_of(s_r1) * A.right_mult[r2]
        return pair_cache[(r1, r2)]

    def delta_hat_pair(x: list[Scalar], y: list[Scalar]) -> list[Scalar]:
        flat = zero_vector(dim * dim, order)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if not yj.is_zero():
                    flat[i * dim + j] = xi * yj
        return delta_hat.apply(flat)

    def lam_of(v: list[Scalar]) -> Scalar:
        return sum((integral[i] * v[i] for i in range(dim)), Scalar.zero(order))

    for (p, q, r), c_phi in A.phi.nonzero():
        for (p1, p2), cp in A.cop_table[p]:
            for (q1, q2), cq in A.cop_table[q]:
                y_mid = sandwich(q1, q2)
                for (r1, r2), cr in A.cop_table[r]:
                    x_map = sandwich(r1, r2)
                    for (w1, w2), cw in omega.nonzero():
                        coeff = c_phi * cp * cq * cr * cw
                        y = [y_mid.data[i][w1] for i in range(dim)]
                        z_mat = sandwich(p1, p2)
                        z = [z_mat.data[i][w2] for i in range(dim)]
                        for a in range(dim):
                            x = [x_map.data[i][a] for i in range(dim)]
                            val = coeff * lam_of(delta_hat_pair(x, y))
                            if not val.is_zero():
                                for i in range(dim):
                                    if not z[i].is_zero():
                                        out.data[i][a] = out.data[i][a] + val * z[i]
    return out


def conjugation_action(A: QuasiHopfAlgebra) -> list[ExactMatrix]:
    """The antipode-twisted conjugation b: x -> sum S(b') x b''; the
    S-transformation commutes with it."""
    return [m.transpose() for m in A.coadjoint_action()]


def sl2z_on_center(
    A: QuasiHopfAlgebra,
    maps: CoendMaps,
    integral: list[Scalar],
    center_basis: list[list[Scalar]] | None = None,
):
    """The modular S and T maps on the centre, in centre coordinates,
    together with the projective constant from (S T)^3 = lam S^2.

    Raises ValueError if either map fails to preserve the centre or if
    exact proportionality fails; both identities are theorems, so a
    failure signals corrupted input or an implementation fault.
    """
    if A.ribbon_inv is None:
        raise ValueError("the modular action requires ribbon data")
    dim, order = A.dim, A.order
    if center_basis is None:
        center_basis = center(A)
    n = len(center_basis)

    # prefix map x -> sum psi_1 beta S(psi_2) x psi_3
    t = ts.leg_map(A.phi_inv, 2, A.antipode)
    t = ts.leg_map(t, 1, A.rmult_of(A.beta))
    pre = A.two_sided_action(ts.merge_legs(t, ((1, 2), (3,)), A.mult_table))

    delta_hat = maps.delta_hat

    def lam_of(v: list[Scalar]) -> Scalar:
        return sum((integral[i] * v[i] for i in range(dim)), Scalar.zero(order))

    def s_z_vec(z: list[Scalar]) -> list[Scalar]:
        az = A.product(A.alpha, z)
        v = zero_vector(dim, order)
        for (i, j), c in maps.omega_hat.nonzero():
            flat = zero_vector(dim * dim, order)
            for k, azk in enumerate(az):
                if not azk.is_zero():
                    flat[j * dim + k] = azk
            val = c * lam_of(delta_hat.apply(flat))
            if not val.is_zero():
                v[i] = v[i] + val
        return pre.apply(v)

    cmat = matrix_from_columns(center_basis, order)
    s_cols, t_cols = [], []
    for z in center_basis:
        sz = s_z_vec(z)
        coords = cmat.solve(sz)
        if coords is None:
            raise ValueError("S does not preserve the centre")
        s_cols.append(coords)
        tz = A.product(A.ribbon_inv, z)
        coords = cmat.solve(tz)
        if coords is None:
            raise ValueError("T does not preserve the centre")
        t_cols.append(coords)
    s_z = matrix_from_columns(s_cols, order)
    t_z = matrix_from_columns(t_cols, order)

    st = s_z * t_z
    lhs = st * st * st
    rhs = s_z * s_z
    lam = None
    for i in range(n):
        for j in range(n):
            if not rhs.data[i][j].is_zero():
                lam = lhs.data[i][j] / rhs.data[i][j]
                break
        if lam is not None:
            break
    if lam is None or lhs != rhs.scale(lam):
        raise ValueError("(S T)^3 is not proportional to S^2")
    return s_z, t_z, lam


LAM_NOTE = (
    "integral fixed by echelon normalisation of the two-sided solution "
    "space (defined up to sign and scale); the projective constant "
    "rescales linearly with it"
)


def modular_data(A: QuasiHopfAlgebra, maps: CoendMaps | None = None) -> ModularData:
    """Full modular pipeline; requires a factorisable ribbon input."""
    from .coend import copairing, tensor_as_matrix

    if maps is None:
        maps = coend_maps(A)
    rank = tensor_as_matrix(copairing(A, maps)).rank()
    if rank != A.dim:
        raise ValueError(
            f"input is not factorisable (copairing rank {rank} < {A.dim}); "
            "the modular action is only defined in the factorisable case"
        )
    integral = integral_L(A, maps)
    if integral.functional is None:
        raise ValueError(
            f"two-sided integral space has dimension {integral.space_dim}, not 1"
        )
    coint = cointegral_L(A, integral.functional)
    if coint.element is None:
        raise ValueError("no two-sided integral of the algebra exists")
    if not coint.normalized:
        raise ValueError("integral pairs to zero against the cointegral")
    s_hat, t_hat = s_t_hat(A, maps, integral.functional)
    basis = center(A)
    s_z, t_z, lam = sl2z_on_center(A, maps, integral.functional, basis)
    return ModularData(
        center_basis=basis,
        integral=integral.functional,
        pairing_value=integral.pairing_value,
        cointegral=coint.element,
        s_hat=s_hat,
        t_hat=t_hat,
        s_z=s_z,
        t_z=t_z,
        lam=lam,
        lam_note=LAM_NOTE,
    )
