"""Quasi-triangular ribbon quasi-Hopf algebra data and its axiom checker.

The algebra is given by structure constants over an exact cyclotomic
field: multiplication table, counit, coproduct, antipode matrix, the
coassociator and its inverse, evaluation/coevaluation elements, the
R-matrix and its inverse, and optional ribbon data.

``validate`` checks every defining identity exhaustively over basis
tuples and reports the first violating index tuple per axiom.  The
derived elements (Drinfeld twist, Drinfeld element, monodromy) come with
their own consistency checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactmath import (
    DivisionByZero,
    ExactMatrix,
    Scalar,
    basis_vector,
    vec_eq,
)
from . import tensorspace as ts
from .tensorspace import Tensor


@dataclass
class QuasiHopfAlgebra:
    """Structure constants of a quasi-triangular quasi-Hopf algebra.

    Basis convention: e_0 is the unit.  ``mult[i][j][k]`` is the
    coefficient of e_k in e_i e_j.  ``coproduct[i]`` is a 2-leg Tensor.
    ``antipode`` has the image of e_i in column i.
    """

    dim: int
    order: int
    mult: list[list[list[Scalar]]]
    counit: list[Scalar]
    coproduct: list[Tensor]
    antipode: ExactMatrix
    phi: Tensor
    phi_inv: Tensor
    alpha: list[Scalar]
    beta: list[Scalar]
    r_matrix: Tensor
    r_inv: Tensor
    ribbon: list[Scalar] | None = None
    ribbon_inv: list[Scalar] | None = None
    name: str = ""
    notes: list[str] = field(default_factory=list)

    # -- lazy caches ------------------------------------------------------

    def __post_init__(self):
        self._mult_sparse = None
        self._cop_sparse = None
        self._lmats = None
        self._rmats = None
        self._antipode_inv = None
        self._derived: dict = {}

    @property
    def mult_table(self) -> ts.MultTable:
        if self._mult_sparse is None:
            self._mult_sparse = [
                [
                    [(k, c) for k, c in enumerate(self.mult[i][j]) if not c.is_zero()]
                    for j in range(self.dim)
                ]
                for i in range(self.dim)
            ]
        return self._mult_sparse

    @property
    def cop_table(self) -> ts.CopTable:
        if self._cop_sparse is None:
            self._cop_sparse = [list(self.coproduct[i].nonzero()) for i in range(self.dim)]
        return self._cop_sparse

    @property
    def left_mult(self) -> list[ExactMatrix]:
        # column j of left_mult[i] is e_i e_j
        if self._lmats is None:
            mats = []
            for i in range(self.dim):
                m = ExactMatrix.zeros(self.dim, self.dim, self.order)
                for j in range(self.dim):
                    for k, c in enumerate(self.mult[i][j]):
                        if not c.is_zero():
                            m.data[k][j] = c
                mats.append(m)
            self._lmats = mats
        return self._lmats

    @property
    def right_mult(self) -> list[ExactMatrix]:
        # column j of right_mult[i] is e_j e_i
        if self._rmats is None:
            mats = []
            for i in range(self.dim):
                m = ExactMatrix.zeros(self.dim, self.dim, self.order)
                for j in range(self.dim):
                    for k, c in enumerate(self.mult[j][i]):
                        if not c.is_zero():
                            m.data[k][j] = c
                mats.append(m)
            self._rmats = mats
        return self._rmats

    @property
    def antipode_inv(self) -> ExactMatrix:
        if self._antipode_inv is None:
            self._antipode_inv = self.antipode.inverse()
        return self._antipode_inv

    # -- element helpers ---------------------------------------------------

    def unit(self) -> list[Scalar]:
        return basis_vector(self.dim, 0, self.order)

    def lmult_of(self, v: list[Scalar]) -> ExactMatrix:
        """Matrix of x -> v x."""
        out = ExactMatrix.zeros(self.dim, self.dim, self.order)
        for i, c in enumerate(v):
            if not c.is_zero():
                out.iadd_scaled(self.left_mult[i], c)
        return out

    def rmult_of(self, v: list[Scalar]) -> ExactMatrix:
        """Matrix of x -> x v."""
        out = ExactMatrix.zeros(self.dim, self.dim, self.order)
        for i, c in enumerate(v):
            if not c.is_zero():
                out.iadd_scaled(self.right_mult[i], c)
        return out

    def product(self, u: list[Scalar], v: list[Scalar]) -> list[Scalar]:
        return self.lmult_of(u).apply(v)

    def counit_of(self, v: list[Scalar]) -> Scalar:
        acc = Scalar.zero(self.order)
        for c, e in zip(v, self.counit):
            if not c.is_zero():
                acc = acc + c * e
        return acc

    def antipode_of(self, v: list[Scalar]) -> list[Scalar]:
        return self.antipode.apply(v)

    def delta_of(self, v: list[Scalar]) -> Tensor:
        out = Tensor.zero(self.dim, 2, self.order)
        for i, c in enumerate(v):
            if not c.is_zero():
                out = out + self.coproduct[i].scale(c)
        return out

    def element(self, t: Tensor) -> list[Scalar]:
        return t.to_vector()

    def as_tensor(self, v: list[Scalar]) -> Tensor:
        return Tensor.from_vector(v, self.order)

    def action_of(self, v: list[Scalar], action: list[ExactMatrix]) -> ExactMatrix:
        out = ExactMatrix.zeros(action[0].rows, action[0].cols, self.order)
        for i, c in enumerate(v):
            if not c.is_zero():
                out.iadd_scaled(action[i], c)
        return out

    def two_sided_action(self, t: Tensor) -> ExactMatrix:
        """Matrix of x -> sum t[i, j] e_i x e_j for a 2-leg tensor t."""
        out = ExactMatrix.zeros(self.dim, self.dim, self.order)
        for (i, j), c in t.nonzero():
            out.iadd_scaled(self.left_mult[i] * self.right_mult[j], c)
        return out

    def coadjoint_action(self) -> list[ExactMatrix]:
        """Action matrices on A* underlying the universal Hopf algebra:
        (b.f)(x) = f(sum S(b') x b'')."""
        if "coadjoint" in self._derived:
            return self._derived["coadjoint"]
        mats = []
        for b in range(self.dim):
            k = ExactMatrix.zeros(self.dim, self.dim, self.order)
            for (j, j2), c in self.cop_table[b]:
                sj = [self.antipode.data[r][j] for r in range(self.dim)]
                k = k + (self.lmult_of(sj) * self.right_mult[j2]).scale(c)
            mats.append(k.transpose())
        self._derived["coadjoint"] = mats
        return mats

    def adjoint_action(self) -> list[ExactMatrix]:
        """Adjoint action on A: b . x = sum b' x S(b'')."""
        if "adjoint" in self._derived:
            return self._derived["adjoint"]
        mats = []
        for b in range(self.dim):
            k = ExactMatrix.zeros(self.dim, self.dim, self.order)
            for (j, j2), c in self.cop_table[b]:
                sj2 = [self.antipode.data[r][j2] for r in range(self.dim)]
                k = k + (self.left_mult[j] * self.rmult_of(sj2)).scale(c)
            mats.append(k)
        self._derived["adjoint"] = mats
        return mats

    def invert_element(self, t: Tensor) -> Tensor | None:
        """Two-sided inverse of t in A^(x k) by exact linear solve."""
        n = t.dim**t.legs
        cols = []
        for flat in range(n):
            e = Tensor.zero(t.dim, t.legs, t.order)
            e.coeffs[flat] = Scalar.one(t.order)
            cols.append(ts.mul(t, e, self.mult_table).coeffs)
        lm = ExactMatrix(
            n, n, self.order, [[cols[j][i] for j in range(n)] for i in range(n)]
        )
        unit = Tensor.unit(t.dim, t.legs, t.order)
        x = lm.solve(unit.coeffs)
        if x is None:
            return None
        inv = Tensor(t.dim, t.legs, t.order, x)
        if ts.mul(inv, t, self.mult_table) != unit:
            return None
        return inv


# ---------------------------------------------------------------------------
# axiom report


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: tuple | None = None


class AxiomReport:
    """Ordered pass/fail record of every axiom check."""

    def __init__(self):
        self.results: list[CheckResult] = []

    def add(self, name: str, ok: bool, witness: tuple | None = None):
        self.results.append(CheckResult(name, ok, None if ok else witness))

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {
                    "name": r.name,
                    "ok": r.ok,
                    "witness": list(r.witness) if r.witness is not None else None,
                }
                for r in self.results
            ],
        }

    def __repr__(self) -> str:
        bad = self.failures()
        if not bad:
            return f"AxiomReport(ok, {len(self.results)} checks)"
        return "AxiomReport(FAIL: " + ", ".join(
            f"{r.name}@{r.witness}" for r in bad
        ) + ")"


# ---------------------------------------------------------------------------
# validation


def _tensor_witness(a: Tensor, b: Tensor) -> tuple | None:
    """First multi-index where the two tensors differ, else None."""
    dim, legs = a.dim, a.legs
    for flat in range(len(a.coeffs)):
        if a.coeffs[flat] != b.coeffs[flat]:
            idx = []
            f = flat
            for _ in range(legs):
                idx.append(f % dim)
                f //= dim
            return tuple(reversed(idx))
    return None


def validate(A: QuasiHopfAlgebra) -> AxiomReport:
    """Run every defining identity as an exact check over basis tuples."""
    rep = AxiomReport()
    dim, order = A.dim, A.order
    mt = A.mult_table
    one = Scalar.one(order)
    unit1 = Tensor.unit(dim, 1, order)
    unit2 = Tensor.unit(dim, 2, order)
    unit3 = Tensor.unit(dim, 3, order)

    def first_fail(name, pairs):
        for w, ok in pairs:
            if not ok:
                rep.add(name, False, w)
                return
        rep.add(name, True)

    # unit element
    ident = ExactMatrix.identity(dim, order)
    rep.add("unit_element", A.left_mult[0] == ident and A.right_mult[0] == ident, (0,))

    # associativity: L(e_i) L(e_j) = L(e_i e_j)
    def assoc_checks():
        for i in range(dim):
            for j in range(dim):
                lij = A.lmult_of(A.product(basis_vector(dim, i, order),
                                           basis_vector(dim, j, order)))
                yield (i, j), A.left_mult[i] * A.left_mult[j] == lij
    first_fail("associativity", assoc_checks())

    # counit is an algebra map
    def counit_checks():
        yield (0,), A.counit[0] == one
        for i in range(dim):
            for j in range(dim):
                lhs = A.counit_of(A.product(basis_vector(dim, i, order),
                                            basis_vector(dim, j, order)))
                yield (i, j), lhs == A.counit[i] * A.counit[j]
    first_fail("counit_algebra_map", counit_checks())

    # coproduct is an algebra map
    def cop_checks():
        yield (0,), A.coproduct[0] == unit2
        for i in range(dim):
            for j in range(dim):
                prod = A.delta_of(A.product(basis_vector(dim, i, order),
                                            basis_vector(dim, j, order)))
                yield (i, j), prod == ts.mul(A.coproduct[i], A.coproduct[j], mt)
    first_fail("coproduct_algebra_map", cop_checks())

    # counitality
    def counitality_checks():
        for i in range(dim):
            e = Tensor.from_vector(basis_vector(dim, i, order), order)
            yield (i,), (
                ts.counit_leg(A.coproduct[i], 1, A.counit) == e
                and ts.counit_leg(A.coproduct[i], 2, A.counit) == e
            )
    first_fail("counitality", counitality_checks())

    # quasi-coassociativity
    def qcoass_checks():
        for i in range(dim):
            d = A.coproduct[i]
            lhs = ts.mul(ts.coproduct_leg(d, 1, A.cop_table), A.phi, mt)
            rhs = ts.mul(A.phi, ts.coproduct_leg(d, 2, A.cop_table), mt)
            yield (i,), lhs == rhs
    first_fail("quasi_coassociativity", qcoass_checks())

    w = _tensor_witness(ts.counit_leg(A.phi, 2, A.counit), unit2)
    rep.add("coassociator_counital", w is None, w)

    lhs3 = ts.mul(ts.coproduct_leg(A.phi, 1, A.cop_table),
                  ts.coproduct_leg(A.phi, 3, A.cop_table), mt)
    rhs3 = ts.mul_chain(
        [ts.embed(A.phi, 4, (1, 2, 3)),
         ts.coproduct_leg(A.phi, 2, A.cop_table),
         ts.embed(A.phi, 4, (2, 3, 4))], mt)
    w = _tensor_witness(lhs3, rhs3)
    rep.add("three_cocycle", w is None, w)

    w = _tensor_witness(ts.mul(A.phi, A.phi_inv, mt), unit3) or _tensor_witness(
        ts.mul(A.phi_inv, A.phi, mt), unit3)
    rep.add("coassociator_invertible", w is None, w)

    # antipode is an algebra anti-homomorphism
    def antihom_checks():
        yield (0,), vec_eq(A.antipode_of(A.unit()), A.unit())
        for i in range(dim):
            for j in range(dim):
                lhs = A.antipode_of(A.product(basis_vector(dim, i, order),
                                              basis_vector(dim, j, order)))
                rhs = A.product(
                    A.antipode_of(basis_vector(dim, j, order)),
                    A.antipode_of(basis_vector(dim, i, order)),
                )
                yield (i, j), vec_eq(lhs, rhs)
    first_fail("antipode_anti_homomorphism", antihom_checks())

    # zig-zag antipode conditions with alpha and beta
    ralpha = A.rmult_of(A.alpha)
    rbeta = A.rmult_of(A.beta)

    def zig_checks():
        for i in range(dim):
            d = A.coproduct[i]
            t = ts.leg_map(ts.leg_map(d, 1, A.antipode), 1, ralpha)
            lhs = ts.merge_legs(t, ((1, 2),), mt).to_vector()
            yield (i, 1), vec_eq(lhs, [A.counit[i] * c for c in A.alpha])
            t = ts.leg_map(ts.leg_map(d, 2, A.antipode), 1, rbeta)
            lhs = ts.merge_legs(t, ((1, 2),), mt).to_vector()
            yield (i, 2), vec_eq(lhs, [A.counit[i] * c for c in A.beta])
    first_fail("antipode_zigzag", zig_checks())

    t = ts.leg_map(ts.leg_map(ts.leg_map(ts.leg_map(
        A.phi, 1, A.antipode), 1, ralpha), 2, rbeta), 3, A.antipode)
    got = ts.merge_legs(t, ((1, 2, 3),), mt).to_vector()
    w = next(((i,) for i in range(dim) if got[i] != A.unit()[i]), None)
    rep.add("coassociator_antipode_left", w is None, w)
    t = ts.leg_map(ts.leg_map(ts.leg_map(
        A.phi_inv, 1, rbeta), 2, A.antipode), 2, ralpha)
    got = ts.merge_legs(t, ((1, 2, 3),), mt).to_vector()
    w = next(((i,) for i in range(dim) if got[i] != A.unit()[i]), None)
    rep.add("coassociator_antipode_right", w is None, w)

    # R-matrix axioms
    def rdelta_checks():
        for i in range(dim):
            d = A.coproduct[i]
            yield (i,), ts.mul(A.r_matrix, d, mt) == ts.mul(
                ts.permute(d, (2, 1)), A.r_matrix, mt)
    first_fail("r_matrix_intertwines_coproduct", rdelta_checks())

    hex1_rhs = ts.mul_chain(
        [ts.permute(A.phi_inv, (2, 3, 1)),
         ts.embed(A.r_matrix, 3, (1, 3)),
         ts.permute(A.phi, (1, 3, 2)),
         ts.embed(A.r_matrix, 3, (2, 3)),
         A.phi_inv], mt)
    w = _tensor_witness(ts.coproduct_leg(A.r_matrix, 1, A.cop_table), hex1_rhs)
    rep.add("hexagon_coproduct_left", w is None, w)

    hex2_rhs = ts.mul_chain(
        [ts.permute(A.phi, (3, 1, 2)),
         ts.embed(A.r_matrix, 3, (1, 3)),
         ts.permute(A.phi_inv, (2, 1, 3)),
         ts.embed(A.r_matrix, 3, (1, 2)),
         A.phi], mt)
    w = _tensor_witness(ts.coproduct_leg(A.r_matrix, 2, A.cop_table), hex2_rhs)
    rep.add("hexagon_coproduct_right", w is None, w)

    w = _tensor_witness(ts.counit_leg(A.r_matrix, 1, A.counit), unit1) or \
        _tensor_witness(ts.counit_leg(A.r_matrix, 2, A.counit), unit1)
    rep.add("r_matrix_counit", w is None, w)

    w = _tensor_witness(ts.mul(A.r_matrix, A.r_inv, mt), unit2) or \
        _tensor_witness(ts.mul(A.r_inv, A.r_matrix, mt), unit2)
    rep.add("r_matrix_invertible", w is None, w)

    rank = A.antipode.rank()
    rep.add("antipode_invertible", rank == dim, (rank,))

    # ribbon axioms
    if A.ribbon is not None:
        v = A.ribbon
        if A.ribbon_inv is None:
            rep.add("ribbon_invertible", False, (0,))
        else:
            prod = A.product(v, A.ribbon_inv)
            w = next((
                (i,) for i in range(dim)
                if prod[i] != (Scalar.one(order) if i == 0 else Scalar.zero(order))
            ), None)
            rep.add("ribbon_invertible", w is None, w)

        def central_checks():
            for i in range(dim):
                e = basis_vector(dim, i, order)
                yield (i,), vec_eq(A.product(v, e), A.product(e, v))
        first_fail("ribbon_central", central_checks())

        m = monodromy(A)
        vt = Tensor.from_vector(v, order)
        w = _tensor_witness(ts.mul(m, A.delta_of(v), mt), ts.tensor_product(vt, vt))
        rep.add("ribbon_monodromy", w is None, w)
        sv = A.antipode_of(v)
        w = next(((i,) for i in range(dim) if sv[i] != v[i]), None)
        rep.add("ribbon_antipode_fixed", w is None, w)
        if rep["antipode_invertible"].ok:
            u, _, _ = _drinfeld_u_variants(A)
            vv = A.product(v, v)
            usu = A.product(u, A.antipode_of(u))
            w = next(((i,) for i in range(dim) if vv[i] != usu[i]), None)
            rep.add("ribbon_square", w is None, w)
        rep.add("ribbon_counit", A.counit_of(v) == one, (0,))

    return rep


# ---------------------------------------------------------------------------
# derived elements


def monodromy(A: QuasiHopfAlgebra) -> Tensor:
    """The double-braiding element: flip of R times R."""
    if "monodromy" not in A._derived:
        A._derived["monodromy"] = ts.mul(
            ts.permute(A.r_matrix, (2, 1)), A.r_matrix, A.mult_table
        )
    return A._derived["monodromy"]


def _ev_coev_core(A: QuasiHopfAlgebra) -> Tensor:
    # (phi_1, S(phi_2 beta S(phi_3))) as a 2-leg tensor
    t = ts.leg_map(A.phi, 3, A.antipode)
    t = ts.leg_map(t, 2, A.rmult_of(A.beta))
    m2 = ts.merge_legs(t, ((1,), (2, 3)), A.mult_table)
    return ts.leg_map(m2, 2, A.antipode)


def _drinfeld_u_from(A: QuasiHopfAlgebra, r: Tensor) -> list[Scalar]:
    core = _ev_coev_core(A)
    t4 = ts.tensor_product(core, r)
    t4 = ts.leg_map(t4, 4, A.antipode)
    t4 = ts.leg_map(t4, 4, A.rmult_of(A.alpha))
    return ts.merge_legs(t4, ((2, 4, 3, 1),), A.mult_table).to_vector()


def _drinfeld_u_variants(A: QuasiHopfAlgebra):
    u = _drinfeld_u_from(A, A.r_matrix)
    u_tilde = _drinfeld_u_from(A, A.r_inv)
    u_inv = A.antipode_inv.apply(u_tilde) if A.ribbon is not None else None
    return u, u_tilde, u_inv


def drinfeld_element(A: QuasiHopfAlgebra):
    """The element implementing the square of the antipode by conjugation,
    its inverse-braiding variant, and (with ribbon data) its inverse.

    Raises ValueError when the computed inverse fails u u^-1 = 1 or the
    conjugation identity, which signals corrupted input data.
    """
    if "drinfeld" in A._derived:
        return A._derived["drinfeld"]
    u, u_tilde, u_inv = _drinfeld_u_variants(A)
    if u_inv is not None:
        if not vec_eq(A.product(u, u_inv), A.unit()) or not vec_eq(
            A.product(u_inv, u), A.unit()
        ):
            raise ValueError("drinfeld element is not invertible against S^-1(u~)")
        s2 = A.antipode * A.antipode
        conj = A.lmult_of(u) * A.rmult_of(u_inv)
        if s2 != conj:
            raise ValueError("S^2 is not conjugation by the drinfeld element")
    A._derived["drinfeld"] = (u, u_tilde, u_inv)
    return u, u_tilde, u_inv


def drinfeld_twist(A: QuasiHopfAlgebra):
    """The invertible 2-leg element conjugating the coproduct of S(a) into
    (S x S) of the opposite coproduct, together with its gamma factor.

    Returns (f, f_inv, gamma); raises DivisionByZero if f is singular.
    """
    if "twist" in A._derived:
        return A._derived["twist"]
    mt = A.mult_table
    x4 = ts.mul(
        ts.embed(A.phi, 4, (2, 3, 4)),
        ts.coproduct_leg(A.phi_inv, 3, A.cop_table),
        mt,
    )
    t = ts.leg_map(ts.leg_map(x4, 1, A.antipode), 2, A.antipode)
    alpha_t = Tensor.from_vector(A.alpha, A.order)
    ins = ts.embed(ts.tensor_product(alpha_t, alpha_t), 4, (3, 4))
    gamma = ts.merge_legs(ts.mul(ins, t, mt), ((2, 3), (1, 4)), mt)

    core = ts.leg_map(A.phi, 3, A.antipode)
    core = ts.leg_map(core, 2, A.rmult_of(A.beta))
    m2 = ts.merge_legs(core, ((1,), (2, 3)), mt)
    c = ts.coproduct_leg(ts.coproduct_leg(m2, 1, A.cop_table), 3, A.cop_table)
    c = ts.permute(c, (2, 1, 3, 4))
    c = ts.leg_map(ts.leg_map(c, 1, A.antipode), 2, A.antipode)
    f = ts.merge_legs(
        ts.mul(ts.embed(gamma, 4, (3, 4)), c, mt), ((1, 3), (2, 4)), mt
    )

    f_inv = A.invert_element(f)
    if f_inv is None:
        raise DivisionByZero("drinfeld twist is not invertible")
    A._derived["twist"] = (f, f_inv, gamma)
    return f, f_inv, gamma
