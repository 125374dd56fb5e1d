"""Finite-dimensional modules over a quasi-Hopf algebra and the
categorical structure morphisms as exact matrices.

Index conventions, fixed once:

* the basis of U (x) V is ordered (u, v) -> u * dim(V) + v, matching
  ``ExactMatrix.kron``;
* the dual module uses the dual basis with the same index as the primal
  basis, so double duals are identified with the original space by the
  identity matrix;
* functionals pair with elements of a tensor square in flipped order,
  <f (x) g, x (x) y> = f(y) g(x).  Dualising the transposed structure
  maps of the universal Hopf algebra therefore composes a transpose with
  one pair flip; :func:`pair_flip` is the single place this happens.
"""

from __future__ import annotations

from .exactmath import ExactMatrix, Scalar
from .tensorspace import Tensor
from .qha import AxiomReport, QuasiHopfAlgebra, drinfeld_element, drinfeld_twist
from .coend import CoendMaps, coend_maps


class AModule:
    """A left module given by one action matrix per algebra basis element."""

    def __init__(self, alg: QuasiHopfAlgebra, action: list[ExactMatrix], label: str = ""):
        self.alg = alg
        self.dim = action[0].rows if action else 0
        self.action = action
        self.label = label

    def act(self, v: list[Scalar]) -> ExactMatrix:
        out = ExactMatrix.zeros(self.dim, self.dim, self.alg.order)
        for i, c in enumerate(v):
            if not c.is_zero():
                out.iadd_scaled(self.action[i], c)
        return out

    def check_representation(self) -> tuple[bool, tuple | None]:
        """rho(e_0) = 1 and rho(e_i) rho(e_j) = sum c[i][j][k] rho(e_k)."""
        A = self.alg
        if self.action[0] != ExactMatrix.identity(self.dim, A.order):
            return False, (0,)
        for i in range(A.dim):
            for j in range(A.dim):
                rhs = ExactMatrix.zeros(self.dim, self.dim, A.order)
                for k, c in A.mult_table[i][j]:
                    rhs = rhs + self.action[k].scale(c)
                if self.action[i] * self.action[j] != rhs:
                    return False, (i, j)
        return True, None

    def __repr__(self) -> str:
        return f"AModule({self.label or 'dim %d' % self.dim})"


class Morphism:
    """A linear map between modules; optionally checked to intertwine."""

    def __init__(self, source: AModule, target: AModule, matrix: ExactMatrix,
                 strict: bool = False):
        self.source = source
        self.target = target
        self.matrix = matrix
        if strict:
            ok, w = self.is_intertwiner()
            if not ok:
                raise ValueError(f"morphism does not intertwine at basis index {w}")

    def is_intertwiner(self) -> tuple[bool, tuple | None]:
        for i in range(self.source.alg.dim):
            if self.matrix * self.source.action[i] != self.target.action[i] * self.matrix:
                return False, (i,)
        return True, None

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        return Morphism(other.source, self.target, self.matrix * other.matrix)

    def tensor(self, other: "Morphism") -> "Morphism":
        return Morphism(
            tensor_module(self.source, other.source),
            tensor_module(self.target, other.target),
            self.matrix.kron(other.matrix),
        )

    def __repr__(self) -> str:
        return f"Morphism({self.source!r} -> {self.target!r})"


# ---------------------------------------------------------------------------
# module constructions


def trivial_module(A: QuasiHopfAlgebra) -> AModule:
    return AModule(
        A,
        [ExactMatrix(1, 1, A.order, [[A.counit[i]]]) for i in range(A.dim)],
        label="1",
    )


def regular_module(A: QuasiHopfAlgebra) -> AModule:
    return AModule(A, list(A.left_mult), label="A")


def module_from_action(A: QuasiHopfAlgebra, mats: list[list[list[Scalar]]],
                       label: str = "") -> AModule:
    dim = len(mats[0])
    return AModule(
        A,
        [ExactMatrix(dim, dim, A.order, [row[:] for row in m]) for m in mats],
        label=label,
    )


def tensor_module(U: AModule, V: AModule) -> AModule:
    """Tensor product along the coproduct."""
    A = U.alg
    assert V.alg is A, "modules over different algebras"
    action = []
    for i in range(A.dim):
        m = ExactMatrix.zeros(U.dim * V.dim, U.dim * V.dim, A.order)
        for (j, k), c in A.cop_table[i]:
            m.iadd_scaled(U.action[j].kron(V.action[k]), c)
        action.append(m)
    return AModule(A, action, label=f"({U.label}x{V.label})")


def dual_module(U: AModule) -> AModule:
    """Dual with action through the antipode: (a.f)(u) = f(S(a) u)."""
    A = U.alg
    action = []
    for i in range(A.dim):
        s_ei = [A.antipode.data[r][i] for r in range(A.dim)]
        action.append(U.act(s_ei).transpose())
    return AModule(A, action, label=f"{U.label}*")


def coadjoint_module(A: QuasiHopfAlgebra) -> AModule:
    """The universal Hopf algebra object: the dual space with action
    (b.f)(x) = f(sum S(b') x b'')."""
    return AModule(A, A.coadjoint_action(), label="L")


def adjoint_module(A: QuasiHopfAlgebra) -> AModule:
    """The end object: A with the action b.x = sum b' x S(b'')."""
    return AModule(A, A.adjoint_action(), label="Adj")


# ---------------------------------------------------------------------------
# structure morphisms


def flip_matrix(m: int, n: int, order: int) -> ExactMatrix:
    out = ExactMatrix.zeros(m * n, m * n, order)
    one = Scalar.one(order)
    for u in range(m):
        for v in range(n):
            out.data[v * m + u][u * n + v] = one
    return out


def pair_flip(dim: int, order: int) -> ExactMatrix:
    """The flip on A x A used when dualising transposed structure maps."""
    return flip_matrix(dim, dim, order)


def _three_action(U: AModule, V: AModule, W: AModule, t: Tensor) -> ExactMatrix:
    out = ExactMatrix.zeros(U.dim * V.dim * W.dim, U.dim * V.dim * W.dim, U.alg.order)
    for (a, b, c), coeff in t.nonzero():
        out.iadd_scaled(U.action[a].kron(V.action[b]).kron(W.action[c]), coeff)
    return out


def _two_action(U: AModule, V: AModule, t: Tensor) -> ExactMatrix:
    out = ExactMatrix.zeros(U.dim * V.dim, U.dim * V.dim, U.alg.order)
    for (a, b), coeff in t.nonzero():
        out.iadd_scaled(U.action[a].kron(V.action[b]), coeff)
    return out


def associator(U: AModule, V: AModule, W: AModule) -> Morphism:
    """Coassociator action U (x) (V (x) W) -> (U (x) V) (x) W."""
    A = U.alg
    return Morphism(
        tensor_module(U, tensor_module(V, W)),
        tensor_module(tensor_module(U, V), W),
        _three_action(U, V, W, A.phi),
    )


def associator_inv(U: AModule, V: AModule, W: AModule) -> Morphism:
    A = U.alg
    return Morphism(
        tensor_module(tensor_module(U, V), W),
        tensor_module(U, tensor_module(V, W)),
        _three_action(U, V, W, A.phi_inv),
    )


def braiding(U: AModule, V: AModule) -> Morphism:
    """Flip after acting with the R-matrix."""
    A = U.alg
    return Morphism(
        tensor_module(U, V),
        tensor_module(V, U),
        flip_matrix(U.dim, V.dim, A.order) * _two_action(U, V, A.r_matrix),
    )


def double_braiding(U: AModule, V: AModule) -> Morphism:
    """Monodromy action on U (x) V (no flip)."""
    from .qha import monodromy

    return Morphism(
        tensor_module(U, V),
        tensor_module(U, V),
        _two_action(U, V, monodromy(U.alg)),
    )


def evaluation(U: AModule) -> Morphism:
    """U* (x) U -> 1, f (x) u -> f(alpha.u)."""
    A = U.alg
    rho_alpha = U.act(A.alpha)
    m = ExactMatrix.zeros(1, U.dim * U.dim, A.order)
    for f in range(U.dim):
        for u in range(U.dim):
            m.data[0][f * U.dim + u] = rho_alpha.data[f][u]
    return Morphism(tensor_module(dual_module(U), U), trivial_module(A), m)


def coevaluation(U: AModule) -> Morphism:
    """1 -> U (x) U*, 1 -> sum (beta.u_i) (x) u_i*."""
    A = U.alg
    rho_beta = U.act(A.beta)
    m = ExactMatrix.zeros(U.dim * U.dim, 1, A.order)
    for x in range(U.dim):
        for i in range(U.dim):
            m.data[x * U.dim + i][0] = rho_beta.data[x][i]
    return Morphism(trivial_module(A), tensor_module(U, dual_module(U)), m)


def _require_ribbon(A: QuasiHopfAlgebra):
    if A.ribbon is None or A.ribbon_inv is None:
        raise ValueError("operation requires ribbon data")


def ribbon_twist(U: AModule) -> Morphism:
    """Action of the inverse ribbon element."""
    A = U.alg
    _require_ribbon(A)
    return Morphism(U, U, U.act(A.ribbon_inv))


def pivotal(U: AModule) -> Morphism:
    """U -> U**, the double-dual identification twisted by v^-1 u."""
    A = U.alg
    _require_ribbon(A)
    u, _, _ = drinfeld_element(A)
    w = A.product(A.ribbon_inv, u)
    return Morphism(U, dual_module(dual_module(U)), U.act(w))


def evaluation_right(U: AModule) -> Morphism:
    """U (x) U* -> 1, w (x) f -> f(S(alpha) v^-1 u . w)."""
    A = U.alg
    _require_ribbon(A)
    u, _, _ = drinfeld_element(A)
    w = A.product(A.antipode_of(A.alpha), A.product(A.ribbon_inv, u))
    rho = U.act(w)
    m = ExactMatrix.zeros(1, U.dim * U.dim, A.order)
    for x in range(U.dim):
        for f in range(U.dim):
            m.data[0][x * U.dim + f] = rho.data[f][x]
    return Morphism(tensor_module(U, dual_module(U)), trivial_module(A), m)


def coevaluation_right(U: AModule) -> Morphism:
    """1 -> U* (x) U, 1 -> sum w_i* (x) (u^-1 v S(beta) . w_i)."""
    A = U.alg
    _require_ribbon(A)
    u, _, u_inv = drinfeld_element(A)
    w = A.product(u_inv, A.product(A.ribbon, A.antipode_of(A.beta)))
    rho = U.act(w)
    m = ExactMatrix.zeros(U.dim * U.dim, 1, A.order)
    for f in range(U.dim):
        for x in range(U.dim):
            m.data[f * U.dim + x][0] = rho.data[x][f]
    return Morphism(trivial_module(A), tensor_module(dual_module(U), U), m)


def structure_morphisms(U: AModule, V: AModule, W: AModule) -> dict[str, Morphism]:
    """All categorical structure data for the triple (U, V, W); the duality
    and twist entries refer to U."""
    out = {
        "associator": associator(U, V, W),
        "braiding": braiding(U, V),
        "ev": evaluation(U),
        "coev": coevaluation(U),
    }
    if U.alg.ribbon is not None:
        out["ev_right"] = evaluation_right(U)
        out["coev_right"] = coevaluation_right(U)
        out["ribbon"] = ribbon_twist(U)
        out["pivotal"] = pivotal(U)
    return out


# ---------------------------------------------------------------------------
# coend machinery in module form


def iota(M: AModule) -> Morphism:
    """M* (x) M -> L, f (x) m -> (a -> f(a.m))."""
    A = M.alg
    m = ExactMatrix.zeros(A.dim, M.dim * M.dim, A.order)
    for a in range(A.dim):
        rho = M.action[a]
        for f in range(M.dim):
            for x in range(M.dim):
                m.data[a][f * M.dim + x] = rho.data[f][x]
    return Morphism(tensor_module(dual_module(M), M), coadjoint_module(A), m)


def j_end(M: AModule) -> Morphism:
    """Adj -> M (x) M*, a -> sum (a.m_i) (x) m_i*."""
    A = M.alg
    m = ExactMatrix.zeros(M.dim * M.dim, A.dim, A.order)
    for a in range(A.dim):
        rho = M.action[a]
        for x in range(M.dim):
            for i in range(M.dim):
                m.data[x * M.dim + i][a] = rho.data[x][i]
    return Morphism(adjoint_module(A), tensor_module(M, dual_module(M)), m)


def dual_of_adjoint_iso(A: QuasiHopfAlgebra) -> Morphism:
    """The twist-conjugation isomorphism from the dual of the adjoint
    module to the universal Hopf algebra object.

    Raises ValueError when the underlying map fails to be invertible,
    which signals corrupted input data.
    """
    f, _, _ = drinfeld_twist(A)
    e = ExactMatrix.zeros(A.dim, A.dim, A.order)
    for (j, k), c in f.nonzero():
        sk = [A.antipode.data[r][k] for r in range(A.dim)]
        e = e + (A.antipode_inv * A.left_mult[j] * A.rmult_of(sk)).scale(c)
    if e.rank() != A.dim:
        raise ValueError("dual-of-adjoint comparison map is singular")
    return Morphism(
        dual_module(adjoint_module(A)), coadjoint_module(A), e.transpose()
    )


def hopf_tangle(X: AModule, Y: AModule) -> Morphism:
    """The dinatural map X* (x) X -> Y (x) Y* built from coevaluation, the
    double braiding and evaluation, with all coassociator insertions."""
    A = X.alg
    dx, dy = X.dim, Y.dim
    xs = dual_module(X)
    ys = dual_module(Y)
    i_xs = ExactMatrix.identity(dx, A.order)
    i_x = ExactMatrix.identity(dx, A.order)
    i_ys = ExactMatrix.identity(dy, A.order)
    yy = tensor_module(Y, ys)

    step2 = i_xs.kron(i_x).kron(coevaluation(Y).matrix)          # add Y Y*
    assoc_in = associator(X, Y, ys).matrix
    step3 = i_xs.kron(assoc_in)
    mono = double_braiding(X, Y).matrix
    step4 = i_xs.kron(mono.kron(i_ys))
    step5 = i_xs.kron(associator_inv(X, Y, ys).matrix)
    step6 = associator(xs, X, yy).matrix
    step7 = evaluation(X).matrix.kron(ExactMatrix.identity(dy * dy, A.order))
    m = step7 * step6 * step5 * step4 * step3 * step2
    return Morphism(tensor_module(xs, X), yy, m)


# ---------------------------------------------------------------------------
# the braided Hopf structure, as morphisms


def dualised_structure(A: QuasiHopfAlgebra, maps: CoendMaps | None = None):
    """Module-level structure morphisms of the universal Hopf algebra,
    obtained from the transposed maps by transpose plus pair flip."""
    if maps is None:
        maps = coend_maps(A)
    L = coadjoint_module(A)
    LL = tensor_module(L, L)
    one_mod = trivial_module(A)
    flip = pair_flip(A.dim, A.order)

    mu = Morphism(LL, L, maps.mu_hat.transpose() * flip)
    delta = Morphism(L, LL, flip * maps.delta_hat.transpose())
    eta = Morphism(one_mod, L, ExactMatrix(A.dim, 1, A.order,
                                           [[c] for c in maps.eta_hat]))
    eps = Morphism(L, one_mod, ExactMatrix(1, A.dim, A.order, [list(maps.eps_hat)]))
    s_l = Morphism(L, L, maps.s_hat_L.transpose())
    omega_row = ExactMatrix.zeros(1, A.dim * A.dim, A.order)
    for (i, j), c in maps.omega_hat.nonzero():
        omega_row.data[0][j * A.dim + i] = c
    omega = Morphism(LL, one_mod, omega_row)
    return L, mu, delta, eta, eps, s_l, omega


def verify_braided_hopf(A: QuasiHopfAlgebra, maps: CoendMaps | None = None) -> AxiomReport:
    """Check, as exact matrix identities in the module category, that the
    dualised structure maps make the universal Hopf algebra object a Hopf
    algebra with a self-pairing whose product/coproduct and unit/counit
    are mutually adjoint, and whose antipode squares to the twist."""
    L, mu, delta, eta, eps, s_l, omega = dualised_structure(A, maps)
    d = L.dim
    order = A.order
    rep = AxiomReport()

    i_l = ExactMatrix.identity(d, order)
    i_ll = ExactMatrix.identity(d * d, order)

    for name, mor in (("product", mu), ("coproduct", delta), ("unit", eta),
                      ("counit", eps), ("antipode", s_l), ("pairing", omega)):
        ok, w = mor.is_intertwiner()
        rep.add(f"module_morphism_{name}", ok, w)

    al = associator(L, L, L).matrix

    rep.add("associativity",
            mu.matrix * i_l.kron(mu.matrix) == mu.matrix * mu.matrix.kron(i_l) * al)
    rep.add("unitality",
            mu.matrix * eta.matrix.kron(i_l) == i_l
            and mu.matrix * i_l.kron(eta.matrix) == i_l)
    rep.add("coassociativity",
            delta.matrix.kron(i_l) * delta.matrix
            == al * i_l.kron(delta.matrix) * delta.matrix)
    rep.add("counitality",
            eps.matrix.kron(i_l) * delta.matrix == i_l
            and i_l.kron(eps.matrix) * delta.matrix == i_l)

    # (L L)(L L) -> L((L L) L) by coherence, then the middle braiding
    ll_mod = tensor_module(L, L)
    al_inv = associator_inv(L, L, L).matrix
    coh_in = i_l.kron(al) * _three_action(L, L, ll_mod, A.phi_inv)
    coh_out = _three_action(L, L, ll_mod, A.phi) * i_l.kron(al_inv)
    mid = i_l.kron(braiding(L, L).matrix).kron(i_l)
    rhs = mu.matrix.kron(mu.matrix) * coh_out * mid * coh_in \
        * delta.matrix.kron(delta.matrix)
    rep.add("coproduct_algebra_map", delta.matrix * mu.matrix == rhs)
    rep.add("unit_counit_compat",
            delta.matrix * eta.matrix == eta.matrix.kron(eta.matrix)
            and eps.matrix * mu.matrix == eps.matrix.kron(eps.matrix)
            and (eps.matrix * eta.matrix).data[0][0].is_one())

    eta_eps = eta.matrix * eps.matrix
    rep.add("antipode_left", mu.matrix * s_l.matrix.kron(i_l) * delta.matrix == eta_eps)
    rep.add("antipode_right", mu.matrix * i_l.kron(s_l.matrix) * delta.matrix == eta_eps)

    # pairing adjointness; inner pairing acts on the middle pair
    inner = i_l.kron(omega.matrix).kron(i_l)
    rep.add("pairing_product_right",
            omega.matrix * mu.matrix.kron(i_l)
            == omega.matrix * inner * coh_in * i_ll.kron(delta.matrix))
    rep.add("pairing_product_left",
            omega.matrix * i_l.kron(mu.matrix)
            == omega.matrix * inner * coh_in * delta.matrix.kron(i_ll))
    rep.add("pairing_unit_right",
            omega.matrix * i_l.kron(eta.matrix) == eps.matrix)
    rep.add("pairing_unit_left",
            omega.matrix * eta.matrix.kron(i_l) == eps.matrix)

    if A.ribbon_inv is not None:
        theta = L.act(A.ribbon_inv)
        rep.add("antipode_square_is_twist", s_l.matrix * s_l.matrix == theta)
    return rep
