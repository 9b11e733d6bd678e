"""Randomized and exhaustive invariant suites.

Every suite adds one entry to a ``Report``: the number of checks performed
and the failing cases.  An entry passes when it ran at least one check and
recorded no failure.  Sampling uses ``random.Random(seed)`` so reports are
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from hopfcode.algebra import (
    AlgebraElement,
    StructureAlgebra,
    enumerate_right_submodules,
    has_local_endomorphism_ring,
    invert,
    is_indecomposable,
    is_left_closed,
    is_right_closed,
    left_multiply_subspace,
    right_ideal_closure,
    right_multiply_subspace,
)
from hopfcode.errors import BudgetExceeded, NotInvertible
from hopfcode.forms import (
    BilinearForm,
    action_matrix_bl,
    action_matrix_br,
    action_matrix_tl,
    action_matrix_tr,
    check_gamma_identity,
    nakayama,
    orthogonal_left,
    orthogonal_right,
    predicted_orthogonal_Nst,
)
from hopfcode.linalg import (
    Matrix,
    Subspace,
    coordinate_span,
    intersect,
    is_subspace,
    kernel,
    random_subspace,
    random_vector,
    span,
    sum_,
)
from hopfcode.omega import OmegaAlgebra, classify_indecomposables, ideal_N, representatives


@dataclass
class Entry:
    checks: int = 0
    failures: list = dc_field(default_factory=list)
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.checks > 0 and not self.failures

    def check(self, ok: bool, what=None):
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def to_json(self) -> dict:
        out = {"passed": self.passed, "checks": self.checks, "failures": len(self.failures)}
        if self.failures:
            out["failing"] = [str(f) for f in self.failures[:10]]
        if self.note:
            out["note"] = self.note
        return out


class Report:
    def __init__(self):
        self.entries: dict[str, Entry] = {}

    def entry(self, key: str) -> Entry:
        return self.entries.setdefault(key, Entry())

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries.values())

    def failing(self) -> list[str]:
        return [k for k, e in self.entries.items() if not e.passed]

    def to_json(self) -> dict:
        return {"passed": self.passed, "entries": {k: self.entries[k].to_json() for k in sorted(self.entries)}}


def _unit_coords(n: int, F) -> list[tuple]:
    return [tuple(F.one if k == i else F.zero for k in range(n)) for i in range(n)]


def random_unit(alg: StructureAlgebra, rng: random.Random, tries: int = 200) -> tuple[AlgebraElement, AlgebraElement]:
    """A random invertible element and its inverse."""
    for _ in range(tries):
        a = alg.element(random_vector(alg.field, alg.dim, rng))
        try:
            return a, invert(a)
        except NotInvertible:
            continue
    raise NotInvertible("no invertible element found by sampling")


def random_R_unit(alg: OmegaAlgebra, rng: random.Random) -> list:
    """Coefficients of a random ``a(x)`` with ``a(0) = 1``."""
    from hopfcode.linalg import random_scalar

    F = alg.field
    return [F.one] + [random_scalar(F, rng) for _ in range(alg.capN - 1)]


# -- orthogonals of a bilinear form ---------------------------------------------------


def suite_orthogonal_lattice(report: Report, form: BilinearForm, rng, samples: int = 100):
    """Inclusion reversal, sums to intersections, intersections to sums, dimensions, double orthogonals."""
    e = report.entry("orthogonal_lattice")
    F, n = form.field, form.dim
    for k in range(samples):
        W = random_subspace(F, n, rng)
        U_in = span(F, [random_vector(F, W.dim, rng) for _ in range(rng.randint(0, W.dim))], W.dim) if W.dim else None
        U_sub = span(F, [Matrix(F, W.dim, n, W.basis).apply(v) for v in U_in.basis], n) if U_in else W
        U = random_subspace(F, n, rng)
        for perp, other, side in ((orthogonal_left, orthogonal_right, "L"), (orthogonal_right, orthogonal_left, "R")):
            pW, pU = perp(form, W), perp(form, U)
            e.check(is_subspace(pW, perp(form, U_sub)), (k, side, "inclusion"))
            e.check(perp(form, sum_(U, W)) == intersect(pU, pW), (k, side, "sum"))
            e.check(perp(form, intersect(U, W)) == sum_(pU, pW), (k, side, "intersection"))
            e.check(pW.dim == n - W.dim, (k, side, "dimension"))
            e.check(other(form, pW) == W, (k, side, "double"))


def suite_nakayama(report: Report, form: BilinearForm, rng, samples: int = 100):
    gamma = nakayama(form, general=True)
    e = report.entry("nakayama_identity")
    bad = check_gamma_identity(form, gamma)
    e.checks += form.dim * form.dim
    e.failures.extend(bad)
    e = report.entry("nakayama_transport")
    for k in range(samples):
        W = random_subspace(form.field, form.dim, rng)
        e.check(orthogonal_right(form, W) == gamma.image(orthogonal_left(form, W)), k)
    cert = form.certificate
    if cert is not None:
        e = report.entry("basis_span_orthogonals")
        n = form.dim
        tau = tuple(cert.sigma[cert.sigma[i]] for i in range(n))
        for k in range(samples):
            B = [i for i in range(n) if rng.random() < 0.5]
            wb = coordinate_span(form.field, n, B)
            wtb = coordinate_span(form.field, n, [tau[i] for i in B])
            e.check(orthogonal_right(form, wb) == orthogonal_left(form, wtb), (k, B))


def _image(w: Subspace, m: Matrix) -> Subspace:
    return w.image(m)


def suite_actions(report: Report, form: BilinearForm, rng, samples: int = 100):
    """Orthogonals transported by units, annihilators, and the left-linearity criterion."""
    alg = form.algebra
    F, n = form.field, form.dim
    e = report.entry("action_transport")
    for k in range(samples):
        a, b = random_unit(alg, rng)
        W = random_subspace(F, n, rng)
        tl, bl = action_matrix_tl(form, a), action_matrix_bl(form, a)
        tr_b, br_b = action_matrix_tr(form, b), action_matrix_br(form, b)
        L, R = orthogonal_left, orthogonal_right
        bW = left_multiply_subspace(b, W)
        Wa = right_multiply_subspace(W, a)
        e.check(L(form, bW) == _image(L(form, W), tl), (k, 1))
        e.check(R(form, _image(W, tl)) == left_multiply_subspace(b, R(form, W)), (k, 2))
        e.check(L(form, _image(W, bl)) == left_multiply_subspace(b, L(form, W)), (k, 3))
        e.check(R(form, bW) == _image(R(form, W), bl), (k, 4))
        e.check(L(form, Wa) == _image(L(form, W), tr_b), (k, 5))
        e.check(R(form, _image(W, tr_b)) == right_multiply_subspace(R(form, W), a), (k, 6))
        e.check(L(form, _image(W, br_b)) == right_multiply_subspace(L(form, W), a), (k, 7))
        e.check(R(form, Wa) == _image(R(form, W), br_b), (k, 8))

    e = report.entry("annihilator_identities")
    full = Matrix.identity(F, n)
    for k in range(samples):
        c = alg.element(random_vector(F, n, rng))
        ann_left = kernel(alg.left_matrix(c.coords).T)  # {v : c v = 0}
        ann_right = kernel(alg.right_matrix(c.coords).T)  # {v : v c = 0}
        V = span(F, full.rows, n)
        e.check(orthogonal_right(form, _image(V, action_matrix_tl(form, c))) == ann_left, (k, "tl"))
        e.check(orthogonal_left(form, _image(V, action_matrix_bl(form, c))) == ann_left, (k, "bl"))
        e.check(orthogonal_right(form, _image(V, action_matrix_tr(form, c))) == ann_right, (k, "tr"))
        e.check(orthogonal_left(form, _image(V, action_matrix_br(form, c))) == ann_right, (k, "br"))

    e = report.entry("left_linearity_criterion")
    gamma = nakayama(form, general=True).matrix
    for i in range(n):
        c = alg.basis(i)
        Lc = alg.left_matrix(c.coords)
        linear = (Lc @ gamma).rows == (gamma @ Lc).rows
        same = action_matrix_tl(form, c).rows == action_matrix_bl(form, c).rows
        e.check(linear == same, alg.labels[i])


def suite_form(report: Report, form: BilinearForm, rng, samples: int = 100, actions: bool = True):
    suite_orthogonal_lattice(report, form, rng, samples)
    suite_nakayama(report, form, rng, samples)
    if actions and form.algebra is not None:
        suite_actions(report, form, rng, samples)


# -- k(omega, N) ---------------------------------------------------------------------------


def suite_classification(report: Report, alg: OmegaAlgebra, budget: int | None = None, key: str = "indecomposable_classification"):
    """Exhaustive right-submodule enumeration against the family ``(1 + r x) N_{s,t}``."""
    e = report.entry(key)
    subs = enumerate_right_submodules(alg, budget)
    family = classify_indecomposables(alg, budget=budget)
    ind = {m.subspace.basis for m in subs if is_indecomposable(m, subs)}
    fam = {c.submodule.subspace.basis for c in family}
    e.check(ind == fam, "enumeration vs family")
    reps = representatives(alg)
    e.check(len(reps) == alg.s_size * alg.capN, "representative count")
    for (s, t), m in reps:
        e.check(m.subspace.basis in ind, ("N", s, t))
    return family


def suite_monomial_orthogonals(report: Report, form: BilinearForm, alg: OmegaAlgebra, mu, nu):
    e = report.entry("indecomposable_orthogonals")
    for s in range(alg.s_size):
        for m in range(alg.capN):
            pred, (s2, m2) = predicted_orthogonal_Nst(alg, mu, nu, s, m)
            computed = orthogonal_right(form, ideal_N(alg, s, m).subspace)
            e.check(pred == computed, (s, m, "right"))
            e.check(orthogonal_left(form, ideal_N(alg, s2, m2).subspace) == computed, (s, m, "left"))


# -- Hopf algebras -------------------------------------------------------------------------


def suite_hopf_axioms(report: Report, h, form: BilinearForm, rng, samples: int = 100):
    from hopfcode.hopf.structure import (
        check_antipode,
        check_antipode_antimultiplicative,
        check_balanced,
        check_coassociativity,
        check_counit,
        check_counit_multiplicative,
        check_delta_multiplicative,
        check_left_integral,
        check_sposto,
    )

    n = h.dim
    for key, fn, count in (
        ("hopf_coassociativity", check_coassociativity, n),
        ("hopf_counit", check_counit, n),
        ("hopf_antipode", check_antipode, n),
        ("left_integral", check_left_integral, n),
        ("coproduct_multiplicative", check_delta_multiplicative, n * n),
        ("counit_multiplicative", check_counit_multiplicative, n * n),
        ("antipode_antimultiplicative", check_antipode_antimultiplicative, n * n),
    ):
        e = report.entry(key)
        e.checks += count
        e.failures.extend(fn(h))
    F = h.field
    triples = [tuple(random_vector(F, n, rng) for _ in range(3)) for _ in range(samples)]
    e = report.entry("balanced_form")
    e.checks += samples
    e.failures.extend(check_balanced(h, form, triples))
    e = report.entry("coproduct_transpose")
    e.checks += samples
    e.failures.extend(check_sposto(h, form, [(x, y) for x, _, y in triples]))


def suite_hopf_forms(report: Report, h, form: BilinearForm, rng, samples: int = 100):
    """Induced actions in Hopf terms, the Nakayama map through S^2, annihilators and ideal orthogonals."""
    from hopfcode.hopf.structure import nakayama_eta

    alg = h.algebra
    F, n = h.field, h.dim
    S, S_inv = h.antipode, h.antipode_inverse
    eta = nakayama_eta(h)
    eta_inv = eta.inverse()
    basis = _unit_coords(n, F)

    e = report.entry("induced_actions_hopf")
    for i in range(n):
        c = basis[i]
        tr, br, tl, bl = (action_matrix_tr(form, c), action_matrix_br(form, c), action_matrix_tl(form, c), action_matrix_bl(form, c))
        Sc, Sic = S.apply(c), S_inv.apply(c)
        tl_elt = S_inv.apply(eta.apply(c))
        bl_elt = eta_inv.apply(S.apply(c))
        for j in range(n):
            x = basis[j]
            e.check(tr.apply(x) == alg.mul_coords(x, Sic), (i, j, "tr"))
            e.check(br.apply(x) == alg.mul_coords(x, Sc), (i, j, "br"))
            e.check(tl.apply(x) == alg.mul_coords(tl_elt, x), (i, j, "tl"))
            e.check(bl.apply(x) == alg.mul_coords(bl_elt, x), (i, j, "bl"))

    for k in range(samples):
        c, x = random_vector(F, n, rng), random_vector(F, n, rng)
        e.check(action_matrix_tr(form, c).apply(x) == alg.mul_coords(x, S_inv.apply(c)), (k, "tr"))
        e.check(action_matrix_br(form, c).apply(x) == alg.mul_coords(x, S.apply(c)), (k, "br"))
        e.check(action_matrix_tl(form, c).apply(x) == alg.mul_coords(S_inv.apply(eta.apply(c)), x), (k, "tl"))
        e.check(action_matrix_bl(form, c).apply(x) == alg.mul_coords(eta_inv.apply(S.apply(c)), x), (k, "bl"))

    e = report.entry("nakayama_from_antipode")
    gamma = nakayama(form, general=True).matrix
    g1 = gamma.apply(alg.unit)
    S2 = S @ S
    for i in range(n):
        e.check(gamma.rows[i] == alg.mul_coords(g1, S2.rows[i]), alg.labels[i])
    for k in range(samples):
        x = random_vector(F, n, rng)
        e.check(gamma.apply(x) == alg.mul_coords(g1, S2.apply(x)), k)

    e = report.entry("eta_is_algebra_map")
    e.check(eta.apply(alg.unit) == alg.unit, "eta(1)")

    e = report.entry("annihilator_inclusion")
    ideal_e = report.entry("ideal_orthogonals_are_right_ideals")
    for k in range(samples):
        gens = [alg.element(random_vector(F, n, rng)) for _ in range(rng.randint(1, 2))]
        I = right_ideal_closure(gens, alg).subspace
        _check_ideal(e, ideal_e, h, form, I, k)
    if isinstance(alg, OmegaAlgebra):
        for s in range(alg.s_size):
            for t in range(alg.capN):
                _check_ideal(e, ideal_e, h, form, ideal_N(alg, s, t).subspace, ("N", s, t))


def _check_ideal(e, ideal_e, h, form, I: Subspace, tag):
    alg = h.algebra
    F, n = h.field, h.dim
    # Ann(I) = {v : y v = 0 for y in I}: rows y L_?; y v = v @ L_y
    eqs = []
    for y in I.basis:
        eqs.extend(alg.left_matrix(y).T.rows)
    ann = kernel(Matrix(F, len(eqs), n, tuple(eqs))) if eqs else span(F, _unit_coords(n, F), n)
    perp_l = orthogonal_left(form, I)
    image = ann.image(h.antipode_inverse)
    e.check(is_subspace(image, perp_l), (tag, "inclusion"))
    if is_left_closed(alg, perp_l):
        e.check(image == perp_l, (tag, "two-sided equality"))
    ideal_e.check(is_right_closed(alg, perp_l), (tag, "L"))
    ideal_e.check(is_right_closed(alg, orthogonal_right(form, I)), (tag, "R"))


def suite_omega_hopf(report: Report, h, form: BilinearForm, closed_gram: Matrix, g: AlgebraElement):
    """Shared Taft/CDMM checks: closed-form Gram, gamma(h) = h g, eta = S^2 on R, the left actions."""
    from hopfcode.hopf.structure import nakayama_eta

    alg: OmegaAlgebra = h.algebra
    n = h.dim
    e = report.entry("integral_form_closed_form")
    e.checks += n * n
    e.failures.extend((i, j) for i in range(n) for j in range(n) if form.gram.rows[i][j] != closed_gram.rows[i][j])

    e = report.entry("nakayama_right_multiplication")
    gamma = nakayama(form)
    for i in range(n):
        e.check(gamma.matrix.rows[i] == alg.mul_coords(alg.basis_coords(i), g.coords), alg.labels[i])

    e = report.entry("frobenius_nakayama_on_R")
    eta = nakayama_eta(h)
    S2 = h.antipode @ h.antipode
    for k in range(alg.capN):
        r = alg.x_power(k).coords
        e.check(eta.apply(r) == S2.apply(r), ("x", k))

    e = report.entry("left_actions_agree")
    e_r = report.entry("left_action_on_R")
    for i in range(n):
        c = alg.basis_coords(i)
        e.check(action_matrix_tl(form, c).rows == action_matrix_bl(form, c).rows, alg.labels[i])
    for k in range(alg.capN):
        r = alg.x_power(k).coords
        tl = action_matrix_tl(form, r)
        Sr = h.antipode.apply(r)
        for j in range(n):
            x = alg.basis_coords(j)
            e_r.check(tl.apply(x) == alg.mul_coords(Sr, x), (k, j))


def suite_taft(report: Report, h, form: BilinearForm, rng, units: int = 5):
    from hopfcode.hopf.named import lambda_on_pbw_taft, taft_certificate, taft_closed_form_gram
    from hopfcode.hopf.theorems import theorem_orthogonal_taft

    alg: OmegaAlgebra = h.algebra
    F = h.field
    N = alg.capN
    suite_omega_hopf(report, h, form, taft_closed_form_gram(h), h.distinguished["g"])
    e = report.entry("monomial_certificate")
    e.check(form.certificate == taft_certificate(h), "certificate")
    e = report.entry("integral_values")
    for m in range(N):
        for a in range(N):
            expected = F.one if (m == N - 1 and a % N == 1 % N) else F.zero
            e.check(lambda_on_pbw_taft(h, m, a) == expected, (m, a))
    e = report.entry("antipode_square")
    S2 = h.antipode @ h.antipode
    q = h.distinguished["q"]
    for m in range(N):
        xm = alg.x_power(m)
        e.check(S2.apply(xm.coords) == xm.scale(F.pow(q, -m)).coords, m)
    e = report.entry("orthogonal_theorem")
    unit_list = [None] + [random_R_unit(alg, rng) for _ in range(units)]
    for a in unit_list:
        for s in range(N):
            for m in range(N):
                e.check(theorem_orthogonal_taft(h, s, m, a, form=form).equal, (s, m, a))


def suite_cdmm(report: Report, h, form: BilinearForm, rng, units: int = 3, r_samples: int = 12):
    from hopfcode.hopf.named import cdmm_certificate, cdmm_closed_form_gram, cdmm_index, lambda_on_pbw_cdmm
    from hopfcode.hopf.theorems import theorem_orthogonal_cdmm

    alg: OmegaAlgebra = h.algebra
    F = h.field
    suite_omega_hopf(report, h, form, cdmm_closed_form_gram(h), h.distinguished["g"])
    e = report.entry("monomial_certificate")
    e.check(form.certificate == cdmm_certificate(h), "certificate")

    e = report.entry("commutation_identities")
    x = h.distinguished["x"]
    for i in range(2):
        for j in range(6):
            eij = alg.e(cdmm_index(i, j))
            for m in range(2):
                lhs = alg.monomial(cdmm_index(i, j), m)
                e.check(lhs == (x**m) * alg.e(cdmm_index(i, j + 3 * m)), (i, j, m, "e x^m"))
            e.check(eij * eij == eij, (i, j, "idempotent"))

    e = report.entry("integral_values")
    inv12 = F.inv(F(12))
    for i in range(2):
        for j in range(6):
            for m in range(2):
                xe = (x**m) * alg.e(cdmm_index(i, j))
                expected = F.mul(inv12, F(-1 if j % 2 else 1)) if m == 1 else F.zero
                e.check(h.lam(xe.coords) == expected, ("x^m e", i, j, m))
                expected_pbw = F.one if (m == 1 and i == 0 and j == 3) else F.zero
                e.check(lambda_on_pbw_cdmm(h, m, i, j) == expected_pbw, ("x^m a^i b^j", i, j, m))

    e = report.entry("indecomposable_classification")
    e.note = (
        "the N_{s,t,m} are checked as representatives of the indecomposable right ideals; "
        "the stated set of all right submodules is not what is verified"
    )
    reps = representatives(alg)
    e.check(len(reps) == 24, "representative count")
    rs = [[F.zero, F.zero]] + [[F(rng.randrange(F.p)), F(rng.randrange(F.p))] for _ in range(r_samples)] if hasattr(F, "p") else [[F.zero, F.zero]]
    family = classify_indecomposables(alg, r_samples=rs)
    e.check(all(c.sampled for c in family), "sampled tag")
    for c in family:
        e.check(is_right_closed(alg, c.submodule.subspace), (c.s, c.t, "closed"))
        try:
            e.check(has_local_endomorphism_ring(c.submodule), (c.s, c.t, "indecomposable"))
        except BudgetExceeded as exc:
            e.check(False, (c.s, c.t, str(exc)))

    e = report.entry("orthogonal_theorem")
    unit_list = [None] + [random_R_unit(alg, rng) for _ in range(units)]
    for a in unit_list:
        for s in range(2):
            for t in range(6):
                for m in range(2):
                    e.check(theorem_orthogonal_cdmm(h, s, t, m, a, form=form).equal, (s, t, m, a))


def suite_cyclic(report: Report, h, form: BilinearForm, rng):
    from hopfcode.hopf.named import cyclic_certificate, cyclic_idempotent_form
    from hopfcode.hopf.structure import functional_action, nakayama_eta, phi, phi_inverse
    from hopfcode.errors import NoSuchRoot

    F, n = h.field, h.dim
    e = report.entry("orthonormal_basis")
    e.check(form.gram.rows == Matrix.identity(F, n).rows, "gram")
    e = report.entry("symmetric_form")
    e.check(form.is_symmetric(), "symmetric")
    e = report.entry("involutory")
    e.check((h.antipode @ h.antipode).rows == Matrix.identity(F, n).rows, "S^2 = id")
    e = report.entry("nakayama_trivial")
    e.check(nakayama(form).matrix.rows == Matrix.identity(F, n).rows, "gamma")
    e.check(nakayama_eta(h).rows == Matrix.identity(F, n).rows, "eta")
    e = report.entry("integral_element")
    t = h.distinguished["t"]
    e.check(phi_inverse(h, h.counit) == t, "phi^-1(eps) = t")
    e.check(phi(h, t) == h.counit, "phi(t) = eps")
    for k in range(20):
        v = random_vector(F, n, rng)
        e.check(phi(h, v) == v, ("coefficient map", k))
    e = report.entry("cyclic_shift_action")
    x = h.distinguished["x"]
    for i in range(n):
        f = tuple(F.one if k == i else F.zero for k in range(n))
        e.check(functional_action(h, f, x) == f[-1:] + f[:-1], i)
    for k in range(20):
        f = random_vector(F, n, rng)
        e.check(functional_action(h, f, x) == f[-1:] + f[:-1], ("random", k))
    try:
        idem_form, _ = cyclic_idempotent_form(h)
    except NoSuchRoot:
        # no primitive n-th root in the field, so no idempotent basis
        return
    e = report.entry("idempotent_basis_form")
    e.check(idem_form.certificate == cyclic_certificate(n, F), "certificate")


def run_named(h, rng: random.Random | None = None, samples: int = 100, units: int | None = None) -> Report:
    """Every applicable suite for a named Hopf algebra."""
    from hopfcode.hopf.structure import form_from_integral

    rng = rng or random.Random(0)
    report = Report()
    form = form_from_integral(h)
    suite_hopf_axioms(report, h, form, rng, samples)
    suite_form(report, form, rng, samples)
    suite_hopf_forms(report, h, form, rng, samples)
    if h.name.startswith("taft"):
        suite_taft(report, h, form, rng, units if units is not None else 5)
    elif h.name == "cdmm":
        suite_cdmm(report, h, form, rng, units if units is not None else 3)
    elif h.name.startswith("cyclic"):
        suite_cyclic(report, h, form, rng)
    return report


def run_omega(alg: OmegaAlgebra, form: BilinearForm, mu, nu, rng: random.Random | None = None, samples: int = 100, budget: int | None = None) -> Report:
    rng = rng or random.Random(0)
    report = Report()
    suite_form(report, form, rng, samples)
    if tuple(nu) == tuple(alg.capN - 1 - m for m in range(alg.capN)):
        suite_monomial_orthogonals(report, form, alg, mu, nu)
    suite_classification(report, alg, budget)
    return report

