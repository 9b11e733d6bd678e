"""Bilinear forms on based spaces and the structures they induce.

A form is held by its Gram matrix ``G`` with ``G[i][j] = <v_i, v_j>``; for
row vectors ``u, w`` the pairing is ``u G w^T``.  Orthogonals are always
computed by solving against ``G``.  Monomial forms (one nonzero entry per
row, arranged along a permutation) additionally carry their certificate
``(sigma, d)`` with ``<v_i, v_j> = d_i [sigma(i) == j]``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from hopfcode.algebra import AlgebraElement, StructureAlgebra
from hopfcode.errors import (
    AmbientMismatch,
    DegenerateForm,
    HypothesisViolated,
    NotMonomial,
    ZeroCoefficient,
)
from hopfcode.linalg import Matrix, Subspace, full_space, kernel, span, vec_mat, zero_subspace
from hopfcode.omega import OmegaAlgebra, check_permutation, ideal_N, sum_of_ideals
from hopfcode.scalars import Field


@dataclass(frozen=True)
class MonomialFormSpec:
    sigma: tuple
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", check_permutation(self.sigma, len(self.sigma), "sigma"))
        object.__setattr__(self, "d", tuple(self.d))
        if len(self.d) != len(self.sigma):
            raise AmbientMismatch("sigma and d have different lengths")

    @property
    def dim(self) -> int:
        return len(self.sigma)


class BilinearForm:
    """A bilinear form given by its Gram matrix, optionally tied to an algebra."""

    def __init__(self, gram: Matrix, certificate: MonomialFormSpec | None = None, algebra: StructureAlgebra | None = None):
        if gram.nrows != gram.ncols:
            raise AmbientMismatch("Gram matrix must be square")
        if algebra is not None and algebra.dim != gram.nrows:
            raise AmbientMismatch("Gram size differs from the algebra dimension")
        self.gram = gram
        self.field = gram.field
        self.dim = gram.nrows
        self.certificate = certificate
        self.algebra = algebra
        self._inv: Matrix | None = None
        self._nondeg: bool | None = None
        if certificate is not None and _monomial_gram(self.field, certificate).rows != gram.rows:
            raise NotMonomial("certificate does not reproduce the Gram matrix")

    def __repr__(self) -> str:
        return f"BilinearForm(dim={self.dim}, monomial={self.certificate is not None})"

    def pair(self, u: Sequence, w: Sequence):
        u, w = _coords(u), _coords(w)
        gw = vec_mat(self.field, u, self.gram.rows, self.dim)
        F = self.field
        return F.sum(F.mul(a, b) for a, b in zip(gw, w))

    def is_nondegenerate(self) -> bool:
        if self._nondeg is None:
            self._nondeg = self.gram.rank() == self.dim
        return self._nondeg

    def require_nondegenerate(self):
        if not self.is_nondegenerate():
            raise DegenerateForm("the form has a nonzero radical")

    @property
    def gram_inverse(self) -> Matrix:
        if self._inv is None:
            self.require_nondegenerate()
            self._inv = self.gram.inverse()
        return self._inv

    def is_symmetric(self) -> bool:
        return self.gram.rows == self.gram.T.rows


def _coords(v) -> tuple:
    return v.coords if isinstance(v, AlgebraElement) else tuple(v)


def _monomial_gram(F: Field, spec: MonomialFormSpec) -> Matrix:
    n = spec.dim
    rows = []
    for i in range(n):
        row = [F.zero] * n
        row[spec.sigma[i]] = spec.d[i]
        rows.append(tuple(row))
    return Matrix(F, n, n, tuple(rows))


def gram_matrix(
    spec: MonomialFormSpec | Callable[[int, int], object] | Matrix,
    field: Field,
    dim: int | None = None,
    algebra: StructureAlgebra | None = None,
) -> BilinearForm:
    """Build a form from a monomial spec, an explicit pairing ``(i, j) -> scalar`` or a matrix.

    Explicit pairings get a certificate whenever the Gram matrix happens to be monomial.
    """
    if isinstance(spec, MonomialFormSpec):
        if any(c == field.zero for c in spec.d):
            raise ZeroCoefficient("monomial forms need every d_i nonzero")
        return BilinearForm(_monomial_gram(field, spec), spec, algebra)
    if isinstance(spec, Matrix):
        gram = spec
    else:
        if dim is None:
            raise ValueError("dim is required for an explicit pairing")
        gram = Matrix(field, dim, dim, tuple(tuple(spec(i, j) for j in range(dim)) for i in range(dim)))
    return BilinearForm(gram, detect_monomial(gram), algebra)


def detect_monomial(gram: Matrix) -> MonomialFormSpec | None:
    z = gram.field.zero
    sigma, d = [], []
    for row in gram.rows:
        nz = [j for j, c in enumerate(row) if c != z]
        if len(nz) != 1:
            return None
        sigma.append(nz[0])
        d.append(row[nz[0]])
    if len(set(sigma)) != len(sigma):
        return None
    return MonomialFormSpec(tuple(sigma), tuple(d))


def omega_form_spec(alg: OmegaAlgebra, mu: Sequence[int], nu: Sequence[int], d: Callable[[int, int], object]) -> MonomialFormSpec:
    """``<e_s x^m, e_t x^n> = d(s, m) [mu(s) == t] [nu(m) == n]`` on ``k(omega, N)``."""
    mu = check_permutation(mu, alg.s_size, "mu")
    nu = check_permutation(nu, alg.capN, "nu")
    sigma, coeffs = [], []
    for s in range(alg.s_size):
        for m in range(alg.capN):
            sigma.append(alg.index(mu[s], nu[m]))
            coeffs.append(d(s, m))
    return MonomialFormSpec(tuple(sigma), tuple(coeffs))


# -- orthogonals -------------------------------------------------------------


def _check_ambient(form: BilinearForm, w: Subspace):
    if w.ambient != form.dim or w.field != form.field:
        raise AmbientMismatch("subspace does not live in the form's space")


def orthogonal_left(form: BilinearForm, w: Subspace) -> Subspace:
    """``{x : <x, y> = 0 for all y in W}``."""
    _check_ambient(form, w)
    form.require_nondegenerate()
    if not w.basis:
        return full_space(form.field, form.dim)
    # <x, y> = x . (y G^T)
    rows = tuple(vec_mat(form.field, y, form.gram.T.rows, form.dim) for y in w.basis)
    return kernel(Matrix(form.field, len(rows), form.dim, rows))


def orthogonal_right(form: BilinearForm, w: Subspace) -> Subspace:
    """``{y : <x, y> = 0 for all x in W}``."""
    _check_ambient(form, w)
    form.require_nondegenerate()
    if not w.basis:
        return full_space(form.field, form.dim)
    rows = tuple(vec_mat(form.field, x, form.gram.rows, form.dim) for x in w.basis)
    return kernel(Matrix(form.field, len(rows), form.dim, rows))


# -- Nakayama map ------------------------------------------------------------


@dataclass(frozen=True)
class NakayamaMap:
    """``gamma(v_i) = c_i v_{tau(i)}``; ``matrix`` is the row-action matrix."""

    tau: tuple | None
    c: tuple | None
    matrix: Matrix = dc_field(repr=False)

    def apply(self, v) -> tuple:
        return self.matrix.apply(_coords(v))

    def image(self, w: Subspace) -> Subspace:
        return w.image(self.matrix)

    @property
    def is_monomial(self) -> bool:
        return self.tau is not None


def nakayama_matrix(form: BilinearForm) -> Matrix:
    """Row-action matrix of the unique ``gamma`` with ``<x, y> = <y, gamma(x)>``: ``G G^{-T}``."""
    form.require_nondegenerate()
    return form.gram @ form.gram_inverse.T


def nakayama(form: BilinearForm, general: bool = False) -> NakayamaMap:
    """Nakayama map of a monomial form, ``tau = sigma^2`` and ``c_i = d_i / d_{sigma(i)}``.

    With ``general=True`` non-monomial forms are accepted and only the matrix is filled in.
    """
    F = form.field
    cert = form.certificate
    if cert is None:
        if not general:
            raise NotMonomial("the form has no monomial certificate")
        return NakayamaMap(None, None, nakayama_matrix(form))
    n = cert.dim
    tau = tuple(cert.sigma[cert.sigma[i]] for i in range(n))
    c = tuple(F.div(cert.d[i], cert.d[cert.sigma[i]]) for i in range(n))
    rows = []
    for i in range(n):
        row = [F.zero] * n
        row[tau[i]] = c[i]
        rows.append(tuple(row))
    gm = NakayamaMap(tau, c, Matrix(F, n, n, tuple(rows)))
    if gm.matrix.rows != nakayama_matrix(form).rows:
        raise NotMonomial("monomial Nakayama map disagrees with the Gram solution")
    return gm


def check_gamma_identity(form: BilinearForm, gamma: NakayamaMap) -> list[tuple[int, int]]:
    """Basis pairs where ``<v_i, v_j> = <v_j, gamma(v_i)>`` fails."""
    bad = []
    n = form.dim
    F = form.field
    for i in range(n):
        gi = gamma.matrix.rows[i]
        for j in range(n):
            ej = tuple(F.one if k == j else F.zero for k in range(n))
            if form.gram.rows[i][j] != form.pair(ej, gi):
                bad.append((i, j))
    return bad


# -- orthogonals predicted for the ideals N_{s,m} ----------------------------


def predicted_orthogonal_Nst(alg: OmegaAlgebra, mu: Sequence[int], nu: Sequence[int], s: int, m: int):
    """Right orthogonal of ``N_{s,m}`` for a monomial form with ``nu`` the reversal.

    Returns ``(subspace, (s2, m))`` where ``(s2, m)`` names the ideal whose left
    orthogonal is the same subspace, ``s2 = mu(mu(s))``.
    """
    N = alg.capN
    nu = tuple(nu)
    if nu != tuple(N - 1 - k for k in range(N)):
        raise HypothesisViolated(f"nu = {list(nu)} is not the reversal m -> N-1-m")
    mu = check_permutation(mu, alg.s_size, "mu")
    ideal_N(alg, s, m)  # range check
    pairs = [(t, 0) for t in range(alg.s_size) if t != mu[s]]
    if m > 0:
        pairs.append((mu[s], N - m))
    return sum_of_ideals(alg, pairs).subspace, (mu[mu[s]], m)


# -- induced actions -----------------------------------------------------------


def _alg(form: BilinearForm) -> StructureAlgebra:
    if form.algebra is None:
        raise AmbientMismatch("the form is not attached to an algebra")
    return form.algebra


def action_matrix_tl(form: BilinearForm, c) -> Matrix:
    """``x -> x ◁ c`` with ``<x ◁ c, y> = <x, c y>``."""
    alg = _alg(form)
    G = form.gram
    return G @ alg.left_matrix(_coords(c)).T @ form.gram_inverse


def action_matrix_bl(form: BilinearForm, c) -> Matrix:
    """``y -> y ◀ c`` with ``<x, y ◀ c> = <c x, y>``."""
    alg = _alg(form)
    G = form.gram
    return G.T @ alg.left_matrix(_coords(c)).T @ form.gram_inverse.T


def action_matrix_tr(form: BilinearForm, c) -> Matrix:
    """``x -> c ▷ x`` with ``<c ▷ x, y> = <x, y c>``."""
    alg = _alg(form)
    G = form.gram
    return G @ alg.right_matrix(_coords(c)).T @ form.gram_inverse


def action_matrix_br(form: BilinearForm, c) -> Matrix:
    """``y -> c ▶ y`` with ``<x, c ▶ y> = <x c, y>``."""
    alg = _alg(form)
    G = form.gram
    return G.T @ alg.right_matrix(_coords(c)).T @ form.gram_inverse.T


def _act(form, mat_fn, x, c) -> AlgebraElement:
    alg = _alg(form)
    return alg.element(mat_fn(form, c).apply(_coords(x)))


def action_tl(form: BilinearForm, x, c) -> AlgebraElement:
    return _act(form, action_matrix_tl, x, c)


def action_bl(form: BilinearForm, x, c) -> AlgebraElement:
    return _act(form, action_matrix_bl, x, c)


def action_tr(form: BilinearForm, c, x) -> AlgebraElement:
    return _act(form, action_matrix_tr, x, c)


def action_br(form: BilinearForm, c, x) -> AlgebraElement:
    return _act(form, action_matrix_br, x, c)


# -- export and searches -------------------------------------------------------


def gram_to_json(form: BilinearForm) -> list:
    F = form.field
    return [[F.to_json(c) for c in row] for row in form.gram.rows]


def gram_to_csv(form: BilinearForm, labels: Sequence[str] | None = None) -> str:
    F = form.field
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if labels is not None:
        w.writerow([""] + list(labels))
    for i, row in enumerate(form.gram.rows):
        cells = [F.format(c) for c in row]
        w.writerow(([labels[i]] if labels is not None else []) + cells)
    return buf.getvalue()


def orthogonal_report(ideal: dict, predicted: Subspace, computed: Subspace) -> dict:
    return {
        "ideal": ideal,
        "predicted_basis": predicted.to_json(),
        "computed_basis": computed.to_json(),
        "equal": predicted == computed,
    }


def find_asymmetry_witness(form: BilinearForm, max_support: int = 2):
    """Vectors ``(x, y)`` with ``<x, y> = 0`` but ``<y, x> != 0``, or None.

    ``x`` runs over basis vectors and then sums of two basis vectors; for each
    ``x`` the functional ``y -> <y, x>`` is tested on the basis of ``x^{⊥R}``.
    """
    F = form.field
    n = form.dim
    unit = [tuple(F.one if k == i else F.zero for k in range(n)) for i in range(n)]
    candidates = list(unit)
    if max_support >= 2:
        candidates += [tuple(F.add(a, b) for a, b in zip(unit[i], unit[k])) for i in range(n) for k in range(i + 1, n)]
    for x in candidates:
        perp = orthogonal_right(form, span(F, [x], n))
        for y in perp.basis:
            if form.pair(y, x) != F.zero:
                return x, y
    return None


def transport(w: Subspace, mat: Matrix) -> Subspace:
    """Image of a subspace under a row-action operator, e.g. ``W ◁ c``."""
    if w.is_zero():
        return zero_subspace(w.field, mat.ncols)
    return w.image(mat)

