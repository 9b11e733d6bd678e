"""Hopf data layered on a ``StructureAlgebra``.

Elements of ``A ⊗ A`` are sparse dicts ``{(i, j): c}`` over the tensor
basis ``b_i ⊗ b_j``.  The coproduct, counit and antipode of the named
algebras are defined on generators and extended to the basis through words:
each basis element is written as a linear combination of generator words,
``Δ`` and ``ε`` are extended multiplicatively and ``S`` anti-multiplicatively.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Mapping, Sequence

from hopfcode.algebra import AlgebraElement, StructureAlgebra
from hopfcode.errors import ConstructionError, DegenerateForm
from hopfcode.forms import BilinearForm, gram_matrix
from hopfcode.linalg import Matrix, kernel
from hopfcode.scalars import Field

Tensor = dict
Word = tuple  # generator names, left to right


# -- tensors -------------------------------------------------------------------


def tensor_add(F: Field, a: Tensor, b: Tensor, scale=None) -> Tensor:
    out = dict(a)
    for key, c in b.items():
        if scale is not None:
            c = F.mul(scale, c)
        v = F.add(out.get(key, F.zero), c)
        if v == F.zero:
            out.pop(key, None)
        else:
            out[key] = v
    return out


def tensor_scale(F: Field, a: Tensor, c) -> Tensor:
    if c == F.zero:
        return {}
    return {k: F.mul(c, v) for k, v in a.items()}


def simple_tensor(u: Sequence, v: Sequence, F: Field) -> Tensor:
    z = F.zero
    nv = [(j, y) for j, y in enumerate(v) if y != z]
    return {(i, j): F.mul(x, y) for i, x in enumerate(u) if x != z for j, y in nv}


def tensor_mul(alg: StructureAlgebra, a: Tensor, b: Tensor) -> Tensor:
    """``(u ⊗ v)(u' ⊗ v') = u u' ⊗ v v'`` extended bilinearly."""
    F = alg.field
    table = alg.table
    add, mul = F.add, F.mul
    acc: dict = {}
    for (i, j), c1 in a.items():
        ti, tj = table[i], table[j]
        for (k, l), c2 in b.items():
            left, right = ti[k], tj[l]
            if not left or not right:
                continue
            c12 = mul(c1, c2)
            for p, cp in left:
                cpc = mul(c12, cp)
                for r, cr in right:
                    key = (p, r)
                    acc[key] = add(acc.get(key, F.zero), mul(cpc, cr))
    z = F.zero
    return {k: v for k, v in acc.items() if v != z}


def tensor_unit(alg: StructureAlgebra) -> Tensor:
    return simple_tensor(alg.unit, alg.unit, alg.field)


# -- word extension ------------------------------------------------------------


def extend_multiplicative(words: Sequence[Word], values: Mapping[str, object], mul: Callable, one):
    """Value of every word under the multiplicative extension, memoized by prefix."""
    memo: dict[Word, object] = {(): one}

    def value(w: Word):
        if w not in memo:
            memo[w] = mul(value(w[:-1]), values[w[-1]])
        return memo[w]

    return [value(tuple(w)) for w in words]


@dataclass(frozen=True)
class Presentation:
    """Generator data and the expansion of each basis element into words."""

    generators: Mapping[str, AlgebraElement]
    words: Sequence[Sequence[tuple]]  # per basis element, (coefficient, word) pairs

    def check(self, alg: StructureAlgebra):
        """Each basis element equals its word expansion in the algebra."""
        gens = {k: v.coords for k, v in self.generators.items()}
        for i, terms in enumerate(self.words):
            total = _combine(alg, terms, gens, alg.mul_coords, alg.unit)
            if total != alg.basis_coords(i):
                raise ConstructionError(f"word expansion of {alg.labels[i]} is wrong")


def _all_words(terms_per_basis) -> list[Word]:
    seen = {}
    for terms in terms_per_basis:
        for _, w in terms:
            seen.setdefault(tuple(w), None)
    return list(seen)


def _combine(alg, terms, values, mul, one, reverse=False):
    F = alg.field
    words = [tuple(reversed(w)) if reverse else tuple(w) for _, w in terms]
    vals = extend_multiplicative(words, values, mul, one)
    acc = [F.zero] * alg.dim
    for (c, _), v in zip(terms, vals):
        for k, x in enumerate(v):
            if x != F.zero:
                acc[k] = F.add(acc[k], F.mul(c, x))
    return tuple(acc)


def coproduct_from_words(alg: StructureAlgebra, pres: Presentation, gen_delta: Mapping[str, Tensor]) -> list[Tensor]:
    F = alg.field
    words = _all_words(pres.words)
    vals = dict(zip(words, extend_multiplicative(words, gen_delta, lambda a, b: tensor_mul(alg, a, b), tensor_unit(alg))))
    out = []
    for terms in pres.words:
        acc: Tensor = {}
        for c, w in terms:
            acc = tensor_add(F, acc, vals[tuple(w)], scale=c)
        out.append(acc)
    return out


def counit_from_words(alg: StructureAlgebra, pres: Presentation, gen_eps: Mapping[str, object]) -> tuple:
    F = alg.field
    out = []
    for terms in pres.words:
        vals = extend_multiplicative([tuple(w) for _, w in terms], gen_eps, F.mul, F.one)
        out.append(F.sum(F.mul(c, v) for (c, _), v in zip(terms, vals)))
    return tuple(out)


def antipode_from_words(alg: StructureAlgebra, pres: Presentation, gen_S: Mapping[str, AlgebraElement]) -> Matrix:
    """``S(g_1 ... g_k) = S(g_k) ... S(g_1)`` on every basis word."""
    vals = {k: v.coords for k, v in gen_S.items()}
    rows = tuple(_combine(alg, terms, vals, alg.mul_coords, alg.unit, reverse=True) for terms in pres.words)
    return Matrix(alg.field, alg.dim, alg.dim, rows)


# -- the structure ---------------------------------------------------------------


@dataclass
class HopfStructure:
    name: str
    algebra: StructureAlgebra
    coproduct: list  # per basis element, a Tensor
    counit: tuple
    antipode: Matrix  # row action: coords(S(v)) = coords(v) @ antipode
    integral: tuple  # values of the left integral on the basis
    distinguished: dict = dc_field(default_factory=dict)
    presentation: Presentation | None = None
    _antipode_inverse: Matrix | None = dc_field(default=None, repr=False)

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def delta(self, v) -> Tensor:
        F = self.field
        acc: Tensor = {}
        for i, c in enumerate(_coords(v)):
            if c != F.zero:
                acc = tensor_add(F, acc, self.coproduct[i], scale=c)
        return acc

    def eps(self, v):
        F = self.field
        return F.sum(F.mul(c, e) for c, e in zip(_coords(v), self.counit))

    def lam(self, v):
        F = self.field
        return F.sum(F.mul(c, e) for c, e in zip(_coords(v), self.integral))

    def S(self, v) -> AlgebraElement:
        return self.algebra.element(self.antipode.apply(_coords(v)))

    @property
    def antipode_inverse(self) -> Matrix:
        if self._antipode_inverse is None:
            self._antipode_inverse = self.antipode.inverse()
        return self._antipode_inverse

    def S_inv(self, v) -> AlgebraElement:
        return self.algebra.element(self.antipode_inverse.apply(_coords(v)))

    def element(self, name: str) -> AlgebraElement:
        return self.distinguished[name]


def _coords(v) -> tuple:
    return v.coords if isinstance(v, AlgebraElement) else tuple(v)


# -- axioms ----------------------------------------------------------------------


def _triple_left(h: HopfStructure, t: Tensor) -> dict:
    """``(Δ ⊗ id)`` applied to a tensor."""
    F = h.field
    acc: dict = {}
    for (i, j), c in t.items():
        for (a, b), d in h.coproduct[i].items():
            key = (a, b, j)
            acc[key] = F.add(acc.get(key, F.zero), F.mul(c, d))
    return {k: v for k, v in acc.items() if v != F.zero}


def _triple_right(h: HopfStructure, t: Tensor) -> dict:
    F = h.field
    acc: dict = {}
    for (i, j), c in t.items():
        for (a, b), d in h.coproduct[j].items():
            key = (i, a, b)
            acc[key] = F.add(acc.get(key, F.zero), F.mul(c, d))
    return {k: v for k, v in acc.items() if v != F.zero}


def check_coassociativity(h: HopfStructure) -> list[int]:
    return [i for i, t in enumerate(h.coproduct) if _triple_left(h, t) != _triple_right(h, t)]


def check_counit(h: HopfStructure) -> list[int]:
    F, alg = h.field, h.algebra
    bad = []
    for i, t in enumerate(h.coproduct):
        left = [F.zero] * alg.dim
        right = [F.zero] * alg.dim
        for (a, b), c in t.items():
            left[b] = F.add(left[b], F.mul(c, h.counit[a]))
            right[a] = F.add(right[a], F.mul(c, h.counit[b]))
        e = alg.basis_coords(i)
        if tuple(left) != e or tuple(right) != e:
            bad.append(i)
    return bad


def _mul_tensor(h: HopfStructure, t: Tensor, left_map=None, right_map=None) -> tuple:
    """``m ∘ (f ⊗ g)`` of a tensor, with ``f, g`` given as row-action matrices."""
    F, alg = h.field, h.algebra
    acc = [F.zero] * alg.dim
    for (a, b), c in t.items():
        u = left_map.rows[a] if left_map is not None else alg.basis_coords(a)
        v = right_map.rows[b] if right_map is not None else alg.basis_coords(b)
        p = alg.mul_coords(u, v)
        for k, x in enumerate(p):
            if x != F.zero:
                acc[k] = F.add(acc[k], F.mul(c, x))
    return tuple(acc)


def check_antipode(h: HopfStructure) -> list[int]:
    F, alg = h.field, h.algebra
    bad = []
    for i, t in enumerate(h.coproduct):
        target = tuple(F.mul(h.counit[i], u) for u in alg.unit)
        if _mul_tensor(h, t, left_map=h.antipode) != target or _mul_tensor(h, t, right_map=h.antipode) != target:
            bad.append(i)
    return bad


def check_left_integral(h: HopfStructure) -> list[int]:
    """Basis elements where ``sum h_1 λ(h_2) = λ(h) 1`` fails."""
    F, alg = h.field, h.algebra
    bad = []
    for i, t in enumerate(h.coproduct):
        acc = [F.zero] * alg.dim
        for (a, b), c in t.items():
            acc[a] = F.add(acc[a], F.mul(c, h.integral[b]))
        if tuple(acc) != tuple(F.mul(h.integral[i], u) for u in alg.unit):
            bad.append(i)
    return bad


def check_delta_multiplicative(h: HopfStructure) -> list[tuple[int, int]]:
    alg = h.algebra
    bad = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            prod = h.delta(alg.mul_coords(alg.basis_coords(i), alg.basis_coords(j)))
            if prod != tensor_mul(alg, h.coproduct[i], h.coproduct[j]):
                bad.append((i, j))
    return bad


def check_counit_multiplicative(h: HopfStructure) -> list[tuple[int, int]]:
    F, alg = h.field, h.algebra
    return [
        (i, j)
        for i in range(alg.dim)
        for j in range(alg.dim)
        if h.eps(alg.mul_coords(alg.basis_coords(i), alg.basis_coords(j))) != F.mul(h.counit[i], h.counit[j])
    ]


def check_antipode_antimultiplicative(h: HopfStructure) -> list[tuple[int, int]]:
    alg = h.algebra
    S = h.antipode.rows
    return [
        (i, j)
        for i in range(alg.dim)
        for j in range(alg.dim)
        if h.antipode.apply(alg.mul_coords(alg.basis_coords(i), alg.basis_coords(j))) != alg.mul_coords(S[j], S[i])
    ]


def check_balanced(h: HopfStructure, form: BilinearForm, triples) -> list:
    """``<x h', y> = <x, y S(h')>`` on the given ``(x, h', y)`` coordinate triples."""
    alg = h.algebra
    bad = []
    for x, k, y in triples:
        lhs = form.pair(alg.mul_coords(x, k), y)
        rhs = form.pair(x, alg.mul_coords(y, h.antipode.apply(k)))
        if lhs != rhs:
            bad.append((x, k, y))
    return bad


def check_sposto(h: HopfStructure, form: BilinearForm, pairs) -> list:
    """``sum <x_1, y> x_2 = sum y_1 <x, y_2>`` on the given coordinate pairs."""
    F, alg = h.field, h.algebra
    n = alg.dim
    basis = [alg.basis_coords(i) for i in range(n)]
    bad = []
    for x, y in pairs:
        lhs = [F.zero] * n
        for (a, b), c in h.delta(x).items():
            f = F.mul(c, form.pair(basis[a], y))
            if f != F.zero:
                lhs[b] = F.add(lhs[b], f)
        rhs = [F.zero] * n
        for (a, b), c in h.delta(y).items():
            f = F.mul(c, form.pair(x, basis[b]))
            if f != F.zero:
                rhs[a] = F.add(rhs[a], f)
        if lhs != rhs:
            bad.append((x, y))
    return bad


def verify_hopf_axioms(h: HopfStructure, form: BilinearForm | None = None, samples=None, rng=None, n_samples: int = 20) -> dict:
    """Failure lists per axiom; every list empty means the structure is a Hopf algebra with left integral λ."""
    from hopfcode.linalg import random_vector

    report = {
        "coassociativity": check_coassociativity(h),
        "counit": check_counit(h),
        "antipode": check_antipode(h),
        "left_integral": check_left_integral(h),
        "coproduct_multiplicative": check_delta_multiplicative(h),
        "counit_multiplicative": check_counit_multiplicative(h),
        "antipode_antimultiplicative": check_antipode_antimultiplicative(h),
    }
    if form is None:
        form = form_from_integral(h)
    if samples is None:
        import random

        rng = rng or random.Random(0)
        samples = [tuple(random_vector(h.field, h.dim, rng) for _ in range(3)) for _ in range(n_samples)]
    report["balanced"] = check_balanced(h, form, samples)
    report["sposto"] = check_sposto(h, form, [(x, y) for x, _, y in samples])
    return report


# -- forms and maps induced by the integral --------------------------------------


def form_from_integral(h: HopfStructure) -> BilinearForm:
    """``<v_i, v_j> = λ(v_j S(v_i))``."""
    F, alg = h.field, h.algebra
    S = h.antipode.rows
    rows = tuple(
        tuple(h.lam(alg.mul_coords(alg.basis_coords(j), S[i])) for j in range(alg.dim)) for i in range(alg.dim)
    )
    form = gram_matrix(Matrix(F, alg.dim, alg.dim, rows), F, algebra=alg)
    if not form.is_nondegenerate():
        raise DegenerateForm(f"the integral form of {h.name} is degenerate")
    return form


def frobenius_form(h: HopfStructure) -> BilinearForm:
    """``b(v_i, v_j) = λ(v_i v_j)``."""
    F, alg = h.field, h.algebra
    rows = tuple(
        tuple(h.lam(alg.mul_coords(alg.basis_coords(i), alg.basis_coords(j))) for j in range(alg.dim))
        for i in range(alg.dim)
    )
    return gram_matrix(Matrix(F, alg.dim, alg.dim, rows), F, algebra=alg)


def nakayama_eta(h: HopfStructure) -> Matrix:
    """Row-action matrix of ``η`` with ``λ(x y) = λ(y η(x))``; checked to be an algebra map."""
    b = frobenius_form(h)
    b.require_nondegenerate()
    eta = b.gram @ b.gram_inverse.T
    alg = h.algebra
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = eta.apply(alg.mul_coords(alg.basis_coords(i), alg.basis_coords(j)))
            if lhs != alg.mul_coords(eta.rows[i], eta.rows[j]):
                raise ConstructionError("Nakayama automorphism is not multiplicative")
    return eta


def phi(h: HopfStructure, v) -> tuple:
    """Values of ``y -> λ(y S(v))`` on the basis."""
    alg = h.algebra
    sv = h.antipode.apply(_coords(v))
    return tuple(h.lam(alg.mul_coords(alg.basis_coords(j), sv)) for j in range(alg.dim))


def right_integral(h: HopfStructure) -> AlgebraElement:
    """The right integral ``t`` (``t v = ε(v) t``) normalized by ``λ(t) = 1``."""
    F, alg = h.field, h.algebra
    n = alg.dim
    rows = []
    for j in range(n):
        R = alg.right_matrix(alg.basis_coords(j))
        # t (R_j - ε_j I) = 0, as equations on the column vector t
        cols = R.T.rows
        for r in range(n):
            row = list(cols[r])
            row[r] = F.sub(row[r], h.counit[j])
            if any(c != F.zero for c in row):
                rows.append(tuple(row))
    sol = kernel(Matrix(F, len(rows), n, tuple(rows)))
    if sol.dim != 1:
        raise ConstructionError(f"space of right integrals has dimension {sol.dim}")
    t = sol.basis[0]
    scale = F.inv(h.lam(t))
    return alg.element(tuple(F.mul(scale, c) for c in t))


def phi_inverse(h: HopfStructure, f: Sequence, t: AlgebraElement | None = None) -> AlgebraElement:
    """``sum t_1 f(t_2)`` for a functional given by its basis values."""
    F, alg = h.field, h.algebra
    if t is None:
        t = h.distinguished.get("t") or right_integral(h)
    acc = [F.zero] * alg.dim
    for (a, b), c in h.delta(t).items():
        acc[a] = F.add(acc[a], F.mul(c, f[b]))
    return alg.element(tuple(acc))


def functional_action(h: HopfStructure, f: Sequence, v) -> tuple:
    """``f ↼ v``: the functional ``y -> f(y S(v))``."""
    F, alg = h.field, h.algebra
    sv = h.antipode.apply(_coords(v))
    out = []
    for j in range(alg.dim):
        p = alg.mul_coords(alg.basis_coords(j), sv)
        out.append(F.sum(F.mul(c, fc) for c, fc in zip(p, f)))
    return tuple(out)
