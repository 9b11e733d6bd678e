"""The cyclic group algebra, the Taft algebra and the 24-dimensional CDMM algebra.

Taft and CDMM are realized on the idempotent basis ``e_s x^m`` of
``k(omega, N)``; the group algebra keeps its monomial basis ``x^i``.  Each
builder records the generator values, expands the basis into generator
words, and checks the closed-form antipode against the anti-multiplicative
extension before returning.
"""

from __future__ import annotations

from hopfcode.algebra import AlgebraElement, StructureAlgebra
from hopfcode.errors import BadCharacteristic, ConstructionError, NoSuchRoot
from hopfcode.forms import MonomialFormSpec, gram_matrix, omega_form_spec
from hopfcode.hopf.structure import (
    HopfStructure,
    Presentation,
    antipode_from_words,
    coproduct_from_words,
    counit_from_words,
    right_integral,
    simple_tensor,
    tensor_add,
)
from hopfcode.linalg import Matrix
from hopfcode.omega import OmegaAlgebra, OmegaSpec, build_omega_algebra
from hopfcode.scalars import Field, PrimeField, primitive_root_of_unity


def _check_root(F: Field, q, n: int, what: str):
    if q is None:
        return primitive_root_of_unity(F, n)
    q = F(q) if not isinstance(q, tuple) else q
    if F.pow(q, n) != F.one or any(F.pow(q, k) == F.one for k in range(1, n)):
        raise NoSuchRoot(f"{what} = {F.format(q)} is not a primitive {n}-th root of unity")
    return q


def _check_antipode(h: HopfStructure, closed: Matrix):
    if closed.rows != h.antipode.rows:
        bad = [h.algebra.labels[i] for i in range(h.dim) if closed.rows[i] != h.antipode.rows[i]]
        raise ConstructionError(f"closed-form antipode of {h.name} differs on {bad}")


def _product(*elts: AlgebraElement) -> AlgebraElement:
    out = elts[0]
    for e in elts[1:]:
        out = out * e
    return out


# -- cyclic group algebra --------------------------------------------------------


def _power_label(i: int) -> str:
    return "1" if i == 0 else ("x" if i == 1 else f"x^{i}")


def build_cyclic(n: int, field: Field) -> HopfStructure:
    """``k[X]/(X^n - 1)`` on the basis ``x^i`` with ``x`` group-like."""
    if n < 1:
        raise ConstructionError(f"cyclic length must be >= 1, got {n}")
    F = field
    table = [[(((i + j) % n, F.one),) for j in range(n)] for i in range(n)]
    unit = tuple(F.one if i == 0 else F.zero for i in range(n))
    alg = StructureAlgebra(F, [_power_label(i) for i in range(n)], table, unit)
    x = alg.basis(1 % n)
    pres = Presentation({"x": x}, [[(F.one, ("x",) * i)] for i in range(n)])
    pres.check(alg)
    x_inv = alg.basis((n - 1) % n)
    h = HopfStructure(
        name=f"cyclic(n={n})",
        algebra=alg,
        coproduct=coproduct_from_words(alg, pres, {"x": simple_tensor(x.coords, x.coords, F)}),
        counit=counit_from_words(alg, pres, {"x": F.one}),
        antipode=antipode_from_words(alg, pres, {"x": x_inv}),
        integral=tuple(F.one if i == 0 else F.zero for i in range(n)),
        distinguished={"x": x},
        presentation=pres,
    )
    closed = Matrix(F, n, n, tuple(alg.basis_coords((-i) % n) for i in range(n)))
    _check_antipode(h, closed)
    h.distinguished["t"] = alg.element(tuple(F.one for _ in range(n)))
    return h


def cyclic_idempotents(h: HopfStructure, q=None) -> list[AlgebraElement]:
    """``e_t = (1/n) sum_i q^{t i} x^i`` for a primitive n-th root ``q``."""
    F = h.field
    n = h.dim
    if F.characteristic and n % F.characteristic == 0:
        raise NoSuchRoot(f"characteristic {F.characteristic} divides {n}")
    q = _check_root(F, q, n, "q")
    inv_n = F.inv(F(n))
    return [
        h.algebra.element(tuple(F.mul(inv_n, F.pow(q, t * i)) for i in range(n))) for t in range(n)
    ]


def cyclic_idempotent_form(h: HopfStructure, q=None):
    """``(form, omega algebra)`` of the integral form transported to the idempotent basis.

    The transported product is compared with ``k(Id, 1)`` on ``n`` idempotents.
    """
    from hopfcode.hopf.structure import form_from_integral

    F = h.field
    n = h.dim
    idem = cyclic_idempotents(h, q)
    target = build_omega_algebra(OmegaSpec(n, tuple(range(n)), 1), F)
    for s in range(n):
        for t in range(n):
            expected = idem[t] if s == t else h.algebra.zero
            if idem[s] * idem[t] != expected:
                raise ConstructionError("idempotents are not orthogonal")
    if sum((e for e in idem[1:]), idem[0]) != h.algebra.one:
        raise ConstructionError("idempotents do not sum to 1")
    P = Matrix(F, n, n, tuple(e.coords for e in idem))
    G = form_from_integral(h).gram
    return gram_matrix(P @ G @ P.T, F, algebra=target), target


def cyclic_certificate(n: int, F: Field) -> MonomialFormSpec:
    """``<e_s, e_t> = (1/n) [s + t = 0 mod n]``."""
    inv_n = F.inv(F(n))
    return MonomialFormSpec(tuple((-t) % n for t in range(n)), tuple(inv_n for _ in range(n)))


# -- Taft algebra ------------------------------------------------------------------


def build_taft(capN: int, field: Field, q=None) -> HopfStructure:
    """Taft algebra ``<g, x | g^N = 1, x^N = 0, g x = q x g>`` on the basis ``e_s x^m``."""
    F = field
    N = capN
    if N < 1:
        raise ConstructionError(f"N must be >= 1, got {N}")
    q = _check_root(F, q, N, "q")
    alg = build_omega_algebra(OmegaSpec(N, tuple((s + 1) % N for s in range(N)), N), F)
    inv_N = F.inv(F(N))

    g = alg.element(_diag(alg, lambda s: F.pow(q, -s)))
    g_inv = alg.element(_diag(alg, lambda s: F.pow(q, s)))
    x = alg.x
    words = []
    for s in range(N):
        for m in range(N):
            words.append([(F.mul(inv_N, F.pow(q, s * i)), ("g",) * i + ("x",) * m) for i in range(N)])
    pres = Presentation({"g": g, "x": x}, words)
    pres.check(alg)

    gen_delta = {
        "g": simple_tensor(g.coords, g.coords, F),
        "x": tensor_add(F, simple_tensor(g.coords, x.coords, F), simple_tensor(x.coords, alg.unit, F)),
    }
    S_x = -(g_inv * x)
    h = HopfStructure(
        name=f"taft(N={N})",
        algebra=alg,
        coproduct=coproduct_from_words(alg, pres, gen_delta),
        counit=counit_from_words(alg, pres, {"g": F.one, "x": F.zero}),
        antipode=antipode_from_words(alg, pres, {"g": g_inv, "x": S_x}),
        integral=tuple(
            F.mul(inv_N, F.pow(q, s + m)) if m == N - 1 else F.zero for s in range(N) for m in range(N)
        ),
        distinguished={"g": g, "x": x, "q": q},
        presentation=pres,
    )
    # S(e_s x^m) = (-1)^m q^{-m(m+1)/2} x^m g^{-m} e_{-s}
    closed = []
    for s in range(N):
        for m in range(N):
            c = F.mul(F(-1 if m % 2 else 1), F.pow(q, -(m * (m + 1) // 2)))
            closed.append(_product(x**m, g_inv**m, alg.e((-s) % N)).scale(c).coords)
    _check_antipode(h, Matrix(F, alg.dim, alg.dim, tuple(closed)))
    h.distinguished["t"] = right_integral(h)
    return h


def _diag(alg: OmegaAlgebra, f) -> tuple:
    F = alg.field
    coords = [F.zero] * alg.dim
    for s in range(alg.s_size):
        coords[alg.index(s, 0)] = f(s)
    return tuple(coords)


def taft_closed_form_gram(h: HopfStructure) -> Matrix:
    """``<e_t x^n, e_s x^m> = (1/N)(-1)^n q^{-(n+2t)(n+1)/2} [s + t = 1 mod N] [m + n = N - 1]``."""
    alg: OmegaAlgebra = h.algebra
    F = h.field
    q = h.distinguished["q"]
    N = alg.capN
    inv_N = F.inv(F(N))
    rows = []
    for t in range(N):
        for n in range(N):
            row = []
            for s in range(N):
                for m in range(N):
                    if (s + t) % N == 1 % N and m + n == N - 1:
                        c = F.mul(inv_N, F.pow(q, -((n + 2 * t) * (n + 1) // 2)))
                        row.append(F.neg(c) if n % 2 else c)
                    else:
                        row.append(F.zero)
            rows.append(tuple(row))
    return Matrix(F, alg.dim, alg.dim, tuple(rows))


def taft_certificate(h: HopfStructure) -> MonomialFormSpec:
    """``mu(t) = 1 - t``, ``nu(n) = N - 1 - n``, ``d = (1/N)(-1)^m q^{-(m+2s)(m+1)/2}``."""
    alg: OmegaAlgebra = h.algebra
    F = h.field
    q = h.distinguished["q"]
    N = alg.capN
    inv_N = F.inv(F(N))

    def d(s, m):
        c = F.mul(inv_N, F.pow(q, -((m + 2 * s) * (m + 1) // 2)))
        return F.neg(c) if m % 2 else c

    return omega_form_spec(alg, [(1 - s) % N for s in range(N)], [N - 1 - m for m in range(N)], d)


# -- CDMM algebra ------------------------------------------------------------------


def cdmm_index(i: int, j: int) -> int:
    """Position of the idempotent ``e_{i,j}`` in the index set of size 12."""
    return i * 6 + j % 6


def build_cdmm(field: Field, zeta=None) -> HopfStructure:
    """The 24-dimensional algebra on ``a, b, x`` with ``a^2 = 1 = b^6``, ``x^2 = 0``, ``b x = -x b``."""
    F = field
    if F.characteristic in (2, 3):
        raise BadCharacteristic(f"characteristic {F.characteristic} divides 12")
    zeta = _check_root(F, zeta, 6, "zeta")
    omega = tuple(cdmm_index(i, j + 3) for i in range(2) for j in range(6))
    alg = build_omega_algebra(OmegaSpec(12, omega, 2), F, s_labels=[f"({i},{j})" for i in range(2) for j in range(6)])
    inv12 = F.inv(F(12))

    def diag(f):
        coords = [F.zero] * alg.dim
        for i in range(2):
            for j in range(6):
                coords[alg.index(cdmm_index(i, j), 0)] = f(i, j)
        return alg.element(tuple(coords))

    a = diag(lambda i, j: F(-1 if i else 1))
    b = diag(lambda i, j: F.pow(zeta, -j))
    b_inv = diag(lambda i, j: F.pow(zeta, j))
    e0 = diag(lambda i, j: F.one if i == 0 else F.zero)
    e1 = diag(lambda i, j: F.one if i == 1 else F.zero)
    g = b**3
    x = alg.x

    words = []
    for i in range(2):
        for j in range(6):
            for m in range(2):
                terms = []
                for eps in range(2):
                    for k in range(6):
                        c = F.mul(inv12, F.mul(F(-1 if (i * eps) % 2 else 1), F.pow(zeta, j * k)))
                        terms.append((c, ("a",) * eps + ("b",) * k + ("x",) * m))
                words.append(terms)
    pres = Presentation({"a": a, "b": b, "x": x}, words)
    pres.check(alg)

    e0b, e1b = e0 * b, e1 * b
    gen_delta = {
        "a": simple_tensor(a.coords, a.coords, F),
        "b": tensor_add(F, simple_tensor(b.coords, e0b.coords, F), simple_tensor(b_inv.coords, e1b.coords, F)),
        "x": tensor_add(F, simple_tensor(g.coords, x.coords, F), simple_tensor(x.coords, alg.unit, F)),
    }
    gen_S = {"a": a, "b": e0 * b_inv + e1 * b, "x": -(g * x)}

    def lam(i, j, m):
        # λ(e_{i,j} x) = λ(x e_{i,j+3}) = (-1)^{j+3} / 12
        if m != 1:
            return F.zero
        return F.mul(inv12, F(-1 if (j + 3) % 2 else 1))

    h = HopfStructure(
        name="cdmm",
        algebra=alg,
        coproduct=coproduct_from_words(alg, pres, gen_delta),
        counit=counit_from_words(alg, pres, {"a": F.one, "b": F.one, "x": F.zero}),
        antipode=antipode_from_words(alg, pres, gen_S),
        integral=tuple(lam(i, j, m) for i in range(2) for j in range(6) for m in range(2)),
        distinguished={"a": a, "b": b, "g": g, "x": x, "zeta": zeta, "e0": e0, "e1": e1},
        presentation=pres,
    )
    # S(e_{i,j} x^m) = x^m g^m e_{i,(-1)^{i+1} j}
    closed = []
    for i in range(2):
        for j in range(6):
            jj = j if i == 1 else -j
            for m in range(2):
                closed.append(_product(x**m, g**m, alg.e(cdmm_index(i, jj))).coords)
    _check_antipode(h, Matrix(F, alg.dim, alg.dim, tuple(closed)))
    h.distinguished["t"] = right_integral(h)
    return h


def cdmm_mu(i: int, j: int) -> tuple[int, int]:
    sign = 1 if i % 2 else -1  # (-1)^{i+1}
    return i, (sign * j - 3) % 6


def cdmm_certificate(h: HopfStructure) -> MonomialFormSpec:
    """``mu(i,j) = (i, (-1)^{i+1} j - 3)``, ``nu(m) = 1 - m``, ``d = (-1)^{j(m+1)} / 12``."""
    alg: OmegaAlgebra = h.algebra
    F = h.field
    inv12 = F.inv(F(12))
    mu = [cdmm_index(*cdmm_mu(i, j)) for i in range(2) for j in range(6)]

    def d(s, m):
        j = s % 6
        return F.neg(inv12) if (j * (m + 1)) % 2 else inv12

    return omega_form_spec(alg, mu, [1, 0], d)


def cdmm_closed_form_gram(h: HopfStructure) -> Matrix:
    return gram_matrix(cdmm_certificate(h), h.field).gram


def lambda_on_pbw_taft(h: HopfStructure, m: int, a: int):
    """``λ(x^m g^a)`` evaluated through the algebra."""
    g, x = h.distinguished["g"], h.distinguished["x"]
    return h.lam(((x**m) * (g**a)).coords)


def lambda_on_pbw_cdmm(h: HopfStructure, m: int, i: int, j: int):
    """``λ(x^m a^i b^j)`` evaluated through the algebra."""
    a, b, x = h.distinguished["a"], h.distinguished["b"], h.distinguished["x"]
    return h.lam(((x**m) * (a**i) * (b**j)).coords)


def is_prime_field(F: Field) -> bool:
    return isinstance(F, PrimeField)
