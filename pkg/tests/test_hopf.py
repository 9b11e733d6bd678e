from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfcode.errors import BadCharacteristic, ConstructionError, NoSuchRoot
from hopfcode.forms import nakayama
from hopfcode.hopf.named import (
    build_cdmm,
    build_cyclic,
    build_taft,
    cdmm_certificate,
    cdmm_closed_form_gram,
    cdmm_index,
    cyclic_certificate,
    cyclic_idempotent_form,
    cyclic_idempotents,
    lambda_on_pbw_cdmm,
    lambda_on_pbw_taft,
    taft_certificate,
    taft_closed_form_gram,
)
from hopfcode.hopf.structure import (
    check_antipode,
    check_coassociativity,
    check_counit,
    check_left_integral,
    form_from_integral,
    functional_action,
    nakayama_eta,
    phi,
    phi_inverse,
    right_integral,
    verify_hopf_axioms,
)
from hopfcode.linalg import Matrix, random_vector
from hopfcode.scalars import CyclotomicField, PrimeField

GF2, GF3, GF7, GF13 = PrimeField(2), PrimeField(3), PrimeField(7), PrimeField(13)


@pytest.fixture(scope="module")
def cdmm():
    return build_cdmm(GF7)


@pytest.fixture(scope="module")
def taft3():
    return build_taft(3, GF7)


# -- axioms -----------------------------------------------------------------------


@pytest.mark.parametrize("n,p", [(1, 2), (2, 3), (3, 2), (4, 3), (5, 11), (7, 2), (8, 3)])
def test_cyclic_axioms(n, p):
    report = verify_hopf_axioms(build_cyclic(n, PrimeField(p)))
    assert all(v == [] for v in report.values()), report


@pytest.mark.parametrize("N,p", [(1, 7), (2, 7), (3, 7), (4, 13)])
def test_taft_axioms(N, p):
    report = verify_hopf_axioms(build_taft(N, PrimeField(p)))
    assert all(v == [] for v in report.values()), report


def test_cdmm_axioms(cdmm):
    report = verify_hopf_axioms(cdmm)
    assert all(v == [] for v in report.values()), report


def test_cyclotomic_taft_axioms():
    # Taft N=3 over Q(zeta_3)
    h = build_taft(3, CyclotomicField(3))
    for check in (check_coassociativity, check_counit, check_antipode, check_left_integral):
        assert check(h) == []


def test_group_like_counit():
    h = build_taft(2, GF7)
    g = h.distinguished["g"]
    assert h.eps(g) == 1
    assert h.delta(g) == {(i, j): GF7.mul(a, b) for i, a in enumerate(g.coords) for j, b in enumerate(g.coords) if a and b}


# -- construction errors -----------------------------------------------------------


def test_construction_errors():
    with pytest.raises(BadCharacteristic):
        build_cdmm(GF3)
    with pytest.raises(NoSuchRoot):
        build_taft(3, PrimeField(5))
    with pytest.raises(NoSuchRoot):
        build_taft(3, GF7, q=1)  # not primitive
    with pytest.raises(NoSuchRoot):
        build_cdmm(GF7, zeta=2)  # order 3
    with pytest.raises(ConstructionError):
        build_cyclic(0, GF2)


# -- cyclic group algebra ------------------------------------------------------------


def test_cyclic_structure():
    h = build_cyclic(5, GF3)
    form = form_from_integral(h)
    assert form.gram.rows == Matrix.identity(GF3, 5).rows
    assert h.distinguished["t"].coords == (1,) * 5
    assert phi_inverse(h, h.counit) == h.distinguished["t"]
    assert phi(h, h.distinguished["t"]) == h.counit
    assert h.lam(h.distinguished["t"]) == 1
    assert nakayama(form).matrix.rows == Matrix.identity(GF3, 5).rows
    assert nakayama_eta(h).rows == Matrix.identity(GF3, 5).rows
    v = (2, 0, 1, 1, 0)
    assert phi(h, v) == v


def test_cyclic_shift_action():
    h = build_cyclic(4, GF3)
    x = h.distinguished["x"]
    assert functional_action(h, (1, 2, 0, 1), x) == (1, 1, 2, 0)


def test_cyclic_idempotents_n2():
    F = GF7
    h = build_cyclic(2, F)
    e0, e1 = cyclic_idempotents(h)
    half = F.inv(2)
    assert e0.coords == (half, half) and e1.coords == (half, F.neg(half))
    assert e0 * e0 == e0 and e1 * e1 == e1 and (e0 * e1).is_zero()
    assert e0 + e1 == h.algebra.one


def test_cyclic_idempotent_form():
    F = GF13
    h = build_cyclic(4, F)
    form, omega_alg = cyclic_idempotent_form(h)
    assert form.certificate == cyclic_certificate(4, F)
    assert omega_alg.dim == 4
    with pytest.raises(NoSuchRoot):
        cyclic_idempotent_form(build_cyclic(4, GF3))


# -- Taft ---------------------------------------------------------------------------


def test_taft_integral_values(taft3):
    h, F = taft3, GF7
    alg, q, N = taft3.algebra, 2, 3
    for s in range(N):
        for m in range(N):
            expected = F.mul(F.inv(N), F.pow(q, s)) if m == N - 1 else 0
            assert h.lam(((alg.x**m) * alg.e(s)).coords) == expected
    for m in range(N):
        for a in range(N):
            assert lambda_on_pbw_taft(h, m, a) == (1 if (m, a) == (N - 1, 1) else 0)


def test_taft_identities(taft3):
    alg, F, q = taft3.algebra, GF7, 2
    S2 = taft3.antipode @ taft3.antipode
    for m in range(3):
        xm = alg.x**m
        assert S2.apply(xm.coords) == xm.scale(F.pow(q, -m)).coords
        for t in range(3):
            assert alg.e(t) * xm == xm * alg.e((t + m) % 3)


def test_taft_forms(taft3):
    form = form_from_integral(taft3)
    assert form.gram.rows == taft_closed_form_gram(taft3).rows
    assert form.certificate == taft_certificate(taft3)
    g = taft3.distinguished["g"]
    gamma = nakayama(form)
    for i in range(taft3.dim):
        b = taft3.algebra.basis(i)
        assert gamma.apply(b) == (b * g).coords


def test_taft_balanced_instance():
    h = build_taft(2, GF7)
    form = form_from_integral(h)
    g = h.distinguished["g"]
    rng = random.Random(3)
    for _ in range(20):
        x = h.algebra.element(random_vector(GF7, 4, rng))
        y = h.algebra.element(random_vector(GF7, 4, rng))
        assert form.pair(x * g, y) == form.pair(x, y * h.S(g))


def test_taft_eta_on_R(taft3):
    eta = nakayama_eta(taft3)
    S2 = taft3.antipode @ taft3.antipode
    alg = taft3.algebra
    assert eta.apply(alg.unit) == alg.unit
    for m in range(3):
        assert eta.apply(alg.x_power(m).coords) == S2.apply(alg.x_power(m).coords)


def pbw_taft_gram(N, F, q):
    """Integral form of the Taft algebra computed in the PBW basis g^a x^m.

    Uses x g = q^{-1} g x, S(g) = g^{-1}, S(x) = -g^{-1} x and
    λ(x^{N-1} g) = 1, λ(x^m g^a) = 0 otherwise.
    """

    def mul(u, v):
        out = {}
        for (a, m), c in u.items():
            for (b, n), d in v.items():
                if m + n >= N:
                    continue
                key = ((a + b) % N, m + n)
                coef = F.mul(F.mul(c, d), F.pow(q, -m * b))
                out[key] = F.add(out.get(key, F.zero), coef)
        return {k: c for k, c in out.items() if c != F.zero}

    def power(u, k):
        out = {(0, 0): F.one}
        for _ in range(k):
            out = mul(out, u)
        return out

    S_x = {((-1) % N, 1): F.neg(F.one)}

    def S(a, m):
        # S(g^a x^m) = S(x)^m S(g)^a
        return mul(power(S_x, m), {((-a) % N, 0): F.one})

    def lam(u):
        # g^a x^m = q^{ma} x^m g^a
        return F.sum(F.mul(c, F.pow(q, m * a)) for (a, m), c in u.items() if m == N - 1 and a == 1 % N)

    basis = [(a, m) for a in range(N) for m in range(N)]
    gram = [[lam(mul({v: F.one}, S(*u))) for v in basis] for u in basis]
    return basis, gram


@pytest.mark.parametrize("N,p", [(2, 7), (3, 7), (4, 13)])
def test_taft_gram_against_pbw_model(N, p):
    F = PrimeField(p)
    h = build_taft(N, F)
    q = h.distinguished["q"]
    alg = h.algebra
    form = form_from_integral(h)
    basis, gram = pbw_taft_gram(N, F, q)

    def coords(a, m):
        # g^a x^m = sum_t q^{-ta} e_t x^m
        c = [F.zero] * alg.dim
        for t in range(N):
            c[alg.index(t, m)] = F.pow(q, -t * a)
        return tuple(c)

    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            assert form.pair(coords(*u), coords(*v)) == gram[i][j]


# -- CDMM ---------------------------------------------------------------------


def test_cdmm_basics(cdmm):
    F = GF7
    alg = cdmm.algebra
    assert alg.dim == 24 and cdmm.distinguished["zeta"] == 3
    x = cdmm.distinguished["x"]
    a, b = cdmm.distinguished["a"], cdmm.distinguished["b"]
    assert a * b == b * a and a * x == x * a and b * x == -(x * b)
    assert a * a == alg.one and b**6 == alg.one and (x * x).is_zero()
    inv12 = F.inv(12)
    assert inv12 == 3
    for i in range(2):
        for j in range(6):
            e = alg.e(cdmm_index(i, j))
            for m in range(2):
                assert e * x**m == x**m * alg.e(cdmm_index(i, j + 3 * m))
                val = cdmm.lam(((x**m) * e).coords)
                assert val == ((inv12 if j % 2 == 0 else F.neg(inv12)) if m == 1 else 0)
                assert lambda_on_pbw_cdmm(cdmm, m, i, j) == (1 if (m, i, j) == (1, 0, 3) else 0)


def test_cdmm_forms(cdmm):
    form = form_from_integral(cdmm)
    assert form.gram.rows == cdmm_closed_form_gram(cdmm).rows
    assert form.certificate == cdmm_certificate(cdmm)
    alg = cdmm.algebra
    e00 = alg.e(cdmm_index(0, 0))
    assert form.pair(e00, cdmm.distinguished["x"] * e00) == GF7.inv(12)
    g = cdmm.distinguished["g"]
    assert g == cdmm.distinguished["b"] ** 3
    gamma = nakayama(form)
    for i in range(alg.dim):
        assert gamma.apply(alg.basis(i)) == (alg.basis(i) * g).coords


def test_cdmm_eta_on_R(cdmm):
    eta = nakayama_eta(cdmm)
    S2 = cdmm.antipode @ cdmm.antipode
    for m in range(2):
        r = cdmm.algebra.x_power(m).coords
        assert eta.apply(r) == S2.apply(r)


def test_phi_roundtrip(cdmm):
    rng = random.Random(5)
    t = right_integral(cdmm)
    assert cdmm.lam(t) == 1
    assert phi(cdmm, t) == cdmm.counit
    for _ in range(10):
        v = random_vector(GF7, 24, rng)
        assert phi_inverse(cdmm, phi(cdmm, v)).coords == v


@settings(max_examples=25)
@given(st.integers(0, 2**32 - 1))
def test_antipode_antimultiplicative_random(seed):
    rng = random.Random(seed)
    h = build_taft(4, GF13)
    u = h.algebra.element(random_vector(GF13, 16, rng))
    v = h.algebra.element(random_vector(GF13, 16, rng))
    assert h.S(u * v) == h.S(v) * h.S(u)
    assert h.S_inv(h.S(u)) == u
