from __future__ import annotations

import random
from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from hopfcode.algebra import are_isomorphic, enumerate_right_submodules, is_indecomposable, is_right_closed
from hopfcode.errors import ConstructionError, IndexOutOfRange, InvalidPermutation, NotInR
from hopfcode.linalg import intersect, span
from hopfcode.omega import (
    OmegaSpec,
    build_omega_algebra,
    classify_indecomposables,
    ideal_N,
    representatives,
    scaled_ideal,
    sum_of_ideals,
)
from hopfcode.scalars import PrimeField

GF2, GF3, GF5, GF7 = PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7)


def rewrite_product(spec: OmegaSpec, left, right):
    """Multiply basis words ``e_s x^m`` by rewriting with the defining relations.

    Words are lists of letters ('e', s) or ('x',).  Rules, applied until none
    fires: x e_t -> e_u x where e_u x = x e_t, i.e. omega(u) = t;
    e_s e_t -> [s == t] e_t; x^N -> 0.  Returns (s, k) or None for zero.
    """
    inv = {spec.omega[u]: u for u in range(spec.s_size)}
    word = [("e", left[0])] + [("x",)] * left[1] + [("e", right[0])] + [("x",)] * right[1]
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a == ("x",) and b[0] == "e":
                word[i], word[i + 1] = ("e", inv[b[1]]), ("x",)
                changed = True
                break
            if a[0] == "e" and b[0] == "e":
                if a[1] != b[1]:
                    return None
                del word[i]
                changed = True
                break
    xs = sum(1 for w in word if w == ("x",))
    if xs >= spec.capN:
        return None
    assert word[0][0] == "e" and len(word) == xs + 1
    return word[0][1], xs


SPECS = [
    OmegaSpec(2, (0, 1), 2),
    OmegaSpec(2, (1, 0), 3),
    OmegaSpec(3, (1, 2, 0), 2),
    OmegaSpec(4, (2, 0, 3, 1), 3),
    OmegaSpec(1, (0,), 4),
]


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_product_matches_rewriting(spec):
    alg = build_omega_algebra(spec, GF5)
    for s in range(spec.s_size):
        for m in range(spec.capN):
            for t in range(spec.s_size):
                for n in range(spec.capN):
                    got = alg.monomial(s, m) * alg.monomial(t, n)
                    nf = rewrite_product(spec, (s, m), (t, n))
                    expected = alg.zero if nf is None else alg.monomial(*nf)
                    assert got == expected, (s, m, t, n)


def test_small_instances():
    alg = build_omega_algebra(OmegaSpec(2, (0, 1), 2), GF3)
    assert alg.dim == 4
    assert alg.monomial(0, 1) * alg.e(0) == alg.monomial(0, 1)
    assert (alg.monomial(0, 1) * alg.e(1)).is_zero()
    poly = build_omega_algebra(OmegaSpec(1, (0,), 3), GF3)
    assert poly.e(0) == poly.one
    assert poly.x**3 == poly.zero and poly.x**2 != poly.zero
    assert alg.labels == ("e0", "e0x", "e1", "e1x")


def test_spec_validation():
    with pytest.raises(InvalidPermutation):
        OmegaSpec(3, (0, 0, 1), 2)
    with pytest.raises(InvalidPermutation):
        OmegaSpec(0, (), 2)
    with pytest.raises(ConstructionError):
        OmegaSpec(2, (0, 1), 0)
    spec = OmegaSpec(3, (1, 2, 0), 2)
    assert OmegaSpec.from_json(spec.to_json()) == spec


def test_ideal_dimensions_and_basis():
    alg = build_omega_algebra(OmegaSpec(3, (1, 2, 0), 4), GF5)
    for s in range(3):
        assert ideal_N(alg, s, 0).subspace == sum_of_ideals(alg, [(s, 0)]).subspace
        e_sA = [(alg.e(s) * alg.basis(j)).coords for j in range(alg.dim)]
        assert ideal_N(alg, s, 0).subspace == span(GF5, e_sA, alg.dim)
        for t in range(4):
            assert ideal_N(alg, s, t).dim == 4 - t
            assert is_right_closed(alg, ideal_N(alg, s, t).subspace)
        assert ideal_N(alg, s, 3).basis == (alg.monomial(s, 3).coords,)
    with pytest.raises(IndexOutOfRange):
        ideal_N(alg, 3, 0)
    with pytest.raises(IndexOutOfRange):
        ideal_N(alg, 0, 4)


def test_scaled_ideal_examples():
    alg = build_omega_algebra(OmegaSpec(1, (0,), 2), GF2)
    assert scaled_ideal(alg, alg.zero, 0, 1) == ideal_N(alg, 0, 1)
    assert scaled_ideal(alg, alg.one, 0, 1).subspace == ideal_N(alg, 0, 1).subspace
    two = build_omega_algebra(OmegaSpec(2, (0, 1), 2), GF2)
    with pytest.raises(NotInR):
        scaled_ideal(two, two.e(0), 0, 0)


def test_family_examples():
    fields = build_omega_algebra(OmegaSpec(2, (0, 1), 1), GF3)
    assert len(classify_indecomposables(fields)) == 2
    dual = build_omega_algebra(OmegaSpec(1, (0,), 2), GF2)
    fam = classify_indecomposables(dual)
    assert [c.submodule.subspace for c in fam] == [ideal_N(dual, 0, 0).subspace, ideal_N(dual, 0, 1).subspace]
    assert fam[1].multiplicity == 4  # r ranges over {0, 1, x, 1+x}


def all_subspaces(F, n):
    """Every subspace of GF(p)^n, one RREF matrix per pivot set and free-entry choice."""
    p = F.p
    out = []
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
            for vals in product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), v in zip(free, vals):
                    rows[i][j] = v
                out.append(span(F, rows, n))
    return out


def oracle_indecomposables(alg):
    closed = [w for w in all_subspaces(alg.field, alg.dim) if is_right_closed(alg, w)]
    result = set()
    for m in closed:
        if m.dim == 0:
            continue
        inside = [u for u in closed if 0 < u.dim < m.dim and u <= m]
        split = any(
            u.dim + w.dim == m.dim and intersect(u, w).is_zero() for u in inside for w in inside
        )
        if not split:
            result.add(m.basis)
    return result


@pytest.mark.parametrize(
    "S,om,N,p",
    [(2, (0, 1), 2, 2), (2, (1, 0), 2, 3), (1, (0,), 3, 2), (3, (1, 2, 0), 2, 2)],
)
def test_classification_matches_enumeration(S, om, N, p):
    alg = build_omega_algebra(OmegaSpec(S, om, N), PrimeField(p))
    subs = enumerate_right_submodules(alg)
    ind = {m.subspace.basis for m in subs if is_indecomposable(m, subs)}
    fam = {c.submodule.subspace.basis for c in classify_indecomposables(alg)}
    assert ind == fam == oracle_indecomposables(alg)
    assert len(representatives(alg)) == S * N



@pytest.mark.parametrize(
    "S,om,N,p",
    [(2, (0, 1), 2, 2), (2, (1, 0), 2, 3), (1, (0,), 3, 2), (3, (1, 2, 0), 2, 2)],
)
def test_representatives_irredundant(S, om, N, p):
    alg = build_omega_algebra(OmegaSpec(S, om, N), PrimeField(p))
    reps = representatives(alg)
    for (a, ma), (b, mb) in combinations(reps, 2):
        assert not are_isomorphic(ma, mb), (a, b)
    by_tag = dict(reps)
    for c in classify_indecomposables(alg):
        assert are_isomorphic(c.submodule, by_tag[(c.s, c.t)])


@given(
    st.integers(1, 4).flatmap(lambda k: st.tuples(st.just(k), st.permutations(range(k)), st.integers(1, 4))),
    st.integers(0, 2**32 - 1),
)
def test_scaled_ideals_keep_dimension(data, seed):
    k, perm, N = data
    alg = build_omega_algebra(OmegaSpec(k, tuple(perm), N), GF7)
    rng = random.Random(seed)
    r = alg.r_element([rng.randrange(7) for _ in range(N)])
    s, t = rng.randrange(k), rng.randrange(N)
    sub = scaled_ideal(alg, r, s, t)
    assert sub.dim == N - t
    assert is_right_closed(alg, sub.subspace)


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(st.just(k), st.permutations(range(k)), st.integers(1, 4))))
def test_unit_and_associativity(data):
    k, perm, N = data
    alg = build_omega_algebra(OmegaSpec(k, tuple(perm), N), GF3)
    alg.check_associativity()
    for i in range(alg.dim):
        assert alg.one * alg.basis(i) == alg.basis(i) == alg.basis(i) * alg.one
