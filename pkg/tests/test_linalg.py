from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from hopfcode.errors import AmbientMismatch, NotInvertible
from hopfcode.linalg import (
    Matrix,
    contains,
    coordinate_span,
    echelonize,
    full_space,
    intersect,
    is_direct_sum,
    is_subspace,
    kernel,
    random_subspace,
    span,
    sum_,
    zero_subspace,
)
from hopfcode.scalars import CyclotomicField, PrimeField

GF2, GF3, GF5, GF7 = PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7)


def test_echelonize_examples():
    w = echelonize(Matrix.from_rows(GF2, [[1, 1], [1, 1]]))
    assert w.basis == ((1, 1),)
    assert Matrix.from_rows(GF2, [[1, 1], [1, 1]]).rank() == 1
    assert echelonize(Matrix.zeros(GF5, 2, 3)).is_zero()
    assert echelonize(Matrix.identity(GF5, 3)) == full_space(GF5, 3)


def test_kernel_examples():
    assert kernel(Matrix.identity(GF7, 4)).is_zero()
    assert kernel(Matrix.zeros(GF7, 2, 3)) == full_space(GF7, 3)
    k = kernel(Matrix.from_rows(GF5, [[1, 0, 1]]))
    assert k.dim == 2
    assert (4, 0, 1) in k and (0, 1, 0) in k


def test_kernel_against_enumeration_gf5():
    # frozen oracle: all v in GF(5)^3 with v0 + v2 = 0
    solutions = {v for v in product(range(5), repeat=3) if (v[0] + v[2]) % 5 == 0}
    assert len(solutions) == 25
    k = kernel(Matrix.from_rows(GF5, [[1, 0, 1]]))
    assert set(k.vectors()) == solutions


def test_lattice_examples():
    e = [tuple(1 if i == j else 0 for j in range(3)) for i in range(3)]
    u = span(GF7, [e[0], e[1]], 3)
    w = span(GF7, [e[1], e[2]], 3)
    assert intersect(u, w) == span(GF7, [e[1]], 3)
    assert sum_(u, zero_subspace(GF7, 3)) == u
    assert is_direct_sum([span(GF3, [(1, 0)], 2), span(GF3, [(1, 1)], 2)])
    assert not is_direct_sum([span(GF3, [(1, 0)], 2), span(GF3, [(2, 0)], 2)])


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        sum_(full_space(GF3, 2), full_space(GF3, 3))
    with pytest.raises(AmbientMismatch):
        contains(full_space(GF3, 2), (1, 2, 0))


def test_canonical_equality():
    a = span(GF7, [(2, 4, 6), (1, 0, 1)], 3)
    b = span(GF7, [(1, 0, 1), (3, 6, 2)], 3)
    assert a == b and a.basis == b.basis


def test_inverse_and_singular():
    m = Matrix.from_rows(GF7, [[1, 2], [3, 4]])
    assert (m @ m.inverse()).rows == Matrix.identity(GF7, 2).rows
    with pytest.raises(NotInvertible):
        Matrix.from_rows(GF7, [[1, 2], [2, 4]]).inverse()


def test_cyclotomic_backend_kernel():
    F = CyclotomicField(3)
    z = F.generator()
    m = Matrix.from_rows(F, [[F.one, z], [z, F.mul(z, z)]])
    k = kernel(m)
    assert k.dim == 1
    v = k.basis[0]
    for row in m.rows:
        assert F.sum(F.mul(a, b) for a, b in zip(row, v)) == F.zero


def test_coordinate_span():
    w = coordinate_span(GF3, 4, [2, 0])
    assert w.basis == ((1, 0, 0, 0), (0, 0, 1, 0))


seeds = st.integers(0, 2**32 - 1)
primes = st.sampled_from([2, 3, 5, 7, 13])


@given(seeds, primes, st.integers(1, 7))
def test_dimension_formula(seed, p, n):
    rng = random.Random(seed)
    F = PrimeField(p)
    u, w = random_subspace(F, n, rng), random_subspace(F, n, rng)
    assert sum_(u, w).dim + intersect(u, w).dim == u.dim + w.dim
    assert is_subspace(intersect(u, w), u) and is_subspace(u, sum_(u, w))


@given(seeds, primes, st.integers(1, 7))
def test_echelonize_idempotent(seed, p, n):
    rng = random.Random(seed)
    F = PrimeField(p)
    w = random_subspace(F, n, rng)
    if w.dim:
        assert echelonize(Matrix(F, w.dim, n, w.basis)) == w


@given(seeds, primes, st.integers(1, 6), st.integers(1, 6))
def test_kernel_annihilated(seed, p, r, c):
    rng = random.Random(seed)
    F = PrimeField(p)
    m = Matrix.from_rows(F, [[rng.randrange(p) for _ in range(c)] for _ in range(r)])
    k = kernel(m)
    assert k.dim == c - m.rank()
    for v in k.basis:
        assert all(F.sum(F.mul(a, b) for a, b in zip(row, v)) == 0 for row in m.rows)
