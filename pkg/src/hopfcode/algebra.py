"""Finite-dimensional associative algebras given by structure constants.

Products of basis elements are stored sparsely: ``table[i][j]`` is a tuple
of ``(k, c)`` pairs meaning ``b_i b_j = sum c * b_k``.  All the algebras in
this package are monomial in their preferred basis, so most entries hold at
most one pair.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from hopfcode.errors import (
    AlgebraMismatch,
    BudgetExceeded,
    ConstructionError,
    NotInvertible,
)
from hopfcode.linalg import (
    Matrix,
    Subspace,
    full_space,
    inverse,
    is_subspace,
    kernel,
    span,
    sum_,
    intersect,
    vec_mat,
    zero_subspace,
)
from hopfcode.scalars import Field, PrimeField

DEFAULT_BUDGET = 3**12


def default_budget() -> int:
    env = os.environ.get("HOPFCODE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class StructureAlgebra:
    def __init__(self, field: Field, labels: Sequence[str], table, unit: Sequence, check: bool = True):
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.table = tuple(tuple(tuple(cell) for cell in row) for row in table)
        self.unit = tuple(unit)
        if len(self.table) != self.dim or any(len(row) != self.dim for row in self.table):
            raise ConstructionError("structure table has the wrong shape")
        if len(self.unit) != self.dim:
            raise ConstructionError("unit has the wrong length")
        if check:
            self.check_unit()
            self.check_associativity()

    @classmethod
    def from_dense(cls, field: Field, labels, mul, unit, check: bool = True) -> "StructureAlgebra":
        """``mul[i][j]`` is the full coordinate tuple of ``b_i b_j``."""
        z = field.zero
        table = [
            [tuple((k, c) for k, c in enumerate(mul[i][j]) if c != z) for j in range(len(labels))]
            for i in range(len(labels))
        ]
        return cls(field, labels, table, unit, check)

    def __repr__(self) -> str:
        return f"StructureAlgebra(dim={self.dim}, field={self.field})"

    # -- coordinates ---------------------------------------------------------
    def mul_coords(self, a: Sequence, b: Sequence) -> tuple:
        F = self.field
        z = F.zero
        add, mul = F.add, F.mul
        acc = [z] * self.dim
        nb = [(j, y) for j, y in enumerate(b) if y != z]
        if not nb:
            return tuple(acc)
        table = self.table
        for i, x in enumerate(a):
            if x == z:
                continue
            row = table[i]
            for j, y in nb:
                xy = mul(x, y)
                for k, c in row[j]:
                    acc[k] = add(acc[k], mul(xy, c))
        return tuple(acc)

    def basis_coords(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def element(self, coords: Sequence) -> "AlgebraElement":
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise AlgebraMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(self, coords)

    def basis(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, self.basis_coords(i))

    def basis_elements(self) -> list["AlgebraElement"]:
        return [self.basis(i) for i in range(self.dim)]

    @property
    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    @property
    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (self.field.zero,) * self.dim)

    def scalar(self, c) -> "AlgebraElement":
        """``c * 1`` for a field value ``c``."""
        F = self.field
        return AlgebraElement(self, tuple(F.mul(c, u) for u in self.unit))

    # -- checks --------------------------------------------------------------
    def check_unit(self):
        for i in range(self.dim):
            e = self.basis_coords(i)
            if self.mul_coords(self.unit, e) != e or self.mul_coords(e, self.unit) != e:
                raise ConstructionError(f"unit fails on basis element {self.labels[i]}")

    def check_associativity(self):
        n = self.dim
        basis = [self.basis_coords(i) for i in range(n)]
        prods = [[self.mul_coords(basis[i], basis[j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                ij = prods[i][j]
                for k in range(n):
                    if self.mul_coords(ij, basis[k]) != self.mul_coords(basis[i], prods[j][k]):
                        raise ConstructionError(
                            f"associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                        )

    # -- regular representations ---------------------------------------------
    def left_matrix(self, a: Sequence) -> Matrix:
        """Row ``j`` holds the coordinates of ``a * b_j``."""
        a = _coords(a)
        return Matrix(self.field, self.dim, self.dim, tuple(self.mul_coords(a, self.basis_coords(j)) for j in range(self.dim)))

    def right_matrix(self, a: Sequence) -> Matrix:
        """Row ``j`` holds the coordinates of ``b_j * a``."""
        a = _coords(a)
        return Matrix(self.field, self.dim, self.dim, tuple(self.mul_coords(self.basis_coords(j), a) for j in range(self.dim)))

    def structure_constants(self) -> list:
        return [[self.mul_coords(self.basis_coords(i), self.basis_coords(j)) for j in range(self.dim)] for i in range(self.dim)]

    def to_json(self) -> dict:
        F = self.field
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "unit": [F.to_json(u) for u in self.unit],
            "mul": [[[F.to_json(c) for c in cell] for cell in row] for row in self.structure_constants()],
        }

    @classmethod
    def from_json(cls, F: Field, obj: dict) -> "StructureAlgebra":
        mul = [[[F.from_json(c) for c in cell] for cell in row] for row in obj["mul"]]
        unit = [F.from_json(c) for c in obj["unit"]]
        return cls.from_dense(F, obj["labels"], mul, unit)


def _coords(a) -> tuple:
    return a.coords if isinstance(a, AlgebraElement) else tuple(a)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: StructureAlgebra
    coords: tuple

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and other.algebra is self.algebra and other.coords == self.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def _same(self, other: "AlgebraElement"):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        F = self.algebra.field
        return AlgebraElement(self.algebra, tuple(F.add(x, y) for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        F = self.algebra.field
        return AlgebraElement(self.algebra, tuple(F.sub(x, y) for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        F = self.algebra.field
        return AlgebraElement(self.algebra, tuple(F.neg(x) for x in self.coords))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            return invert(self) ** (-k)
        out = self.algebra.one
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "AlgebraElement":
        F = self.algebra.field
        return AlgebraElement(self.algebra, tuple(F.mul(c, x) for x in self.coords))

    def is_zero(self) -> bool:
        z = self.algebra.field.zero
        return all(x == z for x in self.coords)

    def __repr__(self) -> str:
        F = self.algebra.field
        terms = [
            f"{F.format(c)}*{lab}" for c, lab in zip(self.coords, self.algebra.labels) if c != F.zero
        ]
        return " + ".join(terms) if terms else "0"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._same(b)
    return AlgebraElement(a.algebra, a.algebra.mul_coords(a.coords, b.coords))


def linear_combination(alg: StructureAlgebra, terms: Iterable[tuple]) -> AlgebraElement:
    """``sum c * e`` for ``(c, e)`` pairs."""
    out = alg.zero
    for c, e in terms:
        out = out + e.scale(c)
    return out


def invert(a: AlgebraElement) -> AlgebraElement:
    alg = a.algebra
    try:
        inv = inverse(alg.field, alg.left_matrix(a.coords).rows)
    except NotInvertible:
        raise NotInvertible(f"{a!r} is not invertible") from None
    # x with a*x = 1:  x @ L_a = unit
    x = AlgebraElement(alg, vec_mat(alg.field, alg.unit, inv, alg.dim))
    if a * x != alg.one or x * a != alg.one:
        raise NotInvertible(f"{a!r} has only a one-sided inverse")
    return x


# -- right submodules ---------------------------------------------------------


class RightSubmodule:
    """A subspace of the algebra closed under right multiplication."""

    def __init__(self, algebra: StructureAlgebra, subspace: Subspace, check: bool = True):
        if subspace.ambient != algebra.dim:
            raise AlgebraMismatch("subspace ambient dimension differs from algebra dimension")
        self.algebra = algebra
        self.subspace = subspace
        if check and not is_right_closed(algebra, subspace):
            raise ConstructionError("subspace is not closed under right multiplication")

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def basis(self) -> tuple:
        return self.subspace.basis

    def __eq__(self, other) -> bool:
        return isinstance(other, RightSubmodule) and other.algebra is self.algebra and other.subspace == self.subspace

    def __hash__(self) -> int:
        return hash(self.subspace.basis)

    def __repr__(self) -> str:
        return f"RightSubmodule(dim={self.dim})"

    def sort_key(self):
        return (self.dim, self.subspace.basis)

    def to_json(self, indecomposable: bool | None = None) -> dict:
        out = {"dim": self.dim, "basis": self.subspace.to_json()}
        if indecomposable is not None:
            out["indecomposable"] = indecomposable
        return out


def is_right_closed(alg: StructureAlgebra, w: Subspace) -> bool:
    for v in w.basis:
        for j in range(alg.dim):
            if not w.__contains__(alg.mul_coords(v, alg.basis_coords(j))):
                return False
    return True


def is_left_closed(alg: StructureAlgebra, w: Subspace) -> bool:
    for v in w.basis:
        for j in range(alg.dim):
            if not w.__contains__(alg.mul_coords(alg.basis_coords(j), v)):
                return False
    return True


def _closure_subspace(alg: StructureAlgebra, w: Subspace) -> Subspace:
    basis = [alg.basis_coords(j) for j in range(alg.dim)]
    while True:
        rows = list(w.basis)
        for v in w.basis:
            for b in basis:
                rows.append(alg.mul_coords(v, b))
        nxt = span(alg.field, rows, alg.dim)
        if nxt.dim == w.dim:
            return w
        w = nxt


def right_ideal_closure(gens: Sequence[AlgebraElement], algebra: StructureAlgebra | None = None) -> RightSubmodule:
    if not gens:
        if algebra is None:
            raise ValueError("algebra required when no generators are given")
        return RightSubmodule(algebra, zero_subspace(algebra.field, algebra.dim), check=False)
    alg = gens[0].algebra
    for g in gens:
        gens[0]._same(g)
    w = span(alg.field, [g.coords for g in gens], alg.dim)
    return RightSubmodule(alg, _closure_subspace(alg, w), check=False)


def left_multiply_subspace(a: AlgebraElement, w: Subspace) -> Subspace:
    """The subspace ``a W``."""
    return w.image(a.algebra.left_matrix(a.coords))


def right_multiply_subspace(w: Subspace, a: AlgebraElement) -> Subspace:
    """The subspace ``W a``."""
    return w.image(a.algebra.right_matrix(a.coords))


def _projective_points(p: int, n: int):
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def enumerate_right_submodules(alg: StructureAlgebra, budget: int | None = None) -> list[RightSubmodule]:
    """Every right submodule of the regular module, sorted by ``(dim, basis)``.

    Each submodule is a sum of cyclic ones, so the cyclic submodules ``vA``
    (one per projective point) are computed first and then closed under sums.
    """
    F = alg.field
    if budget is None:
        budget = default_budget()
    if not isinstance(F, PrimeField):
        raise BudgetExceeded("exhaustive enumeration needs a prime field")
    if F.p**alg.dim > budget:
        raise BudgetExceeded(f"{F.p}^{alg.dim} vectors exceed the budget {budget}")
    cyclic: dict[tuple, Subspace] = {}
    for v in _projective_points(F.p, alg.dim):
        w = _closure_subspace(alg, span(F, [v], alg.dim))
        cyclic.setdefault(w.basis, w)
    gens = list(cyclic.values())
    zero = zero_subspace(F, alg.dim)
    found = {zero.basis: zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for m in frontier:
            for c in gens:
                s = sum_(m, c)
                if s.basis not in found:
                    found[s.basis] = s
                    nxt.append(s)
        frontier = nxt
    subs = [RightSubmodule(alg, w, check=False) for w in found.values()]
    subs.sort(key=RightSubmodule.sort_key)
    return subs


def is_indecomposable(m: RightSubmodule, all_submodules: Sequence[RightSubmodule]) -> bool:
    if m.dim == 0:
        return False
    inside = [u for u in all_submodules if 0 < u.dim < m.dim and is_subspace(u.subspace, m.subspace)]
    by_dim: dict[int, list] = {}
    for u in inside:
        by_dim.setdefault(u.dim, []).append(u)
    for u in inside:
        for w in by_dim.get(m.dim - u.dim, ()):
            if intersect(u.subspace, w.subspace).is_zero():
                return False
    return True


def indecomposable_submodules(alg: StructureAlgebra, budget: int | None = None) -> list[RightSubmodule]:
    subs = enumerate_right_submodules(alg, budget)
    return [m for m in subs if is_indecomposable(m, subs)]


# -- module homomorphisms -----------------------------------------------------


def _pivots(w: Subspace) -> list[int]:
    z = w.field.zero
    return [next(i for i, x in enumerate(row) if x != z) for row in w.basis]


def action_matrices(m: RightSubmodule) -> list[list[list]]:
    """Matrix of right multiplication by each algebra basis element, in the RREF basis of ``m``."""
    alg = m.algebra
    piv = _pivots(m.subspace)
    mats = []
    for j in range(alg.dim):
        b = alg.basis_coords(j)
        mats.append([[img[c] for c in piv] for img in (alg.mul_coords(v, b) for v in m.basis)])
    return mats


def hom_space(m: RightSubmodule, n: RightSubmodule) -> list[list[list]]:
    """Basis of Hom_A(m, n) as ``dim m x dim n`` matrices acting on row coordinates."""
    F = m.algebra.field
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    am, an = action_matrices(m), action_matrices(n)
    nvars = dm * dn
    eqs = []
    # (rho_m(b) X)[i][k] - (X rho_n(b))[i][k] = 0, X[i][l] is variable i*dn + l
    for rm, rn in zip(am, an):
        for i in range(dm):
            for k in range(dn):
                row = [F.zero] * nvars
                for l in range(dm):
                    c = rm[i][l]
                    if c != F.zero:
                        idx = l * dn + k
                        row[idx] = F.add(row[idx], c)
                for l in range(dn):
                    c = rn[l][k]
                    if c != F.zero:
                        idx = i * dn + l
                        row[idx] = F.sub(row[idx], c)
                if any(x != F.zero for x in row):
                    eqs.append(tuple(row))
    sol = kernel(Matrix(F, len(eqs), nvars, tuple(eqs))) if eqs else full_space(F, nvars)
    return [[list(v[i * dn:(i + 1) * dn]) for i in range(dm)] for v in sol.basis]


def _combinations(F: PrimeField, basis: list, budget: int):
    if F.p ** len(basis) > budget:
        raise BudgetExceeded(f"{F.p}^{len(basis)} homomorphisms exceed the budget {budget}")
    rows = len(basis[0]) if basis else 0
    cols = len(basis[0][0]) if basis and basis[0] else 0
    for coeffs in product(range(F.p), repeat=len(basis)):
        mat = [[0] * cols for _ in range(rows)]
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(rows):
                    for j in range(cols):
                        mat[i][j] = (mat[i][j] + c * b[i][j]) % F.p
        yield mat


def _rank(F: Field, mat) -> int:
    from hopfcode.linalg import rref

    return len(rref(F, mat, len(mat[0]))[1]) if mat and mat[0] else 0


def are_isomorphic(m: RightSubmodule, n: RightSubmodule, budget: int | None = None) -> bool:
    if m.dim != n.dim:
        return False
    if m.dim == 0:
        return True
    F = m.algebra.field
    if not isinstance(F, PrimeField):
        raise BudgetExceeded("isomorphism search needs a prime field")
    homs = hom_space(m, n)
    if not homs:
        return False
    for mat in _combinations(F, homs, budget or default_budget()):
        if _rank(F, mat) == m.dim:
            return True
    return False


def has_local_endomorphism_ring(m: RightSubmodule, budget: int | None = None) -> bool:
    """Every endomorphism is nilpotent or invertible; equivalent to indecomposability."""
    if m.dim == 0:
        return False
    F = m.algebra.field
    if not isinstance(F, PrimeField):
        raise BudgetExceeded("endomorphism search needs a prime field")
    ends = hom_space(m, m)
    d = m.dim
    for mat in _combinations(F, ends, budget or default_budget()):
        r = _rank(F, mat)
        if r == d:
            continue
        power = mat
        for _ in range(d - 1):
            power = [list(vec_mat(F, row, power, d)) for row in mat]
        if any(x for row in power for x in row):
            return False
    return True
