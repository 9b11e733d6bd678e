"""Dense exact linear algebra over a ``Field``.

Vectors are tuples of field values and act as row vectors throughout: a
linear map is a square matrix ``M`` applied as ``v -> v @ M``.  Subspaces
are kept in reduced row-echelon form, which makes subspace equality a plain
tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from hopfcode import kernels
from hopfcode.errors import AmbientMismatch, NotInvertible
from hopfcode.scalars import Field, PrimeField

Vector = tuple


@dataclass(frozen=True)
class Matrix:
    field: Field
    nrows: int
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, F: Field, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(F, len(rows), ncols, rows)

    @classmethod
    def identity(cls, F: Field, n: int) -> "Matrix":
        z, o = F.zero, F.one
        return cls(F, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, F: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(F, nrows, ncols, tuple((F.zero,) * ncols for _ in range(nrows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, tuple(zip(*self.rows)) if self.rows else ())

    T = property(transpose)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise AmbientMismatch(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        return Matrix(self.field, self.nrows, other.ncols, tuple(map(tuple, matmul(self.field, self.rows, other.rows, other.ncols))))

    def apply(self, v: Sequence) -> Vector:
        """Row-vector action ``v @ self``."""
        return vec_mat(self.field, v, self.rows, self.ncols)

    def rank(self) -> int:
        return echelonize(self).dim

    def inverse(self) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, tuple(map(tuple, inverse(self.field, self.rows))))


def matmul(F: Field, a: Sequence[Sequence], b: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if isinstance(F, PrimeField):
        return kernels.matmul_mod_p([list(r) for r in a], [list(r) for r in b], F.p)
    if ncols is None:
        ncols = len(b[0]) if b else 0
    return [list(vec_mat(F, row, b, ncols)) for row in a]


def vec_mat(F: Field, v: Sequence, m: Sequence[Sequence], ncols: int) -> Vector:
    acc = [F.zero] * ncols
    z = F.zero
    add, mul = F.add, F.mul
    for k, f in enumerate(v):
        if f != z:
            row = m[k]
            for j in range(ncols):
                e = row[j]
                if e != z:
                    acc[j] = add(acc[j], mul(f, e))
    return tuple(acc)


def _rref_generic(F: Field, rows: Sequence[Sequence], ncols: int):
    m = [list(r) for r in rows]
    z = F.zero
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != z), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != z:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], row)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(F: Field, rows: Sequence[Sequence], ncols: int):
    """Reduced row-echelon form: ``(nonzero rows, pivot columns)``."""
    if isinstance(F, PrimeField):
        basis, pivots = kernels.rref_mod_p([list(r) for r in rows], ncols, F.p)
        return basis, pivots
    return _rref_generic(F, rows, ncols)


def inverse(F: Field, rows: Sequence[Sequence]) -> list[list]:
    n = len(rows)
    one, zero = F.one, F.zero
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(F, aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise NotInvertible("matrix is singular")
    return [list(r[n:]) for r in red]


def solve_left(F: Field, m: Sequence[Sequence], b: Sequence) -> Vector:
    """Unique ``x`` with ``x @ m == b`` for square nonsingular ``m``."""
    return vec_mat(F, b, inverse(F, m), len(m))


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``F^ambient`` stored by its canonical RREF basis."""

    field: Field
    ambient: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return is_subspace(self, other)

    def is_zero(self) -> bool:
        return not self.basis

    def image(self, m: Matrix) -> "Subspace":
        """Image under the row-vector linear map ``v -> v @ m``."""
        if m.nrows != self.ambient:
            raise AmbientMismatch("map domain does not match ambient dimension")
        if not self.basis:
            return zero_subspace(self.field, m.ncols)
        return span(self.field, matmul(self.field, self.basis, m.rows, m.ncols), m.ncols)

    def vectors(self):
        """Every vector of the subspace (prime fields only)."""
        F = self.field
        if not isinstance(F, PrimeField):
            raise TypeError("vector enumeration needs a finite field")
        from itertools import product

        for coeffs in product(range(F.p), repeat=self.dim):
            yield vec_mat(F, coeffs, self.basis, self.ambient)

    def to_json(self) -> list:
        return [[self.field.to_json(x) for x in row] for row in self.basis]


def span(F: Field, vectors: Iterable[Sequence], ambient: int) -> Subspace:
    rows = [tuple(v) for v in vectors]
    for v in rows:
        if len(v) != ambient:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient {ambient}")
    if not rows:
        return Subspace(F, ambient, ())
    basis, _ = rref(F, rows, ambient)
    return Subspace(F, ambient, tuple(tuple(r) for r in basis))


def zero_subspace(F: Field, ambient: int) -> Subspace:
    return Subspace(F, ambient, ())


def full_space(F: Field, ambient: int) -> Subspace:
    return Subspace(F, ambient, Matrix.identity(F, ambient).rows)


def coordinate_span(F: Field, ambient: int, indices: Iterable[int]) -> Subspace:
    z, o = F.zero, F.one
    return span(F, [tuple(o if j == i else z for j in range(ambient)) for i in indices], ambient)


def echelonize(m: Matrix) -> Subspace:
    return span(m.field, m.rows, m.ncols)


def kernel(m: Matrix) -> Subspace:
    """``{v : m v = 0}`` for column vectors ``v``."""
    F = m.field
    n = m.ncols
    if m.nrows == 0:
        return full_space(F, n)
    red, pivots = rref(F, m.rows, n)
    pivset = set(pivots)
    z, o = F.zero, F.one
    out = []
    for free in range(n):
        if free in pivset:
            continue
        v = [z] * n
        v[free] = o
        for row, pc in zip(red, pivots):
            v[pc] = F.neg(row[free])
        out.append(v)
    return span(F, out, n)


def _check(u: Subspace, w: Subspace):
    if u.ambient != w.ambient or u.field != w.field:
        raise AmbientMismatch("subspaces live in different ambient spaces")


def sum_(u: Subspace, w: Subspace) -> Subspace:
    _check(u, w)
    if not w.basis:
        return u
    if not u.basis:
        return w
    return span(u.field, u.basis + w.basis, u.ambient)


def sum_all(parts: Sequence[Subspace], F: Field | None = None, ambient: int | None = None) -> Subspace:
    if not parts:
        return zero_subspace(F, ambient)
    rows = []
    for p in parts:
        _check(parts[0], p)
        rows.extend(p.basis)
    return span(parts[0].field, rows, parts[0].ambient)


subspace_sum = sum_


def annihilator_rows(u: Subspace) -> Matrix:
    """Rows spanning the (standard dot product) complement-equations of ``u``."""
    k = kernel(Matrix(u.field, u.dim, u.ambient, u.basis)) if u.basis else full_space(u.field, u.ambient)
    return Matrix(u.field, k.dim, u.ambient, k.basis)


def intersect(u: Subspace, w: Subspace) -> Subspace:
    _check(u, w)
    if not u.basis or not w.basis:
        return zero_subspace(u.field, u.ambient)
    # v in u ∩ w  <=>  v satisfies the defining equations of both
    eqs = annihilator_rows(u).rows + annihilator_rows(w).rows
    return kernel(Matrix(u.field, len(eqs), u.ambient, eqs))


def contains(u: Subspace, v: Sequence) -> bool:
    v = tuple(v)
    if len(v) != u.ambient:
        raise AmbientMismatch("vector length does not match ambient dimension")
    F = u.field
    z = F.zero
    # reduce v against the RREF basis using the pivot structure
    r = list(v)
    for row in u.basis:
        pc = next(i for i, x in enumerate(row) if x != z)
        f = r[pc]
        if f != z:
            r = [F.sub(a, F.mul(f, b)) for a, b in zip(r, row)]
    return all(x == z for x in r)


def is_subspace(u: Subspace, w: Subspace) -> bool:
    _check(u, w)
    return all(contains(w, v) for v in u.basis)


def is_direct_sum(parts: Sequence[Subspace]) -> bool:
    if not parts:
        return True
    for p in parts:
        _check(parts[0], p)
    total = sum_all(list(parts))
    if total.dim != sum(p.dim for p in parts):
        return False
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not intersect(parts[i], parts[j]).is_zero():
                return False
    return True


def random_vector(F: Field, n: int, rng) -> Vector:
    return tuple(random_scalar(F, rng) for _ in range(n))


def random_scalar(F: Field, rng, nonzero: bool = False):
    if isinstance(F, PrimeField):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, F.p)
    while True:
        # small integer coefficients keep cyclotomic samples cheap
        a = F([rng.randint(-2, 2) for _ in range(F.degree)])
        if not nonzero or a != F.zero:
            return a


def random_subspace(F: Field, n: int, rng, dim: int | None = None) -> Subspace:
    if dim is None:
        dim = rng.randint(0, n)
    return span(F, [random_vector(F, n, rng) for _ in range(dim)], n)

