"""The algebras k(omega, N) and their indecomposable right ideals.

The algebra is generated by orthogonal idempotents ``e_s`` summing to 1 and
a nilpotent ``x`` with ``x^N = 0`` and ``e_s x = x e_{omega(s)}``.  It is
built on the basis ``e_s x^m`` (index ``s * N + m``) with the closed-form
product

    (e_s x^m)(e_t x^n) = [omega^m(s) == t] e_s x^(m+n),   zero if m+n >= N.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from hopfcode.algebra import (
    AlgebraElement,
    RightSubmodule,
    StructureAlgebra,
    default_budget,
    left_multiply_subspace,
)
from hopfcode.errors import BudgetExceeded, ConstructionError, IndexOutOfRange, InvalidPermutation, NotInR
from hopfcode.linalg import coordinate_span, sum_all
from hopfcode.scalars import Field, PrimeField


def check_permutation(perm: Sequence[int], n: int, what: str = "permutation") -> tuple[int, ...]:
    perm = tuple(int(v) for v in perm)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise InvalidPermutation(f"{what} {list(perm)} is not a bijection on 0..{n - 1}")
    return perm


@dataclass(frozen=True)
class OmegaSpec:
    s_size: int
    omega: tuple
    capN: int

    def __post_init__(self):
        if self.s_size < 1:
            raise InvalidPermutation("S must be nonempty")
        if self.capN < 1:
            raise ConstructionError(f"N must be >= 1, got {self.capN}")
        object.__setattr__(self, "omega", check_permutation(self.omega, self.s_size, "omega"))

    @property
    def dim(self) -> int:
        return self.s_size * self.capN

    def omega_power(self, s: int, k: int) -> int:
        inv = {v: i for i, v in enumerate(self.omega)}
        step = self.omega if k >= 0 else tuple(inv[i] for i in range(self.s_size))
        for _ in range(abs(k)):
            s = step[s]
        return s

    @classmethod
    def from_json(cls, obj: dict) -> "OmegaSpec":
        return cls(int(obj["S"]), tuple(obj["omega"]), int(obj["N"]))

    def to_json(self) -> dict:
        return {"S": self.s_size, "omega": list(self.omega), "N": self.capN}


def _monomial_label(s_label: str, m: int) -> str:
    if m == 0:
        return f"e{s_label}"
    if m == 1:
        return f"e{s_label}x"
    return f"e{s_label}x^{m}"


class OmegaAlgebra(StructureAlgebra):
    """A ``StructureAlgebra`` that remembers its (S, omega, N) presentation."""

    def __init__(self, spec: OmegaSpec, field: Field, s_labels: Sequence[str] | None = None):
        self.spec = spec
        N, k = spec.capN, spec.s_size
        if s_labels is None:
            s_labels = [str(s) for s in range(k)]
        self.s_labels = tuple(s_labels)
        labels = [_monomial_label(self.s_labels[s], m) for s in range(k) for m in range(N)]
        one = field.one
        # omega^m(s) for every s and m < N
        orbit = [[spec.omega_power(s, m) for m in range(N)] for s in range(k)]
        table = []
        for s in range(k):
            for m in range(N):
                row = []
                for t in range(k):
                    for n in range(N):
                        if m + n < N and orbit[s][m] == t:
                            row.append(((s * N + m + n, one),))
                        else:
                            row.append(())
                table.append(row)
        unit = [field.zero] * spec.dim
        for s in range(k):
            unit[s * N] = one
        super().__init__(field, labels, table, unit, check=True)

    @property
    def capN(self) -> int:
        return self.spec.capN

    @property
    def s_size(self) -> int:
        return self.spec.s_size

    def index(self, s: int, m: int) -> int:
        if not (0 <= s < self.s_size and 0 <= m < self.capN):
            raise IndexOutOfRange(f"(s={s}, m={m}) out of range")
        return s * self.capN + m

    def monomial(self, s: int, m: int) -> AlgebraElement:
        return self.basis(self.index(s, m))

    def e(self, s: int) -> AlgebraElement:
        return self.monomial(s, 0)

    @property
    def x(self) -> AlgebraElement:
        return self.x_power(1)

    def x_power(self, k: int) -> AlgebraElement:
        """``x^k = sum_s e_s x^k``."""
        F = self.field
        coords = [F.zero] * self.dim
        if k < self.capN:
            for s in range(self.s_size):
                coords[self.index(s, k)] = F.one
        return self.element(coords)

    def r_element(self, coeffs: Sequence) -> AlgebraElement:
        """``sum_k coeffs[k] x^k`` in the subalgebra R generated by x."""
        F = self.field
        coords = [F.zero] * self.dim
        for k, c in enumerate(coeffs):
            if k < self.capN:
                for s in range(self.s_size):
                    coords[self.index(s, k)] = c
        return self.element(coords)

    def r_coefficients(self, r: AlgebraElement) -> tuple:
        """Inverse of ``r_element``; raises NotInR for elements outside R."""
        coeffs = tuple(r.coords[self.index(0, k)] for k in range(self.capN))
        if self.r_element(coeffs) != r:
            raise NotInR(f"{r!r} is not a polynomial in x")
        return coeffs


def build_omega_algebra(spec: OmegaSpec, field: Field, s_labels: Sequence[str] | None = None) -> OmegaAlgebra:
    return OmegaAlgebra(spec, field, s_labels)


def ideal_N(alg: OmegaAlgebra, s: int, t: int) -> RightSubmodule:
    """``N_{s,t} = e_s x^t R`` with basis ``e_s x^k`` for ``t <= k < N``."""
    if not (0 <= s < alg.s_size and 0 <= t < alg.capN):
        raise IndexOutOfRange(f"N_{{{s},{t}}} is undefined")
    w = coordinate_span(alg.field, alg.dim, [alg.index(s, k) for k in range(t, alg.capN)])
    return RightSubmodule(alg, w, check=False)


def sum_of_ideals(alg: OmegaAlgebra, pairs: Iterable[tuple[int, int]]) -> RightSubmodule:
    """Sum of ``N_{s,t}`` over the given pairs; pairs with ``t >= N`` contribute zero."""
    parts = [ideal_N(alg, s, t).subspace for s, t in pairs if t < alg.capN]
    return RightSubmodule(alg, sum_all(parts, alg.field, alg.dim), check=False)


def scaled_ideal(alg: OmegaAlgebra, r: AlgebraElement, s: int, t: int) -> RightSubmodule:
    """``(1 + r x) N_{s,t}`` for ``r`` in R."""
    alg.r_coefficients(r)
    u = alg.one + r * alg.x
    w = left_multiply_subspace(u, ideal_N(alg, s, t).subspace)
    sub = RightSubmodule(alg, w, check=True)
    if sub.dim != alg.capN - t:
        raise ConstructionError("left multiplication by a unit changed the dimension")
    return sub


def representatives(alg: OmegaAlgebra) -> list[tuple[tuple[int, int], RightSubmodule]]:
    return [((s, t), ideal_N(alg, s, t)) for s in range(alg.s_size) for t in range(alg.capN)]


@dataclass
class ClassifiedIdeal:
    s: int
    t: int
    r_coords: tuple
    submodule: RightSubmodule
    multiplicity: int = 1
    sampled: bool = False

    @property
    def canonical(self) -> bool:
        F = self.submodule.algebra.field
        return all(c == F.zero for c in self.r_coords)

    def to_json(self) -> dict:
        F = self.submodule.algebra.field
        out = {
            "s": self.s,
            "t": self.t,
            "r_coords": [F.to_json(c) for c in self.r_coords],
            "basis": self.submodule.subspace.to_json(),
            "canonical": self.canonical,
            "multiplicity": self.multiplicity,
        }
        if self.sampled:
            out["sampled"] = True
        return out


def r_range(alg: OmegaAlgebra, budget: int | None = None):
    """Every element of R as its coefficient tuple (prime fields within budget)."""
    F = alg.field
    if budget is None:
        budget = default_budget()
    if not isinstance(F, PrimeField):
        raise BudgetExceeded("exhaustive r needs a prime field")
    if F.p**alg.capN > budget:
        raise BudgetExceeded(f"{F.p}^{alg.capN} choices of r exceed the budget {budget}")
    return product(range(F.p), repeat=alg.capN)


def classify_indecomposables(
    alg: OmegaAlgebra,
    r_samples: Iterable[Sequence] | None = None,
    budget: int | None = None,
) -> list[ClassifiedIdeal]:
    """Deduplicated family ``(1 + r x) N_{s,t}``, sorted by ``(s, t, basis)``.

    Over prime fields ``r`` runs through all of R unless ``r_samples`` (a
    list of coefficient tuples) is supplied; supplied samples tag the
    result as sampled.
    """
    sampled = r_samples is not None
    if r_samples is None:
        r_list = list(r_range(alg, budget))
    else:
        r_list = [tuple(r) for r in r_samples]
    zero_r = tuple([alg.field.zero] * alg.capN)
    if zero_r not in r_list:
        r_list.insert(0, zero_r)
    seen: dict[tuple, ClassifiedIdeal] = {}
    for s in range(alg.s_size):
        for t in range(alg.capN):
            for coeffs in r_list:
                sub = scaled_ideal(alg, alg.r_element(coeffs), s, t)
                key = sub.subspace.basis
                if key in seen:
                    entry = seen[key]
                    if (entry.s, entry.t) != (s, t):
                        raise ConstructionError("one right ideal is tagged by two representatives")
                    entry.multiplicity += 1
                else:
                    seen[key] = ClassifiedIdeal(s, t, tuple(coeffs), sub, sampled=sampled)
    out = list(seen.values())
    out.sort(key=lambda c: (c.s, c.t, c.submodule.subspace.basis))
    return out
