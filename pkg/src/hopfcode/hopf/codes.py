"""Cyclic codes as ideals of the group algebra ``k[X]/(X^n - 1)``.

Polynomials are coefficient lists over a field, lowest degree first.  The
dual code is computed twice: by reversing the parity-check polynomial, and
as the orthogonal of the ideal under the integral form, for which the
monomial basis is orthonormal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from hopfcode.algebra import RightSubmodule, right_ideal_closure
from hopfcode.errors import ConstructionError, NotADivisor
from hopfcode.forms import orthogonal_left, orthogonal_right
from hopfcode.hopf.structure import HopfStructure, form_from_integral
from hopfcode.scalars import Field


def poly_trim(F: Field, p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == F.zero:
        p.pop()
    return p


def poly_mul(F: Field, a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x != F.zero:
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(F, out)


def poly_divmod(F: Field, a: Sequence, b: Sequence) -> tuple[list, list]:
    a = poly_trim(F, a)
    b = poly_trim(F, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = F.mul(a[-1], inv_lead)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, y))
        a = poly_trim(F, a)
    return poly_trim(F, q), a


def x_n_minus_1(F: Field, n: int) -> list:
    return [F.neg(F.one)] + [F.zero] * (n - 1) + [F.one]


def format_poly(F: Field, p: Sequence) -> str:
    terms = []
    for k, c in enumerate(p):
        if c == F.zero:
            continue
        mono = "1" if k == 0 else ("X" if k == 1 else f"X^{k}")
        coef = F.format(c)
        terms.append(mono if coef == "1" else (coef if k == 0 else f"{coef}*{mono}"))
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class CyclicCode:
    n: int
    generator: tuple
    field: Field

    def __post_init__(self):
        F = self.field
        g = tuple(poly_trim(F, [F(c) if not isinstance(c, tuple) else c for c in self.generator]))
        object.__setattr__(self, "generator", g)
        if not g:
            raise NotADivisor("the zero polynomial generates no cyclic code")
        if g[-1] != F.one:
            raise ConstructionError("generator polynomial must be monic")
        _, r = poly_divmod(F, x_n_minus_1(F, self.n), g)
        if r:
            raise NotADivisor(f"{format_poly(F, g)} does not divide X^{self.n} - 1")

    @property
    def degree(self) -> int:
        return len(self.generator) - 1

    @property
    def dim(self) -> int:
        return self.n - self.degree

    @property
    def parity_check(self) -> tuple:
        q, _ = poly_divmod(self.field, x_n_minus_1(self.field, self.n), self.generator)
        return tuple(q)

    def element_coords(self, p: Sequence | None = None) -> tuple:
        """Coordinates of ``p(x)`` in ``k<x>`` (exponents reduced mod n)."""
        F = self.field
        p = self.generator if p is None else p
        out = [F.zero] * self.n
        for k, c in enumerate(p):
            out[k % self.n] = F.add(out[k % self.n], c)
        return tuple(out)

    def as_ideal(self, h: HopfStructure) -> RightSubmodule:
        alg = h.algebra
        return right_ideal_closure([alg.element(self.element_coords())], alg)

    def to_json(self) -> dict:
        return {"n": self.n, "generator": [self.field.to_json(c) for c in self.generator], "dim": self.dim}


def reversed_parity_check(code: CyclicCode) -> tuple:
    """``h_0^{-1} X^d h(X^{-1})`` for the parity-check polynomial ``h`` of degree ``d``."""
    F = code.field
    h = list(code.parity_check)
    inv0 = F.inv(h[0])
    return tuple(F.mul(inv0, c) for c in reversed(h))


def cyclic_dual(code: CyclicCode, h: HopfStructure | None = None) -> CyclicCode:
    """The dual code, checked against the orthogonal of the ideal under the integral form."""
    from hopfcode.hopf.named import build_cyclic

    dual = CyclicCode(code.n, reversed_parity_check(code), code.field)
    if h is None:
        h = build_cyclic(code.n, code.field)
    form = form_from_integral(h)
    ideal = code.as_ideal(h).subspace
    perp_l = orthogonal_left(form, ideal)
    perp_r = orthogonal_right(form, ideal)
    expected = dual.as_ideal(h).subspace
    if perp_l != expected or perp_r != expected:
        raise ConstructionError("orthogonal of the ideal differs from the reversed parity-check code")
    return dual


def dual_via_form(code: CyclicCode, h: HopfStructure):
    form = form_from_integral(h)
    return orthogonal_left(form, code.as_ideal(h).subspace)
