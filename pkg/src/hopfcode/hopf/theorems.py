"""Predicted orthogonals of indecomposable right ideals in the Taft and CDMM algebras.

Each check builds the predicted subspace from the closed formula, computes
both orthogonals of the (possibly scaled) ideal by kernel solving, and
reports whether the prediction and the two computations coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from hopfcode.algebra import AlgebraElement, invert, left_multiply_subspace
from hopfcode.errors import IndexOutOfRange, NotInvertible
from hopfcode.forms import BilinearForm, orthogonal_left, orthogonal_right
from hopfcode.hopf.named import cdmm_index
from hopfcode.hopf.structure import HopfStructure, form_from_integral
from hopfcode.linalg import Subspace
from hopfcode.omega import OmegaAlgebra, ideal_N, sum_of_ideals


@dataclass(frozen=True)
class OrthogonalCheck:
    predicted: Subspace
    computed_right: Subspace
    computed_left: Subspace

    @property
    def computed(self) -> Subspace:
        return self.computed_right

    @property
    def sides_agree(self) -> bool:
        return self.computed_left == self.computed_right

    @property
    def equal(self) -> bool:
        return self.predicted == self.computed_right and self.sides_agree

    def __iter__(self):
        yield self.predicted
        yield self.computed_right
        yield self.equal

    def to_json(self, ideal: dict) -> dict:
        return {
            "ideal": ideal,
            "predicted_basis": self.predicted.to_json(),
            "computed_basis": self.computed_right.to_json(),
            "computed_left_basis": self.computed_left.to_json(),
            "left_equals_right": self.sides_agree,
            "equal": self.equal,
        }


def unit_in_R(alg: OmegaAlgebra, coeffs: Sequence | None) -> AlgebraElement:
    """``a(x) = sum coeffs[k] x^k`` rescaled to ``a(0) = 1``; raises NotInvertible if ``a(0) = 0``."""
    F = alg.field
    if coeffs is None:
        return alg.one
    coeffs = [F(c) if not isinstance(c, tuple) else c for c in coeffs] or [F.zero]
    if coeffs[0] == F.zero:
        raise NotInvertible("a(x) with a(0) = 0 is not invertible")
    inv0 = F.inv(coeffs[0])
    return alg.r_element([F.mul(inv0, c) for c in coeffs])


def _check(h: HopfStructure, form: BilinearForm, ideal: Subspace, predicted: Subspace, a: AlgebraElement) -> OrthogonalCheck:
    scaled = left_multiply_subspace(a, ideal)
    # (aN)^⊥ = S(a^{-1}) N^⊥
    s_ainv = h.S(invert(a))
    return OrthogonalCheck(
        predicted=left_multiply_subspace(s_ainv, predicted),
        computed_right=orthogonal_right(form, scaled),
        computed_left=orthogonal_left(form, scaled),
    )


def predicted_taft(alg: OmegaAlgebra, s: int, m: int) -> Subspace:
    """``N_{s,0}^⊥ = sum_{t != 1-s} N_{t,0}``, plus ``N_{1-s,N-m}`` when ``m > 0``."""
    N = alg.capN
    pairs = [(t, 0) for t in range(N) if t != (1 - s) % N]
    if m > 0:
        pairs.append(((1 - s) % N, N - m))
    return sum_of_ideals(alg, pairs).subspace


def theorem_orthogonal_taft(h: HopfStructure, s: int, m: int, a=None, form: BilinearForm | None = None) -> OrthogonalCheck:
    alg: OmegaAlgebra = h.algebra
    ideal = ideal_N(alg, s, m).subspace
    unit = a if isinstance(a, AlgebraElement) else unit_in_R(alg, a)
    return _check(h, form or form_from_integral(h), ideal, predicted_taft(alg, s, m), unit)


def predicted_cdmm(alg: OmegaAlgebra, s: int, t: int, m: int) -> Subspace:
    """``(sum_j N_{1-s,j,0}) + (sum_{j != (-1)^{s+1} t + 3} N_{s,j,0})``, plus ``N_{s,(-1)^{s+1}t+3,2-m}``."""
    partner = ((1 if s % 2 else -1) * t + 3) % 6
    pairs = [(cdmm_index(1 - s, j), 0) for j in range(6)]
    pairs += [(cdmm_index(s, j), 0) for j in range(6) if j != partner]
    if 2 - m < alg.capN:
        pairs.append((cdmm_index(s, partner), 2 - m))
    return sum_of_ideals(alg, pairs).subspace


def theorem_orthogonal_cdmm(h: HopfStructure, s: int, t: int, m: int, a=None, form: BilinearForm | None = None) -> OrthogonalCheck:
    if not (0 <= s <= 1 and 0 <= t <= 5 and 0 <= m <= 1):
        raise IndexOutOfRange(f"(s, t, m) = ({s}, {t}, {m}) out of range")
    alg: OmegaAlgebra = h.algebra
    ideal = ideal_N(alg, cdmm_index(s, t), m).subspace
    unit = a if isinstance(a, AlgebraElement) else unit_in_R(alg, a)
    return _check(h, form or form_from_integral(h), ideal, predicted_cdmm(alg, s, t, m), unit)
