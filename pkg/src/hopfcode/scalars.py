"""Exact scalar fields: prime fields GF(p) and cyclotomic fields Q(zeta_n).

Elements are stored as plain hashable values in canonical form so that
equality of scalars is equality of representations:

* ``PrimeField`` elements are ints in ``range(p)``.
* ``CyclotomicField`` elements are tuples of ``Fraction`` of length
  ``deg(Phi_n)``, the coefficients of the reduced polynomial in zeta,
  lowest degree first.

Fields carry the arithmetic; the values themselves are dumb.  This keeps
the hot loops in ``linalg`` free of per-element object overhead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from hopfcode.errors import CompositeModulus, DivisionByZero, InvalidOrder, NoSuchRoot

Rational = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """Serializable description of a field: ``prime`` with ``p`` or ``cyclotomic`` with ``n``."""

    kind: str
    p: int | None = None
    n: int | None = None

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        kind = obj.get("kind")
        if kind == "prime":
            return cls("prime", p=int(obj["p"]))
        if kind == "cyclotomic":
            return cls("cyclotomic", n=int(obj["n"]))
        raise ValueError(f"unknown field kind {kind!r}")

    def to_json(self) -> dict:
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        return {"kind": "cyclotomic", "n": self.n}


class Field:
    """Common interface; concrete subclasses implement the arithmetic."""

    kind: str
    characteristic: int

    # -- derived helpers -------------------------------------------------
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            a = self.inv(a)
            k = -k
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def multiplicative_order(self, a) -> int | None:
        """Order of ``a`` in the unit group, or None if it exceeds a sane bound."""
        if self.is_zero(a):
            raise DivisionByZero("zero has no multiplicative order")
        x = a
        for k in range(1, 10_000):
            if x == self.one:
                return k
            x = self.mul(x, a)
        return None


@dataclass(frozen=True)
class PrimeField(Field):
    p: int
    kind: str = field(default="prime", init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise CompositeModulus(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 % self.p

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, value) -> int:
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"denominator {value.denominator} vanishes mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, str):
            return self(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def to_json(self, a: int) -> str:
        return str(a)

    def from_json(self, s) -> int:
        return self(Fraction(str(s)))

    def format(self, a: int) -> str:
        return str(a)

    def spec(self) -> FieldSpec:
        return FieldSpec("prime", p=self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"


# --- rational polynomial helpers for the cyclotomic backend -------------------


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise DivisionByZero("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        coeff = a[-1] / lead
        q[shift] = coeff
        for i, y in enumerate(b):
            a[shift + i] -= coeff * y
        _trim(a)
    return _trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first, by exact division of X^n - 1."""
    if n < 1:
        raise InvalidOrder(f"cyclotomic order must be >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


@dataclass(frozen=True)
class CyclotomicField(Field):
    """Q(zeta_n) with elements reduced modulo the n-th cyclotomic polynomial."""

    n: int
    kind: str = field(default="cyclotomic", init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidOrder(f"cyclotomic order must be >= 1, got {self.n}")

    @property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.n)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def zero(self) -> tuple:
        return (Fraction(0),) * self.degree

    @property
    def one(self) -> tuple:
        return self._reduce([Fraction(1)])

    def _reduce(self, coeffs) -> tuple:
        phi = self.modulus
        d = self.degree
        c = [Fraction(x) for x in coeffs]
        # Phi_n is monic, so reduction needs no division.
        for top in range(len(c) - 1, d - 1, -1):
            lead = c[top]
            if lead:
                shift = top - d
                for i in range(d + 1):
                    c[shift + i] -= lead * phi[i]
        c = c[:d] + [Fraction(0)] * max(0, d - len(c))
        return tuple(c)

    def __call__(self, value) -> tuple:
        if isinstance(value, tuple):
            return self._reduce(value)
        if isinstance(value, (list,)):
            return self._reduce([Fraction(v) for v in value])
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, (int, Fraction)):
            return self._reduce([Fraction(value)])
        raise TypeError(f"cannot coerce {value!r} into Q(zeta_{self.n})")

    def generator(self) -> tuple:
        """The canonical primitive n-th root of unity (the class of X)."""
        return self._reduce([Fraction(0), Fraction(1)])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        return self._reduce(_poly_mul(list(a), list(b)) or [Fraction(0)])

    def inv(self, a):
        if not any(a):
            raise DivisionByZero("inverse of zero")
        # extended Euclid in Q[X] against the irreducible modulus
        r0, r1 = [Fraction(c) for c in self.modulus], _trim(list(a))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant
        c = r1[0]
        return self._reduce([x / c for x in s1])

    def elements(self):
        raise TypeError("cyclotomic fields are infinite")

    @property
    def order(self):
        return None

    def to_json(self, a) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in a]

    def from_json(self, s) -> tuple:
        if isinstance(s, (list, tuple)):
            return self._reduce([Fraction(x) for x in s])
        return self(Fraction(s))

    def format(self, a) -> str:
        terms = []
        for k, c in enumerate(a):
            if c:
                mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                coef = str(c)
                terms.append(coef if not mono else (mono if c == 1 else f"{coef}*{mono}"))
        return " + ".join(terms) if terms else "0"

    def spec(self) -> FieldSpec:
        return FieldSpec("cyclotomic", n=self.n)

    def __str__(self) -> str:
        return f"Q(zeta_{self.n})"


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def field_create(spec: FieldSpec | dict) -> Field:
    if isinstance(spec, dict):
        spec = FieldSpec.from_json(spec)
    if spec.kind == "prime":
        return PrimeField(spec.p)
    if spec.kind == "cyclotomic":
        return CyclotomicField(spec.n)
    raise ValueError(f"unknown field kind {spec.kind!r}")


def primitive_root_of_unity(F: Field, n: int):
    """Deterministic primitive n-th root of unity in ``F``.

    Prime fields return the smallest qualifying residue; cyclotomic fields
    return ``zeta^(order/n)`` for the canonical generator ``zeta``.
    """
    if n < 1:
        raise NoSuchRoot(f"order must be >= 1, got {n}")
    if isinstance(F, PrimeField):
        if (F.p - 1) % n:
            raise NoSuchRoot(f"{n} does not divide {F.p - 1}")
        if n == 1:
            return F.one
        factors = prime_factors(n)
        for a in range(2, F.p):
            if pow(a, n, F.p) == 1 and all(pow(a, n // r, F.p) != 1 for r in factors):
                return a
        raise NoSuchRoot(f"no element of order {n} in GF({F.p})")  # unreachable for prime p
    if isinstance(F, CyclotomicField):
        if F.n % n:
            raise NoSuchRoot(f"{n} does not divide cyclotomic order {F.n}")
        return F.pow(F.generator(), F.n // n)
    raise TypeError(f"unsupported field {F!r}")


def scalar_inverse(F: Field, a):
    return F.inv(a)
