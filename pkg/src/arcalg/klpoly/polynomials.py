"""Polynomials in q with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from sympy import Poly as SymPoly
from sympy import Symbol

q = Symbol("q")


@dataclass(frozen=True)
class Poly:
    """Coefficient list of a polynomial in q; index k holds the q^k coefficient.

    Trailing zeros are stripped, so the zero polynomial is ``Poly(())``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Poly:
        return cls((0,) * k + (c,))

    @classmethod
    def from_sympy(cls, p: SymPoly) -> Poly:
        return cls(tuple(int(c) for c in reversed(p.all_coeffs())))

    def to_sympy(self) -> SymPoly:
        return SymPoly.from_list(list(reversed(self.coeffs)) or [0], q, domain="ZZ")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: Poly) -> Poly:
        return Poly.from_sympy(self.to_sympy() + other.to_sympy())

    def __sub__(self, other: Poly) -> Poly:
        return Poly.from_sympy(self.to_sympy() - other.to_sympy())

    def __mul__(self, other: Poly) -> Poly:
        return Poly.from_sympy(self.to_sympy() * other.to_sympy())

    def shift(self, k: int = 1) -> Poly:
        """Multiply by q^k."""
        if self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs)

    def at_minus_q(self) -> Poly:
        """Substitute q ↦ -q."""
        return Poly(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def evaluate(self, value: int) -> int:
        return int(self.to_sympy().eval(value))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Any) -> Poly:
        return cls(tuple(int(c) for c in data))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = "q" if k == 1 else f"q^{k}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = Poly()
ONE = Poly((1,))
