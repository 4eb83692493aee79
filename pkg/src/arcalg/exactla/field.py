"""Exact ground fields: the rationals and prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any

from sympy import GF, QQ, isprime

from ..exceptions import ValidationError


@dataclass(frozen=True)
class Field:
    """The rationals (characteristic 0) or F_p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p < 0 or (p != 0 and not isprime(p)):
            raise ValidationError(f"Characteristic must be 0 or a prime. Got {p}.")

    @classmethod
    def rationals(cls) -> Field:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(p)

    @cached_property
    def domain(self) -> Any:
        """The sympy domain (``QQ`` or ``GF(p)``) backing this field."""
        return QQ if self.characteristic == 0 else GF(self.characteristic)

    @property
    def zero(self) -> Any:
        return self.domain.zero

    @property
    def one(self) -> Any:
        return self.domain.one

    def __call__(self, value: Any) -> Any:
        """Convert an int (or a domain element) into this field."""
        return self.domain.convert(value)

    def format(self, value: Any) -> str:
        """Render a scalar as ``"3/2"`` or ``"5 mod 7"``."""
        p = self.characteristic
        if p:
            return f"{int(self.domain.to_int(value)) % p} mod {p}"
        num, den = int(self.domain.numer(value)), int(self.domain.denom(value))
        return str(num) if den == 1 else f"{num}/{den}"

    def parse(self, text: str) -> Any:
        """Inverse of :meth:`format`; plain integers are accepted too."""
        body = text.strip()
        value, sep, modulus = body.partition(" mod ")
        if sep and modulus.strip() != str(self.characteristic):
            raise ValidationError(f"Scalar {text!r} lives in F_{modulus}, not in {self}.")
        try:
            if sep:
                return self(int(value))
            if "/" in body:
                num, _, den = body.partition("/")
                return self(int(num)) / self(int(den))
            return self(int(body))
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"Cannot parse scalar {text!r}.") from e

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
