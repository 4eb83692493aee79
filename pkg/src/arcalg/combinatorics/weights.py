"""Weights, partitions and the dominance order on Λ_{m,n}.

A weight is a word in the symbols ``^`` (up) and ``v`` (down) with ``m`` ups
and ``n`` downs. Positions are 1-based throughout the public API.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from ..conf import get_setting
from ..exceptions import ResourceCapExceeded, ValidationError

UP = "^"
DOWN = "v"

Sign = Literal["+", "-"]

# "v" sorts before "^" in the enumeration order
_ORDER_KEY = str.maketrans({DOWN: "0", UP: "1"})


@dataclass(frozen=True)
class Weight:
    """A weight in Λ_{m,n}, stored as its symbol string."""

    symbols: str

    def __post_init__(self) -> None:
        bad = set(self.symbols) - {UP, DOWN}
        if bad:
            raise ValidationError(
                f"Weight {self.symbols!r} contains invalid symbols "
                f"{''.join(sorted(bad))!r}; use '^' and 'v' only."
            )

    @classmethod
    def parse(cls, text: str, m: int | None = None, n: int | None = None) -> Weight:
        """Parse ``text`` and optionally check it lies in Λ_{m,n}."""
        w = cls(text.strip())
        if m is not None and w.m != m:
            raise ValidationError(f"Weight {w} has {w.m} '^' symbols, expected {m}.")
        if n is not None and w.n != n:
            raise ValidationError(f"Weight {w} has {w.n} 'v' symbols, expected {n}.")
        return w

    @property
    def m(self) -> int:
        return self.symbols.count(UP)

    @property
    def n(self) -> int:
        return self.symbols.count(DOWN)

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def box(self) -> tuple[int, int]:
        return (self.m, self.n)

    def at(self, i: int) -> str:
        """Symbol at 1-based position ``i``."""
        return self.symbols[i - 1]

    def rotated(self) -> Weight:
        """The weight seen after a half turn: reversed, with ups and downs swapped."""
        flipped = self.symbols[::-1].translate(str.maketrans({UP: DOWN, DOWN: UP}))
        return Weight(flipped)

    def __str__(self) -> str:
        return self.symbols

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class Partition:
    """A partition fitting in the m×n box (at most n parts, each at most m)."""

    parts: tuple[int, ...]
    m: int
    n: int

    def __post_init__(self) -> None:
        if any(p < 0 for p in self.parts):
            raise ValidationError(f"Partition {self.parts} has negative parts.")
        if any(a < b for a, b in itertools.pairwise(self.parts)):
            raise ValidationError(f"Partition {self.parts} is not weakly decreasing.")
        # only trailing zeros remain to drop
        parts = tuple(p for p in self.parts if p != 0)
        if parts and parts[0] > self.m or len(parts) > self.n:
            raise ValidationError(
                f"Partition {self.parts} does not fit in the {self.m}x{self.n} box."
            )
        object.__setattr__(self, "parts", parts)

    def padded(self) -> tuple[int, ...]:
        """Parts padded with zeros to length ``n``."""
        return self.parts + (0,) * (self.n - len(self.parts))

    def contains(self, other: Partition) -> bool:
        """Box containment ``other ⊆ self``."""
        return all(b <= a for a, b in zip(self.padded(), other.padded(), strict=True))

    def transpose(self) -> Partition:
        """The conjugate partition, which fits in the n×m box."""
        conj = tuple(sum(1 for p in self.parts if p > k) for k in range(self.m))
        return Partition(conj, self.n, self.m)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def check_enumeration_cap(m: int, n: int) -> None:
    """Reject boxes whose weight set exceeds ``ENUMERATION_CAP``."""
    if m < 0 or n < 0:
        raise ValidationError(f"Box sizes must be non-negative. Got ({m}, {n}).")
    count = math.comb(m + n, m)
    limit = int(get_setting("ENUMERATION_CAP"))
    if count > limit:
        raise ResourceCapExceeded("ENUMERATION_CAP", limit, count, f"Λ_{{{m},{n}}}")


@lru_cache(maxsize=None)
def _enumerate(m: int, n: int) -> tuple[Weight, ...]:
    words = []
    for ups in itertools.combinations(range(m + n), m):
        chars = [DOWN] * (m + n)
        for p in ups:
            chars[p] = UP
        words.append("".join(chars))
    words.sort(key=lambda s: s.translate(_ORDER_KEY))
    return tuple(Weight(s) for s in words)


def enumerate_weights(m: int, n: int) -> list[Weight]:
    """
    List every weight of Λ_{m,n} exactly once.

    Args:
        m: Number of ``^`` symbols
        n: Number of ``v`` symbols

    Returns:
        All C(m+n, m) weights, lexicographically ordered with ``v`` < ``^``

    Raises:
        ResourceCapExceeded: If C(m+n, m) is above ``ENUMERATION_CAP``

    Example:
        >>> [str(w) for w in enumerate_weights(1, 1)]
        ['v^', '^v']
    """
    check_enumeration_cap(m, n)
    return list(_enumerate(m, n))


def empty_weight(m: int, n: int) -> Weight:
    """The maximal weight ∧…∧∨…∨, i.e. the empty partition."""
    return Weight(UP * m + DOWN * n)


def full_weight(m: int, n: int) -> Weight:
    """The minimal weight ∨…∨∧…∧, i.e. the partition (m^n)."""
    return Weight(DOWN * n + UP * m)


def weight_to_partition(w: Weight) -> Partition:
    """
    Read the partition traced by ``w``.

    Every ``v`` is a north-easterly step and every ``^`` a south-easterly
    step. The part attached to the k-th ``v`` is the number of ``^`` to its
    right.

    Example:
        >>> str(weight_to_partition(Weight("v^v^^vv^^v")))
        '(5,4,2,2)'
    """
    parts = []
    ups_right = w.m
    for s in w.symbols:
        if s == UP:
            ups_right -= 1
        else:
            parts.append(ups_right)
    return Partition(tuple(parts), w.m, w.n)


def partition_to_weight(p: Partition, m: int | None = None, n: int | None = None) -> Weight:
    """Inverse of :func:`weight_to_partition`.

    Raises:
        ValidationError: If ``p`` does not fit in the m×n box.
    """
    if m is not None or n is not None:
        p = Partition(p.parts, p.m if m is None else m, p.n if n is None else n)
    padded = p.padded()
    chars = []
    previous = p.m
    for part in padded:
        chars.append(UP * (previous - part))
        chars.append(DOWN)
        previous = part
    chars.append(UP * previous)
    return Weight("".join(chars))


def _check_same_box(a: Weight, b: Weight) -> None:
    if a.box != b.box:
        raise ValidationError(
            f"Weights {a} and {b} lie in different boxes {a.box} and {b.box}."
        )


def leq(a: Weight, b: Weight) -> bool:
    """
    Return True if ``a ≤ b``.

    Moving a ``v`` to the right makes a weight bigger, so ``a ≤ b`` exactly
    when the partition of ``b`` sits inside the partition of ``a``.

    Raises:
        ValidationError: If the weights lie in different boxes.
    """
    _check_same_box(a, b)
    return weight_to_partition(a).contains(weight_to_partition(b))


def less(a: Weight, b: Weight) -> bool:
    return a != b and leq(a, b)


def covers(w: Weight) -> Iterator[Weight]:
    """Weights obtained from ``w`` by swapping one ``v`` with a later ``^``."""
    s = w.symbols
    for i, a in enumerate(s):
        if a != DOWN:
            continue
        for j in range(i + 1, len(s)):
            if s[j] == UP:
                yield Weight(s[:i] + UP + s[i + 1 : j] + DOWN + s[j + 1 :])


def upward_closure(w: Weight) -> set[Weight]:
    """All weights reachable from ``w`` by repeated ``v``/``^`` swaps."""
    seen = {w}
    stack = [w]
    while stack:
        for nxt in covers(stack.pop()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def sort_descending(weights: list[Weight]) -> list[Weight]:
    """A linear extension of the order, largest weights first."""
    return sorted(weights, key=lambda w: (weight_to_partition(w).size, w.symbols))
