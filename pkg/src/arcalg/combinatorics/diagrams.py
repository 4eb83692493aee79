"""Cup diagrams, orientations, degree and the weight surgeries λ′, λ⁺, λ⁻."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from ..exceptions import ValidationError
from .weights import DOWN, UP, Sign, Weight, weight_to_partition


@dataclass(frozen=True)
class CupDiagram:
    """A crossingless matching of ``1..size`` into cups and rays.

    The same object serves as a cap diagram when drawn above a weight.
    """

    size: int
    cups: tuple[tuple[int, int], ...]
    rays: tuple[int, ...]

    def partner(self, i: int) -> int | None:
        for a, b in self.cups:
            if a == i:
                return b
            if b == i:
                return a
        return None

    def partners(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.cups:
            out[a] = b
            out[b] = a
        return out

    @property
    def defect(self) -> int:
        return len(self.cups)

    def to_dict(self) -> dict[str, Any]:
        return {
            "cups": [[a, b] for a, b in sorted(self.cups)],
            "rays": sorted(self.rays),
        }


@lru_cache(maxsize=None)
def cup_diagram(w: Weight) -> CupDiagram:
    """
    Build the cup diagram of ``w``.

    Neighbouring ``v ^`` pairs (only already cupped vertices in between) are
    joined repeatedly; whatever is left over gets a ray.

    Example:
        >>> cup_diagram(Weight("v^v^^vv^^v")).to_dict()
        {'cups': [[1, 2], [3, 4], [6, 9], [7, 8]], 'rays': [5, 10]}
    """
    open_downs: list[int] = []
    cups: list[tuple[int, int]] = []
    rays: list[int] = []
    for pos, s in enumerate(w.symbols, start=1):
        if s == DOWN:
            open_downs.append(pos)
        elif open_downs:
            cups.append((open_downs.pop(), pos))
        else:
            rays.append(pos)
    rays.extend(open_downs)
    return CupDiagram(w.size, tuple(sorted(cups)), tuple(sorted(rays)))


def is_oriented(d: CupDiagram, w: Weight) -> bool:
    """Return True if ``w`` orients the cup (or cap) diagram ``d``.

    Every cup needs one ``v`` and one ``^`` at its ends, and no ``v`` ray may
    sit to the left of a ``^`` ray.
    """
    if d.size != w.size:
        return False
    s = w.symbols
    for a, b in d.cups:
        if s[a - 1] == s[b - 1]:
            return False
    seen_down_ray = False
    for r in d.rays:
        if s[r - 1] == DOWN:
            seen_down_ray = True
        elif seen_down_ray:
            return False
    return True


def is_clockwise(left: str, right: str) -> bool:
    """An oriented cup or cap is clockwise when it reads ``^ v``."""
    return left == UP and right == DOWN


def degree(d: CupDiagram, w: Weight) -> int:
    """
    Count clockwise cups of ``d`` oriented by ``w``.

    Caps use the same rule, so the mirrored reading has the same degree.

    Raises:
        ValidationError: If ``w`` does not orient ``d``.
    """
    if not is_oriented(d, w):
        raise ValidationError(f"Weight {w} does not orient the diagram {d.to_dict()}.")
    s = w.symbols
    return sum(1 for a, b in d.cups if is_clockwise(s[a - 1], s[b - 1]))


def ell(w: Weight, t: int) -> int:
    """ℓ_t(w): number of ``v`` minus number of ``^`` among positions 1..t."""
    head = w.symbols[:t]
    return head.count(DOWN) - head.count(UP)


def defect(w: Weight) -> int:
    return cup_diagram(w).defect


def is_regular(w: Weight) -> bool:
    """A weight is regular when its cup diagram has min(m, n) cups."""
    return defect(w) == min(w.m, w.n)


def staircase_contains(w: Weight) -> bool:
    """True if the partition of ``w`` contains the staircase (k, k-1, ..., 1).

    Here k = min(m, n). The staircase is self-conjugate, so the same test
    serves both m ≤ n and m > n.
    """
    k = min(w.m, w.n)
    parts = weight_to_partition(w).padded()
    return all(parts[r] >= k - r for r in range(k))


def lambda_circ(w: Weight) -> Weight:
    """
    The regular weight λ° attached to ``w``.

    Neighbouring ``^ v`` pairs are joined by clockwise cups first; the
    leftover ``v…v^…^`` block is then closed by nested anticlockwise cups
    and the rest become rays. λ° is ``w`` with every clockwise cup flipped.

    Example:
        >>> str(lambda_circ(Weight("^v")))
        'v^'
    """
    chars = list(w.symbols)
    open_ups: list[int] = []
    for pos, s in enumerate(w.symbols):
        if s == UP:
            open_ups.append(pos)
        elif open_ups:
            left = open_ups.pop()
            chars[left], chars[pos] = DOWN, UP
    return Weight("".join(chars))


def _check_position(w: Weight, i: int, limit: int) -> None:
    if not 1 <= i <= limit:
        raise ValidationError(f"Position {i} is out of range 1..{limit} for {w}.")


def remove_pair(w: Weight, i: int) -> Weight:
    """λ′: delete the mixed pair at positions i, i+1.

    Raises:
        ValidationError: If positions i, i+1 do not hold one ``v`` and one ``^``.
    """
    _check_position(w, i, w.size - 1)
    if w.at(i) == w.at(i + 1):
        raise ValidationError(
            f"Positions {i},{i + 1} of {w} must hold one 'v' and one '^'."
        )
    s = w.symbols
    return Weight(s[: i - 1] + s[i + 1 :])


def insert_pair(w: Weight, i: int, sign: Sign) -> Weight:
    """λ⁺ (``sign="+"``, inserts ``v^``) or λ⁻ (``sign="-"``, inserts ``^v``)."""
    _check_position(w, i, w.size + 1)
    if sign not in ("+", "-"):
        raise ValidationError(f"Sign must be '+' or '-'. Got {sign!r}.")
    pair = DOWN + UP if sign == "+" else UP + DOWN
    s = w.symbols
    return Weight(s[: i - 1] + pair + s[i - 1 :])


def sign_at(w: Weight, i: int) -> Sign | None:
    """'+' if w ∈ Λ^{∨∧}(i), '-' if w ∈ Λ^{∧∨}(i), else None."""
    if i < 1 or i >= w.size:
        return None
    pair = w.symbols[i - 1 : i + 1]
    if pair == DOWN + UP:
        return "+"
    if pair == UP + DOWN:
        return "-"
    return None


def descents(w: Weight) -> list[int]:
    """Positions i with w ∈ Λ^{∨∧}(i)."""
    return [i for i in range(1, w.size) if sign_at(w, i) == "+"]


def ascents(w: Weight) -> list[int]:
    """Positions i with w ∈ Λ^{∧∨}(i)."""
    return [i for i in range(1, w.size) if sign_at(w, i) == "-"]


def _is_balanced_regular(segment: str) -> bool:
    # a segment lies in Λ°_{t,t} iff it is a complete v/^ bracket word
    depth = 0
    for s in segment:
        depth += 1 if s == DOWN else -1
        if depth < 0:
            return False
    return depth == 0


def arrow_rel(a: Weight, b: Weight) -> bool:
    """Return True if ``a → b``.

    ``b`` must come from ``a`` by swapping a ``v`` at i with a ``^`` at j > i
    whose in-between segment is a regular weight of Λ_{t,t}.
    """
    if a.box != b.box or a == b:
        return False
    diff = [p for p, (x, y) in enumerate(zip(a.symbols, b.symbols, strict=True)) if x != y]
    if len(diff) != 2:
        return False
    i, j = diff
    if a.symbols[i] != DOWN or a.symbols[j] != UP:
        return False
    return _is_balanced_regular(a.symbols[i + 1 : j])


def arrow_successors(a: Weight) -> list[Weight]:
    """All ``b`` with ``a → b``."""
    out = []
    s = a.symbols
    for i, x in enumerate(s):
        if x != DOWN:
            continue
        depth = 0
        for j in range(i + 1, len(s)):
            if s[j] == UP and depth == 0:
                out.append(Weight(s[:i] + UP + s[i + 1 : j] + DOWN + s[j + 1 :]))
            depth += 1 if s[j] == DOWN else -1
            if depth < 0:
                break
    return out


def min_ell_on_ups(w: Weight) -> int | None:
    """min ℓ_h(w) over positions h labelled ``^``; None when there are none."""
    values = [ell(w, h) for h in range(1, w.size + 1) if w.at(h) == UP]
    return min(values) if values else None


def render_ascii(d: CupDiagram, w: Weight | None = None) -> str:
    """Draw ``d`` under its weight line, one row per nesting depth."""
    width = 2 * d.size
    depth: dict[tuple[int, int], int] = {}
    for a, b in sorted(d.cups, key=lambda c: c[1] - c[0]):
        inner = [depth[c] for c in depth if a < c[0] and c[1] < b]
        depth[(a, b)] = 1 + max(inner, default=0)
    rows = max(depth.values(), default=0)
    label = " ".join(w.symbols) if w is not None else " ".join("." * d.size)
    lines = [label]
    for r in range(1, rows + 1):
        line = [" "] * width
        for (a, b), dpt in depth.items():
            if dpt >= r:
                line[2 * (a - 1)] = "|"
                line[2 * (b - 1)] = "|"
            if dpt == r:
                for x in range(2 * (a - 1), 2 * (b - 1) + 1):
                    line[x] = "_" if line[x] == " " else line[x]
        for ray in d.rays:
            line[2 * (ray - 1)] = "|"
        lines.append("".join(line).rstrip())
    if rows == 0 and d.rays:
        lines.append(" ".join("|" for _ in range(d.size)))
    return "\n".join(lines)
