"""Surgery on stacked diagrams.

A stacked picture is a sequence of weight rows. Below row 0 sits the cup
diagram of a weight, above the last row the cap diagram of a weight, and
between consecutive rows a layer:

* ``mirror(w)``: the caps of ``w`` over the lower row facing the cups of
  ``w`` under the upper row, with vertical strands at the rays of ``w``;
* ``t(i)``: a cap joining positions i, i+1 of the lower row, every other
  vertex running straight up to the (two shorter) upper row;
* ``tstar(i)``: the upside-down version, a cup under positions i, i+1 of
  the longer upper row.

Reducing a mirror layer replaces each cap/cup pair facing each other by two
vertical strands, one pair at a time, and re-orients the touched components
with the merge and split rules. Labels on the rows carry the orientation:
a vertical strand keeps the label, a cup or cap flips it.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Literal

from ..combinatorics import DOWN, UP, Weight, cup_diagram
from ..exceptions import ArcAlgError, ValidationError

logger = logging.getLogger(__name__)

Vertex = tuple[int, int]
Labels = tuple[str, ...]
Schedule = Literal["ltr", "rtl"]

LayerKind = Literal["mirror", "t", "tstar"]


@dataclass(frozen=True)
class Layer:
    """What sits between two consecutive rows."""

    kind: LayerKind
    weight: Weight | None = None
    position: int = 0

    @classmethod
    def mirror(cls, w: Weight) -> Layer:
        return cls("mirror", weight=w)

    @classmethod
    def t(cls, i: int) -> Layer:
        return cls("t", position=i)

    @classmethod
    def tstar(cls, i: int) -> Layer:
        return cls("tstar", position=i)


@dataclass(frozen=True)
class Picture:
    """Rows of labels stacked between a bottom cup and a top cap diagram."""

    bottom: Weight
    rows: Labels
    layers: tuple[Layer, ...]
    top: Weight

    def __post_init__(self) -> None:
        if len(self.layers) != len(self.rows) - 1:
            raise ValidationError("A picture needs exactly one layer between rows.")
        if self.bottom.size != len(self.rows[0]) or self.top.size != len(self.rows[-1]):
            raise ValidationError("Outer diagrams do not match the outer rows.")
        for r, layer in enumerate(self.layers):
            lower, upper = len(self.rows[r]), len(self.rows[r + 1])
            if layer.kind == "mirror":
                assert layer.weight is not None
                ok = lower == upper == layer.weight.size
            elif layer.kind == "t":
                ok = upper == lower - 2 and 1 <= layer.position < lower
            else:
                ok = lower == upper - 2 and 1 <= layer.position < upper
            if not ok:
                raise ValidationError(f"Layer {layer} does not fit rows {r} and {r + 1}.")


@dataclass
class _Wiring:
    """Edges of a picture. ``None`` marks a strand leaving through the boundary."""

    up: dict[Vertex, Vertex | None] = field(default_factory=dict)
    down: dict[Vertex, Vertex | None] = field(default_factory=dict)
    xs: list[list[int]] = field(default_factory=list)


def _wire(p: Picture) -> tuple[_Wiring, list[tuple[Vertex, Vertex, Vertex, Vertex]]]:
    """Build the edges and list the facing cap/cup pairs of every mirror layer.

    Returns the wiring and, per pair, ``(cap_left, cap_right, cup_left,
    cup_right)``.
    """
    wiring = _Wiring()
    up, down = wiring.up, wiring.down
    pairs: list[tuple[Vertex, Vertex, Vertex, Vertex]] = []

    bottom = cup_diagram(p.bottom)
    for a, b in bottom.cups:
        down[(0, a - 1)] = (0, b - 1)
        down[(0, b - 1)] = (0, a - 1)
    for r in bottom.rays:
        down[(0, r - 1)] = None

    last = len(p.rows) - 1
    top = cup_diagram(p.top)
    for a, b in top.cups:
        up[(last, a - 1)] = (last, b - 1)
        up[(last, b - 1)] = (last, a - 1)
    for r in top.rays:
        up[(last, r - 1)] = None

    for r, layer in enumerate(p.layers):
        lo, hi = r, r + 1
        if layer.kind == "mirror":
            assert layer.weight is not None
            d = cup_diagram(layer.weight)
            for a, b in d.cups:
                up[(lo, a - 1)] = (lo, b - 1)
                up[(lo, b - 1)] = (lo, a - 1)
                down[(hi, a - 1)] = (hi, b - 1)
                down[(hi, b - 1)] = (hi, a - 1)
                pairs.append(((lo, a - 1), (lo, b - 1), (hi, a - 1), (hi, b - 1)))
            for x in d.rays:
                up[(lo, x - 1)] = (hi, x - 1)
                down[(hi, x - 1)] = (lo, x - 1)
        elif layer.kind == "t":
            i = layer.position - 1
            up[(lo, i)] = (lo, i + 1)
            up[(lo, i + 1)] = (lo, i)
            for x in range(len(p.rows[lo])):
                if x < i:
                    up[(lo, x)] = (hi, x)
                    down[(hi, x)] = (lo, x)
                elif x > i + 1:
                    up[(lo, x)] = (hi, x - 2)
                    down[(hi, x - 2)] = (lo, x)
        else:
            i = layer.position - 1
            down[(hi, i)] = (hi, i + 1)
            down[(hi, i + 1)] = (hi, i)
            for x in range(len(p.rows[lo])):
                target = x if x < i else x + 2
                up[(lo, x)] = (hi, target)
                down[(hi, target)] = (lo, x)

    wiring.xs = _coordinates(p)
    return wiring, pairs


def _coordinates(p: Picture) -> list[list[int]]:
    """Horizontal position of every vertex; vertical strands keep their x."""
    sizes = [len(r) for r in p.rows]
    widest = max(range(len(sizes)), key=lambda r: sizes[r])
    xs: list[list[int] | None] = [None] * len(sizes)
    xs[widest] = list(range(sizes[widest]))

    def derive(src: int, dst: int, layer: Layer) -> list[int]:
        base = xs[src]
        assert base is not None
        if layer.kind == "mirror" or sizes[src] == sizes[dst]:
            return list(base)
        if sizes[dst] > sizes[src]:
            raise ArcAlgError("Cannot place a wider row from a narrower one.")
        i = layer.position - 1
        return base[:i] + base[i + 2 :]

    for r in range(widest, len(sizes) - 1):
        xs[r + 1] = derive(r, r + 1, p.layers[r])
    for r in range(widest, 0, -1):
        xs[r - 1] = derive(r, r - 1, p.layers[r - 1])
    return [x for x in xs if x is not None]


@dataclass
class _Component:
    vertices: list[Vertex]
    ends: list[tuple[Vertex, str]]  # (vertex, "bottom" | "top")

    @property
    def is_circle(self) -> bool:
        return not self.ends

    @property
    def is_propagating(self) -> bool:
        return sorted(side for _, side in self.ends) == ["bottom", "top"]


def _components(wiring: _Wiring) -> tuple[dict[Vertex, int], list[_Component]]:
    parent: dict[Vertex, Vertex] = {v: v for v in wiring.up}

    def find(v: Vertex) -> Vertex:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for edges in (wiring.up, wiring.down):
        for v, w in edges.items():
            if w is not None:
                ra, rb = find(v), find(w)
                if ra != rb:
                    parent[ra] = rb

    roots: dict[Vertex, int] = {}
    comps: list[_Component] = []
    owner: dict[Vertex, int] = {}
    for v in sorted(wiring.up):
        root = find(v)
        if root not in roots:
            roots[root] = len(comps)
            comps.append(_Component([], []))
        k = roots[root]
        owner[v] = k
        comps[k].vertices.append(v)
        if wiring.up[v] is None:
            comps[k].ends.append((v, "top"))
        if wiring.down.get(v, 0) is None:
            comps[k].ends.append((v, "bottom"))
    return owner, comps


def _neighbours(wiring: _Wiring, v: Vertex) -> list[tuple[Vertex, bool]]:
    """Adjacent vertices with a flag telling whether the edge flips the label."""
    out = []
    for w in (wiring.up[v], wiring.down[v]):
        if w is not None:
            out.append((w, w[0] == v[0]))
    return out


def _propagate(wiring: _Wiring, labels: list[list[str]], start: Vertex, symbol: str) -> bool:
    """Relabel the component of ``start``; False if the labelling is inconsistent."""
    flip = {UP: DOWN, DOWN: UP}
    assigned = {start: symbol}
    stack = [start]
    while stack:
        v = stack.pop()
        for w, flips in _neighbours(wiring, v):
            want = flip[assigned[v]] if flips else assigned[v]
            have = assigned.get(w)
            if have is None:
                assigned[w] = want
                stack.append(w)
            elif have != want:
                return False
    for (r, x), s in assigned.items():
        labels[r][x] = s
    return True


def _leftmost(wiring: _Wiring, comp: _Component) -> Vertex:
    return min(comp.vertices, key=lambda v: (wiring.xs[v[0]][v[1]], v[0]))


def _circle_is_anticlockwise(wiring: _Wiring, labels: Labels, comp: _Component) -> bool:
    r, x = _leftmost(wiring, comp)
    return labels[r][x] == DOWN


def _set_circle(
    wiring: _Wiring, labels: list[list[str]], comp: _Component, anticlockwise: bool
) -> bool:
    return _propagate(wiring, labels, _leftmost(wiring, comp), DOWN if anticlockwise else UP)


def _keep_line_ends(
    wiring: _Wiring, labels: list[list[str]], comp: _Component, old: Labels
) -> bool:
    """Re-orient a line so its end labels are those of the old picture."""
    (start, _), *rest = comp.ends
    if not _propagate(wiring, labels, start, old[start[0]][start[1]]):
        return False
    return all(labels[v[0]][v[1]] == old[v[0]][v[1]] for v, _ in rest)


def _is_consistent(wiring: _Wiring, labels: Labels) -> bool:
    flip = {UP: DOWN, DOWN: UP}
    for v in wiring.up:
        for w, flips in _neighbours(wiring, v):
            a, b = labels[v[0]][v[1]], labels[w[0]][w[1]]
            if (flip[a] if flips else a) != b:
                return False
    return True


def _surgery_step(
    before: tuple[dict[Vertex, int], list[_Component]],
    after: tuple[dict[Vertex, int], list[_Component]],
    wiring: _Wiring,
    pair: tuple[Vertex, Vertex, Vertex, Vertex],
    labels: Labels,
) -> list[Labels]:
    owner, comps = before
    new_owner, new_comps = after
    cap_left, cap_right, cup_left, _ = pair
    first, second = comps[owner[cap_left]], comps[owner[cup_left]]
    left_new = new_comps[new_owner[cap_left]]
    right_new = new_comps[new_owner[cap_right]]

    def fresh() -> list[list[str]]:
        return [list(row) for row in labels]

    results: list[list[list[str]]] = []

    if owner[cap_left] == owner[cup_left]:
        # split
        if first.is_circle:
            if _circle_is_anticlockwise(wiring, labels, first):
                for left_anti in (True, False):
                    out = fresh()
                    if _set_circle(wiring, out, left_new, left_anti) and _set_circle(
                        wiring, out, right_new, not left_anti
                    ):
                        results.append(out)
            else:
                out = fresh()
                if _set_circle(wiring, out, left_new, False) and _set_circle(
                    wiring, out, right_new, False
                ):
                    results.append(out)
        else:
            line, circle = (left_new, right_new) if left_new.ends else (right_new, left_new)
            out = fresh()
            if _keep_line_ends(wiring, out, line, labels) and _set_circle(
                wiring, out, circle, False
            ):
                results.append(out)
    else:
        # merge
        circles = [c for c in (first, second) if c.is_circle]
        lines = [c for c in (first, second) if not c.is_circle]
        if len(circles) == 2:
            anti = [_circle_is_anticlockwise(wiring, labels, c) for c in circles]
            if any(anti):
                out = fresh()
                if _set_circle(wiring, out, left_new, all(anti)):
                    results.append(out)
        elif len(circles) == 1:
            if _circle_is_anticlockwise(wiring, labels, circles[0]):
                out = fresh()
                if _keep_line_ends(wiring, out, left_new, labels):
                    results.append(out)
        else:
            ends = [labels[c.ends[0][0][0]][c.ends[0][0][1]] for c in lines]
            if all(c.is_propagating for c in lines) and sorted(ends) == sorted([UP, DOWN]):
                out = fresh()
                if _keep_line_ends(wiring, out, left_new, labels) and _keep_line_ends(
                    wiring, out, right_new, labels
                ):
                    results.append(out)

    return [tuple("".join(row) for row in out) for out in results]


def reduce_layer(
    picture: Picture, layer_index: int, schedule: Schedule = "ltr"
) -> dict[Labels, int]:
    """
    Perform every surgery of one mirror layer.

    Args:
        picture: The stacked picture; its rows must orient it consistently
        layer_index: Index of the mirror layer to reduce
        schedule: ``"ltr"`` takes the pair with the leftmost left end first,
            ``"rtl"`` the rightmost

    Returns:
        Final row labels mapped to integer coefficients. Rows
        ``layer_index`` and ``layer_index + 1`` agree in every output.

    Raises:
        ArcAlgError: If the starting labels are not a consistent orientation.
    """
    layer = picture.layers[layer_index]
    if layer.kind != "mirror":
        raise ValidationError(f"Layer {layer_index} is a {layer.kind} layer, not a mirror.")
    wiring, pairs = _wire(picture)
    if not _is_consistent(wiring, picture.rows):
        raise ArcAlgError(f"Rows {picture.rows} do not orient the picture.")
    pairs = [p for p in pairs if p[0][0] == layer_index]
    pairs.sort(key=lambda p: p[0][1], reverse=schedule == "rtl")

    states: dict[Labels, int] = {picture.rows: 1}
    for pair in pairs:
        before = _components(wiring)
        cap_left, cap_right, cup_left, cup_right = pair
        wiring.up[cap_left] = cup_left
        wiring.down[cup_left] = cap_left
        wiring.up[cap_right] = cup_right
        wiring.down[cup_right] = cap_right
        after = _components(wiring)
        nxt: dict[Labels, int] = defaultdict(int)
        for labels, coeff in states.items():
            for out in _surgery_step(before, after, wiring, pair, labels):
                nxt[out] += coeff
        states = {k: v for k, v in nxt.items() if v}
        if not states:
            break
    for labels in states:
        if labels[layer_index] != labels[layer_index + 1]:
            raise ArcAlgError(f"Surgery left mismatched rows {labels}.")
    return states
