"""The extended arc algebra K^m_n and its truncation H^m_n = eK^m_n e."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping
from functools import cached_property, lru_cache
from typing import Any

from ..combinatorics import Weight, enumerate_weights, is_regular
from ..conf import get_setting
from ..exactla import Field, Matrix, Subspace
from ..exceptions import ArcAlgError, ValidationError
from .basis import BasisDiagram, enumerate_basis, try_diagram
from .surgery import Layer, Picture, Schedule, reduce_layer

logger = logging.getLogger(__name__)


@lru_cache(maxsize=200_000)
def _diagram_product(
    a: BasisDiagram, b: BasisDiagram, schedule: Schedule = "ltr"
) -> tuple[tuple[BasisDiagram, int], ...]:
    if a.box != b.box:
        raise ValidationError(f"Cannot multiply diagrams from {a.box} and {b.box}.")
    if a.top != b.bottom:
        return ()
    picture = Picture(
        bottom=a.bottom,
        rows=(a.middle.symbols, b.middle.symbols),
        layers=(Layer.mirror(a.top),),
        top=b.top,
    )
    out: list[tuple[BasisDiagram, int]] = []
    for labels, coeff in reduce_layer(picture, 0, schedule).items():
        d = try_diagram(a.bottom, Weight(labels[0]), b.top)
        if d is None:
            raise ArcAlgError(
                f"Surgery on {a} * {b} produced {labels[0]}, which does not orient "
                f"{a.bottom} and {b.top}."
            )
        if d.degree != a.degree + b.degree:
            raise ArcAlgError(
                f"Grading violated: {a} * {b} produced {d} of degree {d.degree}, "
                f"expected {a.degree + b.degree}."
            )
        out.append((d, coeff))
    return tuple(sorted(out, key=lambda t: str(t[0])))


class AlgebraElement:
    """A finite linear combination of basis diagrams with nonzero coefficients."""

    __slots__ = ("box", "field", "terms")

    def __init__(
        self,
        terms: Mapping[BasisDiagram, Any],
        box: tuple[int, int],
        field: Field,
    ) -> None:
        self.box = box
        self.field = field
        clean: dict[BasisDiagram, Any] = {}
        for d, c in terms.items():
            if d.box != box:
                raise ValidationError(f"Diagram {d} does not lie in K^{box[0]}_{box[1]}.")
            value = field(c)
            if value:
                clean[d] = value
        self.terms = clean

    @classmethod
    def zero(cls, box: tuple[int, int], field: Field) -> AlgebraElement:
        return cls({}, box, field)

    @classmethod
    def of(cls, d: BasisDiagram, field: Field, coeff: Any = 1) -> AlgebraElement:
        return cls({d: coeff}, d.box, field)

    def _check(self, other: AlgebraElement) -> None:
        if self.box != other.box or self.field != other.field:
            raise ValidationError("Elements live in different algebras.")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, self.field.zero) + c
        return AlgebraElement(terms, self.box, self.field)

    def __neg__(self) -> AlgebraElement:
        return self.scale(-1)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: Any) -> AlgebraElement:
        k = self.field(c)
        return AlgebraElement({d: v * k for d, v in self.terms.items()}, self.box, self.field)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        acc: dict[BasisDiagram, Any] = defaultdict(lambda: self.field.zero)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for d, k in _diagram_product(a, b):
                    acc[d] += ca * cb * self.field(k)
        return AlgebraElement(acc, self.box, self.field)

    def star(self) -> AlgebraElement:
        return AlgebraElement({d.star(): c for d, c in self.terms.items()}, self.box, self.field)

    def rotated(self) -> AlgebraElement:
        box = (self.box[1], self.box[0])
        return AlgebraElement({d.rotated(): c for d, c in self.terms.items()}, box, self.field)

    def coefficient(self, d: BasisDiagram) -> Any:
        return self.terms.get(d, self.field.zero)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {d.degree for d in self.terms}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.box == other.box and self.field == other.field and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __iter__(self) -> Iterator[tuple[BasisDiagram, Any]]:
        return iter(sorted(self.terms.items(), key=lambda t: str(t[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def to_json(self) -> list[dict[str, Any]]:
        return [{"diagram": d.to_dict(), "coeff": self.field.format(c)} for d, c in self]

    @classmethod
    def from_json(
        cls, data: Iterable[Mapping[str, Any]], box: tuple[int, int], field: Field
    ) -> AlgebraElement:
        terms: dict[BasisDiagram, Any] = {}
        for item in data:
            d = BasisDiagram.from_dict(dict(item["diagram"]))
            terms[d] = terms.get(d, field.zero) + field.parse(str(item["coeff"]))
        return cls(terms, box, field)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{self.field.format(c)}*({d})" for d, c in self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


def multiply(
    a: BasisDiagram,
    b: BasisDiagram,
    field: Field | None = None,
    schedule: Schedule = "ltr",
) -> AlgebraElement:
    """
    Multiply two basis diagrams by surgery.

    Args:
        a: Left factor λ̲μν̄
        b: Right factor ᾱβγ̄
        field: Coefficient field (defaults to ``ARCALG_CHARACTERISTIC``)
        schedule: Order of the middle surgeries

    Returns:
        Zero unless ν = α; otherwise a combination of diagrams λ̲(·)γ̄, every
        one of degree ``a.degree + b.degree``

    Example:
        >>> d = BasisDiagram.idempotent(Weight("v^"))
        >>> str(multiply(d, d))
        '1*(v^|v^|v^)'
    """
    k = field or default_field()
    terms: dict[BasisDiagram, int] = defaultdict(int)
    for d, c in _diagram_product(a, b, schedule):
        terms[d] += c
    return AlgebraElement(terms, a.box, k)


def star_elem(x: AlgebraElement) -> AlgebraElement:
    return x.star()


def default_field() -> Field:
    return Field(int(get_setting("CHARACTERISTIC")))


class AlgebraContext:
    """
    A based algebra K^m_n (or H^m_n when ``truncated``) over a field.

    The basis is enumerated once; structure constants are integers computed
    on demand and memoized.
    """

    def __init__(
        self, m: int, n: int, field: Field | None = None, truncated: bool = False
    ) -> None:
        self.m = m
        self.n = n
        self.field = field or default_field()
        self.truncated = truncated
        all_weights = enumerate_weights(m, n)
        self.weights: list[Weight] = (
            [w for w in all_weights if is_regular(w)] if truncated else all_weights
        )
        self.basis = enumerate_basis(m, n, truncated)
        self.index = {d: k for k, d in enumerate(self.basis)}
        self._table: dict[tuple[int, int], dict[int, int]] = {}
        self.by_bottom: dict[Weight, list[int]] = defaultdict(list)
        self.by_top: dict[Weight, list[int]] = defaultdict(list)
        for k, d in enumerate(self.basis):
            self.by_bottom[d.bottom].append(k)
            self.by_top[d.top].append(k)
        logger.debug("Enumerated %s: dimension %d", self.name, self.dim)

    @property
    def name(self) -> str:
        return f"{'H' if self.truncated else 'K'}^{self.m}_{self.n}"

    @property
    def box(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"<AlgebraContext {self.name} over {self.field}>"

    def idempotent_index(self, w: Weight) -> int:
        try:
            return self.index[BasisDiagram.idempotent(w)]
        except KeyError as e:
            raise ValidationError(f"{w} does not label an idempotent of {self.name}.") from e

    def degree(self, k: int) -> int:
        return self.basis[k].degree

    def product_indices(self, i: int, j: int) -> dict[int, int]:
        """Integer structure constants of ``basis[i] * basis[j]``."""
        key = (i, j)
        cached = self._table.get(key)
        if cached is None:
            cached = {self.index[d]: c for d, c in _diagram_product(self.basis[i], self.basis[j])}
            self._table[key] = cached
        return cached

    def multiply(self, a: BasisDiagram | AlgebraElement, b: BasisDiagram | AlgebraElement) -> AlgebraElement:
        x = a if isinstance(a, AlgebraElement) else AlgebraElement.of(a, self.field)
        y = b if isinstance(b, AlgebraElement) else AlgebraElement.of(b, self.field)
        return x * y

    def element(self, terms: Mapping[int, Any]) -> AlgebraElement:
        """Build an element from ``{basis index: coefficient}``."""
        return AlgebraElement({self.basis[k]: c for k, c in terms.items()}, self.box, self.field)

    def coordinates(self, x: AlgebraElement) -> dict[int, Any]:
        out = {}
        for d, c in x.terms.items():
            if d not in self.index:
                raise ValidationError(f"{d} is not a basis element of {self.name}.")
            out[self.index[d]] = c
        return out

    def unit(self) -> AlgebraElement:
        """Σ e_λ over the labels; the identity of the algebra."""
        return self.element({self.idempotent_index(w): 1 for w in self.weights})

    def star_index(self, k: int) -> int:
        return self.index[self.basis[k].star()]

    def build_table(self) -> dict[tuple[int, int], dict[int, int]]:
        """Fill every composable product; call before sharing the context."""
        for i, a in enumerate(self.basis):
            for j in self.by_bottom.get(a.top, []):
                self.product_indices(i, j)
        values = self.structure_constant_values()
        logger.info(
            "Structure constants of %s: %d composable products, values %s",
            self.name,
            len(self._table),
            sorted(values),
        )
        return self._table

    def structure_constant_values(self) -> set[int]:
        return {c for row in self._table.values() for c in row.values()}

    def structure_constants(self) -> list[tuple[int, int, int, int]]:
        """Rows ``(i, j, k, c)`` with ``basis[i] * basis[j] = ... + c basis[k] + ...``."""
        self.build_table()
        return sorted(
            (i, j, k, c) for (i, j), row in self._table.items() for k, c in row.items()
        )

    def graded_dimensions(self) -> dict[int, int]:
        dims: dict[int, int] = defaultdict(int)
        for d in self.basis:
            dims[d.degree] += 1
        return dict(sorted(dims.items()))

    @cached_property
    def generators(self) -> list[int]:
        """
        Basis indices generating the algebra.

        The idempotents, then in each positive degree the basis elements
        picked out as a complement of the decomposable products.
        """
        gens = [self.idempotent_index(w) for w in self.weights]
        by_degree: dict[int, list[int]] = defaultdict(list)
        for k, d in enumerate(self.basis):
            if d.degree > 0:
                by_degree[d.degree].append(k)
        for deg in sorted(by_degree):
            members = by_degree[deg]
            column = {k: c for c, k in enumerate(members)}
            rows: dict[int, dict[int, int]] = {}
            for i in (k for k, d in enumerate(self.basis) if 0 < d.degree < deg):
                for j in self.by_bottom.get(self.basis[i].top, []):
                    if self.basis[i].degree + self.basis[j].degree != deg:
                        continue
                    prod = self.product_indices(i, j)
                    if prod:
                        rows[len(rows)] = {column[k]: c for k, c in prod.items()}
            products = Subspace.span(
                Matrix.from_dict(self.field, (len(rows), len(members)), rows)
            )
            gens.extend(members[c] for c in products.complement_columns())
        return gens

    @cached_property
    def positive_generators(self) -> list[int]:
        return [k for k in self.generators if self.basis[k].degree > 0]

    def parent(self) -> AlgebraContext:
        """K^m_n for a truncated context, otherwise the context itself."""
        return get_context(self.m, self.n, self.field.characteristic) if self.truncated else self


def get_context(
    m: int, n: int, characteristic: int | None = None, truncated: bool = False
) -> AlgebraContext:
    """Shared, memoized :class:`AlgebraContext` for K^m_n or H^m_n."""
    char = default_field().characteristic if characteristic is None else characteristic
    return _cached_context(m, n, char, truncated)


@lru_cache(maxsize=64)
def _cached_context(m: int, n: int, characteristic: int, truncated: bool) -> AlgebraContext:
    return AlgebraContext(m, n, Field(characteristic), truncated)


def truncate(ctx: AlgebraContext) -> AlgebraContext:
    """H^m_n = eK^m_n e as its own based algebra."""
    return get_context(ctx.m, ctx.n, ctx.field.characteristic, truncated=True)


def schur_idempotent(m: int, n: int, field: Field | None = None) -> AlgebraElement:
    """e = Σ e_λ over the regular weights, as an element of K^m_n."""
    k = field or default_field()
    terms = {BasisDiagram.idempotent(w): 1 for w in enumerate_weights(m, n) if is_regular(w)}
    return AlgebraElement(terms, (m, n), k)
