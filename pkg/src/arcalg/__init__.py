"""Exact computations with Khovanov arc algebras, their quasi-hereditary
covers and the Schur functor between them."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("arcalg")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"


def __getattr__(name: str):  # type: ignore[no-untyped-def]
    """Lazy import to keep ``import arcalg`` free of sympy."""
    if name in ("Weight", "Partition", "cup_diagram", "enumerate_weights"):
        from . import combinatorics

        return getattr(combinatorics, name)
    if name in ("get_context", "BasisDiagram", "AlgebraElement"):
        from . import arcalgebra

        return getattr(arcalgebra, name)
    if name in ("run_suite", "CheckReport"):
        from . import faithcheck

        return getattr(faithcheck, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "AlgebraElement",
    "BasisDiagram",
    "CheckReport",
    "Partition",
    "Weight",
    "__version__",
    "cup_diagram",
    "enumerate_weights",
    "get_context",
    "run_suite",
]
