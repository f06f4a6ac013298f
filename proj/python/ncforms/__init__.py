"""Exact calculus on noncommutative and quantum differential forms."""

try:
    from ._ncforms import (
        Algebra,
        IncompatibleRelationsError,
        NotClosedError,
        clebsch_verify,
        discrete_d,
        discrete_primitive,
        sl2_ghostless,
        suites,
        verify,
    )
except ImportError:  # in-tree layout: extension sits next to the package
    from _ncforms import (
        Algebra,
        IncompatibleRelationsError,
        NotClosedError,
        clebsch_verify,
        discrete_d,
        discrete_primitive,
        sl2_ghostless,
        suites,
        verify,
    )

__all__ = [
    "Algebra",
    "IncompatibleRelationsError",
    "NotClosedError",
    "clebsch_verify",
    "discrete_d",
    "discrete_primitive",
    "sl2_ghostless",
    "suites",
    "verify",
]
