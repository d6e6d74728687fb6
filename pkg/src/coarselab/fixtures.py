"""Standard graph presentations used throughout the package and its tests."""

from .graphs import (
    CellFragment,
    FiniteGraph,
    LinePeriodicGraph,
    RayPeriodicGraph,
    WindowRule,
    regular_tree_rule,
    square_lattice_rule,
)


def integer_line() -> LinePeriodicGraph:
    """The integers as a two-sided periodic graph: edges n -> n+1."""
    return LinePeriodicGraph(CellFragment(1), [(0, 0, 1)])


def integer_ray() -> RayPeriodicGraph:
    """The nonnegative integers: edges n -> n+1 starting at 0."""
    return RayPeriodicGraph(CellFragment(1), [(0, 0, 1)])


def ladder() -> LinePeriodicGraph:
    """The two-sided ladder: two rails with a rung in every cell."""
    return LinePeriodicGraph(
        CellFragment(2, ((0, 1),)),
        [(0, 0, 1), (1, 1, 1)],
    )


def triangle() -> FiniteGraph:
    return FiniteGraph(3, [(0, 1), (1, 2), (2, 0)])


def tree3() -> WindowRule:
    return regular_tree_rule(3)


def lattice2d() -> WindowRule:
    return square_lattice_rule()
