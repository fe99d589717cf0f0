"""
Shared graph fixtures.
"""
import pytest

from src.graph_core import (banana, chain_of_loops, circle, degenerate_loop_of_loops, dumbbell,
                            figure_eight, loop_of_loops, tree, yu_graph)


@pytest.fixture
def lol4():
    """Genus-4 loop of loops with single edges (5, 4, 3) and unit pairs."""
    return loop_of_loops(4, [5, 4, 3])


@pytest.fixture
def lol112():
    """Genus-4 loop of loops with single edges (1, 1, 2)."""
    return loop_of_loops(4, [1, 1, 2])


@pytest.fixture
def gamma0():
    return degenerate_loop_of_loops([1, 1, 1])


@pytest.fixture
def yu():
    return yu_graph()


@pytest.fixture
def small_graphs():
    """Cheap graphs of every shape, for property tests."""
    return [
        circle(3),
        figure_eight(1, 2),
        banana(3, [1, 1, 2]),
        dumbbell(1, 1, 1),
        tree(3),
        chain_of_loops(2),
    ]
