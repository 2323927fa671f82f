import pytest

from dgspec import new_digraph


@pytest.fixture
def digon_triangle():
    """Directed triangle 0->1->2->0 with the extra arc 0->2 (a digon on {0, 2})."""
    return new_digraph(3, [(0, 1), (1, 2), (0, 2), (2, 0)])


@pytest.fixture
def split_example():
    """Five-vertex graph that splits into two sink-source parts, neither complete."""
    return new_digraph(5, [(0, 3), (0, 4), (1, 3), (4, 0), (4, 1), (4, 2)])


@pytest.fixture
def unsplittable():
    """Transitive triangle: vertex 1 both emits and receives in any arc cover."""
    return new_digraph(3, [(0, 1), (0, 2), (1, 2)])
