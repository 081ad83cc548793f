import pytest

from sealspace.fps_core import RegularFps
from sealspace.matrix_fps import all_zero_diag, build_fps
from sealspace.signed_perm import enumerate_valid_tuples


@pytest.fixture(scope="session")
def matrices_upto3():
    return [a for n in range(1, 4) for a in all_zero_diag(n)]


@pytest.fixture(scope="session")
def generic_structures():
    """Every regular structure on the 2- and 3-cube, not only matrix ones."""
    return [RegularFps(t) for n in (2, 3) for t in enumerate_valid_tuples(n)]


@pytest.fixture(scope="session")
def matrix_structures(matrices_upto3):
    return [(a, build_fps(a)) for a in matrices_upto3]
