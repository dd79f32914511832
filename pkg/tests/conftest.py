import numpy as np
import pytest

import orbitlab as ol


@pytest.fixture(scope="session")
def sl6():
    return ol.special_linear(6, "complex")


@pytest.fixture(scope="session")
def sl2_block():
    return ol.block_embedding(ol.special_linear(2, "complex"), 6, 0)


@pytest.fixture(scope="session")
def sl4_block():
    return ol.block_embedding(ol.special_linear(4, "complex"), 6, 0)


@pytest.fixture(scope="session")
def alt6(sl6):
    return ol.alt_bilinear(sl6)


@pytest.fixture(scope="session")
def v0():
    """Block-diagonal diag(J, J, J) with J = [[0, 1], [-1, 0]]."""
    return ol.standard_symplectic_form(6, "complex")


@pytest.fixture(scope="session")
def unipotent_g():
    """Identity plus a single 1 in the (1, 3) slot (1-based indexing)."""
    g = np.eye(6, dtype=complex)
    g[0, 2] = 1.0
    return g


@pytest.fixture(scope="session")
def x_translate(alt6, unipotent_g, v0):
    return ol.act(alt6, unipotent_g, v0)
