import pytest

from enriques_bn.lattice import (
    canonical_form,
    config_i,
    config_ii,
    config_iii,
    embed_configuration,
)


@pytest.fixture(scope="session")
def form():
    return canonical_form()


@pytest.fixture(scope="session")
def pair_one():
    """Two primitive isotropic classes meeting in 1 (a hyperbolic pair)."""
    return embed_configuration(config_i(2))


@pytest.fixture(scope="session")
def pair_two():
    """Two primitive isotropic classes meeting in 2."""
    return embed_configuration(config_ii(2))


@pytest.fixture(scope="session")
def triple_one():
    return embed_configuration(config_i(3))


@pytest.fixture(scope="session")
def triple_iii():
    return embed_configuration(config_iii(3))
