"""Shared fixtures: a two-generator basis and the canonical small measures."""

import math

import pytest

from natspec.angles import GeneratorBasis
from natspec.measures import make_rho, make_theta0, make_theta1


@pytest.fixture(scope="session")
def basis() -> GeneratorBasis:
    return GeneratorBasis.from_pairs((("a", math.sqrt(2)), ("b", math.sqrt(3))))


@pytest.fixture(scope="session")
def theta0(basis):
    return make_theta0(basis)


@pytest.fixture(scope="session")
def theta1(basis):
    return make_theta1(basis)


@pytest.fixture(scope="session")
def rho(basis):
    return make_rho(basis.generator("a"), basis.generator("b"), basis)
