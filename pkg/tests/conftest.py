import numpy as np
import pytest

from app.field import from_values, generate_pattern
from app.graph import MapperGraph, MapperNode


@pytest.fixture
def hump_field():
    return from_values(5, 1, [0, 2, 1, 3, 0])


@pytest.fixture
def peak3():
    return from_values(3, 3, [0, 1, 0, 1, 2, 1, 0, 1, 0])


@pytest.fixture
def ramp():
    return from_values(100, 1, np.linspace(0.0, 1.0, 100))


@pytest.fixture
def constant_field():
    return from_values(4, 4, np.full(16, 0.5))


@pytest.fixture(scope="session")
def two_peaks_64():
    return generate_pattern("two_peaks", 64)


@pytest.fixture(scope="session")
def two_peaks_128():
    return generate_pattern("two_peaks", 128)


@pytest.fixture(scope="session")
def saddle_64():
    return generate_pattern("saddle", 64)


@pytest.fixture(scope="session")
def ring_128():
    return generate_pattern("ring_gradient", 128)


@pytest.fixture
def make_graph():
    def factory(n_nodes, edges, weights=None):
        nodes = [
            MapperNode(
                id=i, interval_index=i, pixel=i, count=1, mean=float(i), cx=0.0, cy=0.0
            )
            for i in range(n_nodes)
        ]
        return MapperGraph.build(nodes, edges, weights)

    return factory


@pytest.fixture(scope="session")
def saddle_128():
    return generate_pattern("saddle", 128)


@pytest.fixture(scope="session")
def perlin_128():
    return generate_pattern("perlin", 128)
