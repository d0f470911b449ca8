import numpy as np
import pytest

import graphs


def butterfly(n, k):
    return graphs.build_butterfly(graphs.build_path(n), k)


@pytest.fixture
def p2():
    return graphs.build_path(2)


@pytest.fixture
def b1():
    return butterfly(2, 1)


@pytest.fixture
def b2():
    return butterfly(2, 2)


@pytest.fixture
def b3_p2():
    return butterfly(2, 3)


@pytest.fixture
def b3_p3():
    return butterfly(3, 3)


# every graph the case studies run on
SCENARIO_GRAPHS = {
    "P2": (2, 0),
    "B1 from P2": (2, 1),
    "B2 from P2": (2, 2),
    "B3 from P2": (2, 3),
    "B3 from P3": (3, 3),
}


@pytest.fixture(params=sorted(SCENARIO_GRAPHS))
def scenario_graph(request):
    return butterfly(*SCENARIO_GRAPHS[request.param])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_density_matrix(rng, d):
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def random_pure_state(rng, d):
    psi = rng.normal(size=d) + 1j * rng.normal(size=d)
    return psi / np.linalg.norm(psi)


def random_unitary(rng, d):
    q, r = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))
    return q * (np.diag(r) / np.abs(np.diag(r)))
