import numpy as np
import pytest

from lctb.lct_core import Grid, LctParams, from_grid, make_params, special_params
from lctb.verify_harness import TestBattery, run_all


@pytest.fixture(scope="session")
def battery() -> TestBattery:
    return TestBattery.default()


@pytest.fixture(scope="session")
def all_reports(battery) -> dict:
    """Full harness run, shared by harness and acceptance tests."""
    return {r.claim_id: r for r in run_all(battery)}


@pytest.fixture(scope="session")
def A1() -> LctParams:
    return make_params(2.0, 1.0, 3.0, 2.0)


@pytest.fixture(scope="session")
def A_fourier() -> LctParams:
    return special_params("fourier")


@pytest.fixture(scope="session")
def A_neg() -> LctParams:
    # b < 0 tuple, det = 4 - 3 = 1
    return make_params(2.0, -1.0, -3.0, 2.0)


@pytest.fixture(scope="session")
def tgrid() -> Grid:
    return Grid(-8.0, 1.0 / 64, 1024)


@pytest.fixture(scope="session")
def tgrid_fine() -> Grid:
    return Grid(-8.0, 1.0 / 128, 2048)


@pytest.fixture(scope="session")
def ugrid_wide() -> Grid:
    return Grid(-24.0, 1.0 / 32, 1536)


def _signals(grid: Grid) -> dict:
    t = grid.points()
    env = np.exp(-t * t / 2)
    return {
        "gaussian": from_grid(grid, env.astype(complex)),
        "chirped_gaussian": from_grid(grid, env * np.exp(0.6j * t * t)),
        "windowed_sine": from_grid(grid, np.sin(2 * t) * np.exp(-((t / 1.6) ** 2)) + 0j),
        "box": from_grid(grid, (np.abs(t) <= 1.0).astype(complex)),
    }


@pytest.fixture(scope="session")
def signals(tgrid) -> dict:
    return _signals(tgrid)


@pytest.fixture(scope="session")
def signals_fine(tgrid_fine) -> dict:
    return _signals(tgrid_fine)
