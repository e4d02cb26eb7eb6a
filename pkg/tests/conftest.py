import pytest
from mpmath import mp, mpf, workdps

import oracles


@pytest.fixture(autouse=True)
def default_precision():
    """Tests run at the library's default 34 significant digits."""
    saved = mp.dps
    mp.dps = 34
    yield
    mp.dps = saved


@pytest.fixture(scope="session")
def gamma_ref():
    # parse at full oracle precision: session fixtures instantiate before the
    # per-test precision fixture runs
    with workdps(60):
        return mpf(oracles.GAMMA)


@pytest.fixture(scope="session")
def gamma1_ref():
    with workdps(60):
        return mpf(oracles.GAMMA1)
