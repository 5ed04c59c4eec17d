import importlib.resources

import pytest

from hlra import fixtures

# every bundled instance that carries a declared abelian subalgebra and
# splits; fix_c is the deliberate non-split example (no valid choice exists)
SPLIT_NAMES = (
    "fix_a",
    "fix_b",
    "fix_d",
    "fix_e",
    "fix_c_split",
    "fix_s",
    "fix_w",
    "fix_p",
    "fix_t",
    "fix_zero",
    "fix_b2",
    "fix_e2",
    "fix_s2",
    "fix_p2",
)


@pytest.fixture(scope="session")
def bundled():
    return {name: make() for name, make in fixtures.BUNDLED.items()}


@pytest.fixture(scope="session")
def data_dir():
    return importlib.resources.files("hlra") / "data"
