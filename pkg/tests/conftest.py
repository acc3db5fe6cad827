import pytest

from meanderknots import _accel


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run long censuses and searches")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    old = _accel.set_backend(request.param)
    yield request.param
    _accel.set_backend(old)
