import pytest

from treeinv._kernels import warm_up


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # Compile the traversal kernels up front so timed tests measure the
    # algorithms, not the JIT.
    warm_up()
