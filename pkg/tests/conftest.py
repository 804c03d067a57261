import pytest

from thagomizer import schur
from thagomizer._kernel import BACKENDS


@pytest.fixture(params=sorted(BACKENDS))
def lr_backend(request):
    """Run a test once per available LR backend, restoring the default afterwards."""
    before = schur.backend()
    schur.set_backend(request.param)
    yield request.param
    schur.set_backend(before)
