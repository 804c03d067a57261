import pytest
from hypothesis import given, settings, strategies as st

from thagomizer import schur
from thagomizer._kernel import BACKENDS, DEFAULT_BACKEND
from thagomizer._lr_py import lr_expand
from thagomizer.partitions import partitions_of


def parts(max_n):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


def test_python_backend_always_present():
    assert "python" in BACKENDS
    assert DEFAULT_BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernel not built")
@settings(max_examples=200, deadline=None)
@given(parts(9), parts(9))
def test_backends_agree(a, b):
    assert BACKENDS["cython"](a, b) == lr_expand(a, b)


def test_set_backend_switches_and_validates():
    before = schur.backend()
    try:
        schur.set_backend("python")
        assert schur.backend() == "python"
        with pytest.raises(ValueError):
            schur.set_backend("fortran")
    finally:
        schur.set_backend(before)


def test_product_is_symmetric_in_arguments():
    assert dict(schur.lr_product((3, 1), (2,))) == dict(schur.lr_product((2,), (3, 1)))


def test_cache_is_thread_safe():
    from concurrent.futures import ThreadPoolExecutor
    schur.clear_cache()
    pairs = [(a, b) for a in partitions_of(5) for b in partitions_of(4)]
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(lambda ab: schur.lr_product(*ab), pairs * 4))
    want = [tuple(sorted(lr_expand(a, b).items())) for a, b in pairs] * 4
    assert [tuple(sorted(g)) for g in got] == want
