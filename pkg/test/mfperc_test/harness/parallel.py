import pytest

from mfperc.annotations import MfpercCancel
from mfperc.harness import parallel_map


def _square(x):
    return x * x


def test_serial():
    assert parallel_map(_square, [1, 2, 3], 1) == [1, 4, 9]


def test_processes_keep_order():
    assert parallel_map(_square, list(range(20)), 2) == [x * x for x in range(20)]


def test_empty():
    assert parallel_map(_square, [], 4) == []


def _interrupt(x):
    if x == 2:
        raise KeyboardInterrupt
    return x


def test_interrupt_cancels():
    with pytest.raises(MfpercCancel):
        parallel_map(_interrupt, [1, 2, 3], 1)
