import numpy as np

from mfperc.harness import derive_seed
from mfperc.util import splitmix64


def test_splitmix64_reference():
    # First outputs of the SplitMix64 generator seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert splitmix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4


def test_deterministic():
    assert derive_seed(42, [1, 2, 3]) == derive_seed(42, [1, 2, 3])
    assert derive_seed(42, []) == splitmix64(42)


def test_labels_matter():
    assert derive_seed(42, [0]) != derive_seed(42, [1])
    assert derive_seed(42, [0, 1]) != derive_seed(42, [1, 0])
    assert derive_seed(42, [1]) != derive_seed(43, [1])


def test_no_collisions():
    masters = np.random.default_rng(0).integers(0, 2 ** 63, size=100000)
    zeros = {derive_seed(int(m), [0]) for m in masters}
    ones = {derive_seed(int(m), [1]) for m in masters}

    assert len(zeros) == len(masters)
    assert not zeros & ones


def test_fits_numpy():
    seed = derive_seed(2 ** 64 + 5, [2 ** 70])

    assert 0 <= seed < 2 ** 64
    np.random.default_rng(seed)
