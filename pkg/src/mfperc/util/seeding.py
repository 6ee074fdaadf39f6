from typing import Iterable

__all__ = [
    "derive_seed",
    "splitmix64"
]

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """
    The SplitMix64 finalizer (Steele, Lea, Flood). A bijection on 64-bit integers.
    """
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(master: int, labels: Iterable[int]) -> int:
    """
    Derives the seed of an independent random stream from a master seed and a chain of integer labels
    (e.g. cell index, trial index).

    Every label is XOR-ed into the running state which is then mixed with ``splitmix64``.
    Since ``splitmix64`` is a bijection, two label chains differing only in their last label never collide.

    :param master: The master seed of the run. Reduced modulo 2^64.
    :param labels: Integer labels identifying the stream. Reduced modulo 2^64.
    :return: A 64-bit seed usable with ``numpy.random.default_rng``.
    """
    state = splitmix64(master & _MASK64)
    for label in labels:
        state = splitmix64(state ^ (label & _MASK64))
    return state
