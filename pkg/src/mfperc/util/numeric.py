import math

__all__ = [
    "floor_cbrt",
    "ceil_cbrt",
    "power_or_inf"
]


def floor_cbrt(n: int) -> int:
    "The largest integer x with x**3 <= n."
    if n < 0:
        raise ValueError(f"Cube root of negative number {n}")
    x = round(n ** (1 / 3))
    while x ** 3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def ceil_cbrt(n: int) -> int:
    "The smallest integer x with x**3 >= n."
    x = floor_cbrt(n)
    return x if x ** 3 == n else x + 1


def power_or_inf(base: float, exponent: float) -> float:
    "``base ** exponent``, or ``math.inf`` where the float result overflows."
    try:
        return base ** exponent
    except OverflowError:
        return math.inf
