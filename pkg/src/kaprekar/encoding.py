"""Differential encoding of digit multisets.

Sorting the digits of an N-digit string in non-increasing order X_0 >= ... >=
X_{N-1}, the Kaprekar step's output value is determined entirely by the
floor(N/2) differentials e_i = X_i - X_{N-1-i}: the middle digit of an
odd-width string cancels out of the subtraction. All strings sharing one
differential tuple therefore share their entire forward orbit, which shrinks
the state space from b^N raw strings to C(b-1+floor(N/2), floor(N/2))
encodings.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from .radix import DigitString, check_radix, check_width, kaprekar_step, step_value


@dataclass(frozen=True)
class Encoding:
    """One digit-multiset equivalence class: the sorted-digit differentials."""

    base: int
    width: int
    diffs: tuple[int, ...]

    def __post_init__(self) -> None:
        check_radix(self.base)
        check_width(self.width)
        if len(self.diffs) != self.width // 2:
            raise ValueError(
                f"width {self.width} needs {self.width // 2} differentials, "
                f"got {len(self.diffs)}"
            )
        prev = self.base - 1
        for e in self.diffs:
            if not 0 <= e <= prev:
                raise ValueError(f"differentials must be non-increasing in [0, b-1]: {self.diffs}")
            prev = e

    def __str__(self) -> str:
        return "<" + "|".join(str(e) for e in self.diffs) + ">"

    def is_zero(self) -> bool:
        """True exactly for the repdigit class."""
        return not any(self.diffs)


def encode(n: DigitString) -> Encoding:
    """Collapse a digit string to its differential encoding."""
    return Encoding(n.base, n.width, diffs_of(n.digits))


def diffs_of(digits: tuple[int, ...]) -> tuple[int, ...]:
    width = len(digits)
    sd = sorted(digits, reverse=True)
    return tuple(sd[i] - sd[width - 1 - i] for i in range(width // 2))


def representative(e: Encoding) -> DigitString:
    """Canonical member of the class: [e_0, e_1, ..., 0, ..., 0].

    The differentials themselves, right-padded with zeros, realize any
    monotone tuple: sorted descending, the pairwise differences collapse
    back to e.
    """
    padded = e.diffs + (0,) * (e.width - len(e.diffs))
    return DigitString(e.base, padded)


def step_encoding(e: Encoding) -> Encoding:
    """The Kaprekar step in encoding space.

    Applies the raw step to the canonical representative and re-encodes.
    Class members all map to the same raw value, so the choice of
    representative does not matter.
    """
    return Encoding(e.base, e.width, step_diffs(e.diffs, e.base, e.width))


def step_diffs(diffs: tuple[int, ...], base: int, width: int) -> tuple[int, ...]:
    """Tuple-level step, used by graph builds to avoid object churn."""
    padded = diffs + (0,) * (width - len(diffs))
    value = step_value(padded, base)
    out = [0] * width
    for i in range(width - 1, -1, -1):
        out[i] = value % base
        value //= base
    return diffs_of(tuple(out))


def post_step_value(e: Encoding) -> DigitString:
    """The single raw value every member of the class steps to.

    Distinct encodings have distinct post-step values (the leading
    differential's positional weight b^(N-1) - 1 dominates the remaining
    terms), so this map is injective; it is how encoding-space cycles are
    decoded back to raw constants.
    """
    return kaprekar_step(representative(e))


def enumerate_encodings(base: int, width: int) -> Iterator[Encoding]:
    """Every monotone non-increasing differential tuple, lexicographically.

    Count equals C(b-1+h, h) with h = floor(width/2): one tuple per multiset
    of h values from [0, b-1].
    """
    check_radix(base)
    check_width(width)
    h = width // 2

    def walk(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        ceiling = prefix[-1] if prefix else base - 1
        for v in range(ceiling + 1):
            yield from walk(prefix + (v,), remaining - 1)

    for diffs in walk((), h):
        yield Encoding(base, width, diffs)


def encoding_count(base: int, width: int) -> int:
    """Size of the encoded state space for a (base, width) pair."""
    h = width // 2
    return math.comb(base - 1 + h, h)


def class_size(e: Encoding) -> int:
    """Number of raw width-N digit strings whose encoding equals e.

    Sums, over every digit multiset realizing the differential tuple, the
    number of distinct arrangements of that multiset. Multisets are
    enumerated by their "low" digits L_i = X_{N-1-i}: the ordering
    constraints confine each subsequent L to a window of width
    e_{i-1} - e_i, so the walk stays small even for wide strings.
    """
    if e.width == 3:
        return three_digit_class_size(e.base, e.diffs[0])
    return _class_size_enumerated(e)


def three_digit_class_size(base: int, d_range: int) -> int:
    """Closed-form count of 3-digit strings with a given digit range.

    Convenience only; the enumerated and brute-force counters are the
    authority and the tests hold this formula to them.
    """
    if d_range == 0:
        return base
    e = d_range
    return (base - e) * ((e + 1) ** 3 - 2 * e**3 + (e - 1) ** 3)


def _class_size_enumerated(e: Encoding) -> int:
    base, width, diffs = e.base, e.width, e.diffs
    h = len(diffs)
    fact = math.factorial
    total = 0

    def arrangements(digits: list[int]) -> int:
        n = fact(width)
        for c in Counter(digits).values():
            n //= fact(c)
        return n

    def extend(i: int, lows: list[int]) -> None:
        nonlocal total
        if i == h:
            digits = []
            for j in range(h):
                digits.append(lows[j])
                digits.append(lows[j] + diffs[j])
            if width % 2:
                # middle digit sits between the innermost pair
                for mid in range(lows[-1], lows[-1] + diffs[-1] + 1):
                    total += arrangements(digits + [mid])
            else:
                total += arrangements(digits)
            return
        if i == 0:
            for low in range(base - diffs[0]):
                extend(1, [low])
            return
        # X_{i-1} >= X_i forces L_i + e_i <= L_{i-1} + e_{i-1};
        # X_{N-i} >= X_{N-1-i} forces L_i >= L_{i-1}
        lo = lows[-1]
        hi = min(base - 1 - diffs[i], lows[-1] + diffs[i - 1] - diffs[i])
        for low in range(lo, hi + 1):
            extend(i + 1, lows + [low])

    extend(0, [])
    return total


def class_sizes_bruteforce(base: int, width: int) -> dict[Encoding, int]:
    """Count every class by sweeping all b^N raw strings.

    The test oracle for class_size; exponential, so keep (base, width) small.
    """
    import itertools

    counts: Counter[tuple[int, ...]] = Counter()
    for digits in itertools.product(range(base), repeat=width):
        counts[diffs_of(digits)] += 1
    return {Encoding(base, width, d): c for d, c in counts.items()}


def zero_encoding(base: int, width: int) -> Encoding:
    return Encoding(base, width, (0,) * (width // 2))
