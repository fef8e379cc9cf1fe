"""Exact digit-level arithmetic in arbitrary radix and the single-step Kaprekar
transform.

A number is a fixed-width digit string over a base b in [2, 64]. Leading zeros
are first-class: the analysis domain for a (base, width) pair is all b^N digit
strings, with the b repdigits excluded downstream. Repdigits step to the
all-zero string rather than erroring.

With b <= 64 and N <= 9 every intermediate value fits comfortably in 64 bits,
so plain ints are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadRadix, ValueTooWide, WidthTooSmall, ZeroRange

MIN_BASE = 2
MAX_BASE = 64
MIN_WIDTH = 2
MAX_WIDTH = 9


def check_radix(base: int) -> int:
    if not MIN_BASE <= base <= MAX_BASE:
        raise BadRadix(f"base must be in [{MIN_BASE}, {MAX_BASE}], got {base}")
    return base


def check_width(width: int) -> int:
    if width < MIN_WIDTH:
        raise WidthTooSmall(f"width must be at least {MIN_WIDTH}, got {width}")
    if width > MAX_WIDTH:
        raise ValueError(f"width must be at most {MAX_WIDTH}, got {width}")
    return width


@dataclass(frozen=True)
class DigitString:
    """Fixed-width digit vector, most-significant digit first."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        check_radix(self.base)
        check_width(len(self.digits))
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    @property
    def width(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        v = 0
        for d in self.digits:
            v = v * self.base + d
        return v

    def is_repdigit(self) -> bool:
        return len(set(self.digits)) == 1

    def sorted_descending(self) -> tuple[int, ...]:
        return tuple(sorted(self.digits, reverse=True))


def make_digit_string(value: int, base: int, width: int) -> DigitString:
    """Base-b expansion of a non-negative integer, zero-padded to the width."""
    check_radix(base)
    check_width(width)
    if value < 0:
        raise ValueError(f"value must be non-negative, got {value}")
    if value >= base**width:
        raise ValueTooWide(f"{value} needs more than {width} digits in base {base}")
    digits = [0] * width
    for i in range(width - 1, -1, -1):
        digits[i] = value % base
        value //= base
    return DigitString(base, tuple(digits))


def kaprekar_step(n: DigitString) -> DigitString:
    """Descending arrangement minus ascending arrangement, same width.

    A repdigit yields the all-zero string. The result is always >= 0 and
    < b^N, so the width is preserved.
    """
    value = step_value(n.digits, n.base)
    return make_digit_string(value, n.base, n.width)


def step_value(digits: tuple[int, ...], base: int) -> int:
    """Integer value of the Kaprekar step applied to a raw digit tuple.

    Hot path for sweeps and graph builds; assumes digits are already valid.
    """
    desc = sorted(digits, reverse=True)
    hi = 0
    lo = 0
    for d in desc:
        hi = hi * base + d
    for d in reversed(desc):
        lo = lo * base + d
    return hi - lo


def digit_range(n: DigitString) -> int:
    """Largest digit minus smallest digit; 0 exactly for repdigits."""
    return max(n.digits) - min(n.digits)


def three_digit_closed_form(d_range: int, base: int) -> DigitString:
    """The three-digit step image [D-1, b-1, b-D] for digit range D >= 1.

    Every three-digit string with range D steps to this value regardless of
    the rest of its digits.
    """
    check_radix(base)
    if d_range == 0:
        raise ZeroRange("range-0 strings are repdigits; the step output is 000")
    if not 1 <= d_range <= base - 1:
        raise ValueError(f"digit range {d_range} impossible in base {base}")
    return DigitString(base, (d_range - 1, base - 1, base - d_range))
