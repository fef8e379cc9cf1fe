"""Closed-form constant predictors and the exhaustive search that audits them.

A Kaprekar constant for (base, width) is a fixed point of the step that every
non-repdigit string of that shape eventually reaches. The search is the
authority: it builds the full encoding graph and only reports a constant when
the graph has exactly one terminal cycle and that cycle is a fixed point. A
fixed point coexisting with other cycles is not a constant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OddBase, UnsupportedBase
from .graph import build_graph, cycle_values
from .radix import DigitString, check_radix, kaprekar_step

AGREE_MATCH = "match"
AGREE_MISMATCH = "mismatch"
AGREE_NO_FORMULA = "no-formula"


def three_digit_constant(base: int) -> DigitString:
    """The unique 3-digit constant [b/2 - 1, b - 1, b/2] of an even base."""
    check_radix(base)
    if base % 2:
        raise OddBase(f"no 3-digit constant exists for odd base {base}")
    half = base // 2
    return DigitString(base, (half - 1, base - 1, half))


def four_digit_constant(base: int) -> DigitString:
    """The 4-digit constant for base 5 (3032) or base 4^n * 10.

    For b = 4^n * 10 the digits are [6*4^n, 2*4^n - 1, 8*4^n - 1, 4*4^n];
    n = 0 gives 6174.
    """
    check_radix(base)
    if base == 5:
        return DigitString(5, (3, 0, 3, 2))
    q = _power_of_four_exponent(base)
    if q is None:
        raise UnsupportedBase(f"no 4-digit constant formula for base {base}")
    p = 4**q
    return DigitString(base, (6 * p, 2 * p - 1, 8 * p - 1, 4 * p))


def _power_of_four_exponent(base: int) -> int | None:
    """n such that base = 4^n * 10, or None."""
    if base % 10:
        return None
    rest, n = base // 10, 0
    while rest % 4 == 0:
        rest //= 4
        n += 1
    return n if rest == 1 else None


def five_digit_formula(base: int) -> tuple[int, ...]:
    """Published digit groups (4r+2)(2r)(6r+2)(2r+1), r = (b-3)/6, for
    bases congruent to 3 mod 6 other than 9.

    UNVERIFIED transcription: it prints four digit groups for a five-digit
    claim, so it cannot be a width-5 string as written. Callers must
    reconcile it against find_constants; the search outcome wins.
    """
    check_radix(base)
    if base % 6 != 3 or base == 9:
        raise UnsupportedBase(f"no 5-digit constant formula for base {base}")
    r = (base - 3) // 6
    return (4 * r + 2, 2 * r, 6 * r + 2, 2 * r + 1)


def formula_prediction(base: int, width: int) -> tuple[str, tuple[int, ...]] | None:
    """(name, digit tuple) of the closed form covering (base, width), if any."""
    try:
        if width == 3:
            return "three-digit", three_digit_constant(base).digits
        if width == 4:
            return "four-digit", four_digit_constant(base).digits
        if width == 5:
            return "five-digit-unverified", five_digit_formula(base)
    except (OddBase, UnsupportedBase):
        return None
    return None


@dataclass(frozen=True)
class ConstantReport:
    """Formula prediction vs. exhaustive-search outcome for one (base, width)."""

    base: int
    width: int
    search_result: DigitString | None
    cycle_lengths: tuple[int, ...]
    formula_name: str | None
    formula_prediction: tuple[int, ...] | None
    formula_is_fixed_point: bool | None
    agreement: str  # match | mismatch | no-formula

    def as_dict(self) -> dict:
        return {
            "base": self.base,
            "width": self.width,
            "search_result": list(self.search_result.digits) if self.search_result else None,
            "cycle_lengths": list(self.cycle_lengths),
            "formula_name": self.formula_name,
            "formula_prediction": (
                list(self.formula_prediction) if self.formula_prediction else None
            ),
            "formula_is_fixed_point": self.formula_is_fixed_point,
            "agreement": self.agreement,
        }


def find_constants(base: int, width: int) -> ConstantReport:
    """Exhaustive search for a constant, reconciled with the closed forms.

    The search result is non-empty exactly when the encoding graph has a
    single terminal cycle of length 1; its unique raw fixed point then
    attracts every non-repdigit string.
    """
    g = build_graph(base, width)
    lengths = tuple(c.length for c in g.cycles)
    found: DigitString | None = None
    if len(g.cycles) == 1 and g.cycles[0].length == 1:
        found = cycle_values(g, g.cycles[0])[0]

    prediction = formula_prediction(base, width)
    if prediction is None:
        return ConstantReport(
            base, width, found, lengths, None, None, None, AGREE_NO_FORMULA
        )

    name, digits = prediction
    is_fixed = False
    if len(digits) == width:
        candidate = DigitString(base, digits)
        is_fixed = kaprekar_step(candidate) == candidate
    agree = AGREE_MATCH if found is not None and found.digits == digits else AGREE_MISMATCH
    return ConstantReport(base, width, found, lengths, name, digits, is_fixed, agree)
