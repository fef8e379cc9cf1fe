import random

import pytest

import oracles
from kaprekar import (
    BadRadix,
    DigitString,
    ValueTooWide,
    WidthTooSmall,
    ZeroRange,
    digit_range,
    kaprekar_step,
    make_digit_string,
    three_digit_closed_form,
)


class TestMakeDigitString:
    @pytest.mark.parametrize(
        "value,base,width,digits",
        [
            (8991, 10, 4, (8, 9, 9, 1)),
            (0, 10, 3, (0, 0, 0)),
            (30, 4, 3, (1, 3, 2)),  # 1*16 + 3*4 + 2
            (63, 2, 6, (1, 1, 1, 1, 1, 1)),
        ],
    )
    def test_positional_expansion(self, value, base, width, digits):
        n = make_digit_string(value, base, width)
        assert n.digits == digits
        assert n.value == value

    def test_value_too_wide(self):
        with pytest.raises(ValueTooWide):
            make_digit_string(1000, 10, 3)

    def test_width_too_small(self):
        with pytest.raises(WidthTooSmall):
            make_digit_string(5, 10, 1)

    @pytest.mark.parametrize("base", [0, 1, 65, -3])
    def test_bad_radix(self, base):
        with pytest.raises(BadRadix):
            make_digit_string(0, base, 3)

    def test_digit_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            DigitString(10, (3, 10, 1))

    def test_negative_value_rejected(self):
        with pytest.raises(ValueError):
            make_digit_string(-1, 10, 3)


class TestKaprekarStep:
    def test_297_steps_to_693(self):
        assert kaprekar_step(make_digit_string(297, 10, 3)).value == 693

    def test_6174_is_fixed(self):
        n = make_digit_string(6174, 10, 4)
        assert kaprekar_step(n) == n

    def test_repdigit_steps_to_zero(self):
        assert kaprekar_step(make_digit_string(777, 10, 3)).digits == (0, 0, 0)

    def test_base5_3032_is_fixed(self):
        n = DigitString(5, (3, 0, 3, 2))
        assert kaprekar_step(n) == n

    def test_width_preserved_and_nonnegative(self):
        rng = random.Random(7)
        for _ in range(500):
            base = rng.randint(2, 64)
            width = rng.randint(2, 9)
            n = DigitString(base, tuple(rng.randrange(base) for _ in range(width)))
            out = kaprekar_step(n)
            assert out.width == n.width
            assert out.value >= 0

    def test_permutation_invariance(self):
        rng = random.Random(11)
        for _ in range(300):
            base = rng.randint(2, 64)
            width = rng.randint(2, 9)
            digits = [rng.randrange(base) for _ in range(width)]
            baseline = kaprekar_step(DigitString(base, tuple(digits)))
            rng.shuffle(digits)
            assert kaprekar_step(DigitString(base, tuple(digits))) == baseline

    def test_matches_definition_oracle(self):
        rng = random.Random(13)
        for _ in range(500):
            base = rng.randint(2, 64)
            width = rng.randint(2, 9)
            digits = tuple(rng.randrange(base) for _ in range(width))
            assert kaprekar_step(DigitString(base, digits)).digits == oracles.step_digits(
                digits, base
            )


class TestDigitRange:
    @pytest.mark.parametrize(
        "value,expected", [(297, 7), (693, 6), (777, 0), (905, 9)]
    )
    def test_base10(self, value, expected):
        assert digit_range(make_digit_string(value, 10, 3)) == expected

    def test_zero_iff_repdigit(self):
        rng = random.Random(17)
        for _ in range(200):
            base = rng.randint(2, 64)
            width = rng.randint(2, 9)
            n = DigitString(base, tuple(rng.randrange(base) for _ in range(width)))
            assert (digit_range(n) == 0) == n.is_repdigit()


class TestThreeDigitClosedForm:
    @pytest.mark.parametrize(
        "d,base,digits",
        [
            (7, 10, (6, 9, 3)),
            (5, 10, (4, 9, 5)),
            (1, 2, (0, 1, 1)),  # K(001) = 100 - 001 = 011 in base 2
        ],
    )
    def test_examples(self, d, base, digits):
        assert three_digit_closed_form(d, base).digits == digits

    def test_zero_range_rejected(self):
        with pytest.raises(ZeroRange):
            three_digit_closed_form(0, 10)

    def test_impossible_range_rejected(self):
        with pytest.raises(ValueError):
            three_digit_closed_form(10, 10)

    def test_equals_step_on_every_multiset_up_to_base_56(self):
        """Exhaustive over digit multisets; permutation invariance (tested
        above) extends the claim to every ordered string."""
        import itertools

        for base in range(2, 57):
            for combo in itertools.combinations_with_replacement(range(base), 3):
                n = DigitString(base, combo)
                d = digit_range(n)
                if d == 0:
                    assert kaprekar_step(n).value == 0
                else:
                    assert kaprekar_step(n) == three_digit_closed_form(d, base)


class TestDivisibilityTheorem:
    def test_exhaustive_small(self):
        for base in range(2, 11):
            for width in range(2, 5):
                for digits in oracles.all_strings(base, width):
                    out = kaprekar_step(DigitString(base, digits))
                    assert out.value % (base - 1) == 0

    def test_randomized_full_range(self):
        rng = random.Random(19)
        for _ in range(2000):
            base = rng.randint(2, 64)
            width = rng.randint(2, 9)
            n = DigitString(base, tuple(rng.randrange(base) for _ in range(width)))
            assert kaprekar_step(n).value % (base - 1) == 0


class TestOuterDifferenceLemma:
    def test_exhaustive_even_bases(self):
        """Post-step forms [x, b-1, y] with x + y = b - 1: one more step
        shrinks the outer difference by exactly 2 whenever it exceeds 1."""
        for base in range(2, 57, 2):
            for x in range(base):
                y = base - 1 - x
                if abs(x - y) <= 1:
                    continue
                out = kaprekar_step(DigitString(base, (x, base - 1, y)))
                x2, mid, y2 = out.digits
                assert mid == base - 1
                assert abs(x2 - y2) == abs(x - y) - 2
