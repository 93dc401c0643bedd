import logging
from fractions import Fraction

import numpy as np
import pytest

from vanderspec.ensemble.exponents import ExponentSequence, reduce_exponent_phases
from vanderspec.errors import SequenceExhaustedError, SequenceOverflowError


@pytest.mark.parametrize("kind, expected", [
    ("linear", [0, 1, 2, 3]),
    ("pow2", [2, 4, 8, 16]),
    ("square", [1, 4, 9, 16]),
])
def test_generated_values(kind, expected):
    assert ExponentSequence.from_name(kind).values(4) == expected


def test_explicit_sequence():
    k = ExponentSequence.explicit([0, 3, 7])

    assert k.values(3) == [0, 3, 7]
    with pytest.raises(SequenceExhaustedError):
        k.values(4)


@pytest.mark.parametrize("values", [[0, 2, 2], [3, 1], [-1, 2]])
def test_explicit_sequence_must_increase(values):
    with pytest.raises(ValueError):
        ExponentSequence.explicit(values)


def test_unknown_name():
    with pytest.raises(ValueError, match="unknown exponent sequence"):
        ExponentSequence.from_name("cubic")


def test_exact_array_overflow():
    assert ExponentSequence.pow2().exact_array(62)[-1] == 2 ** 62
    with pytest.raises(SequenceOverflowError):
        ExponentSequence.pow2().exact_array(63)


def test_required_bits():
    assert ExponentSequence.pow2().required_bits(100) == 101 + 53
    assert ExponentSequence.linear().required_bits(1) == 1 + 53


def test_equality():
    assert ExponentSequence.pow2() == ExponentSequence("pow2")
    assert ExponentSequence.pow2() != ExponentSequence.square()
    assert ExponentSequence.explicit([1, 2]) != ExponentSequence.explicit([1, 3])


class TestReduceExponentPhases:

    def test_fixed_point_reduction_is_exact(self):
        bits = 160
        word = 0x1234_5678_9ABC_DEF0_1357_9BDF_2468_ACE0_FEDC_BA98
        k = 2 ** 100 + 3
        out = reduce_exponent_phases(np.array([0.0]), [k], words=np.array([word], dtype=object), bits=bits)

        expected = Fraction(((k * word) % 2 ** bits) >> (bits - 53), 2 ** 53)
        assert out[0, 0] == float(expected)

    def test_extended_precision_product(self):
        theta = np.array([0.3, 0.7123])
        k = 10 ** 6 + 7
        out = reduce_exponent_phases(theta, [k])

        for value, t in zip(out[0], theta):
            num, den = t.as_integer_ratio()
            assert value == pytest.approx((k * num % den) / den, abs=1e-9)

    def test_huge_exponents_warn_and_use_rationals(self, caplog):
        theta = np.array([0.375])
        with caplog.at_level(logging.WARNING):
            out = reduce_exponent_phases(theta, [2 ** 80])

        assert out[0, 0] == 0.0
        assert "phase resolution" in caplog.text
