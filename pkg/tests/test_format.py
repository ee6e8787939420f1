import math
import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from agiecon import SerializationError, format_number

PATTERN = re.compile(r"^-?\d\.\d{9}e-?(0|[1-9]\d*)$")


@pytest.mark.parametrize(
    "value,expected",
    [
        (0.0, "0.000000000e0"),
        (-0.0, "0.000000000e0"),
        (1.0, "1.000000000e0"),
        (1, "1.000000000e0"),
        (math.exp(-1.0), "3.678794412e-1"),
        (-math.exp(-1.0), "-3.678794412e-1"),
        (12.0, "1.200000000e1"),
        (1.23e17, "1.230000000e17"),
        (5.0e-9, "5.000000000e-9"),
        (9.9999999995e-1, "9.999999999e-1"),  # stored just below the midpoint
        (0.999999999951, "1.000000000e0"),  # carries into the exponent
    ],
)
def test_known_values(value, expected):
    assert format_number(value) == expected


def test_round_half_even_at_ninth_digit():
    # 0.36787944117144233 -> ...4412 (the dropped tail exceeds half an ulp)
    assert format_number(0.36787944117144233).startswith("3.678794412")


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_rejected(bad):
    with pytest.raises(SerializationError):
        format_number(bad)


@given(st.floats(min_value=-1e300, max_value=1e300, allow_nan=False))
def test_shape_and_accuracy(x):
    text = format_number(x)
    assert PATTERN.match(text), text
    parsed = float(text)
    assert abs(parsed - x) <= 6e-10 * abs(x) + 1e-300


@given(st.floats(min_value=-1e300, max_value=1e300, allow_nan=False))
def test_deterministic(x):
    assert format_number(x) == format_number(x)
