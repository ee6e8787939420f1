"""Fixed-width scientific number formatting for all emitted artifacts.

Nine digits after the decimal point beat shortest-round-trip printing for
golden files: shortest-round-trip output differs across language runtimes,
fixed-digit output does not.
"""

from __future__ import annotations

import math

from .errors import SerializationError


def format_number(x: float) -> str:
    """Scientific notation, 9 fractional digits, lowercase ``e``, no exponent
    zero-padding, minus sign only when negative: ``3.678794412e-1``.

    Rounding at the ninth digit is round-half-even (IEEE binary-to-decimal).
    Non-finite input raises SerializationError.
    """
    value = float(x)
    if not math.isfinite(value):
        raise SerializationError(f"cannot serialize non-finite value {x!r}")
    value += 0.0  # normalize -0.0 so zero never carries a sign
    mantissa, exponent = f"{value:.9e}".split("e")
    return f"{mantissa}e{int(exponent)}"
