"""Exact rational arithmetic backend.

Every value in the library is an arbitrary-precision rational; floats are
never used.  gmpy2.mpq is picked when importable (it is roughly an order
of magnitude faster), with fractions.Fraction as the drop-in fallback.
Set TOGGLEKIT_PURE=1 to force the stdlib backend.  Both types reduce
automatically, compare exactly, and print as "p/q" (just "p" when the
denominator is 1), so serialized output is identical either way.
"""

import os
from fractions import Fraction

if os.environ.get("TOGGLEKIT_PURE"):
    Rat = Fraction
    BACKEND = "fractions"
else:
    try:
        from gmpy2 import mpq as Rat

        BACKEND = "gmpy2"
    except ImportError:
        Rat = Fraction
        BACKEND = "fractions"

ZERO = Rat(0)
ONE = Rat(1)


def rat(numerator, denominator=None):
    'Build an exact rational from ints, strings, or another rational.'
    if denominator is None:
        return Rat(numerator)
    return Rat(numerator, denominator)


def parse_rat(text):
    'Parse "p/q" or "p" into an exact rational.'
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    try:
        return Rat(text.strip())
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rat(value):
    'Render a rational as reduced "p/q", or "p" when the denominator is 1.'
    return str(value)


def as_integer(value):
    'Return the int a rational equals, or raise if it is not integral.'
    if value.denominator != 1:
        raise ValueError(f"{value} is not an integer")
    return int(value)
