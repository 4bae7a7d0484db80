"""Scalar values: exact rationals or arbitrary-precision floats.

Exact values are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator). Float values are :mod:`mpmath` numbers evaluated at the
ambient ``mp.prec``; callers set the precision with ``mp.workprec`` so every
operand of an expression shares it.
"""

import math
from fractions import Fraction
from typing import Iterable, Union

from mpmath import mp, mpc, mpf

from colour_vertex.errors import InputError

Scalar = Union[Fraction, mpf, mpc]


def as_scalar(value) -> Scalar:
    """Convert user input to a Scalar.

    Strings like ``"3/4"``, ``"-2"`` and ``"0.125"`` become exact rationals;
    anything :class:`fractions.Fraction` cannot parse is handed to mpmath.

    Examples
    --------
    >>> as_scalar("6/8")
    Fraction(3, 4)
    >>> as_scalar(2)
    Fraction(2, 1)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (mpf, mpc)):
        return value
    if isinstance(value, bool):
        raise InputError(f"Booleans are not scalars: {value!r}")
    if isinstance(value, (int, float)):
        if isinstance(value, float) and not math.isfinite(value):
            raise InputError(f"Non-finite scalar: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            pass
        try:
            return mp.mpmathify(text.replace(" ", ""))
        except (ValueError, TypeError) as exc:
            raise InputError(f"Cannot parse scalar {value!r}") from exc
    raise InputError(f"Unsupported scalar type {type(value).__name__}: {value!r}")


def as_scalars(values: Iterable) -> list[Scalar]:
    return [as_scalar(v) for v in values]


def is_exact(value) -> bool:
    return isinstance(value, (Fraction, int))


def to_float(value) -> Union[mpf, mpc]:
    """Promote a value to an mpmath number at the current working precision."""
    if isinstance(value, (mpf, mpc)):
        return value
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    if isinstance(value, int):
        return mp.mpf(value)
    return mp.mpmathify(value)


def unify(values: Iterable) -> list[Scalar]:
    """Return the values in one arithmetic mode.

    All-exact input stays exact; a single float member promotes every value.
    """
    values = [as_scalar(v) for v in values]
    if all(is_exact(v) for v in values):
        return values
    return [to_float(v) for v in values]


def any_float(*groups: Iterable) -> bool:
    return any(not is_exact(v) for group in groups for v in group)


def is_zero(value) -> bool:
    return value == 0


def magnitude(value):
    """|value| as a Fraction (exact input) or mpf (float input)."""
    return abs(value)


def digits_for(bits: int) -> int:
    return max(15, int(bits * math.log10(2)))


def format_scalar(value) -> str:
    """Canonical text form.

    Rationals print as ``"p/q"`` (integers keep ``/1``); floats print as
    decimal strings carrying all significant digits of the working precision.

    Examples
    --------
    >>> format_scalar(Fraction(1, 6))
    '1/6'
    >>> format_scalar(Fraction(0))
    '0/1'
    """
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return mp.nstr(value, digits_for(mp.prec), strip_zeros=True)


def scalar_payload(value) -> dict:
    """JSON-ready representation, with ``precision_bits`` for floats."""
    payload = {"value": format_scalar(value)}
    if not is_exact(value):
        payload["precision_bits"] = mp.prec
    return payload


def one_like(values: Iterable) -> Scalar:
    """Multiplicative identity in the arithmetic mode of ``values``."""
    return Fraction(1) if all(is_exact(v) for v in values) else mp.mpf(1)
