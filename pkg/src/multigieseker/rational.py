"""Parsing and formatting of exact rationals ("p/q" strings or integers)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidInput

RationalLike = Union[int, str, Fraction]


def to_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"not a rational: {value!r}") from exc
    raise InvalidInput(f"not a rational: {value!r}")


def format_fraction(value: Fraction | int) -> str:
    """Canonical text form: ``"p/q"`` with ``q > 0`` in lowest terms, or ``"p"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_vector(text: str) -> tuple[Fraction, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise InvalidInput(f"empty vector: {text!r}")
    return tuple(to_fraction(p) for p in parts)


def parse_int_vector(text: str) -> tuple[int, ...]:
    out = []
    for p in text.split(","):
        p = p.strip()
        if not p:
            continue
        try:
            out.append(int(p))
        except ValueError as exc:
            raise InvalidInput(f"not an integer: {p!r}") from exc
    return tuple(out)


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    from math import lcm

    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out
