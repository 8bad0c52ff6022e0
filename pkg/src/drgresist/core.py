"""Exact rationals and the validated intersection-array record.

Every other module derives its quantities from an :class:`IntersectionArray`.
Rationals are plain :class:`fractions.Fraction` values, which are always
stored reduced with a positive denominator; the helpers here only add a
lossless JSON form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArrayShapeError,
    FirstCNotOne,
    NegativeIntersectionNumber,
    NonIntegralValency,
    ZeroEntry,
)

Rational = Fraction

__all__ = [
    "Rational",
    "IntersectionArray",
    "validate_intersection_array",
    "order",
    "rational_to_json",
    "rational_from_json",
    "format_rational",
    "parse_rational",
]


def rational_to_json(x: Fraction) -> dict:
    """``{"num": "<int>", "den": "<int>"}`` with decimal strings (no precision loss)."""
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_from_json(obj: Mapping) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _as_int_tuple(values: Iterable, name: str) -> tuple[int, ...]:
    out = []
    for v in values:
        try:
            ok = not isinstance(v, (bool, str)) and int(v) == v
        except (TypeError, ValueError):
            ok = False
        if not ok:
            raise ArrayShapeError(f"{name} entries must be integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class IntersectionArray:
    """Intersection array ``{b_0..b_{d-1}; c_1..c_d}`` with derived parameters.

    Construction validates the arithmetic feasibility conditions and fills the
    derived fields eagerly; an invalid array raises a typed
    :class:`~drgresist.errors.IntersectionArrayError` and no object exists.

    ``b[i]`` is b_i (i = 0..d-1) and ``c[i]`` is c_{i+1} (i = 0..d-1);
    ``kappa[i]`` and ``a[i]`` are indexed by stratum 0..d.
    """

    b: tuple[int, ...]
    c: tuple[int, ...]
    d: int = field(init=False)
    kappa: tuple[int, ...] = field(init=False)
    a: tuple[int, ...] = field(init=False)
    N: int = field(init=False)

    def __post_init__(self):
        b = _as_int_tuple(self.b, "b")
        c = _as_int_tuple(self.c, "c")
        if not b:
            raise ArrayShapeError("b must be nonempty")
        if len(b) != len(c):
            raise ArrayShapeError(f"|b| = {len(b)} but |c| = {len(c)}")
        for i, x in enumerate(b):
            if x <= 0:
                raise ZeroEntry(f"b_{i} = {x} must be positive")
        for i, x in enumerate(c, start=1):
            if x <= 0:
                raise ZeroEntry(f"c_{i} = {x} must be positive")
        if c[0] != 1:
            raise FirstCNotOne(f"c_1 = {c[0]}, expected 1")

        d = len(b)
        k = b[0]
        kappa = [1]
        for i in range(1, d + 1):
            num = kappa[-1] * b[i - 1]
            if num % c[i - 1]:
                raise NonIntegralValency(
                    f"kappa_{i - 1} * b_{i - 1} = {num} is not divisible by c_{i} = {c[i - 1]}"
                )
            kappa.append(num // c[i - 1])

        # conventions c_0 = b_d = 0
        a = [0]
        for i in range(1, d + 1):
            bi = b[i] if i < d else 0
            ai = k - bi - c[i - 1]
            if ai < 0:
                raise NegativeIntersectionNumber(f"a_{i} = {k} - {bi} - {c[i - 1]} = {ai} < 0")
            a.append(ai)

        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "kappa", tuple(kappa))
        object.__setattr__(self, "a", tuple(a))
        object.__setattr__(self, "N", sum(kappa))

    @property
    def valency(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        """b_i with b_d = 0."""
        return self.b[i] if 0 <= i < self.d else 0

    def c_at(self, i: int) -> int:
        """c_i with c_0 = 0."""
        return self.c[i - 1] if 1 <= i <= self.d else 0

    def __str__(self):
        return "{%s; %s}" % (",".join(map(str, self.b)), ",".join(map(str, self.c)))

    def to_json(self) -> dict:
        return {
            "b": list(self.b),
            "c": list(self.c),
            "d": self.d,
            "N": self.N,
            "kappa": list(self.kappa),
            "a": list(self.a),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "IntersectionArray":
        """Accepts ``{"b": [...], "c": [...]}``; derived keys, if present, are ignored."""
        try:
            b, c = obj["b"], obj["c"]
        except (KeyError, TypeError) as exc:
            raise ArrayShapeError('array JSON must be an object with "b" and "c" lists') from exc
        return cls(tuple(b), tuple(c))


def validate_intersection_array(b: Sequence[int], c: Sequence[int]) -> IntersectionArray:
    return IntersectionArray(tuple(b), tuple(c))


def order(arr: IntersectionArray) -> int:
    return arr.N
