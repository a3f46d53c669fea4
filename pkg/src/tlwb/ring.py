"""Exact arithmetic in Z[d], the coefficient ring of the workbench.

A polynomial c0 + c1*d + ... + cn*d^n is stored as the tuple
(c0, c1, ..., cn) of Python integers; the highest stored coefficient
is nonzero and the zero polynomial is the empty tuple, so equal
polynomials have identical representations.  Python integers are
unbounded, hence every operation is exact no matter how many loops a
diagram product accumulates.

Text form: terms in increasing degree joined by ` + ` / ` - `, zero
terms omitted, the indeterminate written as the letter d, and unit
coefficients on positive-degree terms left implicit:

    0        1 + d        3 - 2 d        d^2        5 d + d^3

parse() accepts everything __str__ emits (plus explicit unit
coefficients such as `1 d`) and round-trips exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class DeltaPoly:
    """An element of Z[d] in canonical (trailing-zero-free) form."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            raise TypeError("coeffs must be a tuple; use from_coeffs for lists")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient {c!r} is not an integer")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("not canonical: trailing zero coefficient")

    # -- constructors ------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs) -> "DeltaPoly":
        """Build from any integer sequence, trimming trailing zeros."""
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "DeltaPoly":
        return cls(())

    @classmethod
    def one(cls) -> "DeltaPoly":
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> "DeltaPoly":
        return cls.from_coeffs([c])

    @classmethod
    def delta(cls) -> "DeltaPoly":
        return cls((0, 1))

    @classmethod
    def delta_power(cls, k: int) -> "DeltaPoly":
        """d^k; k = 0 gives 1."""
        if k < 0:
            raise ValueError("negative powers of d are not in Z[d]")
        return cls((0,) * k + (1,))

    # -- ring structure ----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> "DeltaPoly":
        if isinstance(other, DeltaPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return DeltaPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> "DeltaPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DeltaPoly.from_coeffs(out)

    __radd__ = __add__

    def __neg__(self) -> "DeltaPoly":
        return DeltaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "DeltaPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "DeltaPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "DeltaPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DeltaPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return DeltaPoly.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "DeltaPoly":
        if k < 0:
            raise ValueError("negative powers are not in Z[d]")
        out = DeltaPoly.one()
        for _ in range(k):
            out = out * self
        return out

    # -- text form ---------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "d" if i == 1 else f"d^{i}"
                term = var if mag == 1 else f"{mag} {var}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"DeltaPoly({str(self)!r})"

    _TERM_RE = re.compile(
        r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*)?(?:d(?:\^(?P<exp>\d+))?)?"
    )

    @classmethod
    def parse(cls, text: str) -> "DeltaPoly":
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        coeffs: dict[int, int] = {}
        pos, first = 0, True
        while pos < len(s):
            m = cls._TERM_RE.match(s, pos)
            sign, coeff, exp = m.group("sign"), m.group("coeff"), m.group("exp")
            has_d = "d" in m.group(0)
            if coeff is None and not has_d:
                raise ValueError(f"bad polynomial text at offset {pos}: {text!r}")
            if sign is None and not first:
                raise ValueError(f"missing sign between terms: {text!r}")
            k = 0 if not has_d else (1 if exp is None else int(exp))
            c = 1 if coeff is None else int(coeff)
            if sign == "-":
                c = -c
            coeffs[k] = coeffs.get(k, 0) + c
            pos, first = m.end(), False
        out = [0] * (1 + max(coeffs, default=0))
        for k, c in coeffs.items():
            out[k] = c
        return cls.from_coeffs(out)


ZERO = DeltaPoly.zero()
ONE = DeltaPoly.one()
DELTA = DeltaPoly.delta()
