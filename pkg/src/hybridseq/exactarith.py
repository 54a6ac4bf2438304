"""Exact rational arithmetic and the quadratic extension ring Q[s]/(s²−D).

Rationals are plain :class:`fractions.Fraction` values (always reduced,
positive denominator, unbounded precision).  :class:`QuadExt` adjoins a
formal square root ``s`` with ``s² = D`` to the rationals; the closed-form
sequence evaluation lives entirely in this ring, so ``D`` may be negative
or a perfect square and no floating point is ever involved.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


class IrrationalResidueError(ArithmeticError):
    """A value expected to be rational carries a nonzero s-component."""


def parse_rational(text: str) -> Fraction:
    """Parse the wire format ``"num/den"`` (or integer shorthand ``"5"``)."""
    return Fraction(text.strip())


def format_rational(value: int | Fraction) -> str:
    """Render a rational in wire format: ``"num/den"``, integers as ``"5"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class QuadExt:
    """Element x + y·s of Q[s]/(s²−D) for a fixed nonzero integer D.

    Values are immutable.  Arithmetic between elements with different D is
    rejected; plain integers and rationals coerce to (k, 0).  Equality is
    component-wise on (x, y, D).
    """

    __slots__ = ("x", "y", "d")

    def __init__(self, x: int | Fraction, y: int | Fraction, d: int) -> None:
        if d == 0:
            raise ValueError("discriminant D must be nonzero")
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadExt is immutable")

    def _coerce(self, other: object) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(
                    f"mixed discriminants: s²={self.d} vs s²={other.d}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other: QuadExt | int | Fraction) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.x + o.x, self.y + o.y, self.d)

    __radd__ = __add__

    def __sub__(self, other: QuadExt | int | Fraction) -> QuadExt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.x - o.x, self.y - o.y, self.d)

    def __rsub__(self, other: int | Fraction) -> QuadExt:
        return (-self).__add__(other)

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.x, -self.y, self.d)

    def __mul__(self, other: QuadExt | int | Fraction):
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.x * other, self.y * other, self.d)
        if not isinstance(other, QuadExt):
            return NotImplemented
        if other.d != self.d:
            raise ValueError(f"mixed discriminants: s²={self.d} vs s²={other.d}")
        return QuadExt(
            self.x * other.x + self.d * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: QuadExt | int | Fraction) -> QuadExt:
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.x / other, self.y / other, self.d)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: int | Fraction) -> QuadExt:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> QuadExt:
        base = self if exponent >= 0 else self.inverse()
        n = abs(exponent)
        result = QuadExt(1, 0, self.d)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadExt):
            return NotImplemented
        return self.x == other.x and self.y == other.y and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.d))

    def __repr__(self) -> str:
        return f"QuadExt({self.x!r}, {self.y!r}, d={self.d})"

    def __str__(self) -> str:
        return f"{format_rational(self.x)} + {format_rational(self.y)}·s"

    def conjugate(self) -> QuadExt:
        """The s ↦ −s conjugate (x, −y)."""
        return QuadExt(self.x, -self.y, self.d)

    def norm(self) -> Fraction:
        """The rational x² − D·y² (equals self · conjugate)."""
        return self.x * self.x - self.d * self.y * self.y

    def inverse(self) -> QuadExt:
        """Multiplicative inverse; requires norm ≠ 0."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self!r} has zero norm and is not invertible")
        return QuadExt(self.x / n, -self.y / n, self.d)

    def is_rational(self) -> bool:
        return self.y == 0

    def rational_part(self) -> Fraction:
        """Project to the base field; the s-component must be zero."""
        if self.y != 0:
            raise IrrationalResidueError(f"irrational residue: {self!r}")
        return self.x

    def to_json_dict(self) -> dict:
        return {"x": format_rational(self.x), "y": format_rational(self.y), "D": self.d}

    @classmethod
    def from_json_dict(cls, data: dict) -> QuadExt:
        return cls(parse_rational(data["x"]), parse_rational(data["y"]), int(data["D"]))


def roots(p: int, q: int) -> tuple[QuadExt, QuadExt]:
    """Both roots of t² − p·t − q = 0 as elements of Q[s]/(s² − p²−4q).

    Returns (α, β) = ((p+s)/2, (p−s)/2), so α+β = p, α·β = −q and
    α−β = s.  Requires q ≠ 0 and a nonzero discriminant (distinct roots).
    """
    if q == 0:
        raise ValueError("q must be nonzero")
    disc = p * p + 4 * q
    if disc == 0:
        raise ValueError("repeated root: discriminant p²+4q is zero")
    half = Fraction(1, 2)
    alpha = QuadExt(Fraction(p, 2), half, disc)
    beta = QuadExt(Fraction(p, 2), -half, disc)
    return alpha, beta
