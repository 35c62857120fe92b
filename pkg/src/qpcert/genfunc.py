"""Rational generating functions N(q) / prod(1 - q^b_i).

The denominator is described by a multiset of positive part sizes; its
constant term is 1, so the coefficient stream satisfies an integer-exact
linear recurrence and never leaves the integers.

The coefficient sequence of such a function agrees, from a computable
onset index on, with a single quasi-polynomial whose degree is at most
(#parts - 1) and whose period divides lcm(parts).  Those two bounds plus
the onset are what make finite-window identity certification sound.
"""

from __future__ import annotations

import math

from .polynomial import Poly


class EmptyParts(ValueError):
    """A rational generating function needs at least one denominator part."""


class RationalGF:
    """Numerator polynomial over the integers, denominator prod(1 - q^b)."""

    __slots__ = ("numerator", "parts")

    def __init__(self, numerator: Poly, parts):
        parts = tuple(sorted(parts))
        if not parts:
            raise EmptyParts("parts must be a non-empty multiset of positive integers")
        if any(b < 1 for b in parts):
            raise ValueError(f"part sizes must be positive, got {parts}")
        for c in numerator.coeffs:
            if c.denominator != 1:
                raise ValueError(f"numerator must have integer coefficients, got {c}")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("RationalGF is immutable")

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.numerator == other.numerator and self.parts == other.parts

    def __hash__(self):
        return hash((self.numerator, self.parts))

    def __repr__(self):
        den = "".join(f"(1-q^{b})" for b in self.parts)
        return f"RationalGF({self.numerator!r} / {den})"

    @staticmethod
    def from_parts(parts, shift: int = 0) -> "RationalGF":
        """q^shift over prod(1 - q^b) for b in parts."""
        if shift < 0:
            raise ValueError("shift must be non-negative")
        return RationalGF(Poly.monomial(shift), parts)

    def den_poly(self) -> Poly:
        """The expanded denominator prod(1 - q^b), integer coefficients."""
        den = Poly(1)
        for b in self.parts:
            den = den * (Poly(1) - Poly.monomial(b))
        return den

    def coeffs(self, upto: int) -> list[int]:
        """Exact power-series coefficients c_0..c_upto.

        Uses the linear recurrence c_n = num_n - sum_{j>=1} d_j c_{n-j}
        with d the expanded denominator (d_0 = 1), so every value is an
        integer by construction.
        """
        if upto < 0:
            raise ValueError("upto must be non-negative")
        den = [int(c) for c in self.den_poly().coeffs]
        num = [int(c) for c in self.numerator.coeffs]
        out = []
        for n in range(upto + 1):
            acc = num[n] if n < len(num) else 0
            for j in range(1, min(n, len(den) - 1) + 1):
                if den[j]:
                    acc -= den[j] * out[n - j]
            out.append(acc)
        return out

    def degree_bound(self) -> int:
        """Upper bound on the degree of the coefficient quasi-polynomial."""
        return len(self.parts) - 1

    def period_bound(self) -> int:
        """A period of the coefficient quasi-polynomial: lcm of the parts."""
        return math.lcm(*self.parts)

    def onset(self) -> int:
        """First index from which the coefficients follow one quasi-polynomial.

        Proper fractions (deg num < deg den) have onset 0; an improper
        fraction contributes a polynomial part that perturbs coefficients
        up to deg(num) - deg(den).
        """
        dn = self.numerator.degree
        dd = self.den_poly().degree
        if dn == float("-inf"):
            return 0
        return max(0, int(dn) - int(dd) + 1)
