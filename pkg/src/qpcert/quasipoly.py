"""Quasi-polynomials: one polynomial per residue class modulo a period.

A QuasiPoly of period L holds L constituent polynomials; the value at an
integer n is constituents[n mod L] evaluated at n itself (the constituents
are polynomials in n, not in the quotient (n - r)/L).  Residues use
mathematical mod, so negative n is well defined.

The type is closed under +, -, * and under exact floor/round division by
a positive integer, which is what lets closed-form expressions built from
floors and nearest-integer terms be converted into this representation.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomial import NEG_INF, Poly, lcm_of_denominators


class NonPositiveModulus(ValueError):
    """Floor/round division requires a modulus >= 1."""


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


class QuasiPoly:
    """Period L plus L constituent polynomials, indexed by residue mod L."""

    __slots__ = ("period", "constituents")

    def __init__(self, period: int, constituents):
        constituents = tuple(constituents)
        if period < 1:
            raise ValueError("period must be >= 1")
        if len(constituents) != period:
            raise ValueError(f"expected {period} constituents, got {len(constituents)}")
        if not all(isinstance(p, Poly) for p in constituents):
            raise TypeError("constituents must be Poly values")
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "constituents", constituents)

    def __setattr__(self, name, value):
        raise AttributeError("QuasiPoly is immutable")

    @staticmethod
    def from_poly(p: Poly) -> "QuasiPoly":
        """Period-1 quasi-polynomial equal to p everywhere."""
        return QuasiPoly(1, (p,))

    @staticmethod
    def constant(c) -> "QuasiPoly":
        return QuasiPoly.from_poly(Poly(c))

    def __call__(self, n: int) -> Fraction:
        """Value at integer n: the constituent for n mod period, at n."""
        return self.constituents[n % self.period](n)

    @property
    def degree(self):
        """Max constituent degree; -inf if all constituents are zero."""
        return max((p.degree for p in self.constituents), default=NEG_INF)

    # -- structural equality (same period and same constituent tuples) --

    def __eq__(self, other):
        if not isinstance(other, QuasiPoly):
            return NotImplemented
        return self.period == other.period and self.constituents == other.constituents

    def __hash__(self):
        return hash((self.period, self.constituents))

    def canonical(self) -> "QuasiPoly":
        """The unique minimal-period representative with the same values.

        Period d < L works iff the constituent list repeats with period d;
        two residue classes can merge only when their constituent
        polynomials are literally equal, since each class has infinitely
        many points.
        """
        for d in _divisors(self.period):
            head = self.constituents[:d]
            if all(self.constituents[r] == head[r % d] for r in range(self.period)):
                return self if d == self.period else QuasiPoly(d, head)
        raise AssertionError("unreachable: period divides itself")

    def equivalent(self, other: "QuasiPoly") -> bool:
        """Pointwise equality on all integers, decided via canonical forms."""
        return self.canonical() == other.canonical()

    # -- arithmetic: pointwise on the lcm refinement, then canonicalize --

    def _pointwise(self, other, op) -> "QuasiPoly":
        L = math.lcm(self.period, other.period)
        cons = tuple(
            op(self.constituents[r % self.period], other.constituents[r % other.period])
            for r in range(L)
        )
        return QuasiPoly(L, cons).canonical()

    def _coerce(self, other):
        if isinstance(other, QuasiPoly):
            return other
        if isinstance(other, Poly):
            return QuasiPoly.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return QuasiPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._pointwise(other, lambda a, b: a + b)

    __radd__ = __add__

    def __neg__(self):
        return QuasiPoly(self.period, tuple(-p for p in self.constituents))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._pointwise(other, lambda a, b: a - b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._pointwise(self, lambda a, b: a - b)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._pointwise(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def floor_div(self, m: int) -> "QuasiPoly":
        """Exact quasi-polynomial equal to floor(Q(n)/m) at every integer n.

        Per constituent, write p(n) = u(n)/c with u integer-coefficient and
        c the common denominator.  Then floor(p(n)/m) = (u(n) - (u(n) mod
        cm)) / cm, and u(n) mod cm depends only on n mod cm, so refining
        the period to lcm(L, c*m) makes the remainder a constant on each
        refined residue class.
        """
        if m < 1:
            raise NonPositiveModulus(f"modulus must be >= 1, got {m}")
        scaled = []
        refined = self.period
        for p in self.constituents:
            c = lcm_of_denominators(p)
            scaled.append((p * c, c))
            refined = math.lcm(refined, c * m)
        cons = []
        for r in range(refined):
            u, c = scaled[r % self.period]
            cm = c * m
            rem = int(u(r)) % cm
            cons.append((u - rem) * Fraction(1, cm))
        return QuasiPoly(refined, tuple(cons)).canonical()

    def round_div(self, m: int) -> "QuasiPoly":
        """Nearest integer to Q(n)/m, ties rounded half-up.

        round(x) = floor(x + 1/2), so round(Q(n)/m) = floor((2Q(n)+m)/2m).
        """
        if m < 1:
            raise NonPositiveModulus(f"modulus must be >= 1, got {m}")
        return (self * 2 + m).floor_div(2 * m)

    def __repr__(self):
        cons = ", ".join(repr(p) for p in self.constituents)
        return f"QuasiPoly(period={self.period}, [{cons}])"
