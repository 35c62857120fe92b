"""Integer-sided triangles counted by perimeter (Alcuin's sequence).

A triangle here is a sorted side triple x >= y >= z >= 1 with y + z > x.
The counting sequence by perimeter is the coefficient stream of
q^3 / ((1-q^2)(1-q^3)(1-q^4)), via the bijection

    (a, b, t) >= 0  <->  (x, y, z) = (2a+b+t+1, a+b+t+1, a+t+1)

whose perimeter is 4a + 2b + 3t + 3.  Andrews's closed form
round(n^2/12) - floor(n/4)*floor((n+2)/4) matches the same sequence; the
37-term comparison in paper_check is the classic published verification
of that identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closedform import Expr, expr_eval, parse
from .genfunc import RationalGF


class InvalidTriangle(ValueError):
    """Side triple is not sorted, not positive, or fails y + z > x."""


@dataclass(frozen=True, order=True)
class Triangle:
    """Side lengths sorted non-increasing; must satisfy y + z > x."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        if not (self.x >= self.y >= self.z >= 1):
            raise InvalidTriangle(f"sides must satisfy x >= y >= z >= 1: {self}")
        if self.y + self.z <= self.x:
            raise InvalidTriangle(f"triangle inequality fails: {self}")

    @property
    def perimeter(self) -> int:
        return self.x + self.y + self.z


@dataclass(frozen=True)
class TriangleParam:
    """Free non-negative coordinates (a, b, t) of the triangle bijection."""

    a: int
    b: int
    t: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.t < 0:
            raise ValueError(f"parameters must be non-negative: {self}")

    @property
    def perimeter(self) -> int:
        return 4 * self.a + 2 * self.b + 3 * self.t + 3


def count_bruteforce(n: int) -> int:
    """Number of integer-sided triangles with perimeter n, by enumeration.

    Loops the longest side x over [ceil(n/3), floor((n-1)/2)] and counts
    the admissible middle sides directly; perimeters below 3 give 0.
    """
    count = 0
    for x in range((n + 2) // 3, (n - 1) // 2 + 1):
        y_lo = (n - x + 1) // 2
        y_hi = min(x, n - x - 1)
        if y_hi >= y_lo:
            count += y_hi - y_lo + 1
    return count


def list_triangles(n: int) -> list[Triangle]:
    """All triangles of perimeter n in decreasing (x, y, z) lex order."""
    out = []
    for x in range((n - 1) // 2, (n + 2) // 3 - 1, -1):
        y_lo = (n - x + 1) // 2
        y_hi = min(x, n - x - 1)
        for y in range(y_hi, y_lo - 1, -1):
            out.append(Triangle(x, y, n - x - y))
    return out


def param_to_triangle(p: TriangleParam) -> Triangle:
    """(a, b, t) -> (2a+b+t+1, a+b+t+1, a+t+1); always a valid triangle."""
    a, b, t = p.a, p.b, p.t
    return Triangle(2 * a + b + t + 1, a + b + t + 1, a + t + 1)


def triangle_to_param(tri: Triangle) -> TriangleParam:
    """Inverse of param_to_triangle.

    a = x - y and b = y - z measure the side gaps; t = y + z - x - 1 is
    non-negative exactly because of the triangle inequality.
    """
    return TriangleParam(a=tri.x - tri.y, b=tri.y - tri.z, t=tri.y + tri.z - tri.x - 1)


def triangle_gf() -> RationalGF:
    """q^3 / ((1-q^2)(1-q^3)(1-q^4)): the perimeter generating function."""
    return RationalGF.from_parts((2, 3, 4), shift=3)


def andrews_expr() -> Expr:
    """Andrews's closed form for the triangle count at perimeter n."""
    return parse("round(n^2/12) - floor(n/4)*floor((n+2)/4)")


def paper_check() -> bool:
    """Bit-exact 37-term comparison of the two sides of the identity.

    True iff coefficients 0..36 of the triangle generating function all
    equal Andrews's formula there.  Checking 37 terms is one more than
    the tight finite-check window needs; it is kept verbatim as the
    classic form of the verification.
    """
    expr = andrews_expr()
    coeffs = triangle_gf().coeffs(36)
    return all(coeffs[n] == expr_eval(expr, n) for n in range(37))
