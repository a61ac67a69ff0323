"""Exact elements of cyclotomic fields Q(zeta_e).

A value is a rational vector over the power basis 1, z, ..., z^(phi(e)-1)
of z = zeta_e, reduced modulo the e-th cyclotomic polynomial.  Internally the
vector is held as integer numerators over a single positive denominator in
lowest terms, so equality is plain tuple equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def euler_phi(e: int) -> int:
    out = 1
    n = e
    f = 2
    while f * f <= n:
        if n % f == 0:
            out *= f - 1
            n //= f
            while n % f == 0:
                out *= f
                n //= f
        f += 1
    if n > 1:
        out *= n - 1
    return out


def _poly_divide_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # exact division of integer polynomials, den monic; coeffs low -> high
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the e-th cyclotomic polynomial."""
    if e < 1:
        raise ValueError("conductor must be >= 1")
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(e: int) -> tuple[tuple[int, ...], ...]:
    """x^m reduced mod Phi_e, for every m needed by products and root sums.

    Row m has length phi(e); rows cover m in 0..max(e, 2*phi(e)-1)-1."""
    phi = euler_phi(e)
    poly = cyclotomic_polynomial(e)
    count = max(e, 2 * phi - 1)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(count):
        rows.append(tuple(cur))
        shifted = [0] + cur[:]
        lead = shifted.pop()
        if lead:
            shifted = [a - lead * poly[t] for t, a in enumerate(shifted)]
        cur = shifted
    return tuple(rows)


class Cyclotomic:
    """An element of Q(zeta_e), canonical mod the cyclotomic polynomial."""

    __slots__ = ("conductor", "den", "nums")

    def __init__(self, conductor: int, nums: Iterable[int], den: int = 1,
                 _normalized: bool = False):
        if not _normalized:
            if conductor < 1:
                raise ValueError("conductor must be >= 1")
            nums = list(int(x) for x in nums)
            den = int(den)
            phi = euler_phi(conductor)
            if len(nums) != phi:
                raise ValueError(f"need {phi} coefficients for conductor {conductor}")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                den = -den
                nums = [-x for x in nums]
            g = math.gcd(den, *[abs(x) for x in nums]) if any(nums) else den
            if g > 1:
                den //= g
                nums = [x // g for x in nums]
            nums = tuple(nums)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "nums", tuple(nums))
        object.__setattr__(self, "den", den)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, e: int) -> "Cyclotomic":
        return cls(e, [0] * euler_phi(e), 1, _normalized=False)

    @classmethod
    def one(cls, e: int) -> "Cyclotomic":
        return cls.from_rational(e, 1)

    @classmethod
    def from_rational(cls, e: int, q: Rational) -> "Cyclotomic":
        q = Fraction(q)
        nums = [q.numerator] + [0] * (euler_phi(e) - 1)
        return cls(e, nums, q.denominator)

    @classmethod
    def root_of_unity(cls, e: int, m: int) -> "Cyclotomic":
        """zeta_e^m."""
        return cls(e, _power_rows(e)[m % e], 1)

    @classmethod
    def from_root_vector(cls, e: int, vec: Sequence[int]) -> "Cyclotomic":
        """Sum of vec[t] * zeta_e^t over t."""
        phi = euler_phi(e)
        rows = _power_rows(e)
        acc = [0] * phi
        for t, c in enumerate(vec):
            if c:
                row = rows[t % e]
                for j, rj in enumerate(row):
                    if rj:
                        acc[j] += c * rj
        return cls(e, acc, 1)

    # -- structure ------------------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def sort_key(self) -> tuple[Fraction, ...]:
        return self.coefficients

    # -- conductor changes ------------------------------------------------------

    def to_conductor(self, d: int) -> "Cyclotomic":
        e = self.conductor
        if d == e:
            return self
        if d % e == 0:
            rows = _power_rows(d)
            step = d // e
            acc = [0] * euler_phi(d)
            for i, a in enumerate(self.nums):
                if a:
                    row = rows[(i * step) % d]
                    for j, rj in enumerate(row):
                        if rj:
                            acc[j] += a * rj
            return Cyclotomic(d, acc, self.den)
        if e % d == 0:
            return self._restrict_conductor(d)
        lcm = math.lcm(e, d)
        return self.to_conductor(lcm)._restrict_conductor(d)

    def _restrict_conductor(self, d: int) -> "Cyclotomic":
        e = self.conductor
        pivots, transform = _restriction_solver(e, d)
        target = self.coefficients
        phi_e = euler_phi(e)
        phi_d = euler_phi(d)
        solution = [sum(transform[r][c] * target[c] for c in range(phi_e) if target[c])
                    for r in range(phi_e)]
        for r in range(phi_d, phi_e):
            if solution[r]:
                raise ValueError(
                    f"value with conductor {e} does not lie in Q(zeta_{d})")
        coeffs = [solution[pivots.index(j)] if j in pivots else Fraction(0)
                  for j in range(phi_d)]
        # pivots form the full column set when E has full rank, which holds
        # for the embedding matrix; assemble exact numerators
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        return Cyclotomic(d, nums, den)

    # -- Galois action ----------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Image under zeta |-> zeta^k; requires gcd(k, conductor) = 1."""
        e = self.conductor
        if math.gcd(k, e) != 1:
            raise ValueError(f"{k} is not a unit modulo {e}")
        if e <= 2 or k % e == 1:
            return self
        rows = _power_rows(e)
        acc = [0] * euler_phi(e)
        for i, a in enumerate(self.nums):
            if a:
                row = rows[(i * k) % e]
                for j, rj in enumerate(row):
                    if rj:
                        acc[j] += a * rj
        return Cyclotomic(e, acc, self.den)

    def conjugate(self) -> "Cyclotomic":
        if self.conductor <= 2:
            return self
        return self.galois(self.conductor - 1)

    # -- ring operations ----------------------------------------------------------

    @staticmethod
    def _coerced(a: "Cyclotomic", b: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if a.conductor == b.conductor:
            return a, b
        d = math.lcm(a.conductor, b.conductor)
        return a.to_conductor(d), b.to_conductor(d)

    def _wrap(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coerced(self, other)
        den = math.lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        nums = [x * fa + y * fb for x, y in zip(a.nums, b.nums)]
        return Cyclotomic(a.conductor, nums, den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-x for x in self.nums], self.den,
                          _normalized=True)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.conductor,
                              [x * q.numerator for x in self.nums],
                              self.den * q.denominator)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._coerced(self, other)
        if sum(1 for x in a.nums if x) > sum(1 for y in b.nums if y):
            a, b = b, a
        e = a.conductor
        phi = euler_phi(e)
        rows = _power_rows(e)
        acc = [0] * phi
        for i, x in enumerate(a.nums):
            if not x:
                continue
            for j, y in enumerate(b.nums):
                if not y:
                    continue
                m = i + j
                xy = x * y
                if m < phi:
                    acc[m] += xy
                else:
                    row = rows[m]
                    for t, rt in enumerate(row):
                        if rt:
                            acc[t] += xy * rt
        return Cyclotomic(e, acc, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError
            return self * Fraction(q.denominator, q.numerator)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.den == other.den and self.nums == other.nums
        a, b = self._coerced(self, other)
        return a.den == b.den and a.nums == b.nums

    __hash__ = None  # values are compared exactly but not interned

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mon = f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}"
                if c == 1:
                    term = mon
                elif c == -1:
                    term = f"-{mon}"
                else:
                    term = f"{c}*{mon}"
                parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {self!s})"


@lru_cache(maxsize=None)
def _restriction_solver(e: int, d: int):
    """Solver data for rewriting conductor-e values in Q(zeta_d), d | e.

    Returns (pivots, transform): transform is the row-operation matrix T of
    the Gauss-Jordan elimination of E^T, where row j of E is zeta_d^j
    expressed over the conductor-e power basis.  A value v lies in Q(zeta_d)
    iff the non-pivot rows of T v vanish; the coefficients over the
    conductor-d basis are then read off the pivot rows.
    """
    phi_e = euler_phi(e)
    phi_d = euler_phi(d)
    rows_e = _power_rows(e)
    step = e // d
    emb = [[Fraction(x) for x in rows_e[(j * step) % e]] for j in range(phi_d)]
    # eliminate on E^T (phi_e x phi_d), carrying an identity block
    mat = [[emb[j][i] for j in range(phi_d)] + [Fraction(int(i == t)) for t in range(phi_e)]
           for i in range(phi_e)]
    pivots = []
    r = 0
    for c in range(phi_d):
        pr = next((i for i in range(r, phi_e) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(phi_e):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    if len(pivots) != phi_d:
        raise ArithmeticError("embedding matrix unexpectedly rank-deficient")
    transform = tuple(tuple(row[phi_d:]) for row in mat)
    return tuple(pivots), transform
