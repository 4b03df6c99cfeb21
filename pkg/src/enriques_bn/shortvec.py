"""Certified short-vector enumeration for positive-definite integral forms.

This is the search kernel behind every minimization in the package.  The
indefinite rank-10 problems ("all isotropic x with x.L = t") reduce to
positive-definite ones through the orthogonal projection along L: writing
x = ((x.L)/L^2) L + x_perp, the identity

    -(x_perp)^2 = (x.L)^2 / L^2 - x^2

turns a constraint on x.L and x^2 into an exact bound on the complement
norm, which is a positive-definite quantity because the form has signature
(1, 9).  Enumeration is Fincke-Pohst style recursive coordinate bounding on
a rational LDL^T decomposition; all arithmetic is int/Fraction, so the
completeness certificate is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotPositiveDefiniteError, PositiveSquareRequiredError
from .lattice import (
    IntersectionForm,
    NumClass,
    integer_determinant,
    solve_integer_linear,
)

Rational = int | Fraction


@dataclass(frozen=True)
class PosDefForm:
    """A positive-definite rational quadratic form, stored as numer/denom."""

    rank: int
    numer: tuple[tuple[int, ...], ...]
    denom: int = 1

    def __post_init__(self):
        if self.denom <= 0:
            raise ValueError("denominator must be positive")
        if len(self.numer) != self.rank or any(
            len(r) != self.rank for r in self.numer
        ):
            raise ValueError("matrix size does not match rank")
        for i in range(self.rank):
            for j in range(i):
                if self.numer[i][j] != self.numer[j][i]:
                    raise ValueError("matrix must be symmetric")

    def leading_principal_minors(self) -> list[int]:
        return [
            integer_determinant([row[: k + 1] for row in self.numer[: k + 1]])
            for k in range(self.rank)
        ]

    def is_positive_definite(self) -> bool:
        return all(m > 0 for m in self.leading_principal_minors())

    def value(self, v: Sequence[int]) -> Fraction:
        acc = 0
        for i in range(self.rank):
            if v[i]:
                acc += v[i] * sum(
                    self.numer[i][j] * v[j] for j in range(self.rank) if v[j]
                )
        return Fraction(acc, self.denom)

    def gram_fractions(self) -> list[list[Fraction]]:
        return [
            [Fraction(x, self.denom) for x in row] for row in self.numer
        ]


@dataclass(frozen=True)
class ShortVectorResult:
    """All nonzero vectors v with 0 < q(v) <= bound, lexicographically sorted."""

    bound: Fraction
    vectors: tuple[tuple[int, ...], ...]
    includes_negatives: bool = True


def _ldl(gram: Sequence[Sequence[Fraction]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """q(y) = sum_i d_i (y_i + sum_{j>i} r_ij y_j)^2; fails unless q > 0."""
    n = len(gram)
    d: list[Fraction] = []
    r = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        di = gram[i][i] - sum(d[m] * r[m][i] * r[m][i] for m in range(i))
        if di <= 0:
            raise NotPositiveDefiniteError(
                f"pivot {i + 1} of the LDL decomposition is {di}"
            )
        d.append(di)
        r[i][i] = Fraction(1)
        for j in range(i + 1, n):
            v = gram[i][j] - sum(d[m] * r[m][i] * r[m][j] for m in range(i))
            r[i][j] = v / di
    return d, r


def _solve_spd(
    d: list[Fraction], r: list[list[Fraction]], b: Sequence[Rational]
) -> list[Fraction]:
    """Solve (R^T D R) y = b using the cached LDL factors."""
    n = len(d)
    z = [Fraction(0)] * n
    for i in range(n):
        z[i] = Fraction(b[i]) - sum(r[j][i] * z[j] for j in range(i))
    for i in range(n):
        z[i] /= d[i]
    y = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        y[i] = z[i] - sum(r[i][j] * y[j] for j in range(i + 1, n))
    return y


def _ellipsoid_points(
    d: list[Fraction],
    r: list[list[Fraction]],
    center: Sequence[Fraction],
    bound: Fraction,
) -> list[tuple[int, ...]]:
    """All integer y with q(y - center) <= bound, q given by its LDL factors.

    Integer loop bounds come from integer square roots with one unit of
    slack; the exact inequality is rechecked before descending, so the
    output is complete and contains no spurious points.
    """
    if bound < 0:
        return []
    n = len(d)
    if n == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    y = [0] * n

    def rec(i: int, rem: Fraction) -> None:
        u = sum(
            (r[i][j] * (y[j] - center[j]) for j in range(i + 1, n)),
            start=Fraction(0),
        )
        ci = center[i] - u
        tau = rem / d[i]
        root_hi = Fraction(math.isqrt(tau.numerator * tau.denominator) + 1, tau.denominator)
        lo = math.ceil(ci - root_hi)
        hi = math.floor(ci + root_hi)
        for yi in range(lo, hi + 1):
            t = d[i] * (yi - ci) ** 2
            if t <= rem:
                y[i] = yi
                if i == 0:
                    out.append(tuple(y))
                else:
                    rec(i - 1, rem - t)
        y[i] = 0

    rec(n - 1, Fraction(bound))
    return out


def _ellipsoid_shell(
    d: list[Fraction],
    r: list[list[Fraction]],
    center: Sequence[Fraction],
    target: Fraction,
) -> list[tuple[int, ...]]:
    """All integer y with q(y - center) == target exactly.

    Same recursion as the interior enumeration, but the innermost
    coordinate is solved from the equality (a perfect-square test) instead
    of scanned, which avoids walking the interior of large ellipsoids.
    """
    if target < 0:
        return []
    n = len(d)
    if n == 0:
        return [()] if target == 0 else []
    out: list[tuple[int, ...]] = []
    y = [0] * n

    def solve_last(rem: Fraction) -> list[int]:
        u = sum(
            (r[0][j] * (y[j] - center[j]) for j in range(1, n)),
            start=Fraction(0),
        )
        c0 = center[0] - u
        tau = rem / d[0]
        num_root = math.isqrt(tau.numerator)
        den_root = math.isqrt(tau.denominator)
        if num_root * num_root != tau.numerator or den_root * den_root != tau.denominator:
            return []
        root = Fraction(num_root, den_root)
        vals = []
        for cand in {c0 + root, c0 - root}:
            if cand.denominator == 1:
                vals.append(int(cand))
        return vals

    def rec(i: int, rem: Fraction) -> None:
        if i == 0:
            for y0 in solve_last(rem):
                y[0] = y0
                out.append(tuple(y))
            y[0] = 0
            return
        u = sum(
            (r[i][j] * (y[j] - center[j]) for j in range(i + 1, n)),
            start=Fraction(0),
        )
        ci = center[i] - u
        tau = rem / d[i]
        root_hi = Fraction(math.isqrt(tau.numerator * tau.denominator) + 1, tau.denominator)
        lo = math.ceil(ci - root_hi)
        hi = math.floor(ci + root_hi)
        for yi in range(lo, hi + 1):
            t = d[i] * (yi - ci) ** 2
            if t <= rem:
                y[i] = yi
                rec(i - 1, rem - t)
        y[i] = 0

    rec(n - 1, target)
    return out


def enumerate_short(q: PosDefForm, bound: Rational) -> ShortVectorResult:
    """Exactly the nonzero v with q(v) <= bound, complete and duplicate-free."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    d, r = _ldl(q.gram_fractions())
    zero = (0,) * q.rank
    pts = [p for p in _ellipsoid_points(d, r, [Fraction(0)] * q.rank, bound) if p != zero]
    pts.sort()
    return ShortVectorResult(bound=bound, vectors=tuple(pts))


def _lift_points(
    form: IntersectionForm,
    x0: NumClass,
    kernel: Sequence[NumClass],
    pts: Sequence[tuple[int, ...]],
) -> list[NumClass]:
    """x0 + sum y_i * kernel_i for every point, sorted lexicographically."""
    base = x0.coords
    kernel_coords = [v.coords for v in kernel]
    n = len(base)
    out = []
    for y in pts:
        acc = list(base)
        for yi, vc in zip(y, kernel_coords):
            if yi:
                for idx in range(n):
                    acc[idx] += yi * vc[idx]
        out.append(NumClass(tuple(acc), form))
    out.sort(key=lambda c: c.coords)
    return out


class FiberSystem:
    """Integer classes with prescribed pairings against fixed classes.

    Given constraint classes u_1..u_r whose span contains a class of
    positive square, their joint orthogonal complement is negative definite,
    so for any prescribed pairing values x.u_j = c_j and any target x^2 the
    solution set is a finite affine ellipsoid problem.  The kernel data and
    its LDL factors depend only on the classes and are computed once; each
    value vector costs one small integer solve.
    """

    def __init__(self, form: IntersectionForm, classes: Sequence[NumClass]):
        self.form = form
        self.classes = list(classes)
        self._rows = [form.apply(u.coords) for u in self.classes]
        _, kernel = solve_integer_linear(self._rows, [0] * len(self._rows))
        self._kernel = [NumClass(v, form) for v in kernel]
        k = len(self._kernel)
        gram = tuple(
            tuple(-self._kernel[i].dot(self._kernel[j]) for j in range(k))
            for i in range(k)
        )
        self.q_perp = PosDefForm(k, gram)
        if k:
            self._ldl = _ldl(self.q_perp.gram_fractions())
        else:
            self._ldl = ([], [])

    def _enumerate(
        self, values: Sequence[int], square: int, exact: bool
    ) -> list[NumClass]:
        x0_coords, _ = solve_integer_linear(self._rows, list(values))
        if x0_coords is None:
            return []
        x0 = NumClass(x0_coords, self.form)
        k = len(self._kernel)
        if k == 0:
            good = x0.square == square if exact else x0.square >= square
            return [x0] if good else []
        b = [x0.dot(v) for v in self._kernel]
        d, r = self._ldl
        center = _solve_spd(d, r, b)
        bound = (
            Fraction(x0.square - square)
            + sum(Fraction(bi) * ci for bi, ci in zip(b, center))
        )
        enum = _ellipsoid_shell if exact else _ellipsoid_points
        pts = enum(d, r, center, bound)
        return _lift_points(self.form, x0, self._kernel, pts)

    def solutions(self, values: Sequence[int], square: int) -> list[NumClass]:
        """All x with x.u_j = values[j] and x^2 == square."""
        out = self._enumerate(values, square, exact=True)
        assert all(x.square == square for x in out)
        return out

    def solutions_min_square(
        self, values: Sequence[int], min_square: int
    ) -> list[NumClass]:
        """All x with x.u_j = values[j] and x^2 >= min_square."""
        return self._enumerate(values, min_square, exact=False)


class ComplementLift:
    """Fibers of the projection along a fixed class L of positive square.

    For each pairing value t = x.L and admissible complement norm, lists the
    lattice preimages x.  The complement form q_perp is cached across t; the
    particular solution scales linearly with t because the lattice is
    unimodular (x.L ranges over content(L) * Z).
    """

    def __init__(self, form: IntersectionForm, L: NumClass):
        if L.square <= 0:
            raise PositiveSquareRequiredError(
                f"projection needs L^2 > 0, got {L.square}"
            )
        self.form = form
        self.L = L
        self.L_square = L.square
        w = form.apply(L.coords)
        g = 0
        for a in w:
            g = math.gcd(g, a)
        self.degree_step = g  # x.L always lies in g*Z
        x0, kernel = solve_integer_linear([w], [g])
        assert x0 is not None
        self._x0_unit = NumClass(x0, form)
        self._kernel = [NumClass(v, form) for v in kernel]
        k = len(self._kernel)
        gram = tuple(
            tuple(-self._kernel[i].dot(self._kernel[j]) for j in range(k))
            for i in range(k)
        )
        self.q_perp = PosDefForm(k, gram)
        self._ldl = _ldl(self.q_perp.gram_fractions()) if k else ([], [])

    def complement_norm(self, x: NumClass) -> Fraction:
        """-(x_perp)^2 = (x.L)^2/L^2 - x^2, exactly."""
        t = x.dot(self.L)
        return Fraction(t * t, self.L_square) - x.square

    def _enumerate(self, t: int, square: int, exact: bool) -> list[NumClass]:
        if t % self.degree_step != 0:
            return []
        x0 = (t // self.degree_step) * self._x0_unit
        k = len(self._kernel)
        if k == 0:
            good = x0.square == square if exact else x0.square >= square
            return [x0] if good else []
        b = [x0.dot(v) for v in self._kernel]
        d, r = self._ldl
        center = _solve_spd(d, r, b)
        bound = (
            Fraction(x0.square - square)
            + sum(Fraction(bi) * ci for bi, ci in zip(b, center))
        )
        enum = _ellipsoid_shell if exact else _ellipsoid_points
        pts = enum(d, r, center, bound)
        return _lift_points(self.form, x0, self._kernel, pts)

    def fiber(self, t: int, square: int) -> list[NumClass]:
        """All x with x.L = t and x^2 = square, in lexicographic order."""
        out = self._enumerate(t, square, exact=True)
        assert all(x.square == square for x in out)
        return out

    def fiber_min_square(self, t: int, min_square: int) -> list[NumClass]:
        """All x with x.L = t and x^2 >= min_square."""
        return self._enumerate(t, min_square, exact=False)


def project_complement(
    form: IntersectionForm, L: NumClass
) -> tuple[PosDefForm, ComplementLift]:
    """Positive-definite complement form along L plus the fiber-lifting data."""
    lift = ComplementLift(form, L)
    return lift.q_perp, lift
