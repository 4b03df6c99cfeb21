"""Exact arithmetic in the rank-10 even unimodular lattice U + E8(-1).

The numerical lattice of an Enriques surface is U + E8(-1), signature (1,9).
Coordinates 1-2 span the hyperbolic plane U with Gram [[0,1],[1,0]];
coordinates 3-10 carry the E8 root lattice with its form negated, basis in
Bourbaki node order.  Everything below is exact integer (or Fraction)
arithmetic; floats never appear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import FormMismatchError, NotRealizableError, ZeroClassError

RANK = 10

# Bourbaki E8 diagram: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
_E8_EDGES = ((1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8))


def _e8_cartan() -> list[list[int]]:
    c = [[0] * 8 for _ in range(8)]
    for i in range(8):
        c[i][i] = 2
    for a, b in _E8_EDGES:
        c[a - 1][b - 1] = c[b - 1][a - 1] = -1
    return c


@dataclass(frozen=True)
class IntersectionForm:
    """A symmetric integer bilinear form on Z^rank."""

    rank: int
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.gram) != self.rank or any(len(r) != self.rank for r in self.gram):
            raise ValueError("gram matrix size does not match rank")
        for i in range(self.rank):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def determinant(self) -> int:
        d = integer_determinant(self.gram)
        return d

    def inertia(self) -> tuple[int, int, int]:
        """(positive, negative, zero) counts of a rational diagonalization."""
        return inertia(self.gram)

    def apply(self, coords: Sequence[int]) -> tuple[int, ...]:
        """gram @ coords, the linear functional <., coords>."""
        return tuple(
            sum(self.gram[i][j] * coords[j] for j in range(self.rank))
            for i in range(self.rank)
        )


@lru_cache(maxsize=8)
def _sparse_entries(gram: tuple) -> tuple[tuple[int, int, int], ...]:
    """Nonzero (i, j, value) triples of a Gram matrix; it is sparse here."""
    n = len(gram)
    return tuple(
        (i, j, gram[i][j]) for i in range(n) for j in range(n) if gram[i][j]
    )


@dataclass(frozen=True)
class NumClass:
    """An element of the numerical lattice, as coordinates in a fixed form."""

    coords: tuple[int, ...]
    form: IntersectionForm

    def __post_init__(self):
        if len(self.coords) != self.form.rank:
            raise ValueError(
                f"expected {self.form.rank} coordinates, got {len(self.coords)}"
            )

    def _check(self, other: "NumClass") -> None:
        if self.form != other.form:
            raise FormMismatchError("classes live in different intersection forms")

    def dot(self, other: "NumClass") -> int:
        self._check(other)
        a, b = self.coords, other.coords
        return sum(v * a[i] * b[j] for i, j, v in _sparse_entries(self.form.gram))

    @property
    def square(self) -> int:
        return self.dot(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "NumClass") -> "NumClass":
        self._check(other)
        return NumClass(
            tuple(a + b for a, b in zip(self.coords, other.coords)), self.form
        )

    def __sub__(self, other: "NumClass") -> "NumClass":
        self._check(other)
        return NumClass(
            tuple(a - b for a, b in zip(self.coords, other.coords)), self.form
        )

    def __neg__(self) -> "NumClass":
        return NumClass(tuple(-a for a in self.coords), self.form)

    def __rmul__(self, k: int) -> "NumClass":
        if not isinstance(k, int):
            return NotImplemented
        return NumClass(tuple(k * a for a in self.coords), self.form)

    def __mul__(self, k: int) -> "NumClass":
        return self.__rmul__(k)


def pair(x: NumClass, y: NumClass) -> int:
    """Intersection number x.y through the shared form."""
    return x.dot(y)


def content(x: NumClass) -> tuple[int, NumClass]:
    """gcd of coordinates and the primitive part: x = c * primitive.

    In a unimodular lattice the content-1 classes are exactly the
    primitive ones.
    """
    if x.is_zero():
        raise ZeroClassError("the zero class has no content decomposition")
    c = 0
    for a in x.coords:
        c = math.gcd(c, a)
    return c, NumClass(tuple(a // c for a in x.coords), x.form)


def is_primitive(x: NumClass) -> bool:
    return not x.is_zero() and content(x)[0] == 1


@dataclass(frozen=True)
class DivisorClass:
    """Numerical class plus a torsion bit (0: the class, 1: class + K_S).

    The Picard group of an Enriques surface is Num + Z/2.K_S; intersection
    numbers never see the bit, cohomology sometimes does.
    """

    num: NumClass
    torsion: int = 0

    def __post_init__(self):
        if self.torsion not in (0, 1):
            raise ValueError("torsion bit must be 0 or 1")

    def dot(self, other: "DivisorClass | NumClass") -> int:
        o = other.num if isinstance(other, DivisorClass) else other
        return self.num.dot(o)

    @property
    def square(self) -> int:
        return self.num.square

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.num + other.num, self.torsion ^ other.torsion)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.num - other.num, self.torsion ^ other.torsion)

    def __neg__(self) -> "DivisorClass":
        # 2K_S ~ 0, so -(D + K_S) = -D + K_S: the bit survives negation.
        return DivisorClass(-self.num, self.torsion)

    def __rmul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(k * self.num, (k * self.torsion) % 2)

    def __mul__(self, k: int) -> "DivisorClass":
        return self.__rmul__(k)


@lru_cache(maxsize=1)
def canonical_form() -> IntersectionForm:
    """The fixed rank-10 form U + E8(-1) in the documented basis order."""
    g = [[0] * RANK for _ in range(RANK)]
    g[0][1] = g[1][0] = 1
    cartan = _e8_cartan()
    for i in range(8):
        for j in range(8):
            g[2 + i][2 + j] = -cartan[i][j]
    return IntersectionForm(RANK, tuple(tuple(row) for row in g))


def basis_vector(i: int, form: IntersectionForm | None = None) -> NumClass:
    form = form or canonical_form()
    coords = [0] * form.rank
    coords[i] = 1
    return NumClass(tuple(coords), form)


def num_class(coords: Iterable[int], form: IntersectionForm | None = None) -> NumClass:
    return NumClass(tuple(int(c) for c in coords), form or canonical_form())


def divisor_class(
    coords: Iterable[int], torsion: int = 0, form: IntersectionForm | None = None
) -> DivisorClass:
    return DivisorClass(num_class(coords, form), torsion)


def canonical_torsion_class(form: IntersectionForm | None = None) -> DivisorClass:
    """K_S: numerically trivial, 2K_S ~ 0, K_S itself nontrivial."""
    form = form or canonical_form()
    return DivisorClass(NumClass((0,) * form.rank, form), 1)


# ---------------------------------------------------------------------------
# Exact linear algebra helpers (integers / Fractions only).
# ---------------------------------------------------------------------------


def integer_determinant(gram: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(gram)
    m = [[int(x) for x in row] for row in gram]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((r for r in range(k + 1, n) if m[r][k]), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inertia(gram: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Signature of a symmetric matrix by congruence reduction over Q."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = zero = 0
    for i in range(n):
        if a[i][i] == 0:
            j = next((r for r in range(i + 1, n) if a[r][r] != 0), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((c for c in range(i + 1, n) if a[i][c] != 0), None)
                if j is None:
                    zero += 1
                    continue
                for c in range(n):
                    a[i][c] += a[j][c]
                for r in range(n):
                    a[r][i] += a[r][j]
        d = a[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            f = a[r][i] / d
            for c in range(n):
                a[r][c] -= f * a[i][c]
        for c in range(i + 1, n):
            f = a[i][c] / d
            for r in range(n):
                a[r][c] -= f * a[i][r]
    return pos, neg, zero


def solve_integer_linear(
    rows: Sequence[Sequence[int]], rhs: Sequence[int]
) -> tuple[tuple[int, ...] | None, list[tuple[int, ...]]]:
    """Solve rows @ x = rhs over the integers.

    Returns ``(x0, kernel)``: one particular integer solution (or None if the
    system has no integer solution) and a basis of the integer kernel of the
    homogeneous system.  Works by unimodular column reduction, so the kernel
    basis is a genuine lattice basis, not just a rational one.
    """
    r = len(rows)
    n = len(rows[0]) if r else 0
    h = [list(row) for row in rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_swap(a: int, b: int) -> None:
        for row in h:
            row[a], row[b] = row[b], row[a]
        for row in u:
            row[a], row[b] = row[b], row[a]

    def col_addmul(dst: int, src: int, q: int) -> None:
        for row in h:
            row[dst] += q * row[src]
        for row in u:
            row[dst] += q * row[src]

    def col_neg(a: int) -> None:
        for row in h:
            row[a] = -row[a]
        for row in u:
            row[a] = -row[a]

    pivots: list[tuple[int, int]] = []
    p = 0
    for i in range(r):
        if p >= n:
            break
        while True:
            if h[i][p] < 0:
                col_neg(p)
            rest = [j for j in range(p + 1, n) if h[i][j] != 0]
            if h[i][p] == 0:
                if not rest:
                    break
                col_swap(rest[0], p)
                continue
            if not rest:
                break
            for j in rest:
                col_addmul(j, p, -(h[i][j] // h[i][p]))
            rest = [j for j in range(p + 1, n) if h[i][j] != 0]
            if not rest:
                break
            # remainders are in [0, pivot); swapping in the smallest shrinks
            # the pivot, so this loop terminates like the Euclid algorithm
            col_swap(min(rest, key=lambda j: h[i][j]), p)
        if h[i][p] != 0:
            pivots.append((i, p))
            p += 1

    piv_by_row = dict(pivots)
    y = [0] * n
    solvable = True
    for i in range(r):
        res = rhs[i] - sum(h[i][j] * y[j] for j in range(n) if h[i][j])
        pc = piv_by_row.get(i)
        if pc is None:
            if res != 0:
                solvable = False
                break
        else:
            if res % h[i][pc] != 0:
                solvable = False
                break
            y[pc] = res // h[i][pc]

    x0 = None
    if solvable:
        x0 = tuple(sum(u[a][j] * y[j] for j in range(n)) for a in range(n))
    pivot_cols = {pc for _, pc in pivots}
    kernel = [
        tuple(u[a][j] for a in range(n)) for j in range(n) if j not in pivot_cols
    ]
    return x0, kernel


# ---------------------------------------------------------------------------
# Isotropic configurations.
# ---------------------------------------------------------------------------

CONFIG_I = "config-i"
CONFIG_II = "config-ii"
CONFIG_III = "config-iii"
CONFIG_CUSTOM = "custom"


@dataclass(frozen=True)
class ConfigurationPresentation:
    """Requested pairwise intersections of n primitive isotropic classes.

    The three named patterns are the ones every effective class of
    nonnegative square decomposes into: (i) all pairings 1; (ii) the first
    pair meets in 2, the rest in 1; (iii) the first class meets the second
    and third in 2, all remaining pairs meet in 1.
    """

    n: int
    gram_sub: tuple[tuple[int, ...], ...]
    label: str = CONFIG_CUSTOM

    def __post_init__(self):
        if not 1 <= self.n <= 10:
            raise NotRealizableError(f"need 1 <= n <= 10, got {self.n}")
        g = self.gram_sub
        if len(g) != self.n or any(len(row) != self.n for row in g):
            raise NotRealizableError("sub-Gram size does not match n")
        for i in range(self.n):
            if g[i][i] != 0:
                raise NotRealizableError(
                    "isotropic classes need a zero diagonal; "
                    f"entry ({i + 1},{i + 1}) is {g[i][i]}"
                )
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise NotRealizableError("sub-Gram must be symmetric")
                if g[i][j] < 1:
                    raise NotRealizableError(
                        "distinct effective isotropic classes pair positively; "
                        f"entry ({j + 1},{i + 1}) is {g[i][j]}"
                    )


def _pattern_gram(n: int, two_pairs: Sequence[tuple[int, int]]) -> tuple:
    g = [[0 if i == j else 1 for j in range(n)] for i in range(n)]
    for a, b in two_pairs:
        g[a][b] = g[b][a] = 2
    return tuple(tuple(row) for row in g)


def config_i(n: int) -> ConfigurationPresentation:
    return ConfigurationPresentation(n, _pattern_gram(n, ()), CONFIG_I)


def config_ii(n: int) -> ConfigurationPresentation:
    if n < 2:
        raise NotRealizableError("pattern (ii) needs n >= 2")
    return ConfigurationPresentation(n, _pattern_gram(n, ((0, 1),)), CONFIG_II)


def config_iii(n: int) -> ConfigurationPresentation:
    if n < 3:
        raise NotRealizableError("pattern (iii) needs n >= 3")
    return ConfigurationPresentation(n, _pattern_gram(n, ((0, 1), (0, 2))), CONFIG_III)


def custom_configuration(gram_sub: Sequence[Sequence[int]]) -> ConfigurationPresentation:
    g = tuple(tuple(int(x) for x in row) for row in gram_sub)
    return ConfigurationPresentation(len(g), g, CONFIG_CUSTOM)


def embed_configuration(
    p: ConfigurationPresentation,
    form: IntersectionForm | None = None,
    *,
    max_height: int = 6,
) -> list[NumClass]:
    """Find primitive isotropic classes E_1..E_n realizing the sub-Gram.

    Every returned class pairs positively with the reference class f+g, so
    they all sit in the positive cone.  The search fills one slot at a time,
    trying candidates in order of increasing (f+g)-degree and then
    lexicographic coordinates, and backtracks; the result is therefore
    deterministic.  Candidates are generated lazily, one degree at a time,
    so the (large) high-degree fibers are only enumerated when a pattern is
    hard to realize.  Raises NotRealizableError (exhausted=True) if no
    solution shows up with every degree <= max_height.
    """
    from .shortvec import FiberSystem  # deferred: shortvec imports this module

    form = form or canonical_form()
    ample = basis_vector(0, form) + basis_vector(1, form)

    def candidates(chosen: list[NumClass], idx: int):
        fiber = FiberSystem(form, [ample] + chosen)
        wanted = [p.gram_sub[k][idx] for k in range(len(chosen))]
        for height in range(1, max_height + 1):
            sols = [
                x
                for x in fiber.solutions([height] + wanted, 0)
                if is_primitive(x)
            ]
            sols.sort(key=lambda x: x.coords)
            yield from sols

    chosen: list[NumClass] = []

    def search(idx: int) -> bool:
        if idx == p.n:
            return True
        for cand in candidates(chosen, idx):
            chosen.append(cand)
            if search(idx + 1):
                return True
            chosen.pop()
        return False

    if not search(0):
        raise NotRealizableError(
            f"no embedding of the requested configuration with all degrees "
            f"<= {max_height}",
            exhausted=True,
        )
    return chosen
