"""Gonality-type invariants of polarizations on an unnodal Enriques surface.

phi(L) is the minimal degree L.E over effective isotropic classes E; mu(L)
is the minimal L.B - 2 over effective B with B^2 = 4, phi(B) = 2, B not
numerically equivalent to L.  The generic gonality of smooth curves in |L|
is

    k = min{ 2 phi(L), mu(L), floor(L^2/4) + 2 },

where the floor term wins exactly for the six squares/phi pairs in
EXCEPTIONAL_SQUARE_PHI_PAIRS (and then equals 2 phi - 1), and mu wins
exactly when L^2 = phi^2 (phi even) or L^2 = phi^2 + phi - 2.  The generic
Clifford index is k - 2.

All searches run through the complement projection, so every reported
minimum is certified: phi candidates satisfy phi <= sqrt(L^2), and a mu
search capped at L.B <= 2 phi + 2 decides the gonality minimum even when it
reports "not found".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotAmpleEnoughError, NotAmpleError, GenusTooSmallError, SearchExhaustedError
from .lattice import (
    CONFIG_I,
    CONFIG_II,
    CONFIG_III,
    DivisorClass,
    NumClass,
    content,
)
from .positivity import classify_positivity, reference_ample
from .shortvec import ComplementLift

#: (L^2, phi) pairs where the gonality drops to floor(L^2/4) + 2 = 2 phi - 1.
EXCEPTIONAL_SQUARE_PHI_PAIRS = frozenset(
    {(30, 5), (22, 4), (20, 4), (14, 3), (12, 3), (6, 2)}
)

CASE_GENERIC = "generic-2phi"
CASE_MU_SQUARE = "mu-case-square"
CASE_MU_SQUARE_PLUS = "mu-case-square-plus"
CASE_FLOOR_EXCEPTIONAL = "floor-exceptional"
CASE_FLOOR_PLAIN = "floor-plain"

MU_EXACT = "exact"
MU_NOT_FOUND = "not-found-below-cap"


@dataclass(frozen=True)
class PhiResult:
    value: int
    witness: DivisorClass


@dataclass(frozen=True)
class MuResult:
    status: str
    cap: int
    value: int | None = None
    witness: DivisorClass | None = None

    @property
    def exact(self) -> bool:
        return self.status == MU_EXACT


@dataclass(frozen=True)
class GonalityReport:
    k: int
    phi: PhiResult
    mu: MuResult
    floor_term: int
    case_label: str
    genus: int
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class IsotropicDecomposition:
    generators: tuple[DivisorClass, ...]
    coefficients: tuple[int, ...]
    configuration: str


def _require_effective_positive(L: DivisorClass, op: str) -> None:
    st = classify_positivity(L)
    if not (st.is_effective and L.square > 0):
        raise NotAmpleEnoughError(
            f"{op} needs an effective class of positive square; got "
            f"square {L.square}, status {st.witness}"
        )


def phi(L: DivisorClass) -> PhiResult:
    """Exact minimum of L.E over primitive isotropic effective classes E.

    Complete by the bound phi(L) <= sqrt(L^2): for t = 1.. isqrt(L^2), the
    isotropic classes with x.L = t have complement norm exactly t^2/L^2, a
    finite ellipsoid search.  The witness is the lexicographically least
    primitive hit at the smallest t.
    """
    _require_effective_positive(L, "phi")
    lift = ComplementLift(L.num.form, L.num)
    a0 = reference_ample(L.num.form)
    for t in range(1, math.isqrt(L.square) + 1):
        hits = [
            x
            for x in lift.fiber(t, 0)
            if not x.is_zero() and content(x)[0] == 1
        ]
        if hits:
            for x in hits:
                # effectivity is automatic: x.L > 0 puts x in the cone of L
                assert x.dot(a0.num) > 0
            return PhiResult(t, DivisorClass(hits[0], 0))
    raise SearchExhaustedError(
        f"no isotropic class with L.E <= isqrt(L^2) = {math.isqrt(L.square)}; "
        "input is outside the modeled cone"
    )


def mu(L: DivisorClass, cap: int | None = None) -> MuResult:
    """Exact minimum of L.B - 2 over effective B, B^2 = 4, phi(B) = 2, B != L.

    The search considers all B with L.B <= cap (default 2 phi(L) + 2, which
    suffices to decide the gonality minimum) and reports "not found below
    cap" otherwise; that report certifies mu(L) > cap - 2.

    The phi(B) = 2 test never rebuilds lattice machinery per candidate:
    phi(B) = 1 would need an isotropic E with E.B = 1, and the Gram
    determinant of <B, E, L> (which is >= 0 in signature (1,9)) forces
    E.L <= (B.L + sqrt((B.L)^2 - 4 L^2)) / 4, so one bounded pool of
    isotropic classes decides the test for every candidate at once.
    """
    _require_effective_positive(L, "mu")
    if cap is None:
        cap = 2 * phi(L).value + 2
    lift = ComplementLift(L.num.form, L.num)
    num_L = L.num
    l_sq = L.square
    disc = cap * cap - 4 * l_sq
    pool_bound = (cap + math.isqrt(disc)) // 4 if disc >= 0 else 0
    iso_pool: list[NumClass] = []
    for s in range(1, pool_bound + 1):
        iso_pool.extend(lift.fiber(s, 0))
    for t in range(1, cap + 1):
        for x in lift.fiber(t, 4):
            if x == num_L:
                continue  # the definition excludes B numerically equal to L
            if any(e.dot(x) == 1 for e in iso_pool):
                continue  # phi(x) = 1; B^2 = 4 admits no larger phi than 2
            # fibers are lexicographically sorted, so the first admissible
            # candidate at the minimal degree is the canonical witness
            return MuResult(MU_EXACT, cap, t - 2, DivisorClass(x, 0))
    return MuResult(MU_NOT_FOUND, cap)


def _is_twice_d10(L: DivisorClass) -> bool:
    """Whether L = 2D numerically with D^2 = 10 and phi(D) = 3."""
    if any(c % 2 for c in L.num.coords):
        return False
    half = NumClass(tuple(c // 2 for c in L.num.coords), L.num.form)
    if half.square != 10:
        return False
    return phi(DivisorClass(half, 0)).value == 3


def gonality(L: DivisorClass) -> GonalityReport:
    """Generic gonality of smooth curves in |L|, with its achieving case."""
    st = classify_positivity(L)
    if not st.is_ample or L.square < 2:
        raise NotAmpleError(
            f"gonality needs an ample class with L^2 >= 2; got square {L.square}"
        )
    p = phi(L)
    m = mu(L)
    floor_term = L.square // 4 + 2
    genus = L.square // 2 + 1
    terms = [2 * p.value, floor_term]
    if m.exact:
        terms.append(m.value)
    k = min(terms)

    notes: list[str] = []
    pair_key = (L.square, p.value)
    label = None
    if pair_key in EXCEPTIONAL_SQUARE_PHI_PAIRS:
        label = CASE_FLOOR_EXCEPTIONAL
        assert k == floor_term == 2 * p.value - 1
    elif k == 2 * p.value:
        label = CASE_GENERIC
    elif m.exact and m.value == k:
        # mu achieves the minimum (possibly tying the floor term); the two
        # mu shapes require the classified value of k to match as well
        if (
            L.square == p.value**2
            and p.value % 2 == 0
            and k == 2 * p.value - 2
        ):
            label = CASE_MU_SQUARE
        elif (
            L.square == p.value**2 + p.value - 2
            and p.value >= 3
            and k == (2 * p.value - 1 if p.value >= 5 else 2 * p.value - 2)
            and not _is_twice_d10(L)
        ):
            label = CASE_MU_SQUARE_PLUS
            notes.append(
                "square-plus case: L = 2D exclusion checked numerically "
                "(torsion ignored)"
            )
    if label is None:
        if k == floor_term:
            # the floor term achieves the minimum at a pair outside the
            # exceptional list.  This covers the boundary shapes where the
            # classified mu value is impossible: at (4, 2) the would-be
            # minimizer is numerically L itself (excluded by definition),
            # and for L^2 = phi^2 + phi - 2 with phi in {3, 4} the Hodge
            # bound (L.B)^2 >= 4 L^2 already forces mu > 2 phi - 2.
            label = CASE_FLOOR_PLAIN
        else:
            raise AssertionError(
                f"mu wins at (L^2, phi) = {pair_key}, outside the known "
                "classification; this indicates a search bug"
            )
    return GonalityReport(k, p, m, floor_term, label, genus, tuple(notes))


def clifford_generic(L: DivisorClass) -> int:
    """Generic Clifford index of smooth curves in |L|: k - 2 for genus >= 4.

    Genus 2 and 3 are governed by the small-genus conventions (0 for
    hyperelliptic, 1 for non-hyperelliptic genus 3); those numerically still
    equal k - 2, and are raised as GenusTooSmallError carrying the value.
    """
    rep = gonality(L)
    if rep.genus >= 4:
        return rep.k - 2
    value = rep.k - 2
    if rep.k == 2:
        reason = "hyperelliptic convention: Cliff = 0"
    else:
        reason = "non-hyperelliptic genus-3 convention: Cliff = 1"
    raise GenusTooSmallError(rep.genus, value, reason)


# ---------------------------------------------------------------------------
# Isotropic decompositions.
# ---------------------------------------------------------------------------


def _pattern_of(two_edges: list[tuple[int, int]]) -> str | None:
    """Which decomposition pattern a set of 2-pairings realizes, if any."""
    if not two_edges:
        return CONFIG_I
    if len(two_edges) == 1:
        return CONFIG_II
    if len(two_edges) == 2:
        a, b = two_edges
        shared = set(a) & set(b)
        if len(shared) == 1:
            return CONFIG_III
    return None


def _solve_coefficients(
    gens: list[NumClass], target: NumClass
) -> list[int] | None:
    """Positive integer a_i with sum a_i E_i = target, or None.

    The pairwise Gram of a pattern-compatible generator set is nonsingular,
    so the pairings against the target determine the rational coefficients;
    the coordinate identity is then verified exactly.
    """
    from fractions import Fraction

    n = len(gens)
    a = [
        [Fraction(gens[i].dot(gens[j])) for j in range(n)] + [Fraction(gens[i].dot(target))]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None  # singular: not a valid generator set
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / pv
                for c in range(col, n + 1):
                    a[r][c] -= f * a[col][c]
    coeffs = []
    for i in range(n):
        v = a[i][n] / a[i][i]
        if v.denominator != 1 or v <= 0:
            return None
        coeffs.append(int(v))
    acc = coeffs[0] * gens[0]
    for c, e in zip(coeffs[1:], gens[1:]):
        acc = acc + c * e
    if acc != target:
        return None
    return coeffs


def _normalize_decomposition(
    gens: list[NumClass], coeffs: list[int], two_edges: list[tuple[int, int]]
) -> IsotropicDecomposition:
    """Reorder generators to the canonical pattern indexing."""
    n = len(gens)
    label = _pattern_of(two_edges)
    assert label is not None
    order = list(range(n))
    if label == CONFIG_II:
        a, b = two_edges[0]
        order = [a, b] + [i for i in range(n) if i not in (a, b)]
    elif label == CONFIG_III:
        (a1, b1), (a2, b2) = two_edges
        shared = (set((a1, b1)) & set((a2, b2))).pop()
        partners = sorted({a1, b1, a2, b2} - {shared})
        order = [shared] + partners + [
            i for i in range(n) if i != shared and i not in partners
        ]
    return IsotropicDecomposition(
        tuple(DivisorClass(gens[i], 0) for i in order),
        tuple(coeffs[i] for i in order),
        label,
    )


def decompose_isotropic(
    L: DivisorClass,
    *,
    max_candidates: int = 512,
    max_nodes: int = 200_000,
) -> IsotropicDecomposition:
    """One decomposition L = a_1 E_1 + ... + a_n E_n into primitive isotropic
    effective classes whose pairwise pairings follow pattern (i), (ii) or
    (iii).

    The candidate pool is grown degree by degree from phi(L) up to L^2 (in
    any decomposition every generator satisfies E_i.L <= L^2); within a
    stage, generators are tried in order of increasing L-degree then
    lexicographic coordinates, small generator sets before large ones, and
    the first pattern-compatible subset admitting positive integer
    coefficients wins.  Deterministic; raises SearchExhaustedError with the
    bound that was hit rather than silently truncating.
    """
    st = classify_positivity(L)
    if not st.is_effective or L.square < 0:
        raise NotAmpleEnoughError(
            "decompose_isotropic needs an effective class of nonnegative square"
        )
    if L.square == 0:
        c, prim = content(L.num)
        return IsotropicDecomposition((DivisorClass(prim, 0),), (c,), CONFIG_I)

    lift = ComplementLift(L.num.form, L.num)
    phi_value = phi(L).value
    l_sq = L.square
    fiber_cache: dict[int, list[NumClass]] = {}

    def pool_up_to(bound: int) -> list[NumClass]:
        out = []
        for t in range(1, bound + 1):
            if t not in fiber_cache:
                fiber_cache[t] = [
                    x for x in lift.fiber(t, 0) if content(x)[0] == 1
                ]
            out.extend(fiber_cache[t])
        out.sort(key=lambda x: (x.dot(L.num), x.coords))
        return out

    bounds = list(range(phi_value, l_sq + 1))

    budget = max_nodes

    def search(cands: list[NumClass], size: int) -> IsotropicDecomposition | None:
        """Depth-first over index tuples of exactly the given size."""
        nonlocal budget
        n_cand = len(cands)
        pairs: dict[tuple[int, int], int] = {}

        def pairing(i: int, j: int) -> int:
            key = (i, j) if i < j else (j, i)
            if key not in pairs:
                pairs[key] = cands[key[0]].dot(cands[key[1]])
            return pairs[key]

        chosen: list[int] = []
        two_edges: list[tuple[int, int]] = []

        def rec(start: int) -> IsotropicDecomposition | None:
            nonlocal budget
            if len(chosen) == size:
                gens = [cands[i] for i in chosen]
                coeffs = _solve_coefficients(gens, L.num)
                if coeffs is not None:
                    return _normalize_decomposition(gens, coeffs, two_edges)
                return None
            for idx in range(start, n_cand):
                budget -= 1
                if budget <= 0:
                    raise SearchExhaustedError(
                        f"decomposition search exceeded {max_nodes} nodes "
                        f"(pool size {n_cand})"
                    )
                ok = True
                new_edges = []
                for pos, prev in enumerate(chosen):
                    v = pairing(prev, idx)
                    if v not in (1, 2):
                        ok = False
                        break
                    if v == 2:
                        new_edges.append((pos, len(chosen)))
                if not ok:
                    continue
                if _pattern_of(two_edges + new_edges) is None:
                    continue
                chosen.append(idx)
                two_edges.extend(new_edges)
                hit = rec(idx + 1)
                if hit is not None:
                    return hit
                del two_edges[len(two_edges) - len(new_edges):]
                chosen.pop()
            return None

        return rec(0)

    # Small generator sets are overwhelmingly more common, so try all pairs
    # before any triple and so on; together with the degree-staged pool
    # growth this makes the returned decomposition deterministic.
    last_pool = -1
    for bound in bounds:
        cands = pool_up_to(bound)
        if len(cands) == last_pool:
            continue  # nothing new at this degree
        last_pool = len(cands)
        if len(cands) > max_candidates:
            raise SearchExhaustedError(
                f"candidate pool exceeded {max_candidates} classes at degree "
                f"bound {bound}"
            )
        for size in range(2, min(10, len(cands)) + 1):
            hit = search(cands, size)
            if hit is not None:
                return hit
    raise SearchExhaustedError(
        f"no decomposition found with generator degrees <= L^2 = {l_sq}; "
        f"node budget remaining {budget}"
    )
