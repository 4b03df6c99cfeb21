"""Brill-Noether arithmetic for pencils on curves in an ample system |L|.

The dimension predictor: when the generic gonality satisfies
k = 2 phi(L) < mu(L) and k <= d <= g - k, the variety of degree-d pencils
on a general smooth curve in |L| has dimension exactly d - k.  The
remaining operations audit the bookkeeping behind that count on concrete
input: exhaustive enumeration of the destabilizing splittings L = M + N,
the M.N >= k - 1 bound, the extension/Grassmannian parameter chain, the
moduli-dimension check in the stable regime, and the plane-cover family
L = n(E_1 + E_2) (E_1.E_2 = 2) whose curves carry infinitely many minimal
pencils.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import RangeError, SearchExhaustedError
from .invariants import (
    CASE_MU_SQUARE,
    IsotropicDecomposition,
    decompose_isotropic,
    gonality,
)
from .lattice import CONFIG_II, DivisorClass, config_ii, embed_configuration
from .positivity import classify_positivity, cohomology
from .shortvec import ComplementLift

STATUS_APPLIES = "applies"
STATUS_FAILS = "fails-hypothesis"
STATUS_EMPTY = "empty-range"


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number g - (r+1)(g-d+r), the expected dim of W^r_d."""
    if g < 0 or r < 0 or d < 0:
        raise ValueError("rho needs nonnegative arguments")
    return g - (r + 1) * (g - d + r)


@dataclass(frozen=True)
class BNPrediction:
    genus: int
    k: int
    status: str
    rows: tuple[tuple[int, int, int], ...]  # (d, rho, predicted dim)
    reason: str | None = None
    infinite_pencil: bool = False
    notes: tuple[str, ...] = ()

    @property
    def applies(self) -> bool:
        return self.status == STATUS_APPLIES


def _looks_like_pencil_family(dec: IsotropicDecomposition) -> bool:
    """L = n(E_1 + E_2) with E_1.E_2 = 2 and n >= 3."""
    if dec.configuration != CONFIG_II or len(dec.generators) != 2:
        return False
    a, b = dec.coefficients
    return a == b and a >= 3


def predict_w1d(L: DivisorClass) -> BNPrediction:
    """Dimension table for W^1_d on general smooth curves in |L|.

    Applies when k = 2 phi(L) < mu(L); rows cover k <= d <= g - k with
    predicted dimension d - k.  When k = mu(L) < 2 phi(L) the hypothesis
    fails, and if moreover L is n(E_1 + E_2) with E_1.E_2 = 2, n >= 3, the
    failure comes with the infinite-pencil phenomenon: a sub-linear system
    of curves carrying infinitely many minimal pencils.
    """
    rep = gonality(L)
    g, k = rep.genus, rep.k
    mu_exceeds_2phi = (not rep.mu.exact) or rep.mu.value > 2 * rep.phi.value
    notes: list[str] = []
    if rep.k == 2 * rep.phi.value and mu_exceeds_2phi:
        if 2 * k > g:
            return BNPrediction(g, k, STATUS_EMPTY, (), reason="k > g/2")
        rows = tuple((d, rho(g, 1, d), d - k) for d in range(k, g - k + 1))
        return BNPrediction(g, k, STATUS_APPLIES, rows)
    if rep.mu.exact and rep.mu.value == k and k < 2 * rep.phi.value:
        reason = f"k = mu = {k} < 2 phi = {2 * rep.phi.value}"
        infinite = False
        try:
            infinite = _looks_like_pencil_family(decompose_isotropic(L))
        except SearchExhaustedError:
            notes.append("decomposition search exhausted; pencil-family test skipped")
        return BNPrediction(
            g, k, STATUS_FAILS, (), reason=reason,
            infinite_pencil=infinite, notes=tuple(notes),
        )
    return BNPrediction(
        g, k, STATUS_FAILS, (),
        reason=f"k = {k} is not 2 phi = {2 * rep.phi.value} "
        f"(case {rep.case_label})",
    )


# ---------------------------------------------------------------------------
# Destabilizing splittings L = M + N.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DestabChecklist:
    """Numerical consequences of the splitting conditions, by name.

    (a) |N| moves: h0(N) >= 2.
    (b) M is big on C: M^2 > 0, h0(M) >= 2, h2(M) = 0.
    (c) h1(M) = 0.
    (d) N|_C dominates the pencil: constrains the pencil, not (M, N);
        recorded as informational only.
    (e) if ell > 0: h1(N) = 0 and N^2 > 0.
    """

    a_h0_N_ge_2: bool
    b_M_square_positive: bool
    b_h0_M_ge_2: bool
    b_h2_M_zero: bool
    c_h1_M_zero: bool
    e_points_supported: bool

    def all_pass(self) -> bool:
        return all(
            (
                self.a_h0_N_ge_2,
                self.b_M_square_positive,
                self.b_h0_M_ge_2,
                self.b_h2_M_zero,
                self.c_h1_M_zero,
                self.e_points_supported,
            )
        )

    def as_dict(self) -> dict:
        return {
            "a": self.a_h0_N_ge_2,
            "b": self.b_M_square_positive
            and self.b_h0_M_ge_2
            and self.b_h2_M_zero,
            "c": self.c_h1_M_zero,
            "d": None,  # informational only
            "e": self.e_points_supported,
        }


@dataclass(frozen=True)
class DestabCandidate:
    M: DivisorClass
    N: DivisorClass
    d: int
    mn: int
    ell: int
    checklist: DestabChecklist


def _candidate_profile(M: DivisorClass, N: DivisorClass) -> tuple:
    cm, cn, cd = cohomology(M), cohomology(N), cohomology(M - N)
    return (cm, cn, cd, cohomology(N - M).h0)


def enumerate_destab(L: DivisorClass, d: int) -> list[DestabCandidate]:
    """Exhaustive numerical splittings L = M + N that could destabilize.

    Filters: N effective with h0(N) >= 2; M.L >= N.L; ell = d - M.N >= 0;
    M^2 > 0, h0(M) >= 2, h1(M) = h2(M) = 0; and when ell > 0 also
    h1(N) = 0 with N^2 > 0.  Finiteness: N.L <= L^2/2 and N^2 >= 0 bound
    the complement norm of N, so candidates come from one short-vector
    sweep per degree.  Both torsion decorations are listed when they give
    genuinely different cohomology; otherwise the untwisted M is kept.
    """
    rep = gonality(L)
    g, k = rep.genus, rep.k
    if not (k <= d <= g - k):
        raise RangeError(f"d = {d} outside the admissible range {k}..{g - k}")
    l_sq = L.square
    lift = ComplementLift(L.num.form, L.num)
    out: list[DestabCandidate] = []
    for t in range(1, l_sq // 2 + 1):
        for n_num in lift.fiber_min_square(t, 0):
            m_num = L.num - n_num
            mn = m_num.dot(n_num)
            ell = d - mn
            if ell < 0:
                continue
            if 2 * t == l_sq and m_num.coords < n_num.coords:
                continue  # dedup the M.L = N.L tie: keep N lexicographically first
            seen_profiles = []
            for torsion_m in (0, 1):
                M = DivisorClass(m_num, torsion_m)
                N = DivisorClass(n_num, L.torsion ^ torsion_m)
                ch_n = cohomology(N)
                ch_m = cohomology(M)
                checklist = DestabChecklist(
                    a_h0_N_ge_2=ch_n.h0 >= 2,
                    b_M_square_positive=m_num.square > 0,
                    b_h0_M_ge_2=ch_m.h0 >= 2,
                    b_h2_M_zero=ch_m.h2 == 0,
                    c_h1_M_zero=ch_m.h1 == 0,
                    e_points_supported=(
                        ell == 0 or (ch_n.h1 == 0 and n_num.square > 0)
                    ),
                )
                if not checklist.all_pass():
                    continue
                profile = _candidate_profile(M, N)
                if profile in seen_profiles:
                    continue  # the torsion twist changes nothing measurable
                seen_profiles.append(profile)
                out.append(DestabCandidate(M, N, d, mn, ell, checklist))
    out.sort(key=lambda c: (c.N.dot(L), c.N.num.coords, c.M.torsion))
    return out


def check_mn_bound(L: DivisorClass, d: int) -> tuple[int | None, bool]:
    """Minimum of M.N over the splittings, and whether it is >= k - 1.

    An empty candidate list verifies the bound vacuously (min is None).
    """
    rep = gonality(L)
    cands = enumerate_destab(L, d)
    if not cands:
        return None, True
    m = min(c.mn for c in cands)
    return m, m >= rep.k - 1


def cliff_chain_bound(M: DivisorClass, N: DivisorClass, E: DivisorClass) -> int:
    """M.N - E.(M - N): the Clifford bound carried by (M+E) restricted to C.

    E must be a primitive isotropic effective class with E.(M - N) >= 1;
    the returned bound is then automatically <= M.N - 1.
    """
    from .lattice import content

    st = classify_positivity(E)
    if E.square != 0 or not st.is_effective or content(E.num)[0] != 1:
        raise ValueError("E must be primitive isotropic effective")
    s = E.dot(M - N)
    if s < 1:
        raise ValueError(f"need E.(M-N) >= 1, got {s}")
    mn = M.dot(N)
    bound = mn - s
    assert bound <= mn - 1
    return bound


# ---------------------------------------------------------------------------
# Parameter counts.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParamCountAudit:
    """Dimension bookkeeping for the family of splittings with invariants
    (g, d, M.N, i = h1 of the bundle, ell = d - M.N).

    ext_dim bounds the extension choices, p_dim the splitting family after
    adding the point choices, gr_dim the Grassmannian of section planes;
    total_bound is the resulting bound g - 2 + d - M.N on the whole family,
    and theorem_bound = g - 1 + d - k is what the dimension theorem needs.
    """

    g: int
    d: int
    mn: int
    i: int
    ell: int
    h1_mn: int
    h2_mn: int
    ext_dim: int
    p_dim: int
    gr_dim: int
    total_bound: int
    theorem_bound: int


def param_count(
    g: int,
    d: int,
    mn: int,
    i: int,
    ell: int,
    h1_mn: int,
    h2_mn: int,
    *,
    k: int,
) -> ParamCountAudit:
    """Evaluate the parameter-count chain at one invariant vector.

    i is the h^1 of the rank-2 bundle and can only be 0, 1 or 2; ell must
    equal d - mn and be nonnegative.  The chain:

        ext_dim   = ell + h1(M-N) - h2(M-N) - 1
        p_dim    <= 3d - 3 mn - 2i + h1(M-N) - h2(M-N) - 1
        gr_dim    = 2e - 4,  e = g + 1 - d + i
        total     = p_dim + gr_dim - h0(M-N) + 1 = g - 2 + d - mn

    using chi(M-N) = g - 2 mn, which follows from (M-N)^2 = L^2 - 4 M.N.
    """
    if i not in (0, 1, 2):
        raise ValueError(f"i must be 0, 1 or 2, got {i}")
    if ell != d - mn or ell < 0:
        raise ValueError(f"ell must equal d - mn >= 0, got ell={ell}, d-mn={d - mn}")
    ext_dim = ell + h1_mn - h2_mn - 1
    p_dim = 3 * d - 3 * mn - 2 * i + h1_mn - h2_mn - 1
    e = g + 1 - d + i
    gr_dim = 2 * e - 4
    h0_mn = (g - 2 * mn) + h1_mn - h2_mn  # Riemann-Roch on M - N
    total_bound = p_dim + gr_dim - h0_mn + 1
    assert total_bound == g - 2 + d - mn
    theorem_bound = g - 1 + d - k
    return ParamCountAudit(
        g, d, mn, i, ell, h1_mn, h2_mn,
        ext_dim, p_dim, gr_dim, total_bound, theorem_bound,
    )


class StableCaseAudit(NamedTuple):
    moduli_dim: int
    w_bound: int


def stable_case_audit(g: int, d: int) -> StableCaseAudit:
    """Moduli dimension 4d - 2g - 1 of the stable bundles and the 2d - g
    bound it puts on dim W^1_d; never clamped, so empty strata show up as
    negative numbers.

    The bound 2d - g is at most d - k exactly when d <= g - k, for any k.
    """
    if d < 1 or g < 2:
        raise ValueError("need d >= 1 and g >= 2")
    return StableCaseAudit(4 * d - 2 * g - 1, 2 * d - g)


# ---------------------------------------------------------------------------
# The plane-cover family L = n(E_1 + E_2), E_1.E_2 = 2.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneCoverFamilyReport:
    """Invariants of L = n(E_1 + E_2) with E_1.E_2 = 2 (n >= 3).

    B = E_1 + E_2 maps the surface 4:1 onto the plane; pulling back the
    lines through a moving point of a degree-n plane curve gives a
    1-parameter family of pencils of degree B.L - 4 on each curve of the
    pulled-back system, two less than the generic gonality.  cs_bound is
    the Castelnuovo-Severi threshold 4 g(C') + 3 (gon - 1); cs_holds
    records that the genus stays below it, i.e. the covering construction
    is not forced by the inequality.
    """

    n: int
    l_square: int
    genus: int
    phi: int
    k: int
    gon_special: int
    plane_genus: int
    cs_bound: int
    cs_holds: bool
    pencil_family_dim: int = 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "Lsq": self.l_square,
            "g": self.genus,
            "phi": self.phi,
            "k": self.k,
            "gonSpecial": self.gon_special,
            "planeGenus": self.plane_genus,
            "csBound": self.cs_bound,
            "csHolds": self.cs_holds,
            "pencilFamilyDim": self.pencil_family_dim,
        }


def plane_cover_family_report(n: int) -> PlaneCoverFamilyReport:
    """Compute the family invariants for a given n >= 3, with phi and the
    gonality coming from the live search (the closed forms are asserted
    against them, never substituted for them)."""
    if n < 3:
        raise RangeError(f"the family needs n >= 3, got {n}")
    e1, e2 = embed_configuration(config_ii(2))
    L = DivisorClass(n * (e1 + e2), 0)
    rep = gonality(L)
    l_sq = L.square
    assert l_sq == 4 * n * n
    g = rep.genus
    assert g == 2 * n * n + 1
    assert rep.phi.value == 2 * n, "live phi disagrees with the family formula"
    assert rep.k == 4 * n - 2, "live gonality disagrees with the family formula"
    assert rep.case_label == CASE_MU_SQUARE
    b = DivisorClass(e1 + e2, 0)
    gon_special = b.dot(L) - 4
    assert gon_special == 4 * n - 4 == rep.k - 2
    plane_genus = (n - 1) * (n - 2) // 2
    cs_bound = 4 * plane_genus + 3 * (gon_special - 1)
    return PlaneCoverFamilyReport(
        n=n,
        l_square=l_sq,
        genus=g,
        phi=rep.phi.value,
        k=rep.k,
        gon_special=gon_special,
        plane_genus=plane_genus,
        cs_bound=cs_bound,
        cs_holds=g <= cs_bound,
    )
