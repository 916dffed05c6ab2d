"""Boundary-component combinatorics and fiber restriction.

A compactification datum is encoded by the set of simple roots touching
the defining highest weight.  The Levi set of a parabolic splits into the
part chain-connected to that weight (the h-side) and its complement (the
ell-side); parabolics sharing the h-side part normalize the same boundary
component, and the largest one in each group is called saturated.  The
projection onto the coarser compactification has fibers stratified by the
parabolics whose saturation is the given one, and restricting a family to
such a fiber collapses each thread along Q -> Q intersect R.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf

from .kostant import (
    KostantClass,
    bracketing_parabolics,
    kostant_decomposition,
)
from .posetmod import (
    Face,
    GradedAbelian,
    face_key,
    restrict_shriek,
    restrict_star,
    subsets,
    supported_local_cohomology,
)
from .roots import (
    Parabolic,
    RootSystem,
    Vec,
    _dot,
    _vec_sub,
    factorize,
    longest_levi_element,
    parabolic,
)
from .threads import build_thread

EQUAL_RANK_PRESETS = {"C"}


@dataclass(frozen=True)
class SatakeDatum:
    """Connectivity datum of a compactification of the given group."""

    system: RootSystem
    mu_support: frozenset
    equal_rank: bool = True

    def __post_init__(self):
        if not self.mu_support:
            raise ValueError("the defining weight must touch the diagram")
        if not all(0 <= i < self.system.rank for i in self.mu_support):
            raise ValueError(f"bad support indices {sorted(self.mu_support)}")


def baily_borel(system: RootSystem) -> SatakeDatum:
    """The natural datum for type C: weight at the long-root end."""
    if system.cartan_type != "C":
        raise ValueError("the natural datum needs a type C group")
    return SatakeDatum(system, frozenset({system.rank - 1}), equal_rank=True)


def _adjacent(system: RootSystem, i: int, j: int) -> bool:
    return _dot(system.simple_roots[i], system.simple_roots[j]) != 0


def kappa_zeta(datum: SatakeDatum, psi) -> tuple[frozenset, frozenset]:
    """Split psi into the part chain-connected to the weight and the rest.

    A root joins kappa when a chain inside psi reaches a root pairing
    nontrivially with the defining weight.  The two parts are checked to
    be orthogonal, not assumed.
    """
    psi = frozenset(psi)
    sys = datum.system
    # the chain ends at the weight itself, so it seeds at its support
    reached = set(psi & datum.mu_support)
    frontier = set(reached)
    while frontier:
        nxt = {
            i
            for i in psi - reached
            if any(_adjacent(sys, i, j) for j in frontier)
        }
        reached |= nxt
        frontier = nxt
    kappa = frozenset(reached)
    zeta = psi - kappa
    for i in kappa:
        for j in zeta:
            if _adjacent(sys, i, j):
                raise AssertionError(
                    f"connected split: {i} in the weight part touches {j}"
                )
    return kappa, zeta


def p_dagger(datum: SatakeDatum, P: Parabolic) -> Parabolic:
    """The largest parabolic above P with the same weight-connected part."""
    kappa, _ = kappa_zeta(datum, P.levi)
    best = P.levi
    for extra in subsets(P.restricted_indices):
        levi = P.levi | extra
        k2, _ = kappa_zeta(datum, levi)
        if k2 == kappa and len(levi) > len(best):
            best = levi
    return parabolic(datum.system, best)


def omega(datum: SatakeDatum, psi) -> frozenset:
    return p_dagger(datum, parabolic(datum.system, psi)).levi


def is_saturated(datum: SatakeDatum, P: Parabolic) -> bool:
    return p_dagger(datum, P).levi == P.levi


def saturated_parabolics(datum: SatakeDatum) -> list[Parabolic]:
    sys = datum.system
    out = [
        parabolic(sys, levi)
        for levi in subsets(range(sys.rank))
        if is_saturated(datum, parabolic(sys, levi))
    ]
    out.sort(key=lambda P: face_key(P.levi))
    return out


def fiber_strata(datum: SatakeDatum, R: Parabolic) -> list[Parabolic]:
    """Strata of the fiber over a point of the boundary piece of R."""
    if not is_saturated(datum, R):
        raise ValueError(f"{R} is not saturated")
    sys = datum.system
    out = [
        parabolic(sys, levi)
        for levi in subsets(sorted(R.levi))
        if p_dagger(datum, parabolic(sys, levi)).levi == R.levi
    ]
    out.sort(key=lambda P: face_key(P.levi))
    return out


def complementary_parabolic(Q: Parabolic, R: Parabolic) -> Parabolic:
    """The parabolic T >= Q whose restricted roots avoid the Levi of R.

    Characterized by adjoining to Q exactly its restricted roots outside
    the Levi of R; shriek-restriction to T equals shriek-restriction to Q
    after collapsing onto R.
    """
    extra = frozenset(Q.restricted_indices) - R.levi
    return parabolic(Q.system, Q.levi | extra)


# -- dimension bookkeeping (split preset) ---------------------------------


def _subsystem_positives(system: RootSystem, support: frozenset) -> list[int]:
    out = []
    for idx, coords in enumerate(system.positive_coords):
        if all(c == 0 or i in support for i, c in enumerate(coords)):
            out.append(idx)
    return out


def dim_boundary_symmetric_space(
    datum: SatakeDatum, P: Parabolic, side: str
) -> int:
    """Split dimension of the h- or ell-side symmetric space of P."""
    kappa, zeta = kappa_zeta(datum, P.levi)
    part = kappa if side == "h" else zeta
    if side not in ("h", "ell"):
        raise ValueError(f"side must be 'h' or 'ell', got {side!r}")
    return len(_subsystem_positives(datum.system, part)) + len(part)


def codim_boundary_stratum(datum: SatakeDatum, R: Parabolic) -> int:
    sys = datum.system
    dim_full = len(sys.positive_roots) + sys.rank
    return dim_full - dim_boundary_symmetric_space(datum, R, "h")


def _ell_projection(datum: SatakeDatum, P: Parabolic, v: Vec) -> Vec:
    _, zeta = kappa_zeta(datum, P.levi)
    return datum.system.levi_projection(v, frozenset(zeta))


def fiber_self_contragredient(datum: SatakeDatum, c: KostantClass) -> bool:
    """Self-duality of the class after restriction to the ell-side Levi."""
    _, zeta = kappa_zeta(datum, c.P.levi)
    mss = _ell_projection(datum, c.P, c.mu)
    if all(x == 0 for x in mss):
        return True
    w0 = longest_levi_element(c.system, frozenset(zeta))
    return tuple(-x for x in w0.apply(mss)) == tuple(mss)


def _ell_dimDV(datum: SatakeDatum, c: KostantClass) -> int:
    from . import snf

    sys = c.system
    _, zeta = kappa_zeta(datum, c.P.levi)
    perp = [
        i
        for i in _subsystem_positives(sys, zeta)
        if _dot(sys.positive_roots[i], c.mu) == 0
    ]
    if not perp:
        return 0
    rank = snf.qq_rank([list(sys.positive_roots[i]) for i in perp])
    return len(perp) + rank


# -- fiber restriction ----------------------------------------------------


@dataclass(frozen=True)
class FiberEntry:
    """One class detected on the fiber, with total-degree range."""

    cls: KostantClass
    window: tuple[tuple[Face, GradedAbelian], ...]
    c: int
    d: int


@dataclass(frozen=True)
class FiberRestriction:
    """Micro-support data of the two fiber restrictions of a family."""

    R: Parabolic
    star_entries: tuple[FiberEntry, ...]
    shriek_entries: tuple[FiberEntry, ...]
    d_star: Fraction | float
    c_shriek: Fraction | float
    d_bound: Fraction
    c_bound: Fraction

    @property
    def bounds_hold(self) -> bool:
        return self.d_star <= self.d_bound and self.c_shriek >= self.c_bound


def _fiber_entries(
    datum: SatakeDatum,
    R: Parabolic,
    family: str,
    lam_coords,
    kind: str | None,
    profile: str | None,
    shriek: bool,
) -> list[FiberEntry]:
    sys = datum.system
    shift = (
        dim_boundary_symmetric_space(datum, R, "h")
        if shriek and not R.is_full
        else 0
    )
    entries = []
    for P in fiber_strata(datum, R):
        a_R = frozenset(P.restricted_indices) & R.levi
        for c in kostant_decomposition(lam_coords, P):
            if not fiber_self_contragredient(datum, c):
                continue
            thread = build_thread(
                family, P, c.w, kind=kind, profile=profile, lam=c.lam
            )
            fiber = (
                restrict_shriek(thread, a_R)
                if shriek
                else restrict_star(thread, a_R)
            )
            # detection only counts between the bracketing faces, cut to R
            q_lo, q_hi = bracketing_parabolics(c)
            s_lo = frozenset(q_lo.levi - P.levi) & a_R
            s_hi = frozenset(q_hi.levi - P.levi) & a_R
            window = []
            for s in subsets(sorted(s_hi)):
                if not s_lo <= s:
                    continue
                g = supported_local_cohomology(fiber, s)
                if not g.is_zero:
                    window.append((s, g.shifted(c.degree + shift)))
            if not window:
                continue
            degs = [d for _, g in window for d in g.degrees()]
            entries.append(
                FiberEntry(
                    cls=c, window=tuple(window), c=min(degs), d=max(degs)
                )
            )
    return entries


def restrict_to_fiber(
    datum: SatakeDatum,
    R: Parabolic,
    family: str,
    lam_coords,
    kind: str | None = None,
    profile: str | None = None,
) -> FiberRestriction:
    """Micro-support of both fiber restrictions, with the degree bounds.

    The plain restriction collapses each thread onto the faces inside R;
    the shriek version keeps only those faces and shifts degrees up by the
    dimension of the h-side boundary component.  Degree ranges combine the
    class data with the split-preset ell-side dimensions.
    """
    if not is_saturated(datum, R):
        raise ValueError(f"{R} is not saturated")
    star = _fiber_entries(datum, R, family, lam_coords, kind, profile, False)
    shk = _fiber_entries(datum, R, family, lam_coords, kind, profile, True)
    d_star, c_shriek = -inf, inf
    for e in star:
        half = Fraction(
            dim_boundary_symmetric_space(datum, e.cls.P, "ell")
            + _ell_dimDV(datum, e.cls),
            2,
        )
        d_star = max(d_star, half + e.d)
    for e in shk:
        half = Fraction(
            dim_boundary_symmetric_space(datum, e.cls.P, "ell")
            - _ell_dimDV(datum, e.cls),
            2,
        )
        c_shriek = min(c_shriek, half + e.c)
    codim = codim_boundary_stratum(datum, R)
    n_rest = len(R.restricted_indices)
    return FiberRestriction(
        R=R,
        star_entries=tuple(star),
        shriek_entries=tuple(shk),
        d_star=d_star,
        c_shriek=c_shriek,
        d_bound=Fraction(codim, 2) - n_rest,
        c_bound=Fraction(codim, 2) + n_rest,
    )


# -- pairing comparison across one adjoined root --------------------------


def pairing_shift(c: KostantClass, alpha0: int):
    """Compare a class's pairings with those of its one-step parent.

    Adjoining alpha0 to the Levi factors the representative through the
    larger parabolic; the parent class there has its own pairings against
    the remaining restricted roots.  Returns the parent class and, for each
    remaining root, the pair (parent pairing, child pairing).
    """
    if alpha0 not in c.P.restricted_indices:
        raise ValueError(f"{alpha0} is not a restricted root of {c.P}")
    sys = c.system
    bigger = parabolic(sys, c.P.levi | {alpha0})
    _, w_up = factorize(c.w, c.P, bigger)
    mu_up = _vec_sub(w_up.apply(_vec_add_rho(sys, c.lam)), sys.rho)
    parent = KostantClass(
        P=bigger, w=w_up, lam=c.lam, mu=mu_up, degree=w_up.length()
    )
    comparisons = {
        i: (parent.pairing(i), c.pairing(i))
        for i in c.P.restricted_indices
        if i != alpha0
    }
    return parent, comparisons


def _vec_add_rho(sys: RootSystem, lam: Vec) -> Vec:
    return tuple(a + b for a, b in zip(lam, sys.rho))
