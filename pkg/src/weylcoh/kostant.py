"""Highest-weight bookkeeping for nilpotent-cohomology summands.

For an irreducible module with dominant highest weight lambda and a
parabolic P, the cohomology of the nilradical splits into one-dimensional
isotypical threads indexed by minimal coset representatives w, with Levi
highest weight w(lambda+rho)-rho sitting in degree len(w).  This module
computes those weights, their central characters on the split torus of the
Levi, the self-contragredience test, and the pair of parabolics bracketing
where a thread can carry supported cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .roots import (
    Parabolic,
    RootSystem,
    Vec,
    WeylElement,
    _dot,
    _vec_add,
    _vec_sub,
    bidegree,
    enumerate_min_coset_reps,
    longest_levi_element,
    parabolic,
)


@dataclass(frozen=True)
class KostantClass:
    """One isotypical summand of the nilradical cohomology of P."""

    P: Parabolic
    w: WeylElement
    lam: Vec
    mu: Vec
    degree: int

    @property
    def system(self) -> RootSystem:
        return self.P.system

    @property
    def xi(self) -> Vec:
        """Central character: projection of mu off the Levi root span."""
        return _vec_sub(self.mu, self.system.levi_projection(self.mu, self.P.levi))

    @property
    def mu_semisimple(self) -> Vec:
        """Projection of mu onto the Levi root span."""
        return self.system.levi_projection(self.mu, self.P.levi)

    def pairing(self, i: int) -> Fraction:
        """Inner product of the torus part of w(lambda+rho) with simple root i.

        i must index a simple root outside the Levi.  The torus projection
        is orthogonal, so pairing against the projected root equals pairing
        against the root itself.
        """
        if i in self.P.levi:
            raise ValueError(f"root {i} lies in the Levi of {self.P}")
        sys = self.system
        target = _vec_add(self.mu, sys.rho)
        proj = _vec_sub(target, sys.levi_projection(target, self.P.levi))
        return _dot(proj, sys.simple_roots[i])

    def pairings(self) -> dict[int, Fraction]:
        return {i: self.pairing(i) for i in self.P.restricted_indices}

    def bidegrees(self) -> dict[frozenset, int]:
        """Inversion counts inside each intermediate nilradical.

        Keyed by the set of restricted indices adjoined to the Levi; the
        empty set is P itself (full length) and the full set is G (zero).
        """
        out = {}
        idx = self.P.restricted_indices
        for mask in range(1 << len(idx)):
            adjoined = frozenset(idx[k] for k in range(len(idx)) if mask >> k & 1)
            Q = parabolic(self.system, self.P.levi | adjoined)
            out[adjoined] = bidegree(self.w, Q)
        return out

    def __repr__(self) -> str:
        return (
            f"KostantClass(P={sorted(self.P.levi)}, deg={self.degree}, "
            f"mu={tuple(self.mu)})"
        )


def kostant_decomposition(lam_coords, P: Parabolic) -> list[KostantClass]:
    """All isotypical summands for highest weight lam and parabolic P.

    lam_coords are coordinates in the fundamental-weight basis; they must
    be nonnegative integers (dominance).  Returns one class per minimal
    coset representative, in length order.
    """
    coords = tuple(lam_coords)
    sys = P.system
    if len(coords) != sys.rank:
        raise ValueError(f"expected {sys.rank} coordinates, got {len(coords)}")
    if any(c != int(c) or c < 0 for c in coords):
        raise ValueError(f"highest weight must be dominant integral: {coords}")
    lam = sys.weight_from_fundamental(coords)
    lam_rho = _vec_add(lam, sys.rho)
    out = []
    for w in enumerate_min_coset_reps(P):
        mu = _vec_sub(w.apply(lam_rho), sys.rho)
        out.append(KostantClass(P=P, w=w, lam=lam, mu=mu, degree=w.length()))
    return out


@lru_cache(maxsize=None)
def _longest_levi(system: RootSystem, levi: frozenset) -> WeylElement:
    return longest_levi_element(system, levi)


def is_self_contragredient(c: KostantClass) -> bool:
    """Split-form self-duality test on the semisimple part of mu.

    True iff the opposition involution of the Levi fixes the projection of
    mu onto the Levi root span.  Minimal parabolics pass vacuously.
    """
    mss = c.mu_semisimple
    if all(x == 0 for x in mss):
        return True
    w0 = _longest_levi(c.system, c.P.levi)
    neg = tuple(-x for x in w0.apply(mss))
    return neg == tuple(mss)


def bracketing_parabolics(c: KostantClass) -> tuple[Parabolic, Parabolic]:
    """Parabolics bracketing where the thread is locally detectable.

    The lower one adjoins the strictly negative pairings, the upper one the
    nonpositive ones; they coincide exactly when no pairing vanishes.
    """
    neg, nonpos = set(), set()
    for i in c.P.restricted_indices:
        v = c.pairing(i)
        if v < 0:
            neg.add(i)
        if v <= 0:
            nonpos.add(i)
    q_lo = parabolic(c.system, c.P.levi | neg)
    q_hi = parabolic(c.system, c.P.levi | nonpos)
    return q_lo, q_hi
