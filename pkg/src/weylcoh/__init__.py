"""Exact combinatorial engine for parabolic stratum posets.

Root-system and Weyl-group combinatorics, nilpotent cohomology bookkeeping,
graded modules over parabolic face posets with perversity truncation, and the
micro-support calculus built on top of them.  All arithmetic is exact.
"""

from .roots import (
    RootSystem,
    Parabolic,
    WeylElement,
    build_root_system,
    parabolic,
    full_parabolic,
    dim_nilradical,
    codim_and_perversity,
    enumerate_min_coset_reps,
    factorize,
    bidegree,
)

__all__ = [
    "RootSystem",
    "Parabolic",
    "WeylElement",
    "build_root_system",
    "parabolic",
    "full_parabolic",
    "dim_nilradical",
    "codim_and_perversity",
    "enumerate_min_coset_reps",
    "factorize",
    "bidegree",
]
