"""Detection of classes by supported cohomology, and degree bookkeeping."""

from fractions import Fraction
from math import inf

import pytest

from weylcoh.microsupport import (
    RealFormOracle,
    classify_fundamental,
    essential_micro_support,
    global_degree_bounds,
    micro_support,
)
from weylcoh.roots import build_root_system, dim_nilradical, parabolic


def test_unknown_family_rejected():
    sys = build_root_system("A", 2)
    with pytest.raises(ValueError):
        micro_support("bogus", (0, 0), sys)


def test_pushforward_windows_are_open_face():
    # the zero-extension is detected exactly at the open face, in the
    # degree of the representative
    sys = build_root_system("C", 2)
    entries = micro_support("pushforward", (0, 0), sys)
    assert entries
    for e in entries:
        assert len(e.window) == 1
        face, _ = e.window[0]
        assert face == frozenset(e.P.restricted_indices)
        assert e.c == e.d == e.cls.degree


def test_essential_subset():
    sys = build_root_system("C", 2)
    for kind in ("m", "n"):
        all_ = micro_support("ic", (0, 0), sys, kind=kind)
        ess = essential_micro_support("ic", (0, 0), sys, kind=kind)
        keys = {(e.P.levi, e.cls.degree, tuple(e.cls.mu)) for e in all_}
        for e in ess:
            assert (e.P.levi, e.cls.degree, tuple(e.cls.mu)) in keys


def test_essential_is_exactly_the_trivial_class():
    sys = build_root_system("C", 2)
    for kind in ("m", "n"):
        ess = essential_micro_support("ic", (1, 1), sys, kind=kind)
        assert len(ess) == 1
        assert ess[0].P.is_full and ess[0].cls.degree == 0


def test_non_essential_entries_are_fundamental():
    sys = build_root_system("C", 2)
    for kind in ("m", "n"):
        for e in micro_support("ic", (0, 0), sys, kind=kind):
            if not e.essential:
                assert classify_fundamental(e)
                assert 2 * e.cls.degree == dim_nilradical(e.P)


def test_classify_rejects_other_families():
    sys = build_root_system("C", 2)
    entry = micro_support("pushforward", (0, 0), sys)[0]
    with pytest.raises(ValueError):
        classify_fundamental(entry)


def test_degree_window_sanity():
    sys = build_root_system("C", 3)
    for family, kw in [
        ("pushforward", {}),
        ("ic", {"kind": "m"}),
        ("wc", {"profile": "nu"}),
    ]:
        for e in micro_support(family, (0, 0, 0), sys, **kw):
            span = len(e.P.restricted_indices)
            assert e.cls.degree <= e.c <= e.d <= e.cls.degree + span


def test_split_oracle_dimensions():
    sys = build_root_system("C", 2)
    oracle = RealFormOracle()
    assert oracle.dimD(parabolic(sys, ())) == 0
    assert oracle.dimD(parabolic(sys, (0,))) == 2
    assert oracle.dimD(parabolic(sys, (0, 1))) == 6
    G = parabolic(sys, (0, 1))
    zero = tuple(Fraction(0) for _ in range(2))
    assert oracle.dimDV(G, zero) == oracle.dimD(G)


def test_unknown_preset_rejected():
    sys = build_root_system("C", 2)
    oracle = RealFormOracle(preset="quaternionic")
    with pytest.raises(ValueError):
        oracle.dimD(parabolic(sys, ()))


def test_degree_bounds_empty():
    assert global_degree_bounds([], RealFormOracle()) == (inf, -inf)


def test_degree_bounds_bracket_entries():
    sys = build_root_system("C", 2)
    oracle = RealFormOracle()
    entries = micro_support("ic", (0, 0), sys, kind="n")
    lo, hi = global_degree_bounds(entries, oracle)
    assert lo <= hi
    half = Fraction(oracle.dimD(parabolic(sys, (0, 1))), 2)
    # the trivial class alone contributes the symmetric middle window
    assert lo <= half <= hi
