"""Connectivity splits, saturation, fibers, and fiber restriction bounds."""

import pytest

from weylcoh.kostant import kostant_decomposition
from weylcoh.posetmod import subsets
from weylcoh.roots import build_root_system, full_parabolic, parabolic
from weylcoh.satake import (
    SatakeDatum,
    baily_borel,
    complementary_parabolic,
    fiber_strata,
    is_saturated,
    kappa_zeta,
    p_dagger,
    pairing_shift,
    restrict_to_fiber,
    saturated_parabolics,
)


def test_datum_validation():
    sys = build_root_system("C", 3)
    with pytest.raises(ValueError):
        SatakeDatum(sys, frozenset())
    with pytest.raises(ValueError):
        SatakeDatum(sys, frozenset({7}))
    with pytest.raises(ValueError):
        baily_borel(build_root_system("A", 2))


def test_kappa_zeta_extremes():
    datum = baily_borel(build_root_system("C", 3))
    assert kappa_zeta(datum, ()) == (frozenset(), frozenset())
    k, z = kappa_zeta(datum, (0, 1, 2))
    assert k == frozenset({0, 1, 2}) and z == frozenset()


def test_kappa_zeta_split():
    # roots chained to the weight end go to the connected part
    datum = baily_borel(build_root_system("C", 3))
    k, z = kappa_zeta(datum, (0, 2))
    assert k == frozenset({2}) and z == frozenset({0})
    k, z = kappa_zeta(datum, (0, 1))
    assert k == frozenset() and z == frozenset({0, 1})


def test_kappa_zeta_orthogonal_everywhere():
    datum = baily_borel(build_root_system("C", 4))
    for psi in subsets(range(4)):
        k, z = kappa_zeta(datum, psi)
        assert k | z == frozenset(psi) and not (k & z)


def test_p_dagger_idempotent_and_monotone():
    sys = build_root_system("C", 3)
    datum = baily_borel(sys)
    for levi in subsets(range(3)):
        P = parabolic(sys, levi)
        Q = p_dagger(datum, P)
        assert P <= Q
        assert p_dagger(datum, Q).levi == Q.levi
        k1, _ = kappa_zeta(datum, P.levi)
        k2, _ = kappa_zeta(datum, Q.levi)
        assert k1 == k2


def test_saturated_are_maximal_plus_full():
    for rank in (2, 3, 4):
        sys = build_root_system("C", rank)
        datum = baily_borel(sys)
        sat = {tuple(sorted(P.levi)) for P in saturated_parabolics(datum)}
        want = {tuple(range(rank))}
        for i in range(rank):
            want.add(tuple(j for j in range(rank) if j != i))
        assert sat == want


def test_fiber_strata_partition():
    sys = build_root_system("C", 3)
    datum = baily_borel(sys)
    seen = []
    for R in saturated_parabolics(datum):
        for P in fiber_strata(datum, R):
            assert p_dagger(datum, P).levi == R.levi
            seen.append(tuple(sorted(P.levi)))
    assert sorted(seen) == sorted(
        tuple(sorted(s)) for s in subsets(range(3))
    )


def test_fiber_strata_needs_saturation():
    sys = build_root_system("C", 3)
    datum = baily_borel(sys)
    with pytest.raises(ValueError):
        fiber_strata(datum, parabolic(sys, ()))


def test_complementary_parabolic():
    sys = build_root_system("C", 3)
    Q = parabolic(sys, (0,))
    G = full_parabolic(sys)
    assert complementary_parabolic(Q, G).levi == Q.levi
    assert complementary_parabolic(Q, Q).levi == G.levi
    R = parabolic(sys, (0, 1))
    assert complementary_parabolic(Q, R).levi == frozenset({0, 2})


def test_restrict_to_fiber_bounds():
    sys = build_root_system("C", 2)
    datum = baily_borel(sys)
    for R in saturated_parabolics(datum):
        if R.is_full:
            continue
        fr = restrict_to_fiber(datum, R, "ic", (0, 0), kind="n")
        assert fr.bounds_hold
        assert fr.d_bound < fr.c_bound


def test_restrict_to_fiber_needs_saturation():
    sys = build_root_system("C", 2)
    datum = baily_borel(sys)
    with pytest.raises(ValueError):
        restrict_to_fiber(datum, parabolic(sys, ()), "ic", (0, 0), kind="n")


def test_pairing_shift_validation():
    sys = build_root_system("C", 3)
    P = parabolic(sys, (0,))
    c = kostant_decomposition((0, 0, 0), P)[0]
    with pytest.raises(ValueError):
        pairing_shift(c, 0)


def test_pairing_shift_factors_through_parent():
    sys = build_root_system("C", 3)
    P = parabolic(sys, ())
    for c in kostant_decomposition((1, 0, 1), P):
        parent, comparisons = pairing_shift(c, 0)
        assert parent.P.levi == frozenset({0})
        assert parent.degree <= c.degree
        assert set(comparisons) == {1, 2}
