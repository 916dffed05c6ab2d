"""Isotypical class bookkeeping: weights, pairings, bracketing parabolics."""

import pytest

from weylcoh.kostant import (
    bracketing_parabolics,
    is_self_contragredient,
    kostant_decomposition,
)
from weylcoh.roots import build_root_system, parabolic


def _classes(typ, rank, levi, lam):
    sys = build_root_system(typ, rank)
    return kostant_decomposition(lam, parabolic(sys, levi))


def test_class_count_and_degrees():
    cs = _classes("C", 2, (0,), (0, 0))
    assert len(cs) == 4
    assert [c.degree for c in cs] == [0, 1, 2, 3]
    for c in cs:
        assert c.degree == c.w.length()


def test_weight_recomputation():
    # mu must be the rho-shifted action of the representative on lambda
    for c in _classes("C", 2, (), (1, 1)):
        sys = c.system
        lam_rho = tuple(a + b for a, b in zip(c.lam, sys.rho))
        want = tuple(a - b for a, b in zip(c.w.apply(lam_rho), sys.rho))
        assert tuple(c.mu) == want


def test_dominance_required():
    sys = build_root_system("A", 2)
    with pytest.raises(ValueError):
        kostant_decomposition((-1, 0), parabolic(sys, ()))
    with pytest.raises(ValueError):
        kostant_decomposition((0,), parabolic(sys, ()))


def test_pairing_outside_levi_only():
    cs = _classes("C", 3, (0,), (0, 0, 0))
    for c in cs:
        with pytest.raises(ValueError):
            c.pairing(0)
        assert set(c.pairings()) == {1, 2}


def test_identity_class_has_positive_pairings():
    cs = _classes("C", 3, (1,), (0, 0, 0))
    by_deg = {c.degree: c for c in cs}
    top = max(by_deg)
    assert all(v > 0 for v in by_deg[0].pairings().values())
    assert all(v < 0 for v in by_deg[top].pairings().values())


def test_bracketing_parabolics_nested():
    for c in _classes("C", 2, (), (0, 0)) + _classes("A", 3, (1,), (1, 0, 1)):
        q_lo, q_hi = bracketing_parabolics(c)
        assert c.P <= q_lo <= q_hi
        if all(v != 0 for v in c.pairings().values()):
            assert q_lo.levi == q_hi.levi


def test_self_contragredience_split():
    # rank-1 Levi factors act by -1 on their root line, so everything passes
    assert all(is_self_contragredient(c) for c in _classes("C", 2, (0,), (1, 1)))
    # an A2 Levi factor has a nontrivial diagram flip; some classes fail
    cs = _classes("A", 3, (0, 1), (1, 0, 0))
    assert any(not is_self_contragredient(c) for c in cs)
    assert any(is_self_contragredient(c) for c in cs)


def test_bidegrees_interpolate():
    for c in _classes("C", 3, (), (1, 0, 1)):
        bd = c.bidegrees()
        assert bd[frozenset()] == c.degree
        assert bd[frozenset(c.P.restricted_indices)] == 0
        for small, v in bd.items():
            for big, u in bd.items():
                if small <= big:
                    assert v >= u


def test_central_character_splits_mu():
    for c in _classes("C", 3, (0, 1), (1, 1, 1)):
        recomposed = tuple(a + b for a, b in zip(c.xi, c.mu_semisimple))
        assert recomposed == tuple(c.mu)
