"""Poset modules: truncation, local cohomology, and the spectral pages."""

import random
from math import inf

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcoh.posetmod import (
    ChainComplex,
    GradedAbelian,
    fary_E1_page,
    fary_abutment_ranks,
    ic_module,
    local_complex,
    mv_E1_page,
    mv_abutment_ranks,
    open_complement_cohomology,
    pushforward_module,
    restrict_shriek,
    restrict_star,
    subsets,
    supported_local_cohomology,
    truncate_at,
)

CUT_VALUES = [-inf, -2, -1, 0, 1, 2, inf]


def _local(module, a):
    cx, _ = local_complex(module, a)
    return cx.cohomology()


def test_graded_abelian_repr():
    assert repr(GradedAbelian()) == "0"
    assert repr(GradedAbelian.from_dict({0: (1, ())})) == "Z"
    assert repr(GradedAbelian.from_dict({1: (2, ())})) == "Z^2[-1]"
    g = GradedAbelian.from_dict({1: (1, ()), 2: (0, (2,))})
    assert repr(g) == "Z[-1] + Z/2[-2]"


def test_graded_abelian_shift():
    g = GradedAbelian.from_dict({0: (1, ()), 2: (3, ())})
    assert g.shifted(1).degrees() == [1, 3]
    assert g.shifted(1).free_rank(3) == 3


def test_chain_complex_torsion():
    # multiplication by 2 in one degree: Z/2 appears one degree up
    cx = ChainComplex({0: 1, 1: 1}, {0: ((2,),)})
    h = cx.cohomology()
    assert h.free_rank(0) == 0 and h.free_rank(1) == 0
    assert h.torsion(1) == (2,)


def test_pushforward_base_value():
    for n in (1, 2, 3, 4):
        m = pushforward_module(range(n))
        assert repr(_local(m, frozenset())) == "Z"


def test_open_face_never_truncated():
    m = pushforward_module(range(2))
    with pytest.raises(ValueError):
        truncate_at(m, frozenset({0, 1}), 0)


def test_cut_both_vertices():
    # removing both vertex strata of the rank-2 cone shifts the base class
    cuts = {frozenset(): inf, frozenset({0}): -inf, frozenset({1}): -inf}
    m = ic_module((0, 1), cuts)
    assert repr(_local(m, frozenset())) == "Z[-1]"


def test_cut_one_vertex():
    cuts = {frozenset(): inf, frozenset({0}): -inf, frozenset({1}): inf}
    m = ic_module((0, 1), cuts)
    assert _local(m, frozenset()).is_zero


def _random_ic(rng, n):
    idx = tuple(range(n))
    cuts = {
        a: rng.choice(CUT_VALUES)
        for a in subsets(idx)
        if a != frozenset(idx)
    }
    return ic_module(idx, cuts)


cutoff_profiles = st.tuples(
    st.integers(2, 3),
    st.integers(0, 2**31 - 1),
    st.sampled_from([-inf, -2, -1, 0, 1, 2]),
)


@given(cutoff_profiles)
@settings(max_examples=60, deadline=None)
def test_truncation_contract(params):
    # after truncating at a face, the local cohomology there agrees with
    # the old one up to the cutoff and vanishes strictly above it
    n, seed, t = params
    rng = random.Random(seed)
    module = _random_ic(rng, n)
    a = rng.choice([b for b in subsets(range(n)) if b != frozenset(range(n))])
    before = _local(module, a)
    after = _local(truncate_at(module, a, t), a)
    for d in set(before.degrees()) | set(after.degrees()):
        if d <= t:
            assert after.free_rank(d) == before.free_rank(d)
            assert after.torsion(d) == before.torsion(d)
        else:
            assert after.free_rank(d) == 0 and after.torsion(d) == ()


@given(st.integers(0, 2**31 - 1))
@settings(max_examples=40, deadline=None)
def test_closed_open_decomposition(seed):
    # the closed subposet below a face and its open complement split the
    # full local complex; ranks obey the resulting exactness constraints
    rng = random.Random(seed)
    module = _random_ic(rng, rng.choice([2, 3]))
    full = module.index_set
    for a in subsets(sorted(full)):
        if not a or a == full:
            continue
        total = _local(module, frozenset())
        closed = supported_local_cohomology(module, a)
        open_ = open_complement_cohomology(module, a)
        chi = lambda g: sum((-1) ** d * g.free_rank(d) for d in g.degrees())
        assert chi(total) == chi(closed) + chi(open_)
        degs = set(total.degrees()) | set(closed.degrees()) | set(open_.degrees())
        for k in degs:
            assert total.free_rank(k) <= closed.free_rank(k) + open_.free_rank(k)


def test_ic_order_validation():
    idx = (0, 1)
    cuts = {a: inf for a in subsets(idx) if a != frozenset(idx)}
    with pytest.raises(ValueError):
        ic_module(idx, cuts, order=[frozenset({0})])
    with pytest.raises(ValueError):
        # increasing stratum dimension is not a valid sweep
        ic_module(
            idx,
            cuts,
            order=[frozenset(), frozenset({0}), frozenset({1})],
        )


def test_restrictions_preserve_condition():
    rng = random.Random(11)
    for _ in range(10):
        module = _random_ic(rng, 3)
        for a in subsets(range(3)):
            restrict_shriek(module, a).check_condition()
            restrict_star(module, a).check_condition()


def test_spectral_pages_bound_the_target():
    rng = random.Random(23)
    for _ in range(15):
        module = _random_ic(rng, 3)
        for a in subsets(range(3)):
            if not a or a == module.index_set:
                continue
            target = open_complement_cohomology(module, a)
            mv = mv_abutment_ranks(mv_E1_page(module, a))
            fary = fary_abutment_ranks(fary_E1_page(module, a))
            for d in target.degrees():
                entries = target.free_rank(d) + len(target.torsion(d))
                assert mv.get(d, 0) >= entries > 0
                assert fary.get(d, 0) >= entries


def test_spectral_page_rejects_trivial_subsimplex():
    m = pushforward_module(range(2))
    with pytest.raises(ValueError):
        mv_E1_page(m, frozenset())
    with pytest.raises(ValueError):
        fary_E1_page(m, frozenset({0, 1}))
