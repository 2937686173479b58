import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import modules
from gorenstein import (
    cosyzygy,
    cyclic_nakayama,
    direct_sum,
    dual,
    ext_dim,
    ext_vanishes_against_regular,
    indecomposable_injective,
    indecomposable_projective,
    injective_coresolution,
    is_isomorphic,
    min_resolution,
    projective_cover,
    radical_and_top,
    simple,
    syzygy,
    complexity_estimate,
)
from gorenstein import fieldmat as fm
from gorenstein.resolution import Resolution, ext_dim_by_hom_spaces

C3 = cyclic_nakayama(3)


def test_radical_and_top_examples(c3, golden):
    P1 = indecomposable_projective(c3, 1)
    rt = radical_and_top(P1)
    assert is_isomorphic(rt.top, simple(c3, 1)).isomorphic
    assert list(rt.radical.dims) == golden["c3_rad_p1_dims"]
    assert radical_and_top(simple(c3, 2)).radical.is_zero()
    mixed = radical_and_top(direct_sum([P1, simple(c3, 2)]).module)
    assert is_isomorphic(mixed.top, direct_sum([simple(c3, 1), simple(c3, 2)]).module).isomorphic
    assert not any(m.any() for m in mixed.top.maps.values())


def test_projective_cover_examples(c3):
    assert projective_cover(simple(c3, 1)).vertices == (1,)
    P1 = indecomposable_projective(c3, 1)
    cov = projective_cover(P1)
    assert cov.vertices == (1,) and cov.cover.is_iso()
    assert projective_cover(direct_sum([simple(c3, 1), simple(c3, 1)]).module).vertices == (1, 1)
    assert projective_cover(direct_sum([], c3).module).vertices == ()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_syzygy_of_simples_moves_along_the_cycle(n):
    A = cyclic_nakayama(n)
    step = {}
    for i in A.vertices:
        omega = syzygy(simple(A, i))
        hits = [j for j in A.vertices if is_isomorphic(omega, simple(A, j)).isomorphic]
        assert len(hits) == 1
        step[i] = hits[0]
        assert syzygy(indecomposable_projective(A, i)).is_zero()
    # one orbit through every simple, whichever way the arrows point
    orbit, v = [], 1
    while v not in orbit:
        orbit.append(v)
        v = step[v]
    assert sorted(orbit) == list(A.vertices)
    T = direct_sum([simple(A, i) for i in A.vertices]).module
    assert is_isomorphic(syzygy(T), T).certified


def test_resolution_examples(c3, golden):
    res = min_resolution(simple(c3, 1), 7)
    assert [list(res.term_vertices(k)) for k in range(7)] == golden["c3_s1_resolution_terms"]
    assert golden["c3_syzygy_orbit"] == [1, 2, 3, 1]
    P1 = min_resolution(indecomposable_projective(c3, 1), 3)
    assert P1.projective_dimension == 0 and P1.term_vertices(1) == ()
    mixed = min_resolution(direct_sum([simple(c3, 1), indecomposable_projective(c3, 2)]).module, 5)
    assert [sorted(mixed.term_vertices(k)) for k in range(5)] == golden["c3_s1p2_resolution_terms"]
    assert [mixed.term_vertices(k) for k in range(1, 5)] == [res.term_vertices(k) for k in range(1, 5)]
    with pytest.raises(ValueError):
        min_resolution(simple(c3, 1), 0)


def test_ext_examples(c3, a2, golden):
    S1 = simple(c3, 1)
    assert [ext_dim(S1, S1, m) for m in range(1, 10)] == golden["c3_ext_s1_s1"]
    assert ext_dim(S1, S1, 3) == 1 and ext_dim(S1, S1, 2) == 0
    P1 = indecomposable_projective(c3, 1)
    assert all(ext_dim(P1, N, i) == 0 for N in (S1, P1, indecomposable_injective(c3, 2)) for i in (1, 2, 3))
    assert golden["c3_ext_s1_regular"] == [0] * 9
    assert ext_vanishes_against_regular(S1, 9)
    assert ext_vanishes_against_regular(P1, 4)
    assert golden["a2_ext_s1_regular"][0] != 0
    assert not ext_vanishes_against_regular(simple(a2, 1), 2)


def test_ext_rejects_bad_degree(c3):
    with pytest.raises(ValueError):
        ext_dim(simple(c3, 1), simple(c3, 1), 0)


@settings(max_examples=30, deadline=None)
@given(modules(C3, 4), st.integers(0, 3))
def test_resolution_is_minimal_exact_complex(M, _):
    res = Resolution(M, 4)
    p = M.p
    for k in range(4):
        cover = res.cover(k)
        assert cover.is_valid()
        assert cover.rank() == res.syzygy(k).total_dim                    # onto
        assert res.syzygy(k + 1).total_dim == res.term(k).module.total_dim - res.syzygy(k).total_dim
        # kernel inside the radical of the term
        rt = radical_and_top(res.term(k).module)
        assert (rt.quotient @ res.inclusion(k + 1)).is_zero()
        if k >= 1:
            assert (res.boundary(k) @ res.boundary(k + 1)).is_zero()
            d = res.boundary(k)
            for v in M.algebra.vertices:
                ranks = fm.rank(res.boundary(k + 1).at(v), p) + fm.rank(d.at(v), p)
                assert ranks == res.term(k).module.dim(v)            # image = kernel
    assert res.dims_sequence(4) == [res.term(k).module.total_dim for k in range(4)]


@settings(max_examples=25, deadline=None)
@given(modules(C3, 4), modules(C3, 3), st.integers(1, 4))
def test_ext_matches_oracles(M, N, i):
    res = Resolution(M)
    fast = ext_dim(M, N, i, resolution=res)
    assert fast == ext_dim_by_hom_spaces(M, N, i, resolution=res) == oracles.ext_dim(res, N, i)


@settings(max_examples=25, deadline=None)
@given(modules(C3, 4), modules(C3, 3), st.integers(2, 5))
def test_dimension_shifting(M, N, i):
    assert ext_dim(M, N, i) == ext_dim(syzygy(M), N, i - 1)


@settings(max_examples=25, deadline=None)
@given(modules(C3, 4), modules(C3, 3), st.integers(1, 4))
def test_ext_duality(M, N, i):
    assert ext_dim(M, N, i) == ext_dim(dual(N), dual(M), i)


@settings(max_examples=25, deadline=None)
@given(modules(C3, 3), modules(C3, 3))
def test_resolution_terms_are_additive(M, N):
    a, b = Resolution(M, 4), Resolution(N, 4)
    s = Resolution(direct_sum([M, N]).module, 4)
    for k in range(4):
        assert sorted(s.term_vertices(k)) == sorted(a.term_vertices(k) + b.term_vertices(k))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coresolution_of_simples(n):
    A = cyclic_nakayama(n)
    S1 = simple(A, 1)
    co = injective_coresolution(S1, 2 * n + 1)
    assert co.dims_sequence(2 * n) == [2] * (2 * n)
    assert is_isomorphic(co.cosyzygy(n), S1).isomorphic
    assert all(not is_isomorphic(co.cosyzygy(k), S1).isomorphic for k in range(1, n))
    assert injective_coresolution(indecomposable_injective(A, 1), 2).injective_dimension == 0


def test_cosyzygy_undoes_syzygy(c3):
    for i in c3.vertices:
        S = simple(c3, i)
        assert is_isomorphic(cosyzygy(syzygy(S)), S).isomorphic
        assert is_isomorphic(syzygy(cosyzygy(S)), S).isomorphic
        assert not is_isomorphic(cosyzygy(S), syzygy(S)).isomorphic


def test_complexity_examples(c3, a2):
    est = complexity_estimate(simple(c3, 1), 10)
    assert (est.classification, est.certified, est.period, est.exponent) == ("bounded", True, 3, 1)
    est = complexity_estimate(indecomposable_projective(c3, 2), 5)
    assert est.classification == "finite_projective_dimension" and est.exponent == 0
    assert complexity_estimate(simple(a2, 1), 5).classification == "finite_projective_dimension"
    with pytest.raises(ValueError):
        complexity_estimate(simple(c3, 1), 3)


def test_complexity_is_not_certified_for_growth():
    from gorenstein import FieldSpec, Quiver, build_monomial_algebra

    # two loops with all paths of length two zero: resolution dimensions grow
    A = build_monomial_algebra(FieldSpec(2), Quiver(1, [("x", 1, 1), ("y", 1, 1)]),
                               [(a, b) for a in "xy" for b in "xy"])
    est = complexity_estimate(simple(A, 1), 6)
    assert not est.certified
    assert est.classification in ("growth", "inconclusive")
    assert est.dims_sequence == tuple(3 * 2 ** k for k in range(6))
