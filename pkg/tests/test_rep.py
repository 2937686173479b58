import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import modules
from gorenstein import fieldmat as fm
from gorenstein import (
    Representation,
    check_module,
    cyclic_nakayama,
    direct_sum,
    dual,
    hom_basis,
    image_and_cokernel,
    indecomposable_injective,
    indecomposable_projective,
    is_isomorphic,
    kernel,
    opposite,
    simple,
    strip_projective_summands,
)
from gorenstein.rep import (
    identity_morphism,
    is_projective,
    projective_module,
    random_representation,
    zero_morphism,
    zero_representation,
)
from gorenstein.resolution import projective_cover

C2, C3 = cyclic_nakayama(2), cyclic_nakayama(3)


def test_simple_and_check_module(c3, golden):
    S2 = simple(c3, 2)
    assert S2.dims == (0, 1, 0)
    assert check_module(S2) is None
    assert check_module(indecomposable_projective(c3, 1)) is None
    bad = Representation(c3, (1, 1, 1), {"a1": [[1]], "a2": [[1]], "a3": [[1]]})
    violation = check_module(bad)
    assert list(violation.relation) == golden["c3_identity_maps_violation"]


def test_direct_sum_examples(c3):
    z = direct_sum([zero_representation(c3), zero_representation(c3)])
    assert z.module.is_zero()
    s = direct_sum([simple(c3, 1), simple(c3, 2)])
    assert s.module.dims == (1, 1, 0) and not any(m.any() for m in s.module.maps.values())
    for part, inj, proj in zip([simple(c3, 1), simple(c3, 2)], s.injections, s.projections):
        assert inj.is_valid() and proj.is_valid()
        assert (proj @ inj).flatten().tolist() == identity_morphism(part).flatten().tolist()
    with pytest.raises(ValueError):
        direct_sum([simple(c3, 1), simple(C2, 1)])


def test_hom_examples(c3, golden):
    assert hom_basis(simple(c3, 1), simple(c3, 2)).dim == golden["hom_s1_s2"] == 0
    assert hom_basis(simple(c3, 1), simple(c3, 1)).dim == golden["hom_s1_s1"] == 1
    mods = [simple(c3, 1), indecomposable_projective(c3, 1),
            direct_sum([indecomposable_projective(c3, 2), simple(c3, 3)]).module, indecomposable_injective(c3, 1)]
    got = [[hom_basis(indecomposable_projective(c3, i), M).dim for i in (1, 2, 3)] for M in mods]
    assert got == golden["hom_from_projectives"]
    assert got == [list(M.dims) for M in mods]


@settings(max_examples=40, deadline=None)
@given(modules(C3), modules(C3), modules(C3))
def test_hom_is_bilinear_and_matches_oracle(M1, M2, N):
    H = hom_basis(M1, N)
    assert H.dim == oracles.hom_dim(M1, N)
    assert all(f.is_valid() for f in H)
    S = direct_sum([M1, M2]).module
    assert hom_basis(S, N).dim == H.dim + hom_basis(M2, N).dim
    assert hom_basis(N, S).dim == hom_basis(N, M1).dim + hom_basis(N, M2).dim


@settings(max_examples=40, deadline=None)
@given(modules(C3), modules(C3))
def test_hom_dimension_is_preserved_by_duality(M, N):
    assert hom_basis(M, N).dim == hom_basis(dual(N), dual(M)).dim


@settings(max_examples=40, deadline=None)
@given(modules(C3), modules(C3), st.integers(0, 2**16))
def test_kernel_image_rank_nullity(M, N, k):
    H = hom_basis(M, N)
    rng = np.random.default_rng(k)
    f = H.combination(rng.integers(0, M.p, H.dim)) if H.dim else zero_morphism(M, N)
    K, incl = kernel(f)
    ic = image_and_cokernel(f)
    assert check_module(K) is None and check_module(ic.image) is None and check_module(ic.cokernel) is None
    assert incl.is_valid() and incl.rank() == K.total_dim
    assert (f @ incl).is_zero()
    for v in M.algebra.vertices:
        assert K.dim(v) + ic.image.dim(v) == M.dim(v)
        assert ic.image.dim(v) + ic.cokernel.dim(v) == N.dim(v)


def test_kernel_examples(c3):
    P1, S1, S2 = indecomposable_projective(c3, 1), simple(c3, 1), simple(c3, 2)
    assert kernel(identity_morphism(P1))[0].is_zero()
    assert kernel(zero_morphism(P1, S1))[0].dims == P1.dims
    cover = projective_cover(S1).cover
    assert is_isomorphic(kernel(cover)[0], S2).isomorphic
    ic = image_and_cokernel(cover)
    assert is_isomorphic(ic.image, S1).isomorphic and ic.cokernel.is_zero()
    ic = image_and_cokernel(identity_morphism(P1))
    assert is_isomorphic(ic.image, P1).isomorphic and ic.cokernel.is_zero()
    ic = image_and_cokernel(zero_morphism(S1, P1))
    assert ic.image.is_zero() and is_isomorphic(ic.cokernel, P1).isomorphic


def test_iso_examples(c3):
    P1 = indecomposable_projective(c3, 1)
    v = is_isomorphic(P1, P1)
    assert v.isomorphic and v.certified and v.witness.is_iso()
    v = is_isomorphic(simple(c3, 1), simple(c3, 2))
    assert not v.isomorphic and v.certified
    assert is_isomorphic(P1, indecomposable_injective(c3, 2)).certified


@settings(max_examples=40, deadline=None)
@given(modules(C3, 4), st.integers(0, 2**16))
def test_iso_witness_survives_random_change_of_basis(M, k):
    rng = np.random.default_rng(k)
    g = []
    for v in M.algebra.vertices:
        while True:
            X = rng.integers(0, M.p, (M.dim(v), M.dim(v)))
            if oracles.det_by_permutations(X, M.p) or M.dim(v) == 0:
                break
        g.append(X)
    maps = {}
    for a in M.algebra.quiver.arrows:
        maps[a.name] = g[a.target - 1] @ M.maps[a.name] @ fm.inverse(g[a.source - 1], M.p) % M.p
    N = Representation(M.algebra, M.dims, maps)
    v = is_isomorphic(M, N)
    assert v.isomorphic and v.certified
    w = v.witness
    assert w.is_valid()
    for mat in w.maps:
        if mat.size:
            assert ((fm.inverse(mat, M.p) @ mat) % M.p == np.eye(mat.shape[0], dtype=np.int64)).all()


def test_dual_examples(c3, golden):
    op = opposite(c3)
    for i in c3.vertices:
        D = dual(simple(c3, i))
        assert D.algebra == op and is_isomorphic(D, simple(op, i)).isomorphic
    assert golden["c3_dual_p1_iso_opposite_injective"]
    assert is_isomorphic(dual(indecomposable_projective(c3, 1)), indecomposable_injective(op, 1)).isomorphic
    P1 = indecomposable_projective(c3, 1)
    back = dual(dual(P1))
    assert back.algebra == c3 and is_isomorphic(back, P1).isomorphic


def test_strip_examples(c3):
    P1, P2, S1 = (indecomposable_projective(c3, 1), indecomposable_projective(c3, 2), simple(c3, 1))
    s = strip_projective_summands(direct_sum([P1, S1]).module)
    assert is_isomorphic(s.stable_part, S1).isomorphic
    assert s.projective_vertices == (1,)
    assert is_isomorphic(s.projective_part, P1).isomorphic
    s = strip_projective_summands(S1)
    assert is_isomorphic(s.stable_part, S1).isomorphic and s.projective_part.is_zero()
    s = strip_projective_summands(direct_sum([P1, P2]).module)
    assert s.stable_part.is_zero() and sorted(s.projective_vertices) == [1, 2]


@settings(max_examples=40, deadline=None)
@given(modules(C3, 6))
def test_strip_witness_reassembles_module(M):
    s = strip_projective_summands(M)
    assert tuple(a + b for a, b in zip(s.stable_part.dims, s.projective_part.dims)) == M.dims
    assert s.assemble.is_valid() and s.assemble.is_iso()
    assert s.split.is_valid()
    assert (s.split @ s.assemble).flatten().tolist() == identity_morphism(s.assemble.source).flatten().tolist()


def _exhaustive_summand(M, v) -> bool:
    """Search every pair f: P_v -> M, g: M -> P_v for an invertible g o f."""
    P = indecomposable_projective(M.algebra, v)
    F, G = oracles.hom_basis(P, M), oracles.hom_basis(M, P)
    p = M.p
    for cf in itertools.product(range(p), repeat=len(F)):
        f = [sum(c * np.array(b[k], dtype=np.int64).reshape(M.dim(k + 1), P.dim(k + 1)) for c, b in zip(cf, F))
             if F else np.zeros((M.dim(k + 1), P.dim(k + 1)), dtype=np.int64) for k in range(len(M.dims))]
        for cg in itertools.product(range(p), repeat=len(G)):
            ok = True
            for k in range(len(M.dims)):
                if P.dim(k + 1) == 0:
                    continue
                g = sum(c * np.array(b[k], dtype=np.int64).reshape(P.dim(k + 1), M.dim(k + 1)) for c, b in zip(cg, G)) \
                    if G else np.zeros((P.dim(k + 1), M.dim(k + 1)), dtype=np.int64)
                if oracles.det_by_permutations((g @ f[k]) % p, p) == 0:
                    ok = False
                    break
            if ok:
                return True
    return False


@pytest.mark.parametrize("algebra", [C2, C3], ids=["C2", "C3"])
def test_basis_pair_criterion_agrees_with_exhaustive_search(algebra):
    rng = np.random.default_rng(2024)
    for _ in range(60):
        total = int(rng.integers(1, 7))
        dims = rng.multinomial(total, [1 / algebra.vertex_count] * algebra.vertex_count)
        M = random_representation(algebra, dims, rng)
        split = set(strip_projective_summands(M).projective_vertices)
        for v in algebra.vertices:
            assert (v in split) == _exhaustive_summand(M, v), (M.dims, {a: m.tolist() for a, m in M.maps.items()}, v)


def test_is_projective(c3):
    assert is_projective(projective_module(c3, [1, 1, 3]).module)
    assert is_projective(zero_representation(c3))
    assert not is_projective(simple(c3, 1))
