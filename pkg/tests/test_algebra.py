import pytest

from gorenstein import (
    FieldSpec,
    InfiniteDimensional,
    Quiver,
    build_monomial_algebra,
    cyclic_nakayama,
    field_algebra,
    indecomposable_injective,
    indecomposable_projective,
    is_isomorphic,
    is_self_injective,
    opposite,
    regular_module,
)
from gorenstein.resolution import radical_and_top


def test_field_algebra_is_one_dimensional():
    k = field_algebra()
    assert k.dimension == 1
    P = indecomposable_projective(k, 1)
    assert P.dims == (1,)
    assert is_self_injective(k)
    assert opposite(k) == k


def test_cyclic_dimensions(golden):
    assert cyclic_nakayama(3).dimension == 6
    assert cyclic_nakayama(2, FieldSpec(3)).dimension == golden["c2_gf3_dimension"] == 4
    for n in range(2, 7):
        A = cyclic_nakayama(n)
        assert A.dimension == 2 * n
        assert all(indecomposable_projective(A, i).total_dim == 2 for i in A.vertices)


def test_cyclic_rejects_small_n():
    with pytest.raises(ValueError):
        cyclic_nakayama(1)


def test_loop_without_relations_is_infinite():
    with pytest.raises(InfiniteDimensional):
        build_monomial_algebra(FieldSpec(2), Quiver(1, [("x", 1, 1)]))


def test_relations_must_compose():
    q = Quiver(3, [("a1", 1, 2), ("a2", 2, 3), ("a3", 3, 1)])
    with pytest.raises(ValueError, match="not composable"):
        build_monomial_algebra(FieldSpec(2), q, [("a1", "a3")])
    with pytest.raises(ValueError):
        build_monomial_algebra(FieldSpec(2), q, [("a1",)])


def test_path_basis_avoids_relations_and_is_subpath_closed():
    A = build_monomial_algebra(FieldSpec(2), Quiver(1, [("x", 1, 1)]), [("x", "x", "x")])
    assert [q.length for q in A.path_basis] == [0, 1, 2]
    names = {q.arrows for q in A.path_basis}
    for q in A.path_basis:
        for i in range(len(q.arrows)):
            assert q.arrows[:i] in names and q.arrows[i + 1:] in names


def test_projective_p1(c3, golden):
    assert indecomposable_projective(c3, 1).dims == tuple(golden["c3_p1_dims"]) == (1, 1, 0)


def test_regular_module_has_algebra_dimension():
    for n in (2, 3, 5):
        A = cyclic_nakayama(n)
        assert regular_module(A).total_dim == A.dimension


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_projectives_are_shifted_injectives(n):
    # only the orbit structure is pinned, not which injective matches P_i
    A = cyclic_nakayama(n)
    match = {}
    for i in A.vertices:
        hits = []
        for j in A.vertices:
            verdict = is_isomorphic(indecomposable_projective(A, i), indecomposable_injective(A, j))
            assert verdict.certified
            if verdict.isomorphic:
                hits.append(j)
        assert len(hits) == 1 and hits[0] != i
        match[i] = hits[0]
    assert sorted(match.values()) == list(A.vertices)


def test_opposite(c3, golden):
    op = opposite(c3)
    assert sorted([a.name, a.source, a.target] for a in op.quiver.arrows) == golden["c3_opposite_arrows"]
    assert op.dimension == 6
    assert opposite(op) == c3
    B = build_monomial_algebra(FieldSpec(2), Quiver(2, [("a", 1, 2)]), [])
    assert opposite(B).quiver.arrow["a"][1:] == (2, 1)


def test_self_injectivity(a2, golden):
    assert is_self_injective(cyclic_nakayama(5))
    assert not golden["a2_p2_iso_some_injective"]
    assert not is_self_injective(a2)


def test_projective_top_and_socle_on_cycle():
    A = cyclic_nakayama(4)
    for i in A.vertices:
        P = indecomposable_projective(A, i)
        rt = radical_and_top(P)
        assert rt.top.dims == tuple(int(v == i) for v in A.vertices)
        assert rt.radical.dims == tuple(int(v == i % 4 + 1) for v in A.vertices)
