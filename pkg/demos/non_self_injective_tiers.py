"""The verdict tiers on algebras that are not self-injective.

On "tailed" the simple S1 is 2-periodic and Ext against A vanishes up to the
horizon, so the verdict is a yes that carries its assumptions.  On "leaky"
S1 is still 2-periodic but Ext^1(S1, A) is nonzero, so the answer is a
bounded no with the failing degree.
"""

from gorenstein import (FieldSpec, Quiver, build_monomial_algebra, is_n_sg_flat, is_n_sg_projective,
                        is_self_injective, simple)

F = FieldSpec(2)
tailed = build_monomial_algebra(F, Quiver(3, [("a", 1, 2), ("b", 2, 1), ("c", 3, 1)]),
                                [("a", "b"), ("b", "a")], name="tailed")
leaky = build_monomial_algebra(F, Quiver(3, [("a", 1, 2), ("b", 2, 1), ("c", 1, 3)]),
                               [("a", "b"), ("b", "a"), ("b", "c")], name="leaky")


def show(title, v):
    print(f"{title}: {v.outcome.value}", f"(failed degree {v.failed_degree})" if v.failed_degree else "")
    for a in v.assumptions:
        print("    assumes:", a)


for A in (tailed, leaky):
    print(f"{A.name}: dim {A.dimension}, self-injective = {is_self_injective(A)}")
    S1 = simple(A, 1)
    for n in (1, 2):
        show(f"  S1 projective n={n}", is_n_sg_projective(S1, n))
    show("  S1 flat n=2", is_n_sg_flat(S1, 2))
    print()
