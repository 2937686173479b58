"""Walk through the cyclic algebra C_n: resolutions, Ext, periodicity.

    python demos/cyclic_walkthrough.py [n] [p]
"""

import sys

from gorenstein import (
    FieldSpec,
    Resolution,
    cyclic_nakayama,
    direct_sum,
    ext_dim,
    is_self_injective,
    is_n_sg_projective,
    sg_projective_period_set,
    simple,
    syzygy_cycle_sum,
)

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
p = int(sys.argv[2]) if len(sys.argv) > 2 else 2
A = cyclic_nakayama(n, FieldSpec(p))
print(f"C_{n} over GF({p}): dim A = {A.dimension}, self-injective = {is_self_injective(A)}")

S1 = simple(A, 1)
res = Resolution(S1, 2 * n)
print("\nminimal resolution of S1")
for k in range(2 * n):
    print(f"  P_{k} = " + " + ".join(f"P{v}" for v in res.term_vertices(k)),
          " syzygy dims", res.syzygy(k + 1).dims)

print("\nExt^i(S1, S_j)")
for j in A.vertices:
    row = [ext_dim(S1, simple(A, j), i, resolution=res) for i in range(1, 2 * n + 1)]
    print(f"  j={j}:", row)

print("\nS1 is n-SG-projective exactly for multiples of", n)
for m in range(1, 2 * n + 1):
    v = is_n_sg_projective(S1, m)
    print(f"  n={m}: {v.outcome.value}")

T = direct_sum([simple(A, i) for i in A.vertices]).module
ps = sg_projective_period_set(T, n)
print("\nsum of all simples: period set up to", n, "=", ps.members)

cs = syzygy_cycle_sum(S1, n)
print("cycle sum of S1 has dims", cs.module.dims, "and is",
      is_n_sg_projective(cs.module, 1).outcome.value, "at n=1")
