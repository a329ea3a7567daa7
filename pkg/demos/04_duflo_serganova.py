"""Duflo-Serganova functors: homology of an odd element with semisimple square.

For u in the cone with h = [u,u]/2, the functor sends a module V to the
homology of u acting on the h-invariants.  It vanishes on modules induced
from the even part (they are projective), is additive, and multiplies graded
dimensions on tensor products.
"""

import random
from fractions import Fraction as Q

from superkit import (
    build_gl,
    build_toy,
    direct_sum,
    ds_functor,
    ds_tensor_check,
    dual,
    induced_trivial,
    tensor,
    trivial_module,
)
from superkit.linalg import zero_vec

g = build_gl(1, 1)
u = zero_vec(g.dim)
u[g.names.index("E12")] = Q(1)
u[g.names.index("E21")] = Q(1)
print(f"gl(1|1) with u = E12 + E21, h = u^2 = {g.describe(g.odd_square(u))}")

defining = g.faithful_rep
induced = induced_trivial(g)
print(f"DS(defining k^(1|1))   = {ds_functor(g, u, defining).dims}   "
      "(h acts by the identity, no invariants)")
print(f"DS(induced, 4-dim)     = {ds_functor(g, u, induced).dims}   "
      "(projective: homology cancels)")
print(f"DS_0(defining)         = {ds_functor(g, zero_vec(g.dim), defining).dims}   "
      "(u = 0 keeps everything)")

m = direct_sum(defining, trivial_module(g))
print(f"DS(defining + trivial) = {ds_functor(g, u, m).dims}   (additivity)")

print()
print("== tensor multiplicativity of graded dimensions ==")
report = ds_tensor_check(g, u, m, dual(m))
print(f"DS(M) = {report['ds_m']}, DS(N) = {report['ds_n']}, "
      f"DS(M (x) N) = {report['ds_tensor']}, expected {report['expected']}: "
      f"{report['ok']}")

toy = build_toy("toy_odd_semisimple")
tu = toy.basis_vector(1)
rng = random.Random(0)
checks = []
for _ in range(5):
    a = tensor(toy.faithful_rep, toy.faithful_rep)
    b = direct_sum(toy.faithful_rep, trivial_module(toy))
    checks.append(ds_tensor_check(toy, tu, a, b)["ok"])
print(f"toy algebra, 5 structured pairs multiplicative: {all(checks)}")
