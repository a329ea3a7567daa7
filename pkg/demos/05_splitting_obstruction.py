"""The splitting obstruction: constructing f with u(f) = 1.

For an everywhere non-vanishing odd derivation u of a supercommutative
algebra whose square acts semisimply, the algorithm produces f with
u(f) = 1 exactly; the unit then lies in the image of u, so the trivial line
admits no u-stable complement.  The same mechanism, applied to the exterior
function algebra dual to the coinvariant module of a Lie superalgebra,
reproduces the non-semisimplicity verdicts of the counit criterion.
"""

from fractions import Fraction as Q

from superkit import (
    Vanishing,
    build_gl,
    build_sl,
    build_toy,
    catalog_pairs,
    coinvariant_dual_pair,
    splitting_witness,
    validate_derivation,
    verify_no_splitting,
)
from superkit.linalg import in_span, zero_vec

print("== catalog pairs ==")
for name, (a, d) in catalog_pairs().items():
    try:
        f = splitting_witness(a, d)
    except Vanishing as exc:
        print(f"{name:16s} -> Vanishing: {exc}")
        continue
    print(f"{name:16s} -> f = {a.describe(f)};  u(f) = 1: {d.matvec(f) == a.unit};  "
          f"1 in im(u): {verify_no_splitting(a, d)}")

print()
print("== the coinvariant-dual bridge ==")
cases = []
g = build_gl(1, 1)
u = zero_vec(g.dim)
u[g.names.index("E12")] = Q(1)
u[g.names.index("E21")] = Q(1)
cases.append(("gl(1|1), u = E12+E21", g, u))
s = build_sl(2, 1)
u = zero_vec(s.dim)
u[s.names.index("E13")] = Q(1)
cases.append(("sl(2|1), u = E13", s, u))
toy = build_toy("toy_odd_semisimple")
cases.append(("toy, u", toy, toy.basis_vector(1)))

for label, g, u in cases:
    algebra, derivation = coinvariant_dual_pair(g, u)
    leib = validate_derivation(algebra, derivation)
    image_hits_unit = in_span(
        [derivation.column(j) for j in range(algebra.dim)], algebra.unit
    ) is not None
    print(f"{label:22s} exterior dual dim {algebra.dim}; derivation valid: "
          f"{not leib}; 1 in im(u): {image_hits_unit} "
          "(so the trivial line does not split off)")
