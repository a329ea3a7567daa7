"""Root decompositions, Cartan search, and the classification procedure."""

import random

import pytest
from fractions import Fraction as Q

from superkit.core import EVEN, ODD, LieSuperalgebra, SuperkitError
from superkit.families import build_gl, build_osp1, build_product, build_sl, build_toy
from superkit.linalg import Matrix, is_zero_vec, zero_vec
from superkit.roots import (
    CartanSearchFailed,
    NonSemisimpleCartanAction,
    Osp,
    Witness,
    classify_simple,
    darboux_basis,
    find_cartan,
    g1ss_structural_scan,
    isotropic_combination,
    root_decomposition,
)


def unit_vec(g, name):
    v = zero_vec(g.dim)
    v[g.names.index(name)] = Q(1)
    return v


def strip_hints(g):
    table = {(i, j): {k: q for k, q in g.bracket_sparse(i, j)}
             for i in range(g.dim) for j in range(g.dim)}
    return LieSuperalgebra(g.parity, table, g.names, g.faithful_rep, None)


# -- root decomposition ------------------------------------------------------------

def test_root_decomposition_osp1():
    g = build_osp1(1)
    datum = root_decomposition(g, [unit_vec(g, "M11")])
    table = {(r.weight, r.parity): len(r.space) for r in datum.roots}
    assert table == {
        ((Q(2),), EVEN): 1,
        ((Q(-2),), EVEN): 1,
        ((Q(0),), EVEN): 1,
        ((Q(1),), ODD): 1,
        ((Q(-1),), ODD): 1,
    }
    # the zero-weight even space contains the Cartan
    zero_even = next(r for r in datum.roots if r.parity == EVEN and r.is_zero_weight)
    from superkit.linalg import in_span
    assert in_span(zero_even.space, unit_vec(g, "M11")) is not None


def test_root_decomposition_gl11():
    g = build_gl(1, 1)
    cartan = [unit_vec(g, "E11"), unit_vec(g, "E22")]
    datum = root_decomposition(g, cartan)
    odd = {r.weight: len(r.space) for r in datum.odd_roots()}
    assert odd == {(Q(1), Q(-1)): 1, (Q(-1), Q(1)): 1}
    zero_even = next(r for r in datum.roots if r.parity == EVEN and r.is_zero_weight)
    assert len(zero_even.space) == 2


def test_root_decomposition_partitions_dimension():
    for g, cartan in [
        (build_osp1(2), None),
        (build_sl(2, 1), None),
        (build_gl(2, 1), None),
    ]:
        cartan = [g.basis_vector(i) for i in g.cartan]
        datum = root_decomposition(g, cartan)
        assert sum(len(r.space) for r in datum.roots) == g.dim


def test_root_decomposition_abelian():
    g = LieSuperalgebra([EVEN, EVEN], {})
    datum = root_decomposition(g, [g.basis_vector(0), g.basis_vector(1)])
    assert len(datum.roots) == 1 and datum.roots[0].is_zero_weight


def test_root_decomposition_rejects_nilpotent_cartan():
    g = build_osp1(1)
    with pytest.raises(NonSemisimpleCartanAction):
        root_decomposition(g, [unit_vec(g, "B11")])


def test_root_decomposition_rejects_irrational_spectrum():
    g = build_osp1(1)
    # B11 - C11 acts with eigenvalues 0, +-2i on the even part
    x = [a - b for a, b in zip(unit_vec(g, "B11"), unit_vec(g, "C11"))]
    with pytest.raises(NonSemisimpleCartanAction):
        root_decomposition(g, [x])


def test_osp_odd_roots_are_multiplicity_free_with_long_doubles():
    for n in (1, 2, 3):
        g = build_osp1(n)
        cartan = [g.basis_vector(i) for i in g.cartan]
        datum = root_decomposition(g, cartan)
        even_norms = {
            r.weight: sum(w * w for w in r.weight)
            for r in datum.even_roots() if not r.is_zero_weight
        }
        longest = max(even_norms.values())
        for r in datum.odd_roots():
            assert len(r.space) == 1
            doubled = tuple(2 * w for w in r.weight)
            assert doubled in even_norms
            assert even_norms[doubled] == longest


# -- find_cartan ----------------------------------------------------------------------

def test_find_cartan_gl11():
    c = find_cartan(strip_hints(build_gl(1, 1)))
    assert len(c) == 2


def test_find_cartan_osp1_dimension():
    c = find_cartan(strip_hints(build_osp1(1)))
    assert len(c) == 1


def test_find_cartan_zero_algebra():
    g = LieSuperalgebra([], {})
    assert find_cartan(g) == []


def test_find_cartan_fails_on_nilpotent_even_part():
    # x even with [x, u] = v: no ad-semisimple regular even element exists
    table = {(0, 1): {2: Q(1)}, (1, 0): {2: Q(-1)}}
    g = LieSuperalgebra([EVEN, ODD, ODD], table, ["x", "u", "v"])
    with pytest.raises(CartanSearchFailed):
        find_cartan(g, attempts=40)


# -- the classification procedure --------------------------------------------------------

def test_classify_osp_families():
    for n in (1, 2):
        g = build_osp1(n)
        out = classify_simple(g)
        assert isinstance(out, Osp) and out.n == n
        phi = out.basis_map
        fam = build_osp1(n)
        for i in range(g.dim):
            for j in range(g.dim):
                assert phi.matvec(g.bracket_basis(i, j)) == fam.bracket(
                    phi.column(i), phi.column(j))


def test_classify_sl21_returns_square_zero_witness():
    s = build_sl(2, 1)
    out = classify_simple(s)
    assert isinstance(out, Witness)
    assert not is_zero_vec(out.u)
    assert s.in_g1ss(out.u)
    assert is_zero_vec(s.odd_square(out.u))


def shuffled_osp(n, seed):
    """osp(1|2n) with basis permuted within parity classes and rescaled."""
    g = build_osp1(n)
    rng = random.Random(seed)
    ev, od = list(g.even_indices), list(g.odd_indices)
    rng.shuffle(ev)
    rng.shuffle(od)
    positions = ev + od
    scale = [Q(rng.choice([1, 2, 3, -1, -2, Q(1, 2)])) for _ in range(g.dim)]
    table = {}
    for a in range(g.dim):
        for b in range(g.dim):
            va = [scale[a] if t == positions[a] else Q(0) for t in range(g.dim)]
            vb = [scale[b] if t == positions[b] else Q(0) for t in range(g.dim)]
            br = g.bracket(va, vb)
            comps = {}
            for knew in range(g.dim):
                kold = positions[knew]
                if br[kold] != 0:
                    comps[knew] = br[kold] / scale[knew]
            table[(a, b)] = comps
    parity = tuple(g.parity[positions[t]] for t in range(g.dim))
    from superkit.reps import SuperModule
    rep = SuperModule(
        parity=g.faithful_rep.parity,
        action=[g.element_matrix(
            [scale[a] if t == positions[a] else Q(0) for t in range(g.dim)])
            for a in range(g.dim)],
    )
    return LieSuperalgebra(parity, table, None, faithful_rep=rep)


@pytest.mark.parametrize("n,seed", [(1, 17), (1, 3), (2, 17), (2, 99)])
def test_classify_handles_shuffled_presentation(n, seed):
    # no Cartan hint: the randomized search must cope with a permuted,
    # rescaled basis, and the returned map must intertwine exactly
    shuffled = shuffled_osp(n, seed)
    assert shuffled.validate() == []
    out = classify_simple(shuffled)
    assert isinstance(out, Osp) and out.n == n
    fam = build_osp1(n)
    phi = out.basis_map
    for i in range(shuffled.dim):
        for j in range(shuffled.dim):
            assert phi.matvec(shuffled.bracket_basis(i, j)) == fam.bracket(
                phi.column(i), phi.column(j))


def test_classify_gl11_still_finds_witness():
    # precondition (simplicity) violated, but the odd-root walk exhibits a
    # certified witness anyway
    out = classify_simple(build_gl(1, 1))
    assert isinstance(out, Witness)
    assert build_gl(1, 1).in_g1ss(out.u)


# -- isotropic vectors ----------------------------------------------------------------------

def doubled_toy(sign):
    # h even; u1, u2 odd; [u1,u1] = 2h, [u2,u2] = sign*2h, [u1,u2] = 0
    table = {
        (1, 1): {0: Q(2)},
        (2, 2): {0: Q(2 * sign)},
    }
    return LieSuperalgebra([EVEN, ODD, ODD], table, ["h", "u1", "u2"])


def test_isotropic_combination_hyperbolic():
    g = doubled_toy(-1)   # s^2 - t^2 = 0 has the rational point (1, 1)
    assert g.validate() == []
    space = [g.basis_vector(1), g.basis_vector(2)]
    v = isotropic_combination(g, space)
    assert v is not None
    assert is_zero_vec(g.bracket(v, v))


def test_isotropic_combination_definite_has_no_rational_point():
    g = doubled_toy(1)    # s^2 + t^2 = 0 only at 0
    space = [g.basis_vector(1), g.basis_vector(2)]
    assert isotropic_combination(g, space) is None


# -- Darboux reduction -------------------------------------------------------------------------

def test_darboux_standard_form():
    rng = random.Random(3)
    for m in (2, 4, 6):
        while True:
            data = [[0] * m for _ in range(m)]
            for i in range(m):
                for j in range(i + 1, m):
                    data[i][j] = rng.randint(-3, 3)
                    data[j][i] = -data[i][j]
            gram = Matrix(data)
            basis = darboux_basis(gram)
            if basis is not None:
                break
        n = m // 2

        def form(u, w):
            return sum(u[r] * sum(gram.data[r][c] * w[c] for c in range(m))
                       for r in range(m))

        for i in range(n):
            for j in range(n):
                assert form(basis[i], basis[n + j]) == (1 if i == j else 0)
                assert form(basis[i], basis[j]) == 0
                assert form(basis[n + i], basis[n + j]) == 0


def test_darboux_rejects_degenerate():
    assert darboux_basis(Matrix.zeros(2, 2)) is None


# -- structural scan ---------------------------------------------------------------------------

def test_scan_witnesses():
    g = build_gl(1, 1)
    w = g1ss_structural_scan(g)
    assert w is not None and g.in_g1ss(w) and not is_zero_vec(w)
    s = build_sl(2, 1)
    w = g1ss_structural_scan(s)
    assert w is not None and s.in_g1ss(w)
    toy = build_toy("toy_odd_semisimple")
    w = g1ss_structural_scan(toy)
    assert w is not None and toy.in_g1ss(w)


def test_scan_certifies_zero_cone_for_products():
    g = build_product([build_gl(1, 0), build_osp1(1), build_osp1(2)])
    assert g1ss_structural_scan(g) is None
    assert g1ss_structural_scan(build_osp1(1)) is None


def test_scan_finds_odd_central_direction():
    g = build_product([build_toy("toy_odd_nilpotent"), build_osp1(1)])
    w = g1ss_structural_scan(g)
    assert w is not None
    assert g.in_g1ss(w)


def test_scan_propagates_structure_errors():
    table = {(0, 1): {2: Q(1)}, (1, 0): {2: Q(-1)}}
    g = LieSuperalgebra([EVEN, ODD, ODD], table, ["x", "u", "v"])
    with pytest.raises(SuperkitError):
        g1ss_structural_scan(g)


def test_scan_agrees_with_random_sampling():
    """Sampling is a soundness spot-check of the structural decision, not the
    decision procedure: where the scan certifies the zero cone, 10,000 random
    odd samples find no member either; where it returns a witness, sampling
    finds members too."""
    rng = random.Random(5)
    catalog = [
        (build_osp1(1), True),
        (build_product([build_osp1(1), build_osp1(1)]), True),
        (build_gl(1, 1), False),
        (build_toy("toy_odd_semisimple"), False),
    ]
    for g, expect_none in catalog:
        scan = g1ss_structural_scan(g)
        assert (scan is None) == expect_none
        found = None
        for _ in range(10_000):
            u = zero_vec(g.dim)
            for i in g.odd_indices:
                u[i] = Q(rng.randint(-4, 4))
            if is_zero_vec(u):
                continue
            if g.in_g1ss(u):
                found = u
                break
        assert (found is None) == (scan is None)
