"""Supercommutative superalgebras, odd derivations, and the splitting witness.

The splitting-obstruction algorithm: for an odd derivation u of a
finite-dimensional supercommutative algebra A that is everywhere
non-vanishing (the ideal generated by its image is all of A) and whose square
h = u^2 acts semisimply with rational spectrum, produce f in A with
u(f) = 1 exactly.  Consequently the line spanned by 1 admits no complement
stable under u, which is the finite-dimensional form of the obstruction to
semisimplicity coming from an odd vector field.

Construction: solve sum g_i u(xi_i) = 1 with even g_i and odd xi_i (always
possible given non-vanishing), set p = sum g_i xi_i so u(p) = 1 + eta with
eta a nilpotent element of the square of the odd part, project p to the
0-eigenspace of h, invert the unit 1 + eta_0 by a finite geometric series,
and divide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import EVEN, ODD, SuperkitError
from .linalg import (
    Matrix,
    Q,
    Vec,
    in_span,
    is_zero_vec,
    rational_eigenspaces,
    solve_linear,
    splits_semisimply_over_q,
    vec,
    vec_add,
    vec_scale,
    zero_vec,
)


class Vanishing(SuperkitError):
    """The derivation vanishes somewhere: its image generates a proper ideal."""


class NonSemisimpleSquare(SuperkitError):
    """The square of the derivation does not act semisimply with rational spectrum."""


@dataclass
class SupercommAlgebra:
    """Unital supercommutative algebra given by a multiplication table
    m[i][j] = coordinates of e_i e_j."""

    parity: tuple[int, ...]
    table: list[list[Vec]]
    unit: Vec
    names: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        self.parity = tuple(int(p) % 2 for p in self.parity)
        if not self.names:
            self.names = tuple(f"e{i}" for i in range(self.dim))
        self.unit = vec(self.unit)

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def even_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == EVEN]

    @property
    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == ODD]

    def basis_vector(self, i: int) -> Vec:
        v = zero_vec(self.dim)
        v[i] = Q(1)
        return v

    def multiply(self, x: Sequence, y: Sequence) -> Vec:
        out = zero_vec(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            xi = Q(xi)
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * Q(yj)
                row = self.table[i][j]
                for k, q in enumerate(row):
                    if q:
                        out[k] += c * q
        return out

    def power_zero_index(self, x: Sequence) -> int | None:
        """Least k with x^k = 0, or None if x is not nilpotent within dim steps."""
        acc = vec(x)
        for k in range(1, self.dim + 2):
            if is_zero_vec(acc):
                return k
            acc = self.multiply(acc, x)
        return None

    def describe(self, x: Sequence) -> str:
        terms = []
        for i, c in enumerate(x):
            c = Q(c)
            if c == 0:
                continue
            nm = self.names[i]
            if c == 1:
                terms.append(f"+ {nm}")
            elif c == -1:
                terms.append(f"- {nm}")
            elif c < 0:
                terms.append(f"- {-c}*{nm}")
            else:
                terms.append(f"+ {c}*{nm}")
        if not terms:
            return "0"
        head = terms[0][2:] if terms[0].startswith("+ ") else "-" + terms[0][2:]
        return " ".join([head] + terms[1:])


def validate_algebra(a: SupercommAlgebra) -> list[str]:
    """Violations of grading, supercommutativity, associativity, or the unit law."""
    issues: list[str] = []
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k, q in enumerate(a.table[i][j]):
                if q != 0 and a.parity[k] != (a.parity[i] + a.parity[j]) % 2:
                    issues.append(f"grading: e{i}*e{j} has component at e{k}")
    for i in range(n):
        for j in range(i, n):
            sign = Q(-1) if (a.parity[i] and a.parity[j]) else Q(1)
            if a.table[i][j] != [sign * c for c in a.table[j][i]]:
                issues.append(f"supercommutativity: fails on pair ({i},{j})")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = a.multiply(a.table[i][j], a.basis_vector(k))
                rhs = a.multiply(a.basis_vector(i), a.table[j][k])
                if lhs != rhs:
                    issues.append(f"associativity: fails at triple ({i},{j},{k})")
    for i in range(n):
        e = a.basis_vector(i)
        if a.multiply(a.unit, e) != e or a.multiply(e, a.unit) != e:
            issues.append(f"unit law: fails on e{i}")
    return issues


def validate_derivation(a: SupercommAlgebra, u: Matrix) -> list[str]:
    """Violations of parity reversal or the super-Leibniz rule
    u(xy) = u(x) y + (-1)^{|x|} x u(y)."""
    issues: list[str] = []
    n = a.dim
    for r in range(n):
        for c in range(n):
            if u.data[r][c] != 0 and a.parity[r] == a.parity[c]:
                issues.append(f"parity: derivation entry ({r},{c}) is not parity-reversing")
    for i in range(n):
        ui = u.column(i)
        for j in range(n):
            lhs = u.matvec(a.table[i][j])
            sign = Q(-1) if a.parity[i] else Q(1)
            rhs = vec_add(
                a.multiply(ui, a.basis_vector(j)),
                vec_scale(sign, a.multiply(a.basis_vector(i), u.column(j))),
            )
            if lhs != rhs:
                issues.append(f"leibniz: fails on pair ({i},{j})")
    return issues


def is_nonvanishing(a: SupercommAlgebra, u: Matrix) -> bool:
    """True iff the ideal generated by the image of u is all of A,
    i.e. the span of A * u(A) contains the unit."""
    products = []
    for k in range(a.dim):
        ek = a.basis_vector(k)
        for j in range(a.dim):
            products.append(a.multiply(ek, u.column(j)))
    return in_span(products, a.unit) is not None


def splitting_witness(a: SupercommAlgebra, u: Matrix) -> Vec:
    """An odd f with u(f) = 1 exactly.

    Raises Vanishing if the image ideal is proper, NonSemisimpleSquare if
    h = u^2 fails to act semisimply with rational spectrum.
    """
    if not is_nonvanishing(a, u):
        raise Vanishing("the image of the derivation generates a proper ideal")
    h = u.mul(u)
    if not splits_semisimply_over_q(h):
        raise NonSemisimpleSquare(
            "u^2 does not act semisimply with rational spectrum"
        )
    even, odd = a.even_indices, a.odd_indices
    cols = []
    pairs = []
    for gi in even:
        eg = a.basis_vector(gi)
        for xi in odd:
            cols.append(a.multiply(eg, u.column(xi)))
            pairs.append((gi, xi))
    sol = solve_linear(Matrix.from_columns(cols), a.unit)
    if sol is None:
        raise Vanishing(
            "the unit is not a combination of even multiples of derivative images"
        )
    p = zero_vec(a.dim)
    for c, (gi, xi) in zip(sol, pairs):
        if c:
            p = vec_add(p, vec_scale(c, a.multiply(a.basis_vector(gi),
                                                   a.basis_vector(xi))))
    eta = vec_add(u.matvec(p), vec_scale(Q(-1), a.unit))
    if a.power_zero_index(eta) is None:
        raise SuperkitError("intermediate element failed the nilpotence check")
    p0 = _zero_eigencomponent(h, p)
    alpha = u.matvec(p0)
    eta0 = vec_add(alpha, vec_scale(Q(-1), a.unit))
    inv = _invert_one_plus_nilpotent(a, eta0)
    f = a.multiply(p0, inv)
    if u.matvec(f) != a.unit:
        raise SuperkitError("witness construction failed the final check")
    if any(Q(c) != 0 and a.parity[i] == EVEN for i, c in enumerate(f)):
        raise SuperkitError("witness is not purely odd")
    return f


def _zero_eigencomponent(h: Matrix, p: Vec) -> Vec:
    eig = rational_eigenspaces(h)
    basis: list[Vec] = []
    zero_cols: list[int] = []
    for lam, space in eig:
        for v in space:
            if lam == 0:
                zero_cols.append(len(basis))
            basis.append(v)
    coords = solve_linear(Matrix.from_columns(basis), p)
    if coords is None:
        raise NonSemisimpleSquare("eigenspaces of u^2 do not span the algebra")
    out = zero_vec(len(p))
    for t in zero_cols:
        out = vec_add(out, vec_scale(coords[t], basis[t]))
    return out


def _invert_one_plus_nilpotent(a: SupercommAlgebra, eta: Vec) -> Vec:
    """(1 + eta)^{-1} = sum (-eta)^k, finite since eta is nilpotent."""
    inv = vec(a.unit)
    term = vec(a.unit)
    for _ in range(a.dim + 1):
        term = vec_scale(Q(-1), a.multiply(term, eta))
        if is_zero_vec(term):
            return inv
        inv = vec_add(inv, term)
    raise SuperkitError("element 1 + eta was not unipotent")


def verify_no_splitting(a: SupercommAlgebra, u: Matrix) -> bool:
    """True when the unit lies in the image of u, so the trivial line has no
    u-stable complement; a functional phi with phi(1) = 1 and phi after u = 0
    would contradict u(f) = 1."""
    return in_span([u.column(j) for j in range(a.dim)], a.unit) is not None


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def _interleave_sign(s: int, t: int) -> int:
    """Sign of merging two disjoint ascending index sets (bitmasks)."""
    sign = 1
    while t:
        low = t & -t
        # count elements of s above this element of t
        above = bin(s >> (low.bit_length())).count("1")
        if above % 2:
            sign = -sign
        t ^= low
    return sign


def exterior_algebra(k: int, names: Sequence[str] | None = None) -> SupercommAlgebra:
    """Exterior algebra on k odd generators; basis indexed by subsets."""
    dim = 1 << k
    gen_names = list(names) if names else [f"x{i + 1}" for i in range(k)]
    if len(gen_names) != k:
        raise ValueError("need one name per generator")
    basis_names = []
    for mask in range(dim):
        letters = [gen_names[t] for t in range(k) if mask >> t & 1]
        basis_names.append("*".join(letters) if letters else "1")
    parity = tuple(bin(mask).count("1") % 2 for mask in range(dim))
    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for s in range(dim):
        for t in range(dim):
            if s & t:
                continue
            table[s][t][s | t] = Q(_interleave_sign(s, t))
    unit = zero_vec(dim)
    unit[0] = Q(1)
    return SupercommAlgebra(parity, table, unit, tuple(basis_names))


def poly_quotient_algebra(modulus: Sequence, var: str = "x") -> SupercommAlgebra:
    """Purely even algebra k[x]/(m(x)) for a monic modulus (coefficient list,
    ascending degree)."""
    m = [Q(c) for c in modulus]
    if not m or m[-1] != 1:
        raise ValueError("modulus must be monic")
    d = len(m) - 1
    if d < 1:
        raise ValueError("modulus must have positive degree")
    # x^d = -(m[0] + m[1] x + ... + m[d-1] x^{d-1})
    red = [-c for c in m[:-1]]
    powers: list[Vec] = []
    for k in range(2 * d):
        if k < d:
            v = zero_vec(d)
            v[k] = Q(1)
        else:
            prev = powers[k - 1]
            v = zero_vec(d)
            for t in range(d - 1):
                v[t + 1] = prev[t]
            if prev[d - 1]:
                v = vec_add(v, vec_scale(prev[d - 1], red))
        powers.append(v)
    table = [[powers[i + j][:] for j in range(d)] for i in range(d)]
    unit = zero_vec(d)
    unit[0] = Q(1)
    names = tuple("1" if k == 0 else (var if k == 1 else f"{var}^{k}") for k in range(d))
    return SupercommAlgebra((EVEN,) * d, table, unit, names)


def tensor_algebra(a: SupercommAlgebra, b: SupercommAlgebra) -> SupercommAlgebra:
    """Super tensor product: (x ox y)(x' ox y') = (-1)^{|y||x'|} xx' ox yy'."""
    da, db = a.dim, b.dim
    dim = da * db
    parity = tuple((a.parity[i] + b.parity[j]) % 2 for i in range(da) for j in range(db))
    names = tuple(
        b.names[j] if a.names[i] == "1" else
        (a.names[i] if b.names[j] == "1" else f"{a.names[i]}*{b.names[j]}")
        for i in range(da) for j in range(db)
    )
    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for i in range(da):
        for j in range(db):
            for i2 in range(da):
                for j2 in range(db):
                    sign = Q(-1) if (b.parity[j] and a.parity[i2]) else Q(1)
                    prod_a = a.table[i][i2]
                    prod_b = b.table[j][j2]
                    row = table[i * db + j][i2 * db + j2]
                    for ka, ca in enumerate(prod_a):
                        if ca == 0:
                            continue
                        for kb, cb in enumerate(prod_b):
                            if cb:
                                row[ka * db + kb] += sign * ca * cb
    unit = zero_vec(dim)
    for ka, ca in enumerate(a.unit):
        for kb, cb in enumerate(b.unit):
            unit[ka * db + kb] = ca * cb
    return SupercommAlgebra(parity, table, unit, names)


# ---------------------------------------------------------------------------
# catalog pairs and the coinvariant-dual bridge
# ---------------------------------------------------------------------------

def catalog_pairs() -> dict[str, tuple[SupercommAlgebra, Matrix]]:
    """Named (algebra, derivation) pairs used by the demos and the test suite.

    Three pairs admit a splitting witness; 'vanishing' is the documented
    failure case (the derivative image generates a proper ideal).
    """
    out: dict[str, tuple[SupercommAlgebra, Matrix]] = {}

    lam = exterior_algebra(1, ["xi"])
    d = Matrix.zeros(2, 2)
    d.data[0][1] = Q(1)  # xi -> 1
    out["exterior1"] = (lam, d)

    circle = tensor_algebra(poly_quotient_algebra([-1, 0, 1]), exterior_algebra(1, ["xi"]))
    # basis: 1, xi, x, x*xi ; u = x d/dxi: xi -> x, x*xi -> x^2 = 1
    d = Matrix.zeros(4, 4)
    d.data[2][1] = Q(1)
    d.data[0][3] = Q(1)
    out["torus-exterior"] = (circle, d)

    two = exterior_algebra(2, ["x1", "x2"])
    # basis: 1, x1, x2, x1*x2 ; u(x1) = 1 + x1 x2, u(x2) = x1 x2,
    # u(x1 x2) = u(x1) x2 - x1 u(x2) = x2
    d = Matrix.zeros(4, 4)
    d.data[0][1] = Q(1)
    d.data[3][1] = Q(1)
    d.data[3][2] = Q(1)
    d.data[2][3] = Q(1)
    out["two-odd"] = (two, d)

    dual_numbers = tensor_algebra(exterior_algebra(1, ["xi"]),
                                  poly_quotient_algebra([0, 0, 1]))
    # basis: 1, x, xi, xi*x ; u(xi) = x, u(xi*x) = x^2 = 0
    d = Matrix.zeros(4, 4)
    d.data[1][2] = Q(1)
    out["vanishing"] = (dual_numbers, d)
    return out


def coinvariant_dual_pair(g, u: Sequence) -> tuple[SupercommAlgebra, Matrix]:
    """The exterior function algebra dual to the left coinvariant module,
    with the contragredient action of an odd element u as an odd derivation.

    The pairing of dual monomials against subset monomials carries the sign
    (-1)^{k(k-1)/2} on degree k (reversal of the evaluation order); with that
    convention the contragredient of every algebra element acts by a
    superderivation of the exterior multiplication.
    """
    from .enveloping import LEFT, coinvariant_action_matrices
    odd = g.odd_indices
    k = len(odd)
    algebra = exterior_algebra(k, [f"th_{g.names[i]}" for i in odd])
    mats = coinvariant_action_matrices(g, LEFT)
    act = Matrix.zeros(1 << k, 1 << k)
    for i, c in enumerate(u):
        c = Q(c)
        if c:
            act = act.add(mats[i].scale(c))
    upar = ODD
    dual = Matrix.zeros(1 << k, 1 << k)
    for smask in range(1 << k):
        for tmask in range(1 << k):
            entry = act.data[smask][tmask]
            if entry == 0:
                continue
            # <u.theta_S, x_T> = -(-1)^{|u||theta_S|} <theta_S, u.x_T>
            spar = bin(smask).count("1") % 2
            sign = Q(-1) if (upar and spar) else Q(1)
            sig_s = Q(-1) ** (bin(smask).count("1") * (bin(smask).count("1") - 1) // 2)
            sig_t = Q(-1) ** (bin(tmask).count("1") * (bin(tmask).count("1") - 1) // 2)
            dual.data[tmask][smask] += -sign * entry * sig_s / sig_t
    return algebra, dual
