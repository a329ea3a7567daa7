"""Finite-dimensional Lie superalgebras over the rationals.

A `LieSuperalgebra` is a basis with parities and a rational structure-constant
tensor c[i][j][k] meaning [e_i, e_j] = sum_k c[i][j][k] e_k.  The super axioms:

* parity homogeneity: c[i][j][k] = 0 unless |k| = |i| + |j| (mod 2),
* super-antisymmetry: [x, y] = -(-1)^{|x||y|} [y, x],
* super Jacobi, in derivation form:
  [x, [y, z]] = [[x, y], z] + (-1)^{|x||y|} [y, [x, z]].

Element semisimplicity ("acts diagonalizably over an algebraic closure") is
tested in a designated faithful representation via a squarefree minimal
polynomial; the adjoint representation alone would misclassify central
elements, so algebras that want the test must carry a `faithful_rep`.
Built-in families attach their defining matrix representation.

The cone of odd elements with semisimple square (`in_g1ss`) is the central
obstruction set of this package: it is nonzero exactly when the corresponding
supergroup has non-semisimple representation theory.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence

from .linalg import (
    Matrix,
    Q,
    Vec,
    in_span,
    is_squarefree,
    is_zero_vec,
    kernel_basis,
    minimal_polynomial,
    span_basis,
    vec,
    vec_scale,
    zero_vec,
)

if TYPE_CHECKING:  # pragma: no cover
    from .reps import SuperModule

EVEN, ODD = 0, 1


class SuperkitError(Exception):
    """Base class for structured failures in this package."""


class NotSemisimpleStructure(SuperkitError):
    """The algebra is not a direct product of its center and simple ideals."""


class LieSuperalgebra:
    """Immutable-by-convention Lie superalgebra with rational structure constants."""

    def __init__(
        self,
        parity: Sequence[int],
        brackets: dict[tuple[int, int], dict[int, Fraction]] | Sequence[Sequence[Sequence]],
        names: Sequence[str] | None = None,
        faithful_rep: "SuperModule | None" = None,
        cartan: Sequence[int] | None = None,
    ) -> None:
        self.parity = tuple(int(p) % 2 for p in parity)
        n = len(self.parity)
        self._c: list[list[Vec]] = [[zero_vec(n) for _ in range(n)] for _ in range(n)]
        if isinstance(brackets, dict):
            for (i, j), comps in brackets.items():
                for k, val in comps.items():
                    self._c[i][j][k] = Q(val)
        else:
            for i in range(n):
                for j in range(n):
                    self._c[i][j] = vec(brackets[i][j])
        self.names = tuple(names) if names else tuple(f"e{i}" for i in range(n))
        if len(self.names) != n:
            raise ValueError("need one name per basis element")
        self.faithful_rep = faithful_rep
        self.cartan = tuple(cartan) if cartan is not None else None
        self._sparse: list[list[tuple[tuple[int, Fraction], ...]]] | None = None

    # -- basic structure ----------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def even_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == EVEN]

    @property
    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == ODD]

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self._c[i][j][k]

    def bracket_basis(self, i: int, j: int) -> Vec:
        return self._c[i][j]

    def bracket_sparse(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        if self._sparse is None:
            self._sparse = [
                [tuple((k, q) for k, q in enumerate(row) if q != 0) for row in block]
                for block in self._c
            ]
        return self._sparse[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vec:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("coordinate vectors must have length dim")
        out = zero_vec(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            xi = Q(xi)
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                coeff = xi * Q(yj)
                for k, q in self.bracket_sparse(i, j):
                    out[k] += coeff * q
        return out

    def ad_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> [x, y] in the basis."""
        cols = []
        for j in range(self.dim):
            col = zero_vec(self.dim)
            for i, xi in enumerate(x):
                if xi == 0:
                    continue
                for k, q in self.bracket_sparse(i, j):
                    col[k] += Q(xi) * q
            cols.append(col)
        return Matrix.from_columns(cols)

    def basis_vector(self, i: int) -> Vec:
        v = zero_vec(self.dim)
        v[i] = Q(1)
        return v

    def even_part(self, x: Sequence) -> Vec:
        return [Q(c) if self.parity[i] == EVEN else Q(0) for i, c in enumerate(x)]

    def odd_part(self, x: Sequence) -> Vec:
        return [Q(c) if self.parity[i] == ODD else Q(0) for i, c in enumerate(x)]

    def is_even_element(self, x: Sequence) -> bool:
        return all(Q(c) == 0 or self.parity[i] == EVEN for i, c in enumerate(x))

    def is_odd_element(self, x: Sequence) -> bool:
        return all(Q(c) == 0 or self.parity[i] == ODD for i, c in enumerate(x))

    def describe(self, x: Sequence) -> str:
        """Pretty form of a coordinate vector, e.g. '2*h - a'."""
        terms = []
        for i, c in enumerate(x):
            c = Q(c)
            if c == 0:
                continue
            name = self.names[i]
            if c == 1:
                terms.append(f"+ {name}")
            elif c == -1:
                terms.append(f"- {name}")
            elif c < 0:
                terms.append(f"- {-c}*{name}")
            else:
                terms.append(f"+ {c}*{name}")
        if not terms:
            return "0"
        head = terms[0][2:] if terms[0].startswith("+ ") else "-" + terms[0][2:]
        return " ".join([head] + terms[1:])

    # -- axioms --------------------------------------------------------------

    def validate(self) -> list[str]:
        """All violated axiom instances; empty list means the axioms hold.

        The super Jacobi identity is checked in derivation form on every
        basis triple,
            [e_i, [e_j, e_k]] = [[e_i, e_j], e_k] + (-1)^{|i||j|} [e_j, [e_i, e_k]],
        working directly on the sparse structure constants.
        """
        issues: list[str] = []
        n = self.dim
        p = self.parity
        sp = [[self.bracket_sparse(i, j) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k, q in sp[i][j]:
                    if p[k] != (p[i] + p[j]) % 2:
                        issues.append(
                            f"parity: c[{i}][{j}][{k}] = {q} violates grading"
                        )
        for i in range(n):
            for j in range(i, n):
                sign = -1 if p[i] and p[j] else 1
                if any(self._c[i][j][k] != -sign * self._c[j][i][k] for k in range(n)):
                    issues.append(
                        f"antisymmetry: [e{i},e{j}] vs [e{j},e{i}] disagree"
                    )
        zero = Q(0)
        for i in range(n):
            spi = sp[i]
            for j in range(n):
                sgn = -1 if p[i] and p[j] else 1
                sij = sp[i][j]
                spj = sp[j]
                for k in range(n):
                    acc: dict[int, Fraction] = {}
                    for t, q in spj[k]:
                        for l, r in spi[t]:
                            acc[l] = acc.get(l, zero) + q * r
                    for t, q in sij:
                        for l, r in sp[t][k]:
                            acc[l] = acc.get(l, zero) - q * r
                    for t, q in spi[k]:
                        for l, r in spj[t]:
                            acc[l] = acc.get(l, zero) - sgn * q * r
                    if any(v != 0 for v in acc.values()):
                        issues.append(f"jacobi: fails at triple ({i},{j},{k})")
        return issues

    # -- odd squares and the semisimple cone ----------------------------------

    def odd_square(self, u: Sequence) -> Vec:
        """[u, u]/2 for odd u; always an even element."""
        if not self.is_odd_element(u):
            raise ValueError("odd_square requires a purely odd element")
        return vec_scale(Q(1, 2), self.bracket(u, u))

    def element_matrix(self, x: Sequence) -> Matrix:
        """Matrix of x in the designated faithful representation."""
        rep = self._require_rep()
        out = Matrix.zeros(rep.dim, rep.dim)
        for i, c in enumerate(x):
            if Q(c) != 0:
                out = out.add(rep.action[i].scale(Q(c)))
        return out

    def _require_rep(self):
        if self.faithful_rep is None:
            raise SuperkitError(
                "this operation needs a designated faithful representation"
            )
        return self.faithful_rep

    def is_semisimple_element(self, x: Sequence) -> bool:
        """True iff x acts diagonalizably (over a closure) in the faithful rep,
        i.e. its matrix there has squarefree minimal polynomial."""
        if not self.is_even_element(x):
            raise ValueError("element semisimplicity is defined for even elements")
        return is_squarefree(minimal_polynomial(self.element_matrix(x)))

    def in_g1ss(self, u: Sequence) -> bool:
        """Membership of the cone of odd u whose square [u,u]/2 is semisimple."""
        return self.is_semisimple_element(self.odd_square(u))

    # -- structural predicates -------------------------------------------------

    def center(self) -> list[Vec]:
        """Basis of {x : [x, e_i] = 0 for all i}."""
        if self.dim == 0:
            return []
        rows: list[Vec] = []
        for j in range(self.dim):
            # map x -> [x, e_j]; row block M[k][i] = c[i][j][k]
            for k in range(self.dim):
                rows.append([self._c[i][j][k] for i in range(self.dim)])
        return kernel_basis(Matrix(rows))

    def even_subalgebra_basis(self) -> list[Vec]:
        return [self.basis_vector(i) for i in self.even_indices]

    def is_reductive_even_part(self) -> bool:
        """True iff the solvable radical of the even part equals its center.

        The radical is computed as the orthogonal complement of [g0, g0]
        under the trace form of the faithful representation (Cartan's
        criterion in characteristic zero).
        """
        rep = self._require_rep()
        ev = self.even_indices
        if not ev:
            return True
        derived: list[Vec] = []
        for a in ev:
            for b in ev:
                br = self._c[a][b]
                if not is_zero_vec(br):
                    derived.append(br)
        derived = span_basis(derived)
        # radical = {x in g0 : tr(rho(x) rho(y)) = 0 for all y in [g0,g0]}
        rows = []
        for y in derived:
            ymat = self.element_matrix(y)
            rows.append([rep.action[i].mul(ymat).trace() for i in ev])
        radical = kernel_basis(Matrix(rows)) if rows else [
            [Q(1) if k == t else Q(0) for t in range(len(ev))] for k in range(len(ev))
        ]
        # center of g0 (as a Lie algebra), in even coordinates
        crows = []
        for b in ev:
            for k in ev:
                crows.append([self._c[i][b][k] for i in ev])
        zcenter = kernel_basis(Matrix(crows)) if crows else []
        return _same_span(radical, zcenter)

    def is_quasireductive(self) -> bool:
        """Even part reductive and the odd part a semisimple even-part module."""
        if not self.is_reductive_even_part():
            return False
        odd = self.odd_indices
        if not odd:
            return True
        from .reps import is_semisimple_action
        mats = [self._restrict_ad_to_odd(i) for i in self.even_indices]
        return is_semisimple_action(mats, len(odd))

    def _restrict_ad_to_odd(self, i: int) -> Matrix:
        odd = self.odd_indices
        pos = {g: t for t, g in enumerate(odd)}
        out = Matrix.zeros(len(odd), len(odd))
        for t, j in enumerate(odd):
            for k, q in self.bracket_sparse(i, j):
                out.data[pos[k]][t] = q
        return out

    # -- decomposition into center and simple ideals ---------------------------

    def ideal_closure(self, seed: Iterable[Sequence]) -> list[Vec]:
        """Smallest subspace containing the seed and stable under [g, -]."""
        from .linalg import Echelon
        ech = Echelon(self.dim)
        basis: list[Vec] = []
        queue: list[Vec] = []
        for s in seed:
            v = vec(s)
            if ech.add(v):
                basis.append(v)
                queue.append(v)
        while queue:
            v = queue.pop()
            for i in range(self.dim):
                w = self.bracket(self.basis_vector(i), v)
                if ech.add(w):
                    basis.append(w)
                    queue.append(w)
        return basis

    def direct_sum_decompose(self) -> "Decomposition":
        """Split g as center x (simple ideals), or raise NotSemisimpleStructure.

        Minimal ideals are grown as ideal closures of the nonzero-weight root
        spaces of a Cartan subalgebra of the even part, then certified:
        pairwise commuting, direct sum with the center, each factor perfect
        with trivial center and regenerated by every one of its seeds.
        """
        if self.dim == 0:
            return Decomposition([], [])
        zc = self.center()
        if _is_abelian(self):
            return Decomposition(zc, [])
        from .roots import find_cartan, root_decomposition
        cartan = [self.basis_vector(i) for i in self.cartan] if self.cartan \
            else find_cartan(self)
        datum = root_decomposition(self, cartan)
        seeds = [r.space for r in datum.roots if any(w != 0 for w in r.weight)]
        if not seeds:
            raise NotSemisimpleStructure(
                "non-abelian algebra with no nonzero roots"
            )
        closures = [self.ideal_closure(s) for s in seeds]
        factors: list[list[Vec]] = []
        for cl in closures:
            merged = False
            for f in factors:
                if any(in_span(f, v) is not None for v in cl) or any(
                    in_span(cl, v) is not None for v in f
                ):
                    if not _same_span(f, cl):
                        raise NotSemisimpleStructure(
                            "overlapping ideal closures do not coincide; "
                            "the algebra is not a product of center and simples"
                        )
                    merged = True
                    break
            if not merged:
                factors.append(cl)
        self._certify_decomposition(zc, factors)
        return Decomposition(zc, factors)

    def _certify_decomposition(self, zc, factors) -> None:
        total = len(zc) + sum(len(f) for f in factors)
        if total != self.dim or len(span_basis(zc + [v for f in factors for v in f])) != self.dim:
            raise NotSemisimpleStructure(
                "center plus ideal closures do not span the algebra directly"
            )
        for a in range(len(factors)):
            for b in range(a + 1, len(factors)):
                for x in factors[a]:
                    for y in factors[b]:
                        if not is_zero_vec(self.bracket(x, y)):
                            raise NotSemisimpleStructure(
                                f"candidate ideals {a} and {b} do not commute"
                            )
        for t, f in enumerate(factors):
            sub = self.restricted_subalgebra(f)
            if sub.center():
                raise NotSemisimpleStructure(
                    f"candidate ideal {t} has nontrivial center, so it is not simple"
                )
            derived = span_basis(
                [sub.bracket_basis(i, j) for i in range(sub.dim) for j in range(sub.dim)]
            )
            if len(derived) != sub.dim:
                raise NotSemisimpleStructure(f"candidate ideal {t} is not perfect")

    def restricted_subalgebra(self, basis_vectors: Sequence[Sequence]) -> "LieSuperalgebra":
        """The subalgebra spanned by the given (parity-homogeneous) vectors,
        with structure constants re-expressed in that basis.  The parent's
        faithful representation restricts to a faithful one."""
        from .linalg import SpanSolver
        basis = [vec(v) for v in basis_vectors]
        parities = []
        for v in basis:
            pe = [self.parity[i] for i, c in enumerate(v) if c != 0]
            if len(set(pe)) > 1:
                raise ValueError("subalgebra basis must be parity-homogeneous")
            parities.append(pe[0] if pe else EVEN)
        n = len(basis)
        solver = SpanSolver(basis)
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for a in range(n):
            for b in range(n):
                w = self.bracket(basis[a], basis[b])
                coeffs = solver.coordinates(w)
                if coeffs is None:
                    raise ValueError("vectors do not span a subalgebra")
                table[(a, b)] = {k: c for k, c in enumerate(coeffs) if c != 0}
        rep = None
        if self.faithful_rep is not None:
            from .reps import SuperModule
            rep = SuperModule(
                parity=self.faithful_rep.parity,
                action=[self.element_matrix(v) for v in basis],
            )
        names = tuple(f"x{t}" for t in range(n))
        return LieSuperalgebra(parities, table, names, faithful_rep=rep)

    # -- misc -------------------------------------------------------------------

    def exp_ad_nilpotent(self, x: Sequence) -> Matrix:
        """exp(ad x) as an exact rational matrix; requires ad x nilpotent."""
        ad = self.ad_matrix(x)
        n = self.dim
        out = Matrix.identity(n)
        term = Matrix.identity(n)
        fact = 1
        for k in range(1, n + 2):
            term = term.mul(ad)
            if term.is_zero():
                return out
            fact *= k
            out = out.add(term.scale(Q(1, fact)))
        raise ValueError("ad x is not nilpotent")

    def __repr__(self) -> str:
        ev = len(self.even_indices)
        od = len(self.odd_indices)
        return f"<LieSuperalgebra dim {ev}|{od}>"


class Decomposition:
    """Result of direct_sum_decompose: center basis plus simple ideal bases."""

    def __init__(self, center: list[Vec], ideals: list[list[Vec]]) -> None:
        self.center = center
        self.ideals = ideals

    def __repr__(self) -> str:
        return f"Decomposition(center dim {len(self.center)}, {len(self.ideals)} simple ideals)"


def _is_abelian(g: LieSuperalgebra) -> bool:
    return all(
        is_zero_vec(g.bracket_basis(i, j)) for i in range(g.dim) for j in range(g.dim)
    )


def _same_span(a: list[Vec], b: list[Vec]) -> bool:
    from .linalg import Echelon
    if not a and not b:
        return True
    width = len(a[0]) if a else len(b[0])
    ea, eb = Echelon(width), Echelon(width)
    for v in a:
        ea.add(v)
    for v in b:
        eb.add(v)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(v) for v in b)
