"""PBW arithmetic in the universal enveloping algebra and its coinvariants.

Monomials are words in the basis indices.  The canonical normal form places
all odd generators before all even generators, each block ascending by index;
odd generators appear with exponent at most one (a repeated odd letter rewrites
through half its self-bracket).  Rewriting rules:

    e_j e_i = (-1)^{|i||j|} e_i e_j + [e_j, e_i]   (out-of-order adjacent pair)
    e_i e_i = [e_i, e_i] / 2                        (odd i)

Both one-sided quotients by the even part are carried on the same
2^{dim g_1}-dimensional subset basis {x_S}:

* the left module U/(U g0) (the module induced from the trivial even-part
  module) is read off the canonical odd-first normal form by deleting every
  monomial containing an even letter;
* the right module U/(g0 U) is read off an even-first normal form the same
  way.

The antipode is the anti-automorphism with S(e_i) = -e_i and
S(xy) = (-1)^{|x||y|} S(y) S(x); it exchanges the two quotients and therefore
their invariants.  With this convention S is an involution on all of U.

The ghost element is the (at most one-dimensional) invariant of the
coinvariant module; the representation category of the corresponding
supergroup is semisimple exactly when the counit does not vanish on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .core import ODD, LieSuperalgebra, SuperkitError
from .linalg import Matrix, Q, Vec, kernel_basis, zero_vec

Word = tuple[int, ...]

LEFT = "left"
RIGHT = "right"


def _normal_form_terms(
    g: LieSuperalgebra,
    items: Iterable[tuple[Word, Fraction]],
    *,
    even_first: bool = False,
    leftmost: bool = True,
) -> dict[Word, Fraction]:
    par = g.parity
    if even_first:
        def key(i: int) -> tuple[int, int]:
            return (par[i], i)
    else:
        def key(i: int) -> tuple[int, int]:
            return (1 - par[i], i)
    out: dict[Word, Fraction] = {}
    stack: list[tuple[Word, Fraction]] = [(tuple(w), Q(c)) for w, c in items]
    while stack:
        w, c = stack.pop()
        if c == 0:
            continue
        pos = -1
        square = False
        rng = range(len(w) - 1) if leftmost else range(len(w) - 2, -1, -1)
        for k in rng:
            i, j = w[k], w[k + 1]
            if i == j and par[i] == ODD:
                pos, square = k, True
                break
            if key(i) > key(j):
                pos, square = k, False
                break
        if pos < 0:
            acc = out.get(w, Q(0)) + c
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
            continue
        i, j = w[pos], w[pos + 1]
        head, tail = w[:pos], w[pos + 2:]
        if square:
            for l, q in g.bracket_sparse(i, i):
                stack.append((head + (l,) + tail, c * q / 2))
        else:
            sign = Q(-1) if (par[i] and par[j]) else Q(1)
            stack.append((head + (j, i) + tail, c * sign))
            for l, q in g.bracket_sparse(i, j):
                stack.append((head + (l,) + tail, c * q))
    return out


class EnvelopingElement:
    """Finite rational combination of canonical PBW monomials."""

    __slots__ = ("g", "terms")

    def __init__(self, g: LieSuperalgebra, terms: dict[Word, Fraction]) -> None:
        self.g = g
        self.terms = {w: Q(c) for w, c in terms.items() if Q(c) != 0}

    # -- constructors -------------------------------------------------------

    @classmethod
    def unit(cls, g: LieSuperalgebra) -> "EnvelopingElement":
        return cls(g, {(): Q(1)})

    @classmethod
    def from_word(cls, g: LieSuperalgebra, word: Sequence[int],
                  coeff=1) -> "EnvelopingElement":
        return cls(g, _normal_form_terms(g, [(tuple(word), Q(coeff))]))

    @classmethod
    def from_lie(cls, g: LieSuperalgebra, x: Sequence) -> "EnvelopingElement":
        return cls(g, {(i,): Q(c) for i, c in enumerate(x) if Q(c) != 0})

    # -- ring structure -------------------------------------------------------

    def _binop(self, other: "EnvelopingElement", sign: int) -> "EnvelopingElement":
        if self.g is not other.g:
            raise SuperkitError("elements live over different algebras")
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w, Q(0)) + sign * c
            if acc:
                terms[w] = acc
            elif w in terms:
                del terms[w]
        return EnvelopingElement(self.g, terms)

    def __add__(self, other: "EnvelopingElement") -> "EnvelopingElement":
        return self._binop(other, 1)

    def __sub__(self, other: "EnvelopingElement") -> "EnvelopingElement":
        return self._binop(other, -1)

    def __neg__(self) -> "EnvelopingElement":
        return self.scale(-1)

    def scale(self, c) -> "EnvelopingElement":
        c = Q(c)
        return EnvelopingElement(self.g, {w: c * q for w, q in self.terms.items()})

    def __mul__(self, other: "EnvelopingElement") -> "EnvelopingElement":
        if self.g is not other.g:
            raise SuperkitError("elements live over different algebras")
        items = [
            (wa + wb, ca * cb)
            for wa, ca in self.terms.items()
            for wb, cb in other.terms.items()
        ]
        return EnvelopingElement(self.g, _normal_form_terms(self.g, items))

    def __eq__(self, other) -> bool:
        return (isinstance(other, EnvelopingElement) and self.g is other.g
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # -- Hopf structure --------------------------------------------------------

    def counit(self) -> Fraction:
        """Coefficient of the empty monomial; kills the augmentation ideal."""
        return self.terms.get((), Q(0))

    def antipode(self) -> "EnvelopingElement":
        par = self.g.parity
        items = []
        for w, c in self.terms.items():
            odd = sum(1 for i in w if par[i] == ODD)
            sign = Q(-1) ** (len(w) + (odd * (odd - 1) // 2))
            items.append((tuple(reversed(w)), sign * c))
        return EnvelopingElement(self.g, _normal_form_terms(self.g, items))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.g.names
        pieces = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = "*".join(names[i] for i in w) if w else "1"
            if c == 1 and w:
                pieces.append(f"+ {mono}")
            elif c == -1 and w:
                pieces.append(f"- {mono}")
            elif c < 0:
                pieces.append(f"- {-c}" + (f"*{mono}" if w else ""))
            else:
                pieces.append(f"+ {c}" + (f"*{mono}" if w else ""))
        head = pieces[0][2:] if pieces[0].startswith("+ ") else "-" + pieces[0][2:]
        return " ".join([head] + pieces[1:])

    __repr__ = __str__


def pbw_normal_form(g: LieSuperalgebra, word: Sequence[int],
                    strategy: str = "leftmost") -> EnvelopingElement:
    """Normal form of a word of basis indices.  The strategy picks which
    reducible position fires first; all strategies agree on the result."""
    terms = _normal_form_terms(g, [(tuple(word), Q(1))],
                               leftmost=(strategy == "leftmost"))
    return EnvelopingElement(g, terms)


def multiply(x: EnvelopingElement, y: EnvelopingElement) -> EnvelopingElement:
    return x * y


def counit(x: EnvelopingElement) -> Fraction:
    return x.counit()


def antipode(x: EnvelopingElement) -> EnvelopingElement:
    return x.antipode()


# ---------------------------------------------------------------------------
# coinvariant modules
# ---------------------------------------------------------------------------

@dataclass
class CoinvariantElement:
    """Vector in one of the one-sided quotients of U by its even part,
    on the subset basis {x_S} indexed by bitmasks over the odd basis."""

    g: LieSuperalgebra
    side: str
    coords: list[Fraction]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def counit(self) -> Fraction:
        """Empty-subset coordinate (the counit descends to both quotients)."""
        return self.coords[0]

    def scale(self, c) -> "CoinvariantElement":
        c = Q(c)
        return CoinvariantElement(self.g, self.side, [c * a for a in self.coords])

    def __str__(self) -> str:
        odd = self.g.odd_indices
        names = self.g.names
        pieces = []
        for mask, c in enumerate(self.coords):
            if c == 0:
                continue
            letters = [names[odd[t]] for t in range(len(odd)) if mask >> t & 1]
            mono = "*".join(letters) if letters else "1"
            if c == 1 and letters:
                pieces.append(f"+ {mono}")
            elif c == -1 and letters:
                pieces.append(f"- {mono}")
            elif c < 0:
                pieces.append(f"- {-c}" + (f"*{mono}" if letters else ""))
            else:
                pieces.append(f"+ {c}" + (f"*{mono}" if letters else ""))
        if not pieces:
            return "0"
        head = pieces[0][2:] if pieces[0].startswith("+ ") else "-" + pieces[0][2:]
        return " ".join([head] + pieces[1:])


def _odd_positions(g: LieSuperalgebra) -> dict[int, int]:
    return {idx: t for t, idx in enumerate(g.odd_indices)}

def _mask_word(g: LieSuperalgebra, mask: int) -> Word:
    odd = g.odd_indices
    return tuple(odd[t] for t in range(len(odd)) if mask >> t & 1)


def coinvariant_dim(g: LieSuperalgebra) -> int:
    return 1 << len(g.odd_indices)


def _project_terms(g: LieSuperalgebra, terms: dict[Word, Fraction],
                   side: str) -> list[Fraction]:
    """Project normal-formed terms to the subset basis of the chosen side."""
    pos = _odd_positions(g)
    coords = zero_vec(coinvariant_dim(g))
    if side == RIGHT:
        terms = _normal_form_terms(g, list(terms.items()), even_first=True)
    elif side != LEFT:
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
    for w, c in terms.items():
        if all(g.parity[i] == ODD for i in w):
            mask = 0
            for i in w:
                mask |= 1 << pos[i]
            coords[mask] += c
    return coords


def coinvariant_project(g: LieSuperalgebra, x: EnvelopingElement,
                        side: str) -> CoinvariantElement:
    """Image of x in U/(U g0) (side 'left') or U/(g0 U) (side 'right')."""
    return CoinvariantElement(g, side, _project_terms(g, x.terms, side))


def coinvariant_action_matrices(g: LieSuperalgebra, side: str) -> list[Matrix]:
    """One matrix per basis element: left multiplication on the left quotient,
    right multiplication on the right quotient.  Cached per algebra."""
    cache = getattr(g, "_coinv_cache", None)
    if cache is None:
        cache = {}
        g._coinv_cache = cache
    if side in cache:
        return cache[side]
    dim = coinvariant_dim(g)
    mats = []
    for i in range(g.dim):
        cols = []
        for mask in range(dim):
            sword = _mask_word(g, mask)
            word = (i,) + sword if side == LEFT else sword + (i,)
            terms = _normal_form_terms(g, [(word, Q(1))])
            cols.append(_project_terms(g, terms, side))
        mats.append(Matrix.from_columns(cols))
    cache[side] = mats
    return mats


def module_action(g: LieSuperalgebra, z: Sequence,
                  w: CoinvariantElement) -> CoinvariantElement:
    """Action of the algebra element z on a coinvariant vector (left
    multiplication on the left side, right multiplication on the right side)."""
    mats = coinvariant_action_matrices(g, w.side)
    out = zero_vec(coinvariant_dim(g))
    for i, c in enumerate(z):
        c = Q(c)
        if c == 0:
            continue
        col = mats[i].matvec(w.coords)
        for t in range(len(out)):
            out[t] += c * col[t]
    return CoinvariantElement(g, w.side, out)


def invariants(g: LieSuperalgebra, side: str) -> list[CoinvariantElement]:
    """Basis of the joint kernel of all basis actions: the invariant vectors
    of the chosen coinvariant module."""
    mats = coinvariant_action_matrices(g, side)
    dim = coinvariant_dim(g)
    basis: list[Vec] = [
        [Q(1) if r == t else Q(0) for r in range(dim)] for t in range(dim)
    ]
    order = list(g.even_indices) + list(g.odd_indices)
    for i in order:
        if not basis:
            break
        bmat = Matrix.from_columns(basis)
        restricted = mats[i].mul(bmat)
        kern = kernel_basis(restricted)
        basis = [bmat.matvec(k) for k in kern]
    return [CoinvariantElement(g, side, b) for b in basis]


# ---------------------------------------------------------------------------
# ghost element and the semisimplicity criterion
# ---------------------------------------------------------------------------

SEMISIMPLE = "Semisimple"
NOT_SEMISIMPLE = "NotSemisimple"
NO_INVARIANT = "NoInvariant"


@dataclass
class GhostElement:
    v: CoinvariantElement
    epsilon_value: Fraction


def _primitive(coords: list[Fraction]) -> list[Fraction]:
    den = 1
    for c in coords:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coords]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 1)
    if lead < 0:
        ints = [-x for x in ints]
    return [Q(x) for x in ints]


def ghost_criterion(g: LieSuperalgebra) -> tuple[GhostElement, str]:
    """Compute the invariant of the right-sided coinvariant module and decide
    semisimplicity of the representation category by whether the counit
    vanishes on it.

    The verdict is scale-invariant; the reported element is normalized to
    empty-subset coefficient 1 when the counit is nonzero and to a primitive
    integer vector otherwise.
    """
    basis = invariants(g, RIGHT)
    if not basis:
        zero = CoinvariantElement(g, RIGHT, zero_vec(coinvariant_dim(g)))
        return GhostElement(zero, Q(0)), NO_INVARIANT
    w = next((b for b in basis if b.counit() != 0), basis[0])
    eps = w.counit()
    if eps != 0:
        v = w.scale(Q(1) / eps)
        return GhostElement(v, v.counit()), SEMISIMPLE
    v = CoinvariantElement(g, RIGHT, _primitive(w.coords))
    return GhostElement(v, Q(0)), NOT_SEMISIMPLE


# ---------------------------------------------------------------------------
# the classical product invariant for osp(1|2n)
# ---------------------------------------------------------------------------

def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1 * 3 * ... * (2n-1)."""
    out = 1
    for k in range(1, n + 1):
        out *= 2 * k - 1
    return out


def djokovic_element(n: int):
    """The element (1 + a_1 b_1)(3 + a_2 b_2)...((2n-1) + a_n b_n) in
    U(osp(1|2n)), with t_i = a_i b_i built from the symplectic basis."""
    from .families import build_osp1, osp_odd_indices
    g = build_osp1(n)
    a_idx, b_idx = osp_odd_indices(n)
    v = EnvelopingElement.unit(g)
    for i in range(n):
        t_i = EnvelopingElement.from_word(g, (a_idx[i], b_idx[i]))
        factor = EnvelopingElement.unit(g).scale(2 * i + 1) + t_i
        v = v * factor
    return g, v


@dataclass
class DjokovicReport:
    """Invariance report for the classical product element.

    The product lives naturally in the quotient by the right-multiplied
    ideal U g0 (the module named 'left' here, since it carries the left
    action); its antipode image lives in the quotient by g0 U.
    """

    n: int
    element: EnvelopingElement
    product_invariant: bool
    antipode_invariant: bool
    epsilon: Fraction
    epsilon_expected: int

    @property
    def ok(self) -> bool:
        return (self.product_invariant and self.antipode_invariant
                and self.epsilon == self.epsilon_expected)


def is_coinvariant_invariant(g: LieSuperalgebra, w: CoinvariantElement) -> bool:
    """True iff every basis element kills w in its module."""
    return all(
        module_action(g, g.basis_vector(i), w).is_zero() for i in range(g.dim)
    )


def verify_djokovic(n: int) -> DjokovicReport:
    """Build the classical product element, check it is invariant in the
    quotient U/(U g0) it classically lives in, push it through the antipode
    and re-check invariance in the other quotient U/(g0 U), and report its
    counit value (2n-1)!!."""
    if not 1 <= n <= 3:
        raise ValueError("verify_djokovic is calibrated for 1 <= n <= 3")
    g, v = djokovic_element(n)
    vp = coinvariant_project(g, v, LEFT)
    product_ok = (not vp.is_zero()) and is_coinvariant_invariant(g, vp)
    sv = v.antipode()
    va = coinvariant_project(g, sv, RIGHT)
    antipode_ok = (not va.is_zero()) and is_coinvariant_invariant(g, va)
    return DjokovicReport(
        n=n,
        element=v,
        product_invariant=product_ok,
        antipode_invariant=antipode_ok,
        epsilon=v.counit(),
        epsilon_expected=double_factorial_odd(n),
    )
