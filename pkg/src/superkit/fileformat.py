"""Line-oriented structured text formats.

Rationals serialize as "p/q" or "p".  Lines are whitespace-separated tokens;
blank lines and lines starting with '#' are ignored.

Algebra files::

    algebra NAME
    basis LABEL even|odd          # one line per basis element, in order
    bracket LI LJ LK RATIONAL     # structure constant c[i][j][k], all nonzero ones
    cartan LABEL ...              # optional
    rep even|odd ...              # optional: representation space parities
    repmat LABEL                  # followed by rep-dim rows of rationals

Module files (relative to a given algebra)::

    module NAME
    parity even|odd ...
    action LABEL                  # followed by module-dim rows of rationals

Supercommutative tables with an odd derivation::

    algebra NAME
    basis LABEL even|odd
    unit RATIONAL ...             # coordinates of the unit
    mul LI LJ LK RATIONAL         # multiplication table entries
    derivation                    # followed by dim rows of rationals

Matrix rows are written column-action style: entry (r, c) is the coefficient
of basis vector r in the image of basis vector c.
"""

from __future__ import annotations

from fractions import Fraction

from .core import LieSuperalgebra, SuperkitError
from .linalg import Matrix, Q
from .reps import SuperModule, validate_module
from .supercomm import SupercommAlgebra


class ParseError(SuperkitError):
    pass


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        yield lineno, line.split()


def _rational(tok: str, lineno: int) -> Fraction:
    try:
        return Q(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"line {lineno}: bad rational {tok!r}") from exc


def _parity_token(tok: str, lineno: int) -> int:
    if tok == "even":
        return 0
    if tok == "odd":
        return 1
    raise ParseError(f"line {lineno}: parity must be 'even' or 'odd', got {tok!r}")


def parse_algebra(text: str, strict: bool = True) -> tuple[LieSuperalgebra, str, list[str]]:
    """Parse an algebra file; returns (algebra, name, warnings).

    In strict mode a failed axiom check raises ParseError; in lax mode the
    violations come back as warnings.
    """
    name = "algebra"
    labels: list[str] = []
    parity: list[int] = []
    brackets: list[tuple[str, str, str, Fraction, int]] = []
    cartan_labels: list[str] | None = None
    rep_parity: list[int] | None = None
    rep_mats: dict[str, list[list[Fraction]]] = {}
    pending_matrix: list[list[Fraction]] | None = None
    pending_rows_needed = 0

    for lineno, toks in _tokens(text):
        if pending_matrix is not None and pending_rows_needed > 0:
            pending_matrix.append([_rational(t, lineno) for t in toks])
            pending_rows_needed -= 1
            continue
        key = toks[0]
        if key == "algebra":
            name = " ".join(toks[1:]) or name
        elif key == "basis":
            if len(toks) != 3:
                raise ParseError(f"line {lineno}: basis needs LABEL and parity")
            labels.append(toks[1])
            parity.append(_parity_token(toks[2], lineno))
        elif key == "bracket":
            if len(toks) != 5:
                raise ParseError(f"line {lineno}: bracket needs LI LJ LK RATIONAL")
            brackets.append((toks[1], toks[2], toks[3], _rational(toks[4], lineno), lineno))
        elif key == "cartan":
            cartan_labels = toks[1:]
        elif key == "rep":
            rep_parity = [_parity_token(t, lineno) for t in toks[1:]]
        elif key == "repmat":
            if rep_parity is None:
                raise ParseError(f"line {lineno}: repmat before rep header")
            if len(toks) != 2:
                raise ParseError(f"line {lineno}: repmat needs a basis LABEL")
            pending_matrix = []
            rep_mats[toks[1]] = pending_matrix
            pending_rows_needed = len(rep_parity)
        else:
            raise ParseError(f"line {lineno}: unknown directive {key!r}")
    if pending_rows_needed:
        raise ParseError("file ended inside a matrix block")
    if not labels:
        raise ParseError("no basis elements declared")
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise ParseError("duplicate basis labels")
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for li, lj, lk, val, lineno in brackets:
        try:
            i, j, k = index[li], index[lj], index[lk]
        except KeyError as exc:
            raise ParseError(f"line {lineno}: unknown basis label {exc.args[0]!r}") from exc
        table.setdefault((i, j), {})[k] = val
    cartan = None
    if cartan_labels is not None:
        try:
            cartan = [index[lab] for lab in cartan_labels]
        except KeyError as exc:
            raise ParseError(f"cartan: unknown basis label {exc.args[0]!r}") from exc
    rep = None
    if rep_parity is not None:
        d = len(rep_parity)
        action = []
        for lab in labels:
            rows = rep_mats.get(lab)
            if rows is None:
                raise ParseError(f"rep: missing repmat for basis label {lab!r}")
            if len(rows) != d or any(len(r) != d for r in rows):
                raise ParseError(f"rep: matrix for {lab!r} is not {d}x{d}")
            action.append(Matrix(rows))
        rep = SuperModule(parity=tuple(rep_parity), action=action, name="file")
    g = LieSuperalgebra(parity, table, labels, faithful_rep=rep, cartan=cartan)
    warnings = g.validate()
    if strict and warnings:
        raise ParseError("axiom violations: " + "; ".join(warnings[:5]))
    return g, name, warnings


def serialize_algebra(g: LieSuperalgebra, name: str = "algebra") -> str:
    lines = [f"algebra {name}"]
    for i in range(g.dim):
        lines.append(f"basis {g.names[i]} {'odd' if g.parity[i] else 'even'}")
    for i in range(g.dim):
        for j in range(g.dim):
            for k, c in g.bracket_sparse(i, j):
                lines.append(f"bracket {g.names[i]} {g.names[j]} {g.names[k]} {c}")
    if g.cartan is not None:
        lines.append("cartan " + " ".join(g.names[i] for i in g.cartan))
    rep = g.faithful_rep
    if rep is not None:
        lines.append("rep " + " ".join("odd" if p else "even" for p in rep.parity))
        for i in range(g.dim):
            lines.append(f"repmat {g.names[i]}")
            for row in rep.action[i].data:
                lines.append(" ".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


def parse_module(text: str, g: LieSuperalgebra, strict: bool = True) -> tuple[SuperModule, str, list[str]]:
    name = "module"
    parity: list[int] | None = None
    mats: dict[str, list[list[Fraction]]] = {}
    pending: list[list[Fraction]] | None = None
    needed = 0
    for lineno, toks in _tokens(text):
        if pending is not None and needed > 0:
            pending.append([_rational(t, lineno) for t in toks])
            needed -= 1
            continue
        key = toks[0]
        if key == "module":
            name = " ".join(toks[1:]) or name
        elif key == "parity":
            parity = [_parity_token(t, lineno) for t in toks[1:]]
        elif key == "action":
            if parity is None:
                raise ParseError(f"line {lineno}: action before parity header")
            if len(toks) != 2:
                raise ParseError(f"line {lineno}: action needs a basis LABEL")
            pending = []
            mats[toks[1]] = pending
            needed = len(parity)
        else:
            raise ParseError(f"line {lineno}: unknown directive {key!r}")
    if needed:
        raise ParseError("file ended inside a matrix block")
    if parity is None:
        raise ParseError("no parity header")
    d = len(parity)
    action = []
    for lab in g.names:
        rows = mats.get(lab)
        if rows is None:
            raise ParseError(f"missing action matrix for basis label {lab!r}")
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ParseError(f"action matrix for {lab!r} is not {d}x{d}")
        action.append(Matrix(rows))
    m = SuperModule(parity=tuple(parity), action=action, name=name)
    warnings = validate_module(g, m)
    if strict and warnings:
        raise ParseError("module violations: " + "; ".join(warnings[:5]))
    return m, name, warnings


def serialize_module(m: SuperModule, g: LieSuperalgebra, name: str = "module") -> str:
    lines = [f"module {name}"]
    lines.append("parity " + " ".join("odd" if p else "even" for p in m.parity))
    for i in range(g.dim):
        lines.append(f"action {g.names[i]}")
        for row in m.action[i].data:
            lines.append(" ".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


def parse_supercomm(text: str, strict: bool = True) -> tuple[SupercommAlgebra, Matrix | None, str]:
    """Parse a supercommutative table with an optional derivation block."""
    name = "algebra"
    labels: list[str] = []
    parity: list[int] = []
    unit: list[Fraction] | None = None
    muls: list[tuple[str, str, str, Fraction, int]] = []
    deriv_rows: list[list[Fraction]] | None = None
    needed = 0
    for lineno, toks in _tokens(text):
        if deriv_rows is not None and needed > 0:
            deriv_rows.append([_rational(t, lineno) for t in toks])
            needed -= 1
            continue
        key = toks[0]
        if key == "algebra":
            name = " ".join(toks[1:]) or name
        elif key == "basis":
            labels.append(toks[1])
            parity.append(_parity_token(toks[2], lineno))
        elif key == "unit":
            unit = [_rational(t, lineno) for t in toks[1:]]
        elif key == "mul":
            if len(toks) != 5:
                raise ParseError(f"line {lineno}: mul needs LI LJ LK RATIONAL")
            muls.append((toks[1], toks[2], toks[3], _rational(toks[4], lineno), lineno))
        elif key == "derivation":
            deriv_rows = []
            needed = len(labels)
        else:
            raise ParseError(f"line {lineno}: unknown directive {key!r}")
    if needed:
        raise ParseError("file ended inside the derivation block")
    if not labels:
        raise ParseError("no basis elements declared")
    if unit is None or len(unit) != len(labels):
        raise ParseError("unit coordinates missing or of wrong length")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    table = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    for li, lj, lk, val, lineno in muls:
        try:
            table[index[li]][index[lj]][index[lk]] = val
        except KeyError as exc:
            raise ParseError(f"line {lineno}: unknown basis label {exc.args[0]!r}") from exc
    algebra = SupercommAlgebra(tuple(parity), table, unit, tuple(labels))
    from .supercomm import validate_algebra, validate_derivation
    issues = validate_algebra(algebra)
    deriv = None
    if deriv_rows is not None:
        if any(len(r) != n for r in deriv_rows):
            raise ParseError("derivation matrix rows have wrong length")
        deriv = Matrix(deriv_rows)
        issues += validate_derivation(algebra, deriv)
    if strict and issues:
        raise ParseError("table violations: " + "; ".join(issues[:5]))
    return algebra, deriv, name


def serialize_supercomm(a: SupercommAlgebra, deriv: Matrix | None = None,
                        name: str = "algebra") -> str:
    lines = [f"algebra {name}"]
    safe = [nm.replace(" ", "_") for nm in a.names]
    for i in range(a.dim):
        lines.append(f"basis {safe[i]} {'odd' if a.parity[i] else 'even'}")
    lines.append("unit " + " ".join(str(c) for c in a.unit))
    for i in range(a.dim):
        for j in range(a.dim):
            for k, c in enumerate(a.table[i][j]):
                if c:
                    lines.append(f"mul {safe[i]} {safe[j]} {safe[k]} {c}")
    if deriv is not None:
        lines.append("derivation")
        for row in deriv.data:
            lines.append(" ".join(str(c) for c in row))
    return "\n".join(lines) + "\n"
