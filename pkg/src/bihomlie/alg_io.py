"""The `.alg` text format, multiplier side files, and JSON report helpers.

An algebra file is line-oriented and sectioned:

    version 1
    [group]
    Z x Z2
    [bicharacter]
    e2 e2 -1
    [basis]
    H 0 0
    F 0 1
    [product]
    H F -> -1 F
    F H -> F
    [alpha]
    H -> H
    F -> 2 F
    [kind]
    lie

`#` starts a comment.  Every stated product pair is literal (nothing is
completed by skewsymmetry); unstated pairs multiply to zero.  [alpha] and
[beta] default to the identity when absent.  serialize_algebra emits a
canonical form (fixed section order, declaration-order lines, lowest-term
coefficients) so that serialize(parse(serialize(a))) == serialize(a).

Multiplier tables arrive as side files of `g h v` lines and omega tables
as `g v` lines, with degrees written as comma-separated tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .algebra import ColourAlgebra
from .grading import (
    Bicharacter,
    GradedBasis,
    GradingGroup,
    format_degree,
    format_group,
    parse_degree,
    parse_group,
)
from .linalg import Matrix, Vec, vec, vzero
from .multipliers import MultiplierTable

FORMAT_VERSION = 1

_SECTIONS = ("group", "bicharacter", "basis", "product", "alpha", "beta", "kind")


class ParseError(ValueError):
    """Malformed or inconsistent input text, with a 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _logical_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((no, body))
    return out


def _split_sections(
    lines: list[tuple[int, str]]
) -> dict[str, list[tuple[int, str]]]:
    if not lines:
        raise ParseError("empty input")
    no, first = lines[0]
    if first.split() != ["version", str(FORMAT_VERSION)]:
        raise ParseError(
            f"expected 'version {FORMAT_VERSION}' header, got {first!r}", no
        )
    sections: dict[str, list[tuple[int, str]]] = {}
    current: Optional[str] = None
    for no, body in lines[1:]:
        if body.startswith("[") and body.endswith("]"):
            name = body[1:-1].strip()
            if name not in _SECTIONS:
                raise ParseError(f"unknown section [{name}]", no)
            if name in sections:
                raise ParseError(f"duplicate section [{name}]", no)
            sections[name] = []
            current = name
        elif current is None:
            raise ParseError(f"content before any section: {body!r}", no)
        else:
            sections[current].append((no, body))
    return sections


def _is_scalar_token(tok: str) -> bool:
    try:
        Fraction(tok)
    except (ValueError, ZeroDivisionError):
        return False
    return True


def _parse_expr(
    rhs: str, basis: GradedBasis, no: int
) -> Vec:
    rhs = rhs.strip()
    n = len(basis)
    if rhs == "0":
        return vzero(n)
    acc = [Fraction(0)] * n
    for term in rhs.split("+"):
        toks = term.split()
        if len(toks) == 1:
            c, name = Fraction(1), toks[0]
        elif len(toks) == 2:
            if not _is_scalar_token(toks[0]):
                raise ParseError(
                    f"bad coefficient {toks[0]!r} in term {term.strip()!r}",
                    no,
                )
            c, name = Fraction(toks[0]), toks[1]
        else:
            raise ParseError(f"bad term {term.strip()!r}", no)
        try:
            k = basis.index(name)
        except KeyError:
            raise ParseError(f"unknown basis vector {name!r}", no) from None
        acc[k] += c
    return vec(acc)


def _format_expr(basis: GradedBasis, v: Vec) -> str:
    terms = []
    for c, name in zip(v, basis.names):
        if not c:
            continue
        terms.append(name if c == 1 else f"{c} {name}")
    return " + ".join(terms) if terms else "0"


def _parse_map_section(
    lines: list[tuple[int, str]], basis: GradedBasis, what: str
) -> Matrix:
    n = len(basis)
    cols: list[Optional[Vec]] = [None] * n
    for no, body in lines:
        if "->" not in body:
            raise ParseError(f"[{what}] line needs '->': {body!r}", no)
        lhs, rhs = body.split("->", 1)
        toks = lhs.split()
        if len(toks) != 1:
            raise ParseError(
                f"[{what}] line must map a single basis vector", no
            )
        try:
            j = basis.index(toks[0])
        except KeyError:
            raise ParseError(f"unknown basis vector {toks[0]!r}", no) from None
        if cols[j] is not None:
            raise ParseError(f"duplicate [{what}] line for {toks[0]}", no)
        cols[j] = _parse_expr(rhs, basis, no)
    filled = [
        c
        if c is not None
        else vec(
            Fraction(1) if i == j else Fraction(0) for i in range(n)
        )
        for j, c in enumerate(cols)
    ]
    return Matrix.from_cols(filled)


def parse_linear_map(text: str, basis: GradedBasis, what: str = "map") -> Matrix:
    """Parse a headerless side file of `x -> expr` lines into a matrix.

    Unlisted basis vectors map to themselves.
    """
    return _parse_map_section(_logical_lines(text), basis, what)


def parse_algebra(text: str) -> ColourAlgebra:
    """Parse `.alg` text; raises ParseError with a line number on bad input.

    Validates the bicharacter and the evenness of the product and both
    maps, so the returned algebra is structurally sound (the deeper axiom
    suites remain the caller's choice).
    """
    sections = _split_sections(_logical_lines(text))

    if "group" not in sections:
        raise ParseError("missing [group] section")
    glines = sections["group"]
    if len(glines) != 1:
        raise ParseError(
            "[group] must contain exactly one line",
            glines[0][0] if glines else None,
        )
    no, body = glines[0]
    try:
        group = parse_group(body)
    except ValueError as e:
        raise ParseError(str(e), no) from None

    rank = group.rank
    gen_values = [[1] * rank for _ in range(rank)]
    for no, body in sections.get("bicharacter", []):
        toks = body.split()
        if len(toks) != 3:
            raise ParseError("expected 'ei ej value'", no)
        idx = []
        for t in toks[:2]:
            if not (t.startswith("e") and t[1:].isdigit()):
                raise ParseError(f"bad generator {t!r}", no)
            i = int(t[1:])
            if not 1 <= i <= rank:
                raise ParseError(
                    f"generator {t} out of range for {format_group(group)}",
                    no,
                )
            idx.append(i - 1)
        if toks[2] not in ("1", "-1"):
            raise ParseError("bicharacter value must be 1 or -1", no)
        gen_values[idx[0]][idx[1]] = int(toks[2])
    eps = Bicharacter(group, gen_values)
    problems = eps.problems()
    if problems:
        raise ParseError("invalid bicharacter: " + "; ".join(problems))

    if "basis" not in sections or not sections["basis"]:
        raise ParseError("missing or empty [basis] section")
    names: list[str] = []
    degrees: list = []
    for no, body in sections["basis"]:
        toks = body.split()
        name = toks[0]
        if _is_scalar_token(name):
            raise ParseError(
                f"basis name {name!r} would be ambiguous in expressions", no
            )
        if name in names:
            raise ParseError(f"duplicate basis name {name!r}", no)
        if len(toks) != 1 + rank:
            raise ParseError(
                f"expected {rank} degree components for {name}", no
            )
        try:
            deg = group.reduce(int(t) for t in toks[1:])
        except ValueError:
            raise ParseError(f"bad degree components for {name}", no) from None
        names.append(name)
        degrees.append(deg)
    basis = GradedBasis(group, tuple(names), tuple(degrees))
    n = len(basis)

    product = [[vzero(n) for _ in range(n)] for _ in range(n)]
    stated: set[tuple[int, int]] = set()
    for no, body in sections.get("product", []):
        if "->" not in body:
            raise ParseError(f"[product] line needs '->': {body!r}", no)
        lhs, rhs = body.split("->", 1)
        toks = lhs.split()
        if len(toks) != 2:
            raise ParseError("[product] left side must name two vectors", no)
        try:
            i, j = basis.index(toks[0]), basis.index(toks[1])
        except KeyError as e:
            raise ParseError(str(e.args[0]), no) from None
        if (i, j) in stated:
            raise ParseError(
                f"duplicate product line for {toks[0]} {toks[1]}", no
            )
        stated.add((i, j))
        cell = _parse_expr(rhs, basis, no)
        want = group.add(degrees[i], degrees[j])
        for k, c in enumerate(cell):
            if c and degrees[k] != want:
                raise ParseError(
                    f"product {toks[0]} {toks[1]} is not even: component "
                    f"{names[k]} has degree {format_degree(degrees[k])}, "
                    f"expected {format_degree(want)}",
                    no,
                )
        product[i][j] = cell

    alpha = _parse_map_section(sections.get("alpha", []), basis, "alpha")
    beta = _parse_map_section(sections.get("beta", []), basis, "beta")
    for what, m in (("alpha", alpha), ("beta", beta)):
        for u in range(n):
            for t in range(n):
                if m[u][t] and degrees[u] != degrees[t]:
                    raise ParseError(
                        f"[{what}] is not even: sends {names[t]} "
                        f"(degree {format_degree(degrees[t])}) into "
                        f"{names[u]} (degree {format_degree(degrees[u])})"
                    )

    kind = "generic"
    klines = sections.get("kind", [])
    if klines:
        if len(klines) > 1:
            raise ParseError("[kind] must contain one line", klines[1][0])
        kind = klines[0][1].strip()
        if kind not in ("lie", "associative", "generic"):
            raise ParseError(f"unknown kind {kind!r}", klines[0][0])

    return ColourAlgebra(basis, eps, product, alpha, beta, kind)


def serialize_algebra(a: ColourAlgebra) -> str:
    """Canonical `.alg` text; a fixpoint of parse-then-serialize."""
    lines = [f"version {FORMAT_VERSION}"]
    lines.append("[group]")
    lines.append(format_group(a.basis.group))

    rank = a.basis.group.rank
    bic = [
        f"e{i + 1} e{j + 1} {a.eps.gen_values[i][j]}"
        for i in range(rank)
        for j in range(rank)
        if a.eps.gen_values[i][j] != 1
    ]
    if bic:
        lines.append("[bicharacter]")
        lines.extend(bic)

    lines.append("[basis]")
    for name, deg in zip(a.basis.names, a.basis.degrees):
        lines.append(" ".join([name] + [str(x) for x in deg]))

    prod = [
        f"{a.basis.names[i]} {a.basis.names[j]} -> "
        + _format_expr(a.basis, a.product[i][j])
        for i in range(a.dim)
        for j in range(a.dim)
        if any(a.product[i][j])
    ]
    if prod:
        lines.append("[product]")
        lines.extend(prod)

    ident = Matrix.identity(a.dim)
    for what, m in (("alpha", a.alpha), ("beta", a.beta)):
        if m == ident:
            continue
        lines.append(f"[{what}]")
        for j, name in enumerate(a.basis.names):
            lines.append(f"{name} -> " + _format_expr(a.basis, m.column(j)))

    lines.append("[kind]")
    lines.append(a.kind)
    return "\n".join(lines) + "\n"


def parse_multiplier(text: str, group: GradingGroup) -> MultiplierTable:
    """Side file of `g h v` lines (degrees comma-separated, v rational)."""
    entries = {}
    for no, body in _logical_lines(text):
        toks = body.split()
        if len(toks) != 3:
            raise ParseError("expected 'g h value'", no)
        try:
            g = parse_degree(group, toks[0])
            h = parse_degree(group, toks[1])
        except ValueError as e:
            raise ParseError(str(e), no) from None
        if not _is_scalar_token(toks[2]):
            raise ParseError(f"bad value {toks[2]!r}", no)
        key = (g, h)
        if key in entries:
            raise ParseError(f"duplicate entry for {toks[0]} {toks[1]}", no)
        entries[key] = Fraction(toks[2])
    try:
        return MultiplierTable(group, entries)
    except ValueError as e:
        raise ParseError(str(e)) from None


def parse_omega(text: str, group: GradingGroup) -> dict:
    """Side file of `g v` lines for the coboundary-style multiplier."""
    out = {}
    for no, body in _logical_lines(text):
        toks = body.split()
        if len(toks) != 2:
            raise ParseError("expected 'g value'", no)
        try:
            g = parse_degree(group, toks[0])
        except ValueError as e:
            raise ParseError(str(e), no) from None
        if not _is_scalar_token(toks[1]):
            raise ParseError(f"bad value {toks[1]!r}", no)
        if g in out:
            raise ParseError(f"duplicate entry for {toks[0]}", no)
        out[g] = Fraction(toks[1])
    return out


def jsonable(obj):
    """Recursively rewrite report payloads for json.dump.

    Fractions become strings "p/q" (or "p"); tuples become lists.
    """
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return obj
