"""Rescaling brackets by a multiplier sigma on the grading group.

A multiplier is a finite table of nonzero rationals indexed by ordered
pairs of degrees.  It is deliberately NOT a function: sigma need not be
bilinear, so there is no extension rule, and a lookup outside the table is
a hard error rather than a silent 1.

Two twists are provided.  sigma_twist rescales the structure constants by
a symmetric multiplier and keeps the bicharacter.  delta_twist rescales by
a (not necessarily symmetric) multiplier satisfying the cocycle identity
    sigma(x, y + z) sigma(y, z) = sigma(x, y) sigma(x + y, z)
and replaces the bicharacter by eps * delta where
    delta(x, y) = sigma(x, y) / sigma(y, x),
which must take values in {+1, -1}: any other ratio would leave the
scalars we support and aborts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .algebra import (
    AxiomReport,
    CheckItem,
    ColourAlgebra,
    Witness,
    require_passing,
)
from .grading import Bicharacter, GradingGroup, GroupElement, format_degree
from .linalg import vscale

Scalar = Union[int, Fraction, str]


class MissingEntryError(KeyError):
    """A multiplier (or omega) lookup outside the stored table."""

    def __init__(self, what: str, key: str):
        super().__init__(f"{what} has no entry for {key}")
        self.what = what
        self.key = key

    def __str__(self) -> str:  # KeyError quotes its arg; keep it readable
        return self.args[0]


class MultiplierTable:
    """Finite table sigma: pairs of degrees -> nonzero rationals."""

    __slots__ = ("group", "entries")

    def __init__(
        self,
        group: GradingGroup,
        entries: Mapping[tuple[GroupElement, GroupElement], Scalar],
    ):
        reduced: dict[tuple[GroupElement, GroupElement], Fraction] = {}
        for (g, h), v in entries.items():
            v = Fraction(v)
            if not v:
                raise ValueError(
                    "multiplier value 0 at "
                    f"({format_degree(g)}, {format_degree(h)})"
                )
            reduced[group.reduce(g), group.reduce(h)] = v
        self.group = group
        self.entries = reduced

    def value(self, g: GroupElement, h: GroupElement) -> Fraction:
        key = (self.group.reduce(g), self.group.reduce(h))
        try:
            return self.entries[key]
        except KeyError:
            pair = f"({format_degree(key[0])}, {format_degree(key[1])})"
            raise MissingEntryError("multiplier", pair) from None

    __call__ = value

    def __contains__(self, pair: tuple[GroupElement, GroupElement]) -> bool:
        g, h = pair
        return (self.group.reduce(g), self.group.reduce(h)) in self.entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiplierTable):
            return NotImplemented
        return self.group == other.group and self.entries == other.entries

    def __repr__(self) -> str:
        return f"MultiplierTable({len(self.entries)} entries)"

    @classmethod
    def constant(
        cls,
        group: GradingGroup,
        degrees: Iterable[GroupElement],
        value: Scalar = 1,
    ) -> "MultiplierTable":
        """sigma == value on every pair reachable from `degrees`.

        Covers all pairs of elements of D and D+D, which is what the
        validators and both twists ever look up.
        """
        base = {group.reduce(d) for d in degrees}
        closed = set(base)
        for g in base:
            for h in base:
                closed.add(group.add(g, h))
        return cls(
            group, {(g, h): value for g in closed for h in closed}
        )


def _degree_witness(
    positions: tuple[int, ...],
    degrees: Sequence[GroupElement],
    defect: Fraction,
) -> Witness:
    return Witness(
        indices=positions,
        names=tuple(format_degree(degrees[p]) for p in positions),
        defect=(defect,),
        defect_str=str(defect),
    )


def validate_multiplier(
    s: MultiplierTable,
    degrees: Sequence[GroupElement],
    mode: str = "symmetric",
) -> AxiomReport:
    """Check the multiplier conditions on a finite degree list.

    symmetric mode: sigma(x,y) = sigma(y,x) for all pairs, and
    sigma(x,y) sigma(z,x+y) unchanged under cyclic rotation of (x,y,z).
    cocycle mode: sigma(x,y+z) sigma(y,z) = sigma(x,y) sigma(x+y,z).
    Missing table entries raise MissingEntryError; they are a usage error,
    not a failed verdict.
    """
    if mode not in ("symmetric", "cocycle"):
        raise ValueError(f"unknown multiplier mode {mode!r}")
    grp = s.group
    ds = [grp.reduce(d) for d in degrees]
    n = len(ds)
    report = AxiomReport()

    if mode == "symmetric":
        sym_witness: Optional[Witness] = None
        for i in range(n):
            for j in range(n):
                d = s.value(ds[i], ds[j]) - s.value(ds[j], ds[i])
                if d:
                    sym_witness = _degree_witness((i, j), ds, d)
                    break
            if sym_witness:
                break
        report.items.append(
            CheckItem("symmetric", sym_witness is None, sym_witness)
        )

        cyc_witness: Optional[Witness] = None
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    x, y, z = ds[i], ds[j], ds[k]
                    v0 = s.value(x, y) * s.value(z, grp.add(x, y))
                    v1 = s.value(y, z) * s.value(x, grp.add(y, z))
                    v2 = s.value(z, x) * s.value(y, grp.add(z, x))
                    if v0 != v1 or v0 != v2:
                        d = (v1 - v0) if v0 != v1 else (v2 - v0)
                        cyc_witness = _degree_witness((i, j, k), ds, d)
                        break
                if cyc_witness:
                    break
            if cyc_witness:
                break
        report.items.append(
            CheckItem("cyclic_invariance", cyc_witness is None, cyc_witness)
        )
        return report

    coc_witness: Optional[Witness] = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = ds[i], ds[j], ds[k]
                lhs = s.value(x, grp.add(y, z)) * s.value(y, z)
                rhs = s.value(x, y) * s.value(grp.add(x, y), z)
                if lhs != rhs:
                    coc_witness = _degree_witness((i, j, k), ds, lhs - rhs)
                    break
            if coc_witness:
                break
        if coc_witness:
            break
    report.items.append(CheckItem("cocycle", coc_witness is None, coc_witness))
    return report


def multiplier_from_omega(
    group: GradingGroup,
    omega: Mapping[GroupElement, Scalar],
    degrees: Sequence[GroupElement],
) -> MultiplierTable:
    """tau(x, y) = omega(x+y) / (omega(x) omega(y)).

    omega must cover the degree list and its pairwise sums; tau is then
    built on every pair whose three omega lookups resolve, which always
    includes all pairs from the degree list itself.  The result passes
    symmetric-mode validation by construction (both conditions reduce to
    identical omega products).
    """
    om: dict[GroupElement, Fraction] = {}
    for g, v in omega.items():
        v = Fraction(v)
        if not v:
            raise ValueError(f"omega value 0 at {format_degree(g)}")
        om[group.reduce(g)] = v

    def w(g: GroupElement) -> Fraction:
        try:
            return om[g]
        except KeyError:
            raise MissingEntryError("omega", format_degree(g)) from None

    base = {group.reduce(d) for d in degrees}
    closed = set(base)
    for g in base:
        for h in base:
            closed.add(group.add(g, h))
    entries = {}
    for g in closed:
        for h in closed:
            gh = group.add(g, h)
            if g in base and h in base:
                entries[g, h] = w(gh) / (w(g) * w(h))
            elif g in om and h in om and gh in om:
                entries[g, h] = om[gh] / (om[g] * om[h])
    return MultiplierTable(group, entries)


def _rescaled_product(a: ColourAlgebra, s: MultiplierTable):
    return [
        [
            vscale(s.value(a.degree(i), a.degree(j)), a.product[i][j])
            for j in range(a.dim)
        ]
        for i in range(a.dim)
    ]


def sigma_twist(a: ColourAlgebra, s: MultiplierTable) -> ColourAlgebra:
    """Rescale the bracket by a symmetric multiplier, same eps and maps."""
    require_passing(a, "lie", context="sigma_twist")
    if s.group != a.basis.group:
        raise ValueError("multiplier is over a different grading group")
    occurring = sorted(set(a.basis.degrees))
    verdict = validate_multiplier(s, occurring, mode="symmetric")
    if not verdict.passed:
        bad = ", ".join(it.name for it in verdict.failures())
        raise ValueError(f"multiplier fails symmetric-mode validation: {bad}")
    return ColourAlgebra(
        a.basis, a.eps, _rescaled_product(a, s), a.alpha, a.beta, kind=a.kind
    )


def delta_table(
    s: MultiplierTable, degrees: Sequence[GroupElement]
) -> dict[tuple[GroupElement, GroupElement], Fraction]:
    """delta(x, y) = sigma(x, y) / sigma(y, x) on all pairs of `degrees`."""
    grp = s.group
    ds = [grp.reduce(d) for d in degrees]
    return {(g, h): s.value(g, h) / s.value(h, g) for g in ds for h in ds}


def delta_twist(a: ColourAlgebra, s: MultiplierTable) -> ColourAlgebra:
    """Rescale the bracket and replace eps by eps*delta.

    Validates the cocycle identity on the occurring degrees, computes
    delta on generator pairs of the group (so the table must cover those
    pairs), requires every delta value to be +1 or -1, assembles the new
    bicharacter from eps and delta on generators, and finally checks that
    the assembled bicharacter really equals eps*delta on every occurring
    pair; a mismatch means delta is not bimultiplicative there and the
    twist is refused.
    """
    require_passing(a, "lie", context="delta_twist")
    grp = a.basis.group
    if s.group != grp:
        raise ValueError("multiplier is over a different grading group")
    occurring = sorted(set(a.basis.degrees))
    verdict = validate_multiplier(s, occurring, mode="cocycle")
    if not verdict.passed:
        w = verdict.item("cocycle").witness
        where = (
            " at degrees " + "; ".join(f"({n})" for n in w.names) if w else ""
        )
        raise ValueError(f"multiplier fails the cocycle identity{where}")

    gens = [
        grp.reduce(tuple(1 if t == k else 0 for t in range(grp.rank)))
        for k in range(grp.rank)
    ]
    new_gen_values = []
    for i, g in enumerate(gens):
        row = []
        for j, h in enumerate(gens):
            d = s.value(g, h) / s.value(h, g)
            if d not in (1, -1):
                raise ValueError(
                    f"delta({format_degree(g)}, {format_degree(h)}) = {d} "
                    "is not +1 or -1; unsupported field extension"
                )
            row.append(a.eps.gen_values[i][j] * int(d))
        new_gen_values.append(row)
    new_eps = Bicharacter(grp, new_gen_values)
    new_eps.validate()

    for (g, h), d in delta_table(s, occurring).items():
        if d not in (1, -1):
            raise ValueError(
                f"delta({format_degree(g)}, {format_degree(h)}) = {d} "
                "is not +1 or -1; unsupported field extension"
            )
        if new_eps.eval(g, h) != a.eps.eval(g, h) * int(d):
            raise ValueError(
                "delta is not a bicharacter: value at "
                f"({format_degree(g)}, {format_degree(h)}) is not the "
                "product of its generator values"
            )

    return ColourAlgebra(
        a.basis,
        new_eps,
        _rescaled_product(a, s),
        a.alpha,
        a.beta,
        kind=a.kind,
    )
