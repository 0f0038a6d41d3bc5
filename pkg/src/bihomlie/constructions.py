"""Algebra-producing constructions and the built-in example corpus.

Two general constructions live here: the commutator bracket of a
BiHom-associative colour algebra, and twisting a bracket by a pair of
commuting even morphisms (composition method).  Every hypothesis is
validated before anything is built; the functions never trust the caller.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .algebra import (
    AxiomReport,
    ColourAlgebra,
    check_lie_axioms,
    require_passing,
)
from .grading import (
    Bicharacter,
    GradedBasis,
    GradingGroup,
    super_bicharacter,
    trivial_bicharacter,
)
from .linalg import Matrix, vsub

Scalar = Union[int, Fraction, str]


def _require_even(a: ColourAlgebra, m: Matrix, what: str) -> None:
    for r in range(a.dim):
        for c in range(a.dim):
            if m[r][c] and a.degree(r) != a.degree(c):
                raise ValueError(
                    f"{what} is not even: entry "
                    f"({a.basis.names[r]}, {a.basis.names[c]}) connects "
                    "different degrees"
                )


def _require_morphism(a: ColourAlgebra, m: Matrix, what: str) -> None:
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = m.apply(a.product[i][j])
            rhs = a.product_eval(
                m.apply(a.basis_vec(i)), m.apply(a.basis_vec(j))
            )
            if lhs != rhs:
                raise ValueError(
                    f"{what} is not a product morphism; first failure at "
                    f"({a.basis.names[i]}, {a.basis.names[j]})"
                )


def _require_commuting(pairs: list[tuple[str, Matrix, str, Matrix]]) -> None:
    for na, ma, nb, mb in pairs:
        if ma * mb != mb * ma:
            raise ValueError(f"{na} and {nb} do not commute")


def yau_twist(a: ColourAlgebra, a2: Matrix, b2: Matrix) -> ColourAlgebra:
    """Twist a passing bracket by two even morphisms.

    New product {x, y} = [a2(x), b2(y)], new maps alpha∘a2 and beta∘b2.
    Requires: `a` passes the Lie suite with multiplicative maps; a2 and b2
    are even morphisms of the product; alpha, beta, a2, b2 pairwise commute.
    a2 = b2 = identity returns an equal algebra.
    """
    require_passing(
        a, "lie", need_multiplicative=True, context="yau_twist"
    )
    _require_even(a, a2, "first twist map")
    _require_even(a, b2, "second twist map")
    _require_morphism(a, a2, "first twist map")
    _require_morphism(a, b2, "second twist map")
    _require_commuting(
        [
            ("alpha", a.alpha, "first twist map", a2),
            ("alpha", a.alpha, "second twist map", b2),
            ("beta", a.beta, "first twist map", a2),
            ("beta", a.beta, "second twist map", b2),
            ("first twist map", a2, "second twist map", b2),
        ]
    )
    n = a.dim
    product = [
        [
            a.product_eval(a2.apply(a.basis_vec(i)), b2.apply(a.basis_vec(j)))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return ColourAlgebra(
        a.basis, a.eps, product, a.alpha * a2, a.beta * b2, kind="lie"
    )


def commutator_algebra(a: ColourAlgebra) -> ColourAlgebra:
    """[x, y] = xy - eps(x,y) (alpha^-1 beta (y))(alpha beta^-1 (x)).

    Requires a BiHom-associative colour algebra with invertible maps; the
    result is a BiHom-Lie colour algebra with the same maps.
    """
    require_passing(
        a,
        "associative",
        need_multiplicative=True,
        need_regular=True,
        context="commutator_algebra",
    )
    ainv_b = a.map_power("alpha", -1) * a.beta
    a_binv = a.alpha * a.map_power("beta", -1)
    n = a.dim
    product = []
    for i in range(n):
        row = []
        for j in range(n):
            direct = a.product[i][j]
            swapped = a.product_eval(
                ainv_b.apply(a.basis_vec(j)), a_binv.apply(a.basis_vec(i))
            )
            sign = Fraction(a.eps_ij(i, j))
            row.append(vsub(direct, tuple(sign * c for c in swapped)))
        product.append(row)
    return ColourAlgebra(a.basis, a.eps, product, a.alpha, a.beta, kind="lie")


# -- the corpus -------------------------------------------------------------


def zero_algebra(n: int) -> ColourAlgebra:
    """n-dimensional abelian algebra: zero product, identity maps."""
    group = GradingGroup(0, ())
    basis = GradedBasis(
        group, tuple(f"e{i+1}" for i in range(n)), ((),) * n
    )
    zero_cell = (Fraction(0),) * n
    product = [[zero_cell] * n for _ in range(n)]
    return ColourAlgebra(
        basis,
        trivial_bicharacter(group),
        product,
        Matrix.identity(n),
        Matrix.identity(n),
        kind="lie",
    )


_OSP_NAMES = ("H", "X", "Y", "F", "G")
_OSP_DEGREES = ((0,), (0,), (0,), (1,), (1,))

# nonzero brackets [row, col] -> {name: coeff}; both orientations listed.
_OSP_TABLE: dict[tuple[str, str], dict[str, int]] = {
    ("H", "X"): {"X": 2},
    ("X", "H"): {"X": -2},
    ("H", "Y"): {"Y": -2},
    ("Y", "H"): {"Y": 2},
    ("X", "Y"): {"H": 1},
    ("Y", "X"): {"H": -1},
    ("H", "F"): {"F": -1},
    ("F", "H"): {"F": 1},
    ("H", "G"): {"G": 1},
    ("G", "H"): {"G": -1},
    ("X", "F"): {"G": 1},
    ("F", "X"): {"G": -1},
    ("Y", "G"): {"F": 1},
    ("G", "Y"): {"F": -1},
    ("G", "F"): {"H": 1},
    ("F", "G"): {"H": 1},
    ("F", "F"): {"Y": 2},
    ("G", "G"): {"X": -2},
}


def osp12_classical() -> ColourAlgebra:
    """The five-dimensional orthosymplectic Lie superalgebra over Q.

    Basis H, X, Y (even), F, G (odd); realized by supermatrices with
    H = diag(1,0,-1), X = E13, Y = E31, F = E21+E32, G = E12-E23, from
    which the table below is read off.  Identity structure maps.
    """
    group = GradingGroup(0, (2,))
    basis = GradedBasis(group, _OSP_NAMES, _OSP_DEGREES)
    n = len(_OSP_NAMES)
    product = [
        [[Fraction(0)] * n for _ in range(n)] for _ in range(n)
    ]
    for (x, y), cell in _OSP_TABLE.items():
        i, j = basis.index(x), basis.index(y)
        for name, coeff in cell.items():
            product[i][j][basis.index(name)] = Fraction(coeff)
    return ColourAlgebra(
        basis,
        super_bicharacter(),
        product,
        Matrix.identity(n),
        Matrix.identity(n),
        kind="lie",
    )


def osp12_scaling_map(t: Fraction) -> Matrix:
    """diag action H -> H, X -> t^2 X, Y -> t^-2 Y, F -> t^-1 F, G -> t G."""
    t = Fraction(t)
    if not t:
        raise ValueError("scaling parameter must be nonzero")
    return Matrix.diagonal([1, t * t, 1 / (t * t), 1 / t, t])


def build_osp12(lam: Scalar, kappa: Scalar) -> ColourAlgebra:
    """Twist of the classical algebra by the two scaling morphisms.

    {x, y} = [a_lam(x), b_kappa(y)] with structure maps a_lam, b_kappa.
    """
    lam = Fraction(lam)
    kappa = Fraction(kappa)
    if not lam or not kappa:
        raise ValueError("twist parameters must be nonzero")
    return yau_twist(
        osp12_classical(), osp12_scaling_map(lam), osp12_scaling_map(kappa)
    )


def mat2_assoc() -> ColourAlgebra:
    """2x2 matrix units under matrix multiplication, trivially graded."""
    group = GradingGroup(0, ())
    names = ("E11", "E12", "E21", "E22")
    basis = GradedBasis(group, names, ((),) * 4)
    idx = {name: k for k, name in enumerate(names)}
    n = 4
    product = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for r, (i, j) in enumerate(((1, 1), (1, 2), (2, 1), (2, 2))):
        for c, (k, l) in enumerate(((1, 1), (1, 2), (2, 1), (2, 2))):
            if j == k:
                product[r][c][idx[f"E{i}{l}"]] = Fraction(1)
    return ColourAlgebra(
        basis,
        trivial_bicharacter(group),
        product,
        Matrix.identity(n),
        Matrix.identity(n),
        kind="associative",
    )


def z2z2_colour_example() -> ColourAlgebra:
    """A colour (non-super) example graded by Z2 x Z2.

    eps((a1,a2),(b1,b2)) = (-1)^(a1 b2 + a2 b1); the three nonzero degrees
    pair to -1 with each other, so the symmetric table [a,b]=[b,a]=c (cyclic)
    is eps-skewsymmetric; identity maps.
    """
    group = GradingGroup(0, (2, 2))
    eps = Bicharacter(group, [[1, -1], [-1, 1]])
    basis = GradedBasis(group, ("a", "b", "c"), ((1, 0), (0, 1), (1, 1)))
    n = 3
    product = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    cyc = {("a", "b"): "c", ("b", "c"): "a", ("c", "a"): "b"}
    for (x, y), z in cyc.items():
        i, j, k = basis.index(x), basis.index(y), basis.index(z)
        product[i][j][k] = Fraction(1)
        product[j][i][k] = Fraction(1)
    return ColourAlgebra(
        basis, eps, product, Matrix.identity(n), Matrix.identity(n), kind="lie"
    )


def corpus(name: str) -> ColourAlgebra:
    """Look up a built-in algebra by its stable CLI-visible name.

    Accepted: zero_<n>, osp12_classical, osp12_twist(<lam>,<kappa>)
    (bare osp12_twist means (2,3)), mat2_assoc, z2z2_colour_example.
    """
    name = name.strip()
    if name.startswith("zero_"):
        try:
            n = int(name[5:])
        except ValueError:
            raise KeyError(f"unknown corpus algebra {name!r}") from None
        if n < 1:
            raise KeyError(f"unknown corpus algebra {name!r}")
        return zero_algebra(n)
    if name == "osp12_classical":
        return osp12_classical()
    if name == "osp12_twist":
        return build_osp12(2, 3)
    if name.startswith("osp12_twist(") and name.endswith(")"):
        inner = name[len("osp12_twist(") : -1]
        parts = inner.split(",")
        if len(parts) != 2:
            raise KeyError(f"unknown corpus algebra {name!r}")
        return build_osp12(Fraction(parts[0]), Fraction(parts[1]))
    if name == "mat2_assoc":
        return mat2_assoc()
    if name == "z2z2_colour_example":
        return z2z2_colour_example()
    raise KeyError(f"unknown corpus algebra {name!r}")


CORPUS_NAMES = (
    "zero_3",
    "osp12_classical",
    "osp12_twist(2,3)",
    "mat2_assoc",
    "z2z2_colour_example",
)


def lie_corpus() -> list[tuple[str, ColourAlgebra]]:
    """The Lie-kind test family: every corpus bracket algebra.

    mat2_assoc enters through its commutator algebra; the associative
    product itself has no adjoint action.
    """
    return [
        ("zero_3", zero_algebra(3)),
        ("osp12_classical", osp12_classical()),
        ("osp12_twist(2,3)", build_osp12(2, 3)),
        ("z2z2_colour_example", z2z2_colour_example()),
        ("commutator(mat2_assoc)", commutator_algebra(mat2_assoc())),
    ]


def expected_report(name: str) -> AxiomReport:
    """The shipped verdicts for a corpus member (all suites pass)."""
    alg = corpus(name)
    if alg.kind == "associative":
        from .algebra import check_associative_axioms

        return check_associative_axioms(alg)
    return check_lie_axioms(alg)
