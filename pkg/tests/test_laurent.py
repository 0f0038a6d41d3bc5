"""Laurent extension: exact coefficient arithmetic and sampled axioms."""

from fractions import Fraction

import pytest

from bihomlie.constructions import build_osp12, osp12_classical
from bihomlie.laurent import LaurentPoly, check_laurent_samples, laurent_bracket

F = Fraction
t = LaurentPoly.term


class TestPolyArithmetic:
    def test_add_collects_and_drops_zeros(self):
        p = t(1) + t(-2, F(1, 3)) + t(1, -1)
        assert p == t(-2, F(1, 3))

    def test_mul_convolves_exponents(self):
        p = (t(1) + t(0, 2)) * (t(-1) + t(3))
        assert p.coeffs == {0: F(1), 4: F(1), -1: F(2), 3: F(2)}

    def test_scale_and_zero(self):
        assert t(5).scale(0).is_zero()
        assert LaurentPoly.zero().is_zero()
        assert t(2, 3).scale(F(1, 3)) == t(2)

    def test_str_sorted_by_exponent(self):
        p = t(2, 3) + t(-1) + t(0, F(1, 2))
        assert str(p) == "t^-1 + 1/2 + 3 t^2"
        assert str(LaurentPoly.zero()) == "0"

    def test_hashable(self):
        assert len({t(1) + t(2), t(2) + t(1), t(1)}) == 2


def _vec(a, name, c=1):
    v = [F(0)] * a.dim
    v[a.basis.index(name)] = F(c)
    return tuple(v)


def test_bracket_multiplies_coefficient_polys():
    a = osp12_classical()
    # scalars stay in the polynomial factor: [X (x) t^3, Y (x) 2t^-1]
    v, fg = laurent_bracket(a, _vec(a, "X"), t(3), _vec(a, "Y"), t(-1, 2))
    assert v == _vec(a, "H")
    assert fg == t(2, 2)


def test_bracket_zero_cases():
    a = osp12_classical()
    v, fg = laurent_bracket(a, _vec(a, "X"), t(1), _vec(a, "X"), t(5))
    assert not any(v) and fg.is_zero()
    v, fg = laurent_bracket(
        a, _vec(a, "X"), LaurentPoly.zero(), _vec(a, "Y"), t(0)
    )
    assert not any(v) and fg.is_zero()


def test_bracket_requires_homogeneous_factors():
    a = osp12_classical()
    mixed = tuple(F(1) for _ in range(a.dim))
    with pytest.raises(ValueError, match="homogeneous"):
        laurent_bracket(a, mixed, t(0), _vec(a, "H"), t(0))


def test_bracket_splits_inhomogeneous_output_by_degree():
    # a product table that mixes degrees; the extension reports parts
    a = osp12_classical()
    prod = [[list(cell) for cell in row] for row in a.product]
    i = a.basis.index("X")
    j = a.basis.index("Y")
    prod[i][j] = [F(0)] * 5
    prod[i][j][a.basis.index("H")] = F(1)
    prod[i][j][a.basis.index("F")] = F(1)
    mixed = a.with_product(prod)
    parts = laurent_bracket(mixed, _vec(a, "X"), t(1), _vec(a, "Y"), t(2))
    assert isinstance(parts, list) and len(parts) == 2
    for comp, fg in parts:
        assert fg == t(3)
    assert {tuple(c) for c, _ in parts} == {_vec(a, "H"), _vec(a, "F")}


def _samples(a):
    return [
        ((_vec(a, "X"), t(1)), (_vec(a, "Y"), t(0) + t(2)), (_vec(a, "H"), t(-2))),
        ((_vec(a, "F"), t(1)), (_vec(a, "G"), t(1)), (_vec(a, "F"), t(0, 3))),
        ((_vec(a, "H"), t(0)), (_vec(a, "F"), t(-1)), (_vec(a, "G"), t(4))),
    ]


def test_samples_pass_on_classical_and_twisted():
    for a in (osp12_classical(), build_osp12(2, 3)):
        report = check_laurent_samples(a, _samples(a))
        assert report.item("sample_skewsymmetry").passed
        assert report.item("sample_jacobi").passed


def test_samples_catch_a_broken_coefficient():
    tw = build_osp12(2, 3)
    i = tw.basis.index("F")
    prod = [[list(cell) for cell in row] for row in tw.product]
    prod[i][i][tw.basis.index("Y")] = F(4, 3)
    bad = tw.with_product(prod)
    report = check_laurent_samples(
        bad,
        [
            ((_vec(bad, "X"), t(2)), (_vec(bad, "F"), t(1)), (_vec(bad, "F"), t(0))),
        ],
    )
    item = report.item("sample_jacobi")
    assert not item.passed
    assert item.witness.indices == (0,)
    assert "t^3" in item.witness.defect_str


def test_samples_reject_malformed_input():
    a = osp12_classical()
    with pytest.raises(ValueError, match="triple"):
        check_laurent_samples(a, [((_vec(a, "X"), t(0)),)])
    mixed = tuple(F(1) for _ in range(a.dim))
    with pytest.raises(ValueError, match="homogeneous"):
        check_laurent_samples(
            a, [((mixed, t(0)), (_vec(a, "Y"), t(0)), (_vec(a, "H"), t(0)))]
        )
