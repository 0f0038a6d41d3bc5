"""The .alg text format and the command-line front end."""

import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources

import pytest

from bihomlie.alg_io import (
    FORMAT_VERSION,
    ParseError,
    jsonable,
    parse_algebra,
    parse_linear_map,
    parse_multiplier,
    parse_omega,
    serialize_algebra,
)
from bihomlie.cli import run_cli
from bihomlie.constructions import CORPUS_NAMES, build_osp12, corpus
from bihomlie.grading import parse_group
from bihomlie.linalg import Matrix
from bihomlie.multipliers import multiplier_from_omega, sigma_twist

F = Fraction

DATA_FILES = (
    "zero_3.alg",
    "osp12_classical.alg",
    "osp12_twist_2_3.alg",
    "mat2_assoc.alg",
    "z2z2_colour.alg",
)


def data_path(name):
    return str(resources.files("bihomlie").joinpath("data", name))


MINIMAL = """\
version 1
[group]
Z2
[bicharacter]
e1 e1 -1
[basis]
x 0
f 1
[product]
f f -> 2 x
[kind]
lie
"""


# -- parsing ------------------------------------------------------------------


def test_minimal_file_parses():
    a = parse_algebra(MINIMAL)
    assert a.dim == 2 and a.kind == "lie"
    assert a.product[1][1] == (F(2), F(0))
    assert a.alpha == Matrix.identity(2)  # defaulted
    assert a.eps.eval((1,), (1,)) == -1


def test_comments_and_blank_lines_are_ignored():
    noisy = MINIMAL.replace(
        "[product]", "# a comment\n\n[product]  # trailing"
    )
    assert parse_algebra(noisy) == parse_algebra(MINIMAL)


def test_unstated_products_vanish():
    a = parse_algebra(MINIMAL)
    assert not any(a.product[0][0])
    assert not any(a.product[0][1])


@pytest.mark.parametrize("name", DATA_FILES)
def test_shipped_files_are_canonical_fixpoints(name):
    with open(data_path(name), encoding="utf-8") as fh:
        text = fh.read()
    a = parse_algebra(text)
    canon = serialize_algebra(a)
    assert parse_algebra(canon) == a
    assert serialize_algebra(parse_algebra(canon)) == canon


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus_members_round_trip(name):
    a = corpus(name)
    assert parse_algebra(serialize_algebra(a)) == a


def test_version_header_required():
    with pytest.raises(ParseError, match="version 1"):
        parse_algebra("[group]\nZ2\n")
    assert FORMAT_VERSION == 1


def test_error_carries_the_line_number():
    bad = MINIMAL.replace("f f -> 2 x", "f f -> 2 q")
    with pytest.raises(ParseError, match="line 10: unknown basis vector 'q'"):
        parse_algebra(bad)
    try:
        parse_algebra(bad)
    except ParseError as e:
        assert e.line == 10


def test_section_structure_errors():
    with pytest.raises(ParseError, match="empty input"):
        parse_algebra("# nothing here\n")
    with pytest.raises(ParseError, match=r"unknown section \[brackets\]"):
        parse_algebra("version 1\n[brackets]\n")
    with pytest.raises(ParseError, match=r"duplicate section \[basis\]"):
        parse_algebra(MINIMAL + "[basis]\n")
    with pytest.raises(ParseError, match="content before any section"):
        parse_algebra("version 1\nZ2\n")
    with pytest.raises(ParseError, match=r"missing \[group\]"):
        parse_algebra("version 1\n[basis]\nx 0\n")
    with pytest.raises(ParseError, match="exactly one line"):
        parse_algebra("version 1\n[group]\nZ2\nZ2\n[basis]\nx 0\n")
    with pytest.raises(ParseError, match=r"missing or empty \[basis\]"):
        parse_algebra("version 1\n[group]\nZ2\n")


def test_basis_line_errors():
    with pytest.raises(ParseError, match="would be ambiguous"):
        parse_algebra("version 1\n[group]\nZ2\n[basis]\n2 0\n")
    with pytest.raises(ParseError, match="duplicate basis name"):
        parse_algebra("version 1\n[group]\nZ2\n[basis]\nx 0\nx 1\n")
    with pytest.raises(ParseError, match="expected 1 degree components"):
        parse_algebra("version 1\n[group]\nZ2\n[basis]\nx 0 0\n")


def test_bicharacter_errors():
    head = "version 1\n[group]\nZ2\n[bicharacter]\n"
    with pytest.raises(ParseError, match="expected 'ei ej value'"):
        parse_algebra(head + "e1 -1\n")
    with pytest.raises(ParseError, match="bad generator 'x1'"):
        parse_algebra(head + "x1 e1 -1\n")
    with pytest.raises(ParseError, match="out of range"):
        parse_algebra(head + "e1 e2 -1\n")
    with pytest.raises(ParseError, match="must be 1 or -1"):
        parse_algebra(head + "e1 e1 2\n")
    # skew-inconsistent generator values are caught globally
    with pytest.raises(ParseError, match="invalid bicharacter"):
        parse_algebra(
            "version 1\n[group]\nZ x Z\n[bicharacter]\ne1 e2 -1\n"
            "[basis]\nx 0 0\n"
        )


def test_product_line_errors():
    with pytest.raises(ParseError, match="needs '->'"):
        parse_algebra(MINIMAL.replace("f f -> 2 x", "f f 2 x"))
    with pytest.raises(ParseError, match="name two vectors"):
        parse_algebra(MINIMAL.replace("f f -> 2 x", "f -> 2 x"))
    with pytest.raises(ParseError, match="duplicate product line"):
        parse_algebra(MINIMAL.replace("f f -> 2 x", "f f -> x\nf f -> 2 x"))
    with pytest.raises(ParseError, match="bad coefficient"):
        parse_algebra(MINIMAL.replace("2 x", "two x"))
    with pytest.raises(ParseError, match="bad term"):
        parse_algebra(MINIMAL.replace("2 x", "2 x x"))


def test_evenness_is_validated_with_a_readable_witness():
    bad = MINIMAL.replace("f f -> 2 x", "f f -> 2 f")
    with pytest.raises(
        ParseError, match="not even: component f has degree 1, expected 0"
    ):
        parse_algebra(bad)
    odd_map = MINIMAL + "[alpha]\nx -> f\n"
    with pytest.raises(ParseError, match=r"\[alpha\] is not even: sends x"):
        parse_algebra(odd_map)


def test_map_section_errors():
    with pytest.raises(ParseError, match="needs '->'"):
        parse_algebra(MINIMAL + "[alpha]\nx x\n")
    with pytest.raises(ParseError, match="single basis vector"):
        parse_algebra(MINIMAL + "[alpha]\nx f -> x\n")
    with pytest.raises(ParseError, match=r"duplicate \[alpha\] line"):
        parse_algebra(MINIMAL + "[alpha]\nx -> x\nx -> 2 x\n")


def test_kind_errors():
    with pytest.raises(ParseError, match="unknown kind"):
        parse_algebra(MINIMAL.replace("lie", "group"))
    with pytest.raises(ParseError, match="one line"):
        parse_algebra(MINIMAL + "associative\n")


def test_parse_linear_map_defaults_to_identity():
    basis = parse_algebra(MINIMAL).basis
    m = parse_linear_map("x -> 3 x\n", basis)
    assert m.column(0) == (F(3), F(0))
    assert m.column(1) == (F(0), F(1))


def test_parse_multiplier_side_file():
    g = parse_group("Z2")
    t = parse_multiplier("0 0 2\n0 1 1/2\n1 0 1/2\n1 1 18\n", g)
    assert t.value((1,), (1,)) == 18
    with pytest.raises(ParseError, match="expected 'g h value'"):
        parse_multiplier("0 0\n", g)
    with pytest.raises(ParseError, match="bad value"):
        parse_multiplier("0 0 x\n", g)
    with pytest.raises(ParseError, match="duplicate entry"):
        parse_multiplier("0 0 1\n0 0 2\n", g)
    with pytest.raises(ParseError, match="multiplier value 0"):
        parse_multiplier("0 0 0\n", g)


def test_parse_omega_side_file():
    g = parse_group("Z2")
    assert parse_omega("0 2\n1 1/3\n", g) == {(0,): F(2), (1,): F(1, 3)}
    with pytest.raises(ParseError, match="expected 'g value'"):
        parse_omega("0\n", g)
    with pytest.raises(ParseError, match="duplicate entry"):
        parse_omega("0 1\n0 2\n", g)


def test_jsonable_rewrites_fractions_and_tuples():
    out = jsonable({"a": F(4, 3), "b": (F(1), [F(-2, 5)])})
    assert out == {"a": "4/3", "b": ["1", ["-2/5"]]}
    json.dumps(out)  # must be serializable as-is


# -- the command line ----------------------------------------------------------


def test_check_passes_on_shipped_lie_files(capsys):
    code = run_cli(["check", data_path("osp12_classical.alg")])
    out = capsys.readouterr().out
    assert code == 0
    assert "lie suite" in out and "PASS" in out
    assert "ok    bihom_jacobi" in out


def test_check_fails_with_witness_on_a_broken_table(tmp_path, capsys):
    with open(data_path("osp12_twist_2_3.alg"), encoding="utf-8") as fh:
        text = fh.read()
    broken = tmp_path / "broken.alg"
    broken.write_text(text.replace("F F -> 1/3 Y", "F F -> 4/3 Y"))
    code = run_cli(["check", str(broken)])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL  bihom_jacobi" in out
    assert "defect" in out


def test_check_suite_can_be_forced(capsys):
    code = run_cli(
        ["check", data_path("mat2_assoc.alg"), "--axioms", "lie"]
    )
    assert code == 1  # the matrix product is no bracket
    assert "FAIL" in capsys.readouterr().out


def test_check_report_json(tmp_path, capsys):
    report = tmp_path / "out.json"
    code = run_cli(
        ["check", data_path("zero_3.alg"), "--report", str(report)]
    )
    capsys.readouterr()
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["version"] == 1
    assert doc["command"] == "check"
    assert doc["payload"]["suite"] == "lie"
    assert doc["payload"]["passed"] is True
    assert any(
        item["name"] == "bihom_skewsymmetry"
        for item in doc["payload"]["items"]
    )


def test_garbage_input_is_a_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("this is not an algebra\n")
    assert run_cli(["check", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err
    assert run_cli(["check", str(tmp_path / "absent.alg")]) == 2
    capsys.readouterr()


def test_usage_errors_exit_2(capsys):
    assert run_cli([]) == 2
    assert run_cli(["frobnicate"]) == 2
    capsys.readouterr()


@pytest.mark.parametrize("name", DATA_FILES)
def test_roundtrip_subcommand(name, capsys):
    assert run_cli(["roundtrip", data_path(name)]) == 0
    assert "round-trip OK" in capsys.readouterr().out


def test_example_subcommand(tmp_path, capsys):
    assert run_cli(["example", "--list"]) == 0
    out = capsys.readouterr().out
    for name in CORPUS_NAMES:
        assert name in out
    target = tmp_path / "osp.alg"
    assert run_cli(["example", "osp12_classical", "-o", str(target)]) == 0
    assert parse_algebra(target.read_text()) == corpus("osp12_classical")
    assert run_cli(["example"]) == 2
    assert run_cli(["example", "no_such_algebra"]) == 2
    capsys.readouterr()


def test_twist_subcommand_builds_the_scaled_algebra(tmp_path, capsys):
    a2 = tmp_path / "a2.map"
    b2 = tmp_path / "b2.map"
    # the two scaling morphisms with t = 2 and t = 3
    for path, t in ((a2, F(2)), (b2, F(3))):
        path.write_text(
            f"X -> {t ** 2} X\nY -> {1 / t ** 2} Y\n"
            f"F -> {1 / t} F\nG -> {t} G\n"
        )
    out = tmp_path / "twisted.alg"
    code = run_cli(
        [
            "twist",
            data_path("osp12_classical.alg"),
            str(a2),
            str(b2),
            "-o",
            str(out),
        ]
    )
    capsys.readouterr()
    assert code == 0
    assert parse_algebra(out.read_text()) == build_osp12(2, 3)


def test_twist_missing_side_file(tmp_path, capsys):
    code = run_cli(
        [
            "twist",
            data_path("osp12_classical.alg"),
            str(tmp_path / "none.map"),
            str(tmp_path / "none.map"),
        ]
    )
    assert code == 2
    capsys.readouterr()


def test_sigma_twist_subcommand(tmp_path, capsys):
    sigma = tmp_path / "sigma.mult"
    sigma.write_text("0 0 1/2\n0 1 1/2\n1 0 1/2\n1 1 18\n")
    out = tmp_path / "twisted.alg"
    code = run_cli(
        [
            "sigma-twist",
            data_path("osp12_classical.alg"),
            str(sigma),
            "-o",
            str(out),
        ]
    )
    capsys.readouterr()
    assert code == 0
    a = corpus("osp12_classical")
    table = multiplier_from_omega(
        a.basis.group, {(0,): F(2), (1,): F(1, 3)}, [(0,), (1,)]
    )
    assert parse_algebra(out.read_text()) == sigma_twist(a, table)


def test_sigma_twist_rejects_asymmetric_tables(tmp_path, capsys):
    sigma = tmp_path / "sigma.mult"
    sigma.write_text("0 0 1\n0 1 2\n1 0 3\n1 1 1\n")
    code = run_cli(
        ["sigma-twist", data_path("osp12_classical.alg"), str(sigma)]
    )
    out = capsys.readouterr().out
    assert code == 1
    assert "multiplier validation failed" in out


def test_delta_twist_subcommand_flips_the_bicharacter(tmp_path, capsys):
    lines = []
    for g in ((0, 0), (0, 1), (1, 0), (1, 1)):
        for h in ((0, 0), (0, 1), (1, 0), (1, 1)):
            v = (-1) ** (g[1] * h[0])
            lines.append(f"{g[0]},{g[1]} {h[0]},{h[1]} {v}")
    delta = tmp_path / "delta.mult"
    delta.write_text("\n".join(lines) + "\n")
    out = tmp_path / "flipped.alg"
    code = run_cli(
        [
            "delta-twist",
            data_path("z2z2_colour.alg"),
            str(delta),
            "-o",
            str(out),
        ]
    )
    capsys.readouterr()
    assert code == 0
    flipped = parse_algebra(out.read_text())
    assert flipped.eps.gen_values == ((1, 1), (1, 1))


def test_admissible_subcommand(capsys):
    assert run_cli(["admissible", data_path("mat2_assoc.alg")]) == 0
    out = capsys.readouterr().out
    for g in ("G1", "G2", "G3", "G4", "G5", "G6"):
        assert f"{g}: PASS" in out
    # a bracket is nowhere near associative
    assert (
        run_cli(
            [
                "admissible",
                data_path("osp12_classical.alg"),
                "--group",
                "G1",
            ]
        )
        == 1
    )
    assert "G1: FAIL" in capsys.readouterr().out


def test_cohomology_subcommand(tmp_path, capsys):
    report = tmp_path / "coh.json"
    code = run_cli(
        [
            "cohomology",
            data_path("zero_3.alg"),
            "--n",
            "0",
            "--r",
            "0",
            "--s",
            "0",
            "--l",
            "0",
            "--report",
            str(report),
        ]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "dim C=3 Z=3 B=0 H=3" in out
    doc = json.loads(report.read_text())
    assert doc["command"] == "cohomology"
    assert doc["payload"][0]["dim_h"] == 3


def test_cohomology_bad_degree(capsys):
    code = run_cli(
        [
            "cohomology",
            data_path("osp12_classical.alg"),
            "--n",
            "1",
            "--degree",
            "banana",
        ]
    )
    assert code == 2
    capsys.readouterr()


def test_derivations_subcommand(capsys):
    code = run_cli(
        ["derivations", data_path("osp12_classical.alg"), "--kind", "der"]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "degree 0: dim 3" in out
    assert "degree 1: dim 2" in out
    assert "total: 5" in out


def test_derivations_single_degree_and_strict(capsys):
    code = run_cli(
        [
            "derivations",
            data_path("osp12_classical.alg"),
            "--kind",
            "centroid",
            "--degree",
            "0",
            "--strict",
        ]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("degree") == 1
    assert "total: 1" in out


def test_console_script_is_installed():
    proc = subprocess.run(
        ["bihomlie", "example", "--list"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "osp12_classical" in proc.stdout
