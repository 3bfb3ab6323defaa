from fractions import Fraction

import pytest

from ovalkit.algebra import Interval
from ovalkit.cli import emit_damper_table, main, parse_curve_text

from conftest import CUBIC_PARAM, QUARTIC_PARAM


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_verb(capsys):
    code, out, _ = run(capsys, ["parse", "--expr", "(y^2-x)^2 - x^3", "--vars", "x,y"])
    assert code == 0
    assert out.strip() == "y^4 - 2*x*y^2 - x^3 + x^2"


def test_area_verb(capsys):
    code, out, _ = run(capsys, ["area", "--param", CUBIC_PARAM])
    assert code == 0
    assert out.startswith("3/20")


def test_area_chord_and_vertical(capsys):
    code, out, _ = run(capsys, ["area", "--param", CUBIC_PARAM, "--chord", "3/4"])
    assert code == 0
    # '=' form keeps argparse from reading the leading '-' as an option
    code, out, _ = run(capsys, ["area", "--param", QUARTIC_PARAM, "--vertical=-1/2,1/2"])
    assert code == 0
    assert out.startswith("617/1680")


def test_puiseux_verb(capsys):
    code, out, _ = run(capsys, ["puiseux", "--curve", "y^4-2*x*y^2-x^3+x^2", "--terms", "5"])
    assert code == 0
    assert out.strip() == "x^(1/2) + 1/2*x - 1/8*x^(3/2) + 1/16*x^2 - 5/128*x^(5/2) + ..."


def test_implicitize_verb(capsys):
    code, out, _ = run(capsys, ["implicitize", "--param", QUARTIC_PARAM])
    assert code == 0
    assert out.strip() == "y^4 - 2*x*y^2 - x^3 + x^2"


def test_singular_verb(capsys):
    code, out, _ = run(capsys, ["singular", "--curve", "y^4-2*x*y^2-x^3+x^2"])
    assert code == 0
    assert out.strip() == "(0, 0)"
    code, out, _ = run(capsys, ["singular", "--curve", "x^2+y^2-1"])
    assert code == 0
    assert "no rational singular points" in out


def test_missing_verb_is_usage_error(capsys):
    code, _, _ = run(capsys, [])
    assert code == 2


def test_domain_error_exit_code(capsys):
    # chord parameter at the interval endpoint violates the precondition
    code, _, err = run(capsys, ["area", "--param", CUBIC_PARAM, "--chord", "0"])
    assert code == 1
    assert "error:" in err


def test_damper_table_golden(capsys, cubic_centered):
    csv_text = emit_damper_table(cubic_centered, Interval(Fraction(1, 2), Fraction(1)), 6)
    lines = csv_text.strip().splitlines()
    assert lines[0] == "t_P,alpha_deg,S2,S2_exact"
    assert len(lines) == 7
    first = lines[1].split(",")
    assert float(first[0]) == 0.5
    assert float(first[1]) == 45.0
    last = lines[-1].split(",")
    assert last[2] == "0.15"
    assert last[3] == "3/20"
    # byte-for-byte determinism
    again = emit_damper_table(cubic_centered, Interval(Fraction(1, 2), Fraction(1)), 6)
    assert again == csv_text


def test_damper_table_two_steps(capsys, cubic_centered):
    csv_text = emit_damper_table(cubic_centered, Interval(Fraction(1, 2), Fraction(1)), 2)
    assert len(csv_text.strip().splitlines()) == 3


def test_damper_table_monotone_rows(cubic_centered):
    from ovalkit.cli import damper_rows

    rows = damper_rows(cubic_centered, Interval(Fraction(1, 2), Fraction(1)), 9)
    ts = [row.t_P for row in rows]
    assert ts == sorted(ts)


def test_damper_table_cli_with_svg(tmp_path, capsys):
    out_csv = tmp_path / "table.csv"
    out_svg = tmp_path / "plot.svg"
    code, _, _ = run(
        capsys,
        [
            "damper-table",
            "--param",
            CUBIC_PARAM,
            "--range",
            "1/2,1",
            "--steps",
            "6",
            "--out",
            str(out_csv),
            "--svg",
            str(out_svg),
        ],
    )
    assert code == 0
    assert out_csv.read_text().startswith("t_P,alpha_deg,S2,S2_exact")
    svg = out_svg.read_text()
    assert svg.startswith("<svg") and "polyline" in svg


def test_damper_table_invalid_range(capsys):
    code, _, err = run(
        capsys,
        ["damper-table", "--param", CUBIC_PARAM, "--range", "1,1/2", "--steps", "4"],
    )
    assert code == 1


def test_certify_and_verify_roundtrip(tmp_path, capsys):
    cert_path = tmp_path / "cert.txt"
    code, out, _ = run(capsys, ["certify", "--param", CUBIC_PARAM, "--family", "pencil"])
    assert code == 0
    cert_path.write_text(out)
    code, out, _ = run(
        capsys,
        [
            "verify",
            "--cert-file",
            str(cert_path),
            "--param",
            CUBIC_PARAM,
            "--samples",
            "20",
            "--tol",
            "1e-6",
        ],
    )
    assert code == 0
    assert "PASS" in out


def test_verify_bad_certificate_fails(capsys, tmp_path):
    cert = "S\nroles: S=area m=slope\n"
    code, out, _ = run(
        capsys,
        ["verify", "--cert", cert, "--param", CUBIC_PARAM, "--samples", "15", "--tol", "1e-6"],
    )
    assert code == 1
    assert "FAIL" in out


def test_curve_text_errors():
    with pytest.raises(Exception):
        parse_curve_text("x=t; y=t")
    bez = parse_curve_text("bezier (0,0) (1,0) (1,1)")
    assert bez.interval.lo == 0 and bez.interval.hi == 1


def test_input_from_file(tmp_path, capsys):
    path = tmp_path / "curve.txt"
    path.write_text("param x=3*(1-t)^2*t; y=3*(1-t)*t^2; t in [0,1]\n")
    code, out, _ = run(capsys, ["area", "--in", str(path)])
    assert code == 0
    assert out.startswith("3/20")
