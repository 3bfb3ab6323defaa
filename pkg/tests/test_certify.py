from fractions import Fraction

import pytest

from ovalkit import (
    Certificate,
    RationalFunction,
    annihilation_residual,
    parse_certificate,
    parse_polynomial,
    pencil_certificate,
    serialize_certificate,
    verify_certificate,
    vertical_certificate,
)
from ovalkit.quadrature import chord_area_function, free_inlet_function, slope_function

from conftest import square_boundary


def test_pencil_certificate_cubic(cubic_centered, cubic_curve):
    cert = pencil_certificate(cubic_centered)
    assert not cert.q.is_zero
    assert cert.roles == {"S": "area", "m": "slope"}
    report = verify_certificate(cert, cubic_curve, n_samples=50, tol=1e-6)
    assert report.passed, report.max_relative_residual


def test_pencil_certificate_quartic(quartic_centered, quartic_curve):
    cert = pencil_certificate(quartic_centered)
    report = verify_certificate(cert, quartic_curve, n_samples=50, tol=1e-6)
    assert report.passed, report.max_relative_residual


def test_pencil_certificate_free_inlet_variant(cubic_centered):
    cert = pencil_certificate(cubic_centered, area="free_inlet")
    assert not cert.q.is_zero
    res = annihilation_residual(
        cert,
        {
            "S": RationalFunction(free_inlet_function(cubic_centered)),
            "m": slope_function(cubic_centered),
        },
    )
    assert res.num.is_zero


def test_pencil_elimination_linear_construction():
    # Degree-1 area and slope expressions eliminate to a certificate that
    # is linear in both S and m.
    from ovalkit.elimination import resultant

    e_S = parse_polynomial("S - t - 1", ["S", "t"])
    e_m = parse_polynomial("m - 2*t", ["m", "t"])
    q = resultant(e_S, e_m, "t")
    assert q.degree_in("S") == 1 and q.degree_in("m") == 1
    for t0 in (0, 1, 2):
        assert q.evaluate({"S": Fraction(t0 + 1), "m": Fraction(2 * t0)}) == 0


def test_exact_annihilation(cubic_centered, quartic_centered):
    for cp in (cubic_centered, quartic_centered):
        cert = pencil_certificate(cp)
        res = annihilation_residual(
            cert,
            {
                "S": RationalFunction(chord_area_function(cp)),
                "m": slope_function(cp),
            },
        )
        assert res.num.is_zero


def test_scale_invariance_of_verification(cubic_centered, cubic_curve):
    cert = pencil_certificate(cubic_centered)
    scaled = Certificate(cert.q * Fraction(7, 3), cert.roles, cert.provenance)
    r1 = verify_certificate(cert, cubic_curve, n_samples=20, tol=1e-6)
    r2 = verify_certificate(scaled, cubic_curve, n_samples=20, tol=1e-6)
    assert r1.passed == r2.passed


def test_provenance_records_removed_content(cubic_centered):
    from ovalkit.elimination import resultant
    from ovalkit.certify import _linear_in

    cert = pencil_certificate(cubic_centered)
    t = cubic_centered.curve.var
    e_S = _linear_in("S", RationalFunction(chord_area_function(cubic_centered)))
    e_m = _linear_in("m", slope_function(cubic_centered))
    raw = resultant(e_S, e_m, t)
    factor = Fraction(1)
    for f in cert.provenance.removed_factors:
        factor *= Fraction(f)
    assert cert.q * factor == raw


@pytest.fixture(scope="module")
def quartic_vertical_cert(quartic_centered):
    # The second elimination runs a 32x32 determinant; build it once.
    return vertical_certificate(quartic_centered)


def test_vertical_certificate_cubic(cubic_centered, cubic_curve):
    cert = vertical_certificate(cubic_centered)
    assert cert.roles == {"S": "area", "c": "abscissa"}
    report = verify_certificate(cert, cubic_curve, n_samples=20, tol=1e-6)
    assert report.passed, report.max_relative_residual


def test_vertical_certificate_quartic(quartic_vertical_cert, quartic_curve):
    # Even x-component: both intersection parameters come from the same g.
    report = verify_certificate(quartic_vertical_cert, quartic_curve, n_samples=20, tol=1e-6)
    assert report.passed, report.max_relative_residual


def test_vertical_certificate_consistency_with_exact_areas(quartic_vertical_cert, quartic_centered):
    cert = quartic_vertical_cert
    from ovalkit.quadrature import vertical_segment_area

    for t2 in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        S = vertical_segment_area(quartic_centered, -t2, t2).signed_value
        c = quartic_centered.curve.g.evaluate(t2)
        value = cert.q.evaluate({"S": S, "c": c})
        assert value == 0


def test_vertical_certificate_graph_like_collapse():
    # g(t) = t makes both abscissa equations the same linear relation.
    from ovalkit.algebra import Interval
    from ovalkit.curves import CenteredParametrization, ParametricCurve, Point
    from ovalkit.parsing import parse_rational_function

    g = parse_rational_function("t", "t")
    f = parse_rational_function("t^2", "t")
    curve = ParametricCurve(g, f, Interval(Fraction(0), Fraction(1)))
    cp = CenteredParametrization(curve, Point(0, 0))
    cert = vertical_certificate(cp)
    # with an injective x-component the two intersection parameters agree,
    # so the relation collapses to one univariate constraint on the area
    assert cert.q.degree_in("c") == 0
    assert cert.q.degree_in("S") == 1
    assert cert.q.evaluate({"S": Fraction(1, 3), "c": Fraction(0)}) == 0


def test_trivial_certificate_fails(cubic_curve):
    q = parse_polynomial("S", ["S", "m"])
    cert = Certificate(q, {"S": "area", "m": "slope"})
    report = verify_certificate(cert, cubic_curve, n_samples=20, tol=1e-6)
    assert not report.passed


def test_certificate_requires_area_role():
    q = parse_polynomial("S + m", ["S", "m"])
    with pytest.raises(ValueError):
        Certificate(q, {"S": "slope", "m": "slope"})
    with pytest.raises(ValueError):
        Certificate(parse_polynomial("0", ["S"]), {"S": "area"})


def test_serialize_roundtrip(cubic_centered):
    cert = pencil_certificate(cubic_centered)
    text = serialize_certificate(cert)
    assert text.splitlines()[-1] == "roles: S=area m=slope"
    again = parse_certificate(text)
    assert again.q == cert.q
    assert dict(again.roles) == dict(cert.roles)


def test_general_line_verification_mechanics():
    # A hand-made exact relation for lines crossing the square's left and
    # right edges: the area above y = m*x + q is 1 - q - m/2.
    q = parse_polynomial("2*S + m + 2*q - 2", ["S", "m", "q"])
    cert = Certificate(q, {"S": "area", "m": "slope", "q": "intercept"})
    boundary = square_boundary(100_000)
    report = verify_certificate(
        cert,
        boundary,
        n_samples=25,
        tol=1e-6,
        windows={"slope": (0.05, 0.3), "intercept": (0.1, 0.5)},
    )
    assert report.passed, report.max_relative_residual
