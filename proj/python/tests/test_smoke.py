import math
import os
from pathlib import Path

import pytest

import rotors

DATA = Path(os.environ.get("ROTORS_TEST_DATA", Path(__file__).resolve().parents[2] / "tests" / "data"))


def rotor():
    return rotors.SupportFunction2D(1.0, [(2, 0.2, 0.0)])


def test_rotor_and_identity():
    tri = rotors.TriangleShape.equilateral(1.0)
    ok, defect = rotors.is_rotor(rotor(), tri, samples=360)
    assert ok and defect < 1e-10
    for rho in (0.0, 0.4, 1.7):
        assert abs(rotors.identity_residual(rotor(), tri, rho)) < 1e-8
    cd = rotors.contact_data(rotor(), tri, 0.3)
    assert cd["concurrency_residual"] < 1e-10
    assert sum(cd["a"]) == pytest.approx(1.0)

    ok, defect = rotors.is_rotor(rotors.SupportFunction2D(1.0, [(3, 0.1, 0.0)]), tri, samples=360)
    assert not ok and defect > 1e-3


def test_support_function():
    h = rotors.SupportFunction2D.circle(2.0, (0.5, 0.0))
    assert h.value(0.0) == pytest.approx(2.5)
    assert h.curvature_radius(1.0) == pytest.approx(2.0)
    x, y = h.boundary_point(math.pi / 2)
    assert (x, y) == pytest.approx((0.5, 2.0))
    assert rotors.SupportFunction2D.from_json(rotor().to_json()).harmonics == [(2, 0.2, 0.0)]


def test_omega():
    h = rotors.SupportFunction2D(1.0, [(3, 0.05, 0.0)])
    mins = (math.pi / 3, math.pi, 5 * math.pi / 3)
    r = rotors.omega(h, mins)
    assert r["omega"] == pytest.approx(0.95 / 1.4)
    assert r["decision"] == "Immobilizes"


def test_ruling():
    def ruling(t):
        c, s = math.cos(t), math.sin(t)
        return (c, s, 0.0), (-s, c, 1.0)

    r = rotors.classify_ruling([ruling(t) for t in (0.0, 1.0, 2.5, 4.0)])
    assert r["verdict"] == "Regulus"
    assert r["sigma_ratio"] < 1e-10
    with pytest.raises(rotors.RotorsError):
        rotors.classify_ruling([ruling(0.0)])


def test_sphere_in_tetrahedron():
    tet = rotors.TetrahedronShape.regular(1.0)
    sphere = rotors.SupportFunction3D.sphere(1.0)
    assert rotors.circumscribed_volume(sphere, tet) == pytest.approx(8 * math.sqrt(3), rel=1e-12)
    report = rotors.normal_ruling_check(sphere, tet, samples=100)
    assert report["is_rotor"]
    assert report["verdicts"]["Concurrent"] == 100
    bump = rotors.SupportFunction3D(1.0, [(3, -2, 0.05)])
    assert rotors.rotor_defect(bump, tet, samples=100) > 1e-3


def test_render_matches_snapshot():
    svg = rotors.render_frame(rotor(), rotors.TriangleShape.equilateral(1.0), 0.0)
    assert svg == (DATA / "rotor_frame.svg").read_text()


def test_errors():
    with pytest.raises(rotors.RotorsError):
        rotors.SupportFunction3D(1.0, [(2, 3, 0.1)])
    with pytest.raises(rotors.RotorsError):
        rotors.SupportFunction2D.from_json('{"harmonics": []}')
