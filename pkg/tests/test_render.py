from dpdreal import AFFINE_LINE, CIRCLE_CURVE, dpd_validate, fiber_report, parse_divisor, rf
from dpdreal.render import colorize, render_diagram


def diagram(D, h, curve=AFFINE_LINE):
    return render_diagram(fiber_report(dpd_validate(curve, parse_divisor(D), rf(h))))


def test_klein_and_sphere():
    assert diagram("1/2*[-1] + 1/2*[1]", "1 - z^2") == "o....b[===========]b....o\n     -1            1\n"
    assert diagram("0", "1 - z^2").splitlines()[0] == "o....c[===========]c....o"


def test_rp2_mixes_tags():
    assert diagram("1/2*[-1]", "1 - z^2").splitlines()[0] == "o....b[===========]c....o"


def test_empty_locus_has_no_shading():
    axis = diagram("0", "-1").splitlines()[0]
    assert "=" not in axis and "." in axis


def test_two_rays_and_torsor_points():
    axis = diagram("0", "z^2 - 1").splitlines()[0]
    assert axis == "o===========]c....c[===========o"
    axis = diagram("[0]", "z^2*(z^2 + 1)").splitlines()[0]
    assert "+" in axis and "." not in axis


def test_torus_is_a_full_circle():
    assert diagram("0", "1", CIRCLE_CURVE) == "<===========>\n"


def test_colorize_keeps_text():
    d = diagram("0", "1 - z^2")
    plain = colorize(d).replace("\x1b[32m", "").replace("\x1b[2m", "").replace("\x1b[1m", "").replace("\x1b[0m", "")
    assert plain == d
