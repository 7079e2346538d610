"""Presentation-file grammar, expression parsing, canonical printing."""

from fractions import Fraction

import pytest

from skewpbw import catalog
from skewpbw.constructors import enveloping, opposite, tensor_k, tensor_same_ring
from skewpbw.errors import ParseError
from skewpbw.presfile import (
    parse_expression,
    parse_presentation,
    print_presentation,
)

WEYL1 = """\
# Weyl algebra in one pair of variables
algebra weyl-file
coeff field rational
vars x y
rel y x = 1 * x y + 1
"""

ADDITIVE = """\
algebra additive-file
coeff poly rational x
vars y
param q = 3/2
sigma y: x -> q*x
sigma_inv y: x -> 2/3*x
delta y: x -> 1
"""


def test_parse_weyl_file():
    P = parse_presentation(WEYL1)
    assert P.name == "weyl-file"
    assert P.ring.is_field
    assert P.var_names == ("x", "y")
    assert P.c_of(0, 1).is_one()
    assert P.tail_of(0, 1).r0.is_one()


def test_parse_additive_file_with_params():
    P = parse_presentation(ADDITIVE)
    x = P.ring.gen(0)
    assert P.sigmas[0].images[0] == Fraction(3, 2) * x
    assert P.sigmas[0].inverse_images[0] == Fraction(2, 3) * x
    assert P.deltas[0].values[0] == P.ring.one()


def test_defaults_identity_and_zero():
    P = parse_presentation(
        "algebra d\ncoeff poly rational t\nvars u v\n"
    )
    assert all(s.is_identity() for s in P.sigmas)
    assert all(s.inverse_images is not None for s in P.sigmas)
    assert all(d.is_zero() for d in P.deltas)
    assert P.c_of(0, 1).is_one() and P.tail_of(0, 1).is_zero()


def test_expression_evaluation():
    P = parse_presentation(WEYL1)
    assert parse_expression(P, "y*x") == P.element({(1, 1): 1, (0, 0): 1})
    assert parse_expression(P, "1") == P.one()
    assert parse_expression(P, "(x + y)^2 - x^2 - y^2 - 2*x*y") == P.element(
        {(0, 0): 1}
    )
    assert parse_expression(P, "-3/2*x") == P.element({(1, 0): Fraction(-3, 2)})


def test_expression_errors():
    P = parse_presentation(WEYL1)
    with pytest.raises(ParseError, match="unknown identifier"):
        parse_expression(P, "y*z")
    with pytest.raises(ParseError):
        parse_expression(P, "y*")
    with pytest.raises(ParseError, match="constants"):
        parse_expression(P, "1/x")


def test_parse_error_reports_line():
    bad = "algebra a\ncoeff field rational\nvars x y\nrel x y = 1 * y x\n"
    with pytest.raises(ParseError, match="line 4"):
        parse_presentation(bad)  # wrong orientation: x precedes y


def test_tail_must_be_affine():
    bad = (
        "algebra a\ncoeff field rational\nvars x y\n"
        "rel y x = 1 * x y + x*y\n"
    )
    with pytest.raises(ParseError, match="tail"):
        parse_presentation(bad)


def test_missing_sections():
    with pytest.raises(ParseError, match="coeff"):
        parse_presentation("algebra a\nvars x\n")
    with pytest.raises(ParseError, match="vars"):
        parse_presentation("algebra a\ncoeff field rational\n")


def test_duplicate_rel_rejected():
    bad = (
        "algebra a\ncoeff field rational\nvars x y\n"
        "rel y x = 1 * x y + 1\nrel y x = 2 * x y\n"
    )
    with pytest.raises(ParseError, match="duplicate"):
        parse_presentation(bad)


def test_unknown_generator_in_twist():
    bad = "algebra a\ncoeff poly rational t\nvars u\nsigma u: z -> 2*z\n"
    with pytest.raises(ParseError):
        parse_presentation(bad)


def test_roundtrip_catalog_and_constructed():
    lam = {(2, 1): 2, (3, 1): 3, (3, 2): 5}
    presentations = [
        catalog.weyl(1),
        catalog.weyl(2),
        catalog.additive_analogue([Fraction(3, 2)], over="poly"),
        catalog.additive_analogue([2, 5], over="field"),
        catalog.multiplicative_analogue(lam),
        catalog.q_dilation(2, 1, 5),
        catalog.commutative(3),
        tensor_same_ring(catalog.weyl(1), catalog.weyl(1)),
        tensor_k(
            catalog.additive_analogue([2], over="poly"), catalog.q_dilation(1, 1, 5)
        ),
        opposite(catalog.additive_analogue([Fraction(3, 2)], over="poly"))[0],
        opposite(catalog.multiplicative_analogue(lam))[0],
        enveloping(catalog.weyl(1)),
        enveloping(catalog.multiplicative_analogue({(2, 1): 7})),
    ]
    for P in presentations:
        text = print_presentation(P)
        Q = parse_presentation(text)
        assert Q == P, P.name
        assert print_presentation(Q) == text, P.name


def test_roundtrip_preserves_missing_inverse():
    text = (
        "algebra a\ncoeff poly rational t\nvars u\n"
        "sigma u: t -> 2*t\n"
    )
    P = parse_presentation(text)
    assert P.sigmas[0].inverse_images is None
    again = parse_presentation(print_presentation(P))
    assert again == P


def test_negative_tail_roundtrip():
    text = (
        "algebra a\ncoeff field rational\nvars x y\n"
        "rel y x = 1 * x y + (-1)\n"
    )
    P = parse_presentation(text)
    assert P.tail_of(0, 1).r0 == P.ring.const(-1)
    assert parse_presentation(print_presentation(P)) == P
