"""Catalog builders: relations match their defining equations, parameter
validation, classification matches the known classes, witnesses certify."""

from fractions import Fraction

import pytest

from skewpbw import catalog
from skewpbw.classify import classify_flags, connected_check, diamond_check, graded_check
from skewpbw.commring import QQ
from skewpbw.errors import SkewPBWError
from skewpbw.homcheck import check_graded_iso, check_hom
from skewpbw.pbwcore import mul, normal_form


def test_weyl_relations():
    W = catalog.instantiate("weyl", 1)
    assert W.var_names == ("x", "y")
    assert normal_form(["y", "x"], W) == W.element({(1, 1): 1, (0, 0): 1})
    W2 = catalog.instantiate("weyl", 2)
    # y2 x2 = x2 y2 + 1; y1 x2 = x2 y1; x-block and y-block commute
    assert mul(W2.var("y2"), W2.var("x2")) == W2.element(
        {(0, 1, 0, 1): 1, (0, 0, 0, 0): 1}
    )
    assert mul(W2.var("y1"), W2.var("x2")) == W2.element({(0, 1, 1, 0): 1})
    assert mul(W2.var("x2"), W2.var("x1")) == W2.element({(1, 1, 0, 0): 1})


def test_additive_analogue_poly_form():
    A = catalog.instantiate("additive_analogue", [3], over="poly")
    x = A.ring.gen(0)
    assert A.sigmas[0].images[0] == 3 * x
    assert A.deltas[0].values[0] == A.ring.one()
    assert mul(A.var(0), A.const(x)) == A.element({(1,): 3 * x, (0,): 1})


def test_additive_analogue_field_form():
    A = catalog.instantiate("additive_analogue", [3, 5], over="field")
    assert A.n == 4
    # y1 x1 = 3 x1 y1 + 1, y2 x2 = 5 x2 y2 + 1, cross pairs commute
    assert mul(A.var("y1"), A.var("x1")) == A.element(
        {(1, 0, 1, 0): 3, (0, 0, 0, 0): 1}
    )
    assert mul(A.var("y2"), A.var("x1")) == A.element({(1, 0, 0, 1): 1})


def test_multiplicative_analogue_relation():
    O2 = catalog.instantiate("multiplicative_analogue", {(2, 1): 2})
    assert mul(O2.var(1), O2.var(0)) == O2.element({(1, 1): 2})
    assert O2.commutation_constant(1, 0) == QQ.const(Fraction(1, 2))
    assert O2.commutation_constant(0, 0).is_one()


def test_q_dilation_relations():
    Q = catalog.instantiate("q_dilation", 2, 1, 5)
    t1, t2 = Q.ring.gen(0), Q.ring.gen(1)
    assert mul(Q.var(0), Q.const(t1)) == Q.element({(1,): 5 * t1})
    assert mul(Q.var(0), Q.const(t2)) == Q.element({(1,): t2})


def test_parameter_validation():
    with pytest.raises(SkewPBWError, match="nonzero"):
        catalog.instantiate("additive_analogue", [0])
    with pytest.raises(SkewPBWError, match="nonzero"):
        catalog.instantiate("multiplicative_analogue", {(2, 1): 0})
    with pytest.raises(SkewPBWError, match="n >= m"):
        catalog.instantiate("q_dilation", 1, 2, 3)
    with pytest.raises(SkewPBWError, match="unknown catalog"):
        catalog.instantiate("nope")


def _zoo():
    return [
        catalog.weyl(1),
        catalog.weyl(2),
        catalog.additive_analogue([2], over="field"),
        catalog.additive_analogue([Fraction(3, 2)], over="poly"),
        catalog.multiplicative_analogue({(2, 1): 2, (3, 1): 3, (3, 2): 5}),
        catalog.q_dilation(2, 1, 5),
        catalog.commutative(2),
    ]


def test_catalog_diamond_and_classes():
    for P in _zoo():
        assert diamond_check(P, 4)[0], P.name
        flags = classify_flags(P)
        assert flags.bijective, P.name
    w = classify_flags(catalog.weyl(2))
    assert w.constant and not w.quasi_commutative
    for P in (catalog.q_dilation(2, 1, 5), catalog.multiplicative_analogue({(2, 1): 2})):
        flags = classify_flags(P)
        assert flags.quasi_commutative
        assert graded_check(P)[0]
        assert connected_check(P)


def test_registered_witnesses_certify_to_degree_6():
    specs = [
        ("weyl_tensor", "weyl", (1, 1), {}),
        ("additive_analogue_scalars", "additive_analogue", (2,), {}),
        ("additive_analogue_field", "additive_analogue_poly", ([2],), {}),
        (
            "multiplicative_analogue_scalars",
            "multiplicative_analogue",
            ({(2, 1): 2, (3, 1): 3},),
            {},
        ),
    ]
    for name, target, args, kwargs in specs:
        w = catalog.witness(name, target, *args, **kwargs)
        assert check_hom(w.src, w.dst, w.images).ok, (name, target)
        assert check_graded_iso(w.src, w.dst, w.images, 6).ok, (name, target)


def test_unknown_witness_pair():
    with pytest.raises(SkewPBWError, match="unknown witness"):
        catalog.witness("weyl_tensor", "nope")
