"""Built-in parameterized presentations: Weyl algebras, the additive and
multiplicative analogues, q-dilation operator algebras, and commutative
polynomial rings -- plus the bundled isomorphism witnesses between their
factored forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .commring import PolyRing, QQ, RingEndo, SigmaDerivation, rat
from .constructors import change_of_scalars, tensor_same_ring
from .errors import SkewPBWError
from .homcheck import GeneratorImages
from .pbwcore import Presentation, RelationTail


def _nonzero(value, what):
    value = rat(value)
    if not value:
        raise SkewPBWError(f"{what} must be nonzero")
    return value


def weyl(n: int = 1) -> Presentation:
    """A_n: variables x1..xn, y1..yn with y_i x_i = x_i y_i + 1 and all
    other pairs commuting."""
    if n < 1:
        raise SkewPBWError("weyl needs n >= 1")
    if n == 1:
        names = ("x", "y")
    else:
        names = tuple(f"x{i+1}" for i in range(n)) + tuple(f"y{i+1}" for i in range(n))
    tails = {}
    for i in range(n):
        tails[(i, n + i)] = RelationTail(
            QQ.one(), (QQ.zero(),) * (2 * n)
        )
    return Presentation(QQ, names, tails=tails, name=f"weyl({n})")


def additive_analogue(qs, over: str = "poly") -> Presentation:
    """Additive analogue of the Weyl algebra, y_i x_i = q_i x_i y_i + 1.

    over="field": the 2n-variable form over Q.
    over="poly":  the n-variable form over Q[x1..xn] with
                  sigma_{y_i}(x_i) = q_i x_i and delta_{y_i}(x_i) = 1.
    """
    if isinstance(qs, (int, Fraction, str)):
        qs = [qs]
    qs = [_nonzero(q, "q") for q in qs]
    n = len(qs)
    if over == "field":
        if n == 1:
            names = ("x", "y")
        else:
            names = tuple(f"x{i+1}" for i in range(n)) + tuple(
                f"y{i+1}" for i in range(n)
            )
        c = {}
        tails = {}
        for i in range(n):
            c[(i, n + i)] = QQ.const(qs[i])
            tails[(i, n + i)] = RelationTail(QQ.one(), (QQ.zero(),) * (2 * n))
        qstr = ",".join(str(q) for q in qs)
        return Presentation(QQ, names, c=c, tails=tails, name=f"additive({qstr})|field")
    if over != "poly":
        raise SkewPBWError("over must be 'field' or 'poly'")
    ring = PolyRing(("x",) if n == 1 else tuple(f"x{i+1}" for i in range(n)))
    vnames = ("y",) if n == 1 else tuple(f"y{i+1}" for i in range(n))
    sigmas, deltas = [], []
    for i in range(n):
        images = [ring.gen(a) for a in range(n)]
        inv = [ring.gen(a) for a in range(n)]
        images[i] = qs[i] * ring.gen(i)
        inv[i] = (1 / qs[i]) * ring.gen(i)
        s = RingEndo(ring, images, inv)
        values = [ring.zero()] * n
        values[i] = ring.one()
        sigmas.append(s)
        deltas.append(SigmaDerivation(ring, s, values))
    qstr = ",".join(str(q) for q in qs)
    return Presentation(ring, vnames, sigmas, deltas, name=f"additive({qstr})|poly")


def multiplicative_analogue(lam) -> Presentation:
    """Quantum polynomial ring O_n(lambda_ji): x_j x_i = lambda_ji x_i x_j.

    `lam` maps 1-based pairs (j, i) with j > i to nonzero rationals;
    omitted pairs default to 1.  The variable count is inferred from the
    largest index mentioned (at least 2).
    """
    lam = {pair: _nonzero(v, f"lambda{pair}") for pair, v in dict(lam).items()}
    n = 2
    for j, i in lam:
        if not 1 <= i < j:
            raise SkewPBWError(f"lambda index pair {(j, i)} must have j > i >= 1")
        n = max(n, j)
    names = tuple(f"x{i+1}" for i in range(n))
    c = {}
    for (j, i), v in lam.items():
        c[(i - 1, j - 1)] = QQ.const(v)
    return Presentation(QQ, names, c=c, name=f"O_{n}(lambda)")


def q_dilation(n: int, m: int, q) -> Presentation:
    """Linear partial q-dilation operators with polynomial coefficients:
    over Q[t1..tn], variables H1..Hm (n >= m), H_i t_i = q t_i H_i and
    every other pair commuting."""
    q = _nonzero(q, "q")
    if m > n:
        raise SkewPBWError("q_dilation requires n >= m")
    ring = PolyRing(tuple(f"t{i+1}" for i in range(n)))
    names = tuple(f"H{i+1}" for i in range(m))
    sigmas, deltas = [], []
    for i in range(m):
        images = [ring.gen(a) for a in range(n)]
        inv = [ring.gen(a) for a in range(n)]
        images[i] = q * ring.gen(i)
        inv[i] = (1 / q) * ring.gen(i)
        s = RingEndo(ring, images, inv)
        sigmas.append(s)
        deltas.append(SigmaDerivation.zero(ring, s))
    return Presentation(ring, names, sigmas, deltas, name=f"q_dilation({n},{m},{q})")


def commutative(n: int) -> Presentation:
    """Plain polynomial ring Q[x1..xn] as a trivial extension."""
    names = tuple(f"x{i+1}" for i in range(n))
    return Presentation(QQ, names, name=f"commutative({n})")


_BUILDERS = {
    "weyl": weyl,
    "additive_analogue": additive_analogue,
    "multiplicative_analogue": multiplicative_analogue,
    "q_dilation": q_dilation,
    "commutative": commutative,
}


def instantiate(name: str, *args, **kwargs) -> Presentation:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise SkewPBWError(f"unknown catalog algebra {name!r}") from None
    return builder(*args, **kwargs)


def names():
    return tuple(sorted(_BUILDERS))


# -- isomorphism witnesses --------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A registered isomorphism claim: source and target presentations
    plus the generator images that homcheck certifies."""

    src: Presentation
    dst: Presentation
    images: GeneratorImages


def weyl_tensor_witness(n: int, m: int) -> Witness:
    """weyl(n+m) -> weyl(n) (x) weyl(m) via p_i = x_i (x) 1 etc."""
    src = weyl(n + m)
    dst = tensor_same_ring(weyl(n), weyl(m))
    # dst variable blocks: x1..xn, y1..yn | x1'..xm', y1'..ym'
    var_images = []
    for i in range(n + m):  # images of src x1..x(n+m)
        var_images.append(dst.var(i if i < n else 2 * n + (i - n)))
    for i in range(n + m):  # images of src y1..y(n+m)
        var_images.append(dst.var(n + i if i < n else 2 * n + m + (i - n)))
    return Witness(src, dst, GeneratorImages(tuple(var_images)))


def additive_scalars_witness(q) -> Witness:
    """additive_analogue(q, poly) -> Q[x] (x) sigma(Q)<y> with the
    dilation action installed on the new scalar."""
    q = _nonzero(q, "q")
    src = additive_analogue([q], over="poly")
    base = Presentation(QQ, ("y",), name="sigma(Q)<y>")
    ring = PolyRing(("x",))
    action = [
        (
            (q * ring.gen(0),),
            ((1 / q) * ring.gen(0),),
            (ring.one(),),
        )
    ]
    dst = change_of_scalars(base, ring, var_action=action)
    images = GeneratorImages((dst.var(0),), (dst.ring.gen(0),))
    return Witness(src, dst, images)


def additive_field_poly_witness(qs) -> Witness:
    """additive_analogue(q, field) -> additive_analogue(q, poly):
    x_i lands in the coefficient ring, y_i stays a variable."""
    if isinstance(qs, (int, Fraction, str)):
        qs = [qs]
    src = additive_analogue(qs, over="field")
    dst = additive_analogue(qs, over="poly")
    n = len(qs)
    var_images = [dst.const(dst.ring.gen(i)) for i in range(n)]
    var_images += [dst.var(i) for i in range(n)]
    return Witness(src, dst, GeneratorImages(tuple(var_images)))


def multiplicative_scalars_witness(lam) -> Witness:
    """multiplicative_analogue(lam) -> Q[x1] (x) sigma(Q)<x2..xn> with
    sigma_{x_j}(x1) = lambda_{j1} x1 installed on the new scalar."""
    src = multiplicative_analogue(lam)
    n = src.n
    lam = {pair: rat(v) for pair, v in dict(lam).items()}
    inner_c = {}
    for (j, i), v in lam.items():
        if i >= 2:
            inner_c[(i - 2, j - 2)] = QQ.const(v)
    base = Presentation(
        QQ,
        tuple(f"x{j}" for j in range(2, n + 1)),
        c=inner_c,
        name=f"sigma(Q)<x2..x{n}>",
    )
    ring = PolyRing(("x1",))
    action = []
    for j in range(2, n + 1):
        lj1 = lam.get((j, 1), Fraction(1))
        action.append(
            (
                (lj1 * ring.gen(0),),
                ((1 / lj1) * ring.gen(0),),
                (ring.zero(),),
            )
        )
    dst = change_of_scalars(base, ring, var_action=action)
    var_images = [dst.const(dst.ring.gen(0))]
    var_images += [dst.var(j) for j in range(n - 1)]
    return Witness(src, dst, GeneratorImages(tuple(var_images)))


_WITNESSES = {
    ("weyl_tensor", "weyl"): weyl_tensor_witness,
    ("additive_analogue_scalars", "additive_analogue"): additive_scalars_witness,
    ("additive_analogue_field", "additive_analogue_poly"): additive_field_poly_witness,
    ("multiplicative_analogue_scalars", "multiplicative_analogue"): multiplicative_scalars_witness,
}


def witness(name: str, target: str, *args, **kwargs) -> Witness:
    try:
        builder = _WITNESSES[(name, target)]
    except KeyError:
        raise SkewPBWError(f"unknown witness pair {(name, target)!r}") from None
    return builder(*args, **kwargs)


def witness_pairs():
    return tuple(sorted(_WITNESSES))
