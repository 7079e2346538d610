"""Exact coefficient arithmetic: Q and Q[t1..tm], ring endomorphisms,
and twisted (sigma-) derivations.

Polynomials are sparse: a dict from exponent tuples to nonzero Fractions.
Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernel as K
from .errors import RingMismatchError, SkewPBWError, UnsupportedOperationError

Rational = Fraction


def rat(x) -> Fraction:
    """Coerce ints, strings like '3/2', and Fractions to an exact Rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


class PolyRing:
    """Descriptor of Q[t1..tm]; m = 0 is the rational field itself.

    Generator degrees default to 1 and only matter for grading checks.
    """

    __slots__ = ("names", "degrees")

    def __init__(self, names=(), degrees=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise SkewPBWError(f"duplicate generator names: {names}")
        self.names = names
        self.degrees = tuple(degrees) if degrees is not None else (1,) * len(names)
        if len(self.degrees) != len(names):
            raise SkewPBWError("degree list does not match generator list")

    @property
    def ngens(self) -> int:
        return len(self.names)

    @property
    def is_field(self) -> bool:
        return not self.names

    def zero(self) -> CommPoly:
        return CommPoly(self, {})

    def one(self) -> CommPoly:
        return self.const(1)

    def const(self, c) -> CommPoly:
        c = rat(c)
        if not c:
            return CommPoly(self, {})
        return CommPoly(self, {(0,) * self.ngens: c})

    def gen(self, i: int) -> CommPoly:
        if not 0 <= i < self.ngens:
            raise IndexError(f"generator index {i} out of range")
        e = [0] * self.ngens
        e[i] = 1
        return CommPoly(self, {tuple(e): Fraction(1)})

    def gens(self):
        return tuple(self.gen(i) for i in range(self.ngens))

    def from_terms(self, terms) -> CommPoly:
        out = {}
        for e, c in dict(terms).items():
            c = rat(c)
            if c:
                out[tuple(e)] = c
        return CommPoly(self, out)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        if self.is_field:
            return "QQ"
        return f"QQ[{', '.join(self.names)}]"


QQ = PolyRing(())


def _coerce(ring: PolyRing, x):
    if isinstance(x, CommPoly):
        if x.ring != ring:
            raise RingMismatchError(f"operand over {x.ring!r}, expected {ring!r}")
        return x
    return ring.const(x)


class CommPoly:
    """Sparse multivariate polynomial over the rationals."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms  # exponent tuple -> nonzero Fraction; not mutated

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise SkewPBWError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def is_one(self) -> bool:
        return self.is_constant() and self.constant_value() == 1

    def is_unit(self) -> bool:
        """Units of Q[t..] are the nonzero rationals."""
        return self.is_constant() and not self.is_zero()

    def inverse(self) -> CommPoly:
        if not self.is_unit():
            raise SkewPBWError(f"{self} is not a unit")
        return self.ring.const(1 / self.constant_value())

    def degree(self) -> int:
        """Total degree, weighted by generator degrees; 0 for the zero poly."""
        if not self.terms:
            return 0
        w = self.ring.degrees
        return max(sum(a * d for a, d in zip(e, w)) for e in self.terms)

    def homogeneous_parts(self) -> dict:
        w = self.ring.degrees
        parts = {}
        for e, c in self.terms.items():
            d = sum(a * dd for a, dd in zip(e, w))
            parts.setdefault(d, {})[e] = c
        return {d: CommPoly(self.ring, t) for d, t in sorted(parts.items())}

    def is_homogeneous_of(self, d: int) -> bool:
        """The zero polynomial is homogeneous of every degree."""
        if not self.terms:
            return True
        parts = self.homogeneous_parts()
        return list(parts) == [d]

    def substitute(self, images, target: PolyRing) -> CommPoly:
        """Evaluate at generator images (a unital ring homomorphism)."""
        if len(images) != self.ring.ngens:
            raise SkewPBWError("wrong number of generator images")
        out = {}
        for e, c in self.terms.items():
            m = {(0,) * target.ngens: Fraction(1)}
            for i, a in enumerate(e):
                for _ in range(a):
                    m = K.poly_mul(m, images[i].terms)
            K.poly_iadd_scaled(out, m, c)
        return CommPoly(target, out)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(self.ring, other)
        return CommPoly(self.ring, K.poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return CommPoly(self.ring, K.poly_neg(self.terms))

    def __sub__(self, other):
        return self + (-_coerce(self.ring, other))

    def __rsub__(self, other):
        return _coerce(self.ring, other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CommPoly(self.ring, K.poly_scale(self.terms, rat(other)))
        other = _coerce(self.ring, other)
        return CommPoly(self.ring, K.poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a natural number")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return (
            isinstance(other, CommPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- printing ------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending deglex order of the exponent tuple."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if a == 1 else f"{n}^{a}"
                for n, a in zip(self.ring.names, e)
                if a
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<CommPoly {self} over {self.ring!r}>"


class RingEndo:
    """Unital ring endomorphism of Q[t..], given by generator images.

    Optionally carries claimed inverse images; `verify_endo_inverse`
    checks them, nothing here computes inverses.
    """

    __slots__ = ("ring", "images", "inverse_images")

    def __init__(self, ring: PolyRing, images, inverse_images=None):
        images = tuple(images)
        if len(images) != ring.ngens:
            raise SkewPBWError("one image per ring generator required")
        for p in images:
            if p.ring != ring:
                raise RingMismatchError("endomorphism image over wrong ring")
        if inverse_images is not None:
            inverse_images = tuple(inverse_images)
            if len(inverse_images) != ring.ngens:
                raise SkewPBWError("one inverse image per ring generator required")
        self.ring = ring
        self.images = images
        self.inverse_images = inverse_images

    @classmethod
    def identity(cls, ring: PolyRing) -> RingEndo:
        gens = ring.gens()
        return cls(ring, gens, gens)

    def __call__(self, p: CommPoly) -> CommPoly:
        p = _coerce(self.ring, p)
        if self.is_identity():
            return p
        return p.substitute(self.images, self.ring)

    def is_identity(self) -> bool:
        return all(img == self.ring.gen(i) for i, img in enumerate(self.images))

    def has_inverse(self) -> bool:
        return self.inverse_images is not None

    def inverse(self) -> RingEndo:
        if self.inverse_images is None:
            raise SkewPBWError("no inverse supplied")
        return RingEndo(self.ring, self.inverse_images, self.images)

    def __eq__(self, other):
        return (
            isinstance(other, RingEndo)
            and self.ring == other.ring
            and self.images == other.images
            and self.inverse_images == other.inverse_images
        )

    def __repr__(self):
        body = ", ".join(
            f"{n} -> {img}" for n, img in zip(self.ring.names, self.images)
        )
        return f"<RingEndo {body or 'id'}>"


class SigmaDerivation:
    """Twisted derivation: additive, with d(pq) = twist(p) d(q) + d(p) q.

    Determined by its values on the ring generators; products are peeled
    in ascending generator order, so well-definedness on R holds exactly
    when the pairwise compatibility law checked by `diamond_check` does.
    """

    __slots__ = ("ring", "twist", "values", "_memo")

    def __init__(self, ring: PolyRing, twist: RingEndo, values):
        values = tuple(values)
        if len(values) != ring.ngens:
            raise SkewPBWError("one value per ring generator required")
        for p in values:
            if p.ring != ring:
                raise RingMismatchError("derivation value over wrong ring")
        if twist.ring != ring:
            raise RingMismatchError("twist over wrong ring")
        self.ring = ring
        self.twist = twist
        self.values = values
        self._memo = {}

    @classmethod
    def zero(cls, ring: PolyRing, twist: RingEndo | None = None) -> SigmaDerivation:
        twist = twist or RingEndo.identity(ring)
        return cls(ring, twist, (ring.zero(),) * ring.ngens)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def _on_monomial(self, e: tuple) -> CommPoly:
        got = self._memo.get(e)
        if got is not None:
            return got
        i = next((k for k, a in enumerate(e) if a), None)
        if i is None:
            out = self.ring.zero()
        else:
            rest = list(e)
            rest[i] -= 1
            rest = tuple(rest)
            rest_poly = CommPoly(self.ring, {rest: Fraction(1)})
            # d(t_i * m) = twist(t_i) d(m) + d(t_i) m
            out = self.twist.images[i] * self._on_monomial(rest) + self.values[i] * rest_poly
        self._memo[e] = out
        return out

    def __call__(self, p: CommPoly) -> CommPoly:
        p = _coerce(self.ring, p)
        out = self.ring.zero()
        for e, c in p.terms.items():
            out = out + c * self._on_monomial(e)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SigmaDerivation)
            and self.ring == other.ring
            and self.twist == other.twist
            and self.values == other.values
        )

    def __repr__(self):
        body = ", ".join(
            f"{n} -> {v}" for n, v in zip(self.ring.names, self.values)
        )
        return f"<SigmaDerivation {body or '0'}>"


# -- flat operation surface -------------------------------------------


def poly_arith(op: str, p: CommPoly, q: CommPoly) -> CommPoly:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    raise UnsupportedOperationError(f"unknown op {op!r}")


def apply_endo(e: RingEndo, p: CommPoly) -> CommPoly:
    return e(p)


def apply_derivation(d: SigmaDerivation, p: CommPoly) -> CommPoly:
    return d(p)


def verify_endo_inverse(e: RingEndo) -> bool:
    """True iff the supplied inverse images invert e on every generator."""
    if e.inverse_images is None:
        raise SkewPBWError("no inverse supplied")
    inv = e.inverse()
    for i in range(e.ring.ngens):
        g = e.ring.gen(i)
        if e(inv.images[i]) != g or inv(e.images[i]) != g:
            return False
    return True
