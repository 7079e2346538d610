"""Presentations of skew PBW extensions and normal-form arithmetic.

An extension A = sigma(R)<x1..xn> is defined by, per variable, a ring
endomorphism sigma_i and sigma_i-derivation delta_i (so x_i r =
sigma_i(r) x_i + delta_i(r)), and per pair i < j a nonzero constant
c_{i,j} plus an affine tail (so x_j x_i = c_{i,j} x_i x_j + r0 +
sum_l r_l x_l).  Elements are kept in left normal form: a finite map
from exponent vectors to nonzero coefficients of R.

Rewriting terminates because each step drops the lexicographic measure
(total skew degree, inversion count, misplaced-coefficient count);
uniqueness of the result is *contingent* on the presentation passing
`classify.diamond_check` — constructing or multiplying over unchecked
user data silently assumes it.
"""

from __future__ import annotations

from fractions import Fraction

from .commring import CommPoly, PolyRing, RingEndo, SigmaDerivation
from .errors import (
    PresentationError,
    PresentationMismatchError,
    RingMismatchError,
    UnsupportedOperationError,
)


class MonomialOrder:
    """Total order on exponent vectors: deglex, lex, or an elimination
    order splitting the variables into two deglex-compared blocks."""

    __slots__ = ("kind", "split")

    def __init__(self, kind: str = "deglex", split: int | None = None):
        if kind not in ("deglex", "lex", "elimination"):
            raise ValueError(f"unknown order kind {kind!r}")
        if kind == "elimination" and split is None:
            raise ValueError("elimination order needs a split point")
        self.kind = kind
        self.split = split

    def key(self, alpha: tuple):
        if self.kind == "deglex":
            return (sum(alpha), alpha)
        if self.kind == "lex":
            return alpha
        s = self.split
        return (sum(alpha[:s]), alpha[:s], sum(alpha[s:]), alpha[s:])

    def __repr__(self):
        if self.kind == "elimination":
            return f"MonomialOrder('elimination', split={self.split})"
        return f"MonomialOrder({self.kind!r})"


DEGLEX = MonomialOrder("deglex")


class RelationTail:
    """The affine part of a commutation relation: r0 + sum_l r_l x_l."""

    __slots__ = ("r0", "coeffs")

    def __init__(self, r0: CommPoly, coeffs):
        self.r0 = r0
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, ring: PolyRing, n: int) -> RelationTail:
        z = ring.zero()
        return cls(z, (z,) * n)

    def is_zero(self) -> bool:
        return self.r0.is_zero() and all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, RelationTail)
            and self.r0 == other.r0
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"RelationTail({self.r0}, {list(map(str, self.coeffs))})"


def _unit_vec(n: int, i: int) -> tuple:
    e = [0] * n
    e[i] = 1
    return tuple(e)


class Presentation:
    """Full defining data of sigma(R)<x1..xn>.

    Immutable after construction apart from the write-once verdict
    cache `flags` used by the classify module.
    """

    def __init__(
        self,
        ring: PolyRing,
        var_names,
        sigmas=None,
        deltas=None,
        c=None,
        tails=None,
        name: str = "A",
        construction=None,
    ):
        self.ring = ring
        self.var_names = tuple(var_names)
        n = len(self.var_names)
        if len(set(self.var_names)) != n:
            raise PresentationError(f"duplicate variable names: {self.var_names}")
        if set(self.var_names) & set(ring.names):
            raise PresentationError("variable names collide with coefficient generators")

        if sigmas is None:
            sigmas = tuple(RingEndo.identity(ring) for _ in range(n))
        self.sigmas = tuple(sigmas)
        if deltas is None:
            deltas = tuple(
                SigmaDerivation.zero(ring, s) for s in self.sigmas
            )
        self.deltas = tuple(deltas)
        if len(self.sigmas) != n or len(self.deltas) != n:
            raise PresentationError("need one sigma and one delta per variable")
        for s, d in zip(self.sigmas, self.deltas):
            if s.ring != ring or d.ring != ring:
                raise RingMismatchError("twist data over wrong ring")
            if d.twist is not s and d.twist != s:
                raise PresentationError("delta twisted by a different sigma")

        self.c = {}
        for (i, j), cij in dict(c or {}).items():
            if not 0 <= i < j < n:
                raise PresentationError(f"bad constant index pair {(i, j)}")
            if cij.ring != ring:
                raise RingMismatchError("constant over wrong ring")
            if cij.is_zero():
                raise PresentationError(f"c[{i},{j}] must be nonzero")
            if not cij.is_one():
                self.c[(i, j)] = cij
        self.tails = {}
        for (i, j), t in dict(tails or {}).items():
            if not 0 <= i < j < n:
                raise PresentationError(f"bad tail index pair {(i, j)}")
            if len(t.coeffs) != n:
                raise PresentationError("tail width does not match variable count")
            if t.r0.ring != ring or any(p.ring != ring for p in t.coeffs):
                raise RingMismatchError("tail over wrong ring")
            if not t.is_zero():
                self.tails[(i, j)] = t

        self.name = name
        self.construction = construction
        self.flags = {}

    # -- structure -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.var_names)

    def var_index(self, name: str) -> int:
        return self.var_names.index(name)

    def c_of(self, i: int, j: int) -> CommPoly:
        if i == j:
            return self.ring.one()
        if not i < j:
            raise PresentationError("c_of expects i < j")
        return self.c.get((i, j), self.ring.one())

    def tail_of(self, i: int, j: int) -> RelationTail:
        return self.tails.get((i, j)) or RelationTail.zero(self.ring, self.n)

    def commutation_constant(self, i: int, j: int) -> CommPoly:
        """c for any index pair; below the diagonal this is the inverse."""
        if i == j:
            return self.ring.one()
        if i < j:
            return self.c_of(i, j)
        return self.c_of(j, i).inverse()

    def relation_element(self, i: int, j: int) -> SkewElement:
        """Normal form of x_j x_i for i < j."""
        if not i < j:
            raise PresentationError("relation_element expects i < j")
        n = self.n
        terms = {}
        lead = list(_unit_vec(n, i))
        lead[j] += 1
        terms[tuple(lead)] = self.c_of(i, j)
        t = self.tail_of(i, j)
        if not t.r0.is_zero():
            terms[(0,) * n] = t.r0
        for l, rl in enumerate(t.coeffs):
            if not rl.is_zero():
                key = _unit_vec(n, l)
                terms[key] = terms[key] + rl if key in terms else rl
        return SkewElement(self, {k: v for k, v in terms.items() if not v.is_zero()})

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.ring == other.ring
            and self.var_names == other.var_names
            and self.sigmas == other.sigmas
            and self.deltas == other.deltas
            and self.c == other.c
            and self.tails == other.tails
        )

    def __repr__(self):
        return f"<Presentation {self.name}: {self.ring!r}<{', '.join(self.var_names)}>>"

    # -- element builders ------------------------------------------------

    def zero(self) -> SkewElement:
        return SkewElement(self, {})

    def one(self) -> SkewElement:
        return self.const(1)

    def const(self, c) -> SkewElement:
        if not isinstance(c, CommPoly):
            c = self.ring.const(c)
        elif c.ring != self.ring:
            raise RingMismatchError("constant over wrong ring")
        if c.is_zero():
            return self.zero()
        return SkewElement(self, {(0,) * self.n: c})

    def var(self, i) -> SkewElement:
        if isinstance(i, str):
            i = self.var_index(i)
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range")
        return SkewElement(self, {_unit_vec(self.n, i): self.ring.one()})

    def monomial(self, alpha, coeff=1) -> SkewElement:
        alpha = tuple(alpha)
        if len(alpha) != self.n:
            raise PresentationError("exponent length does not match variable count")
        c = coeff if isinstance(coeff, CommPoly) else self.ring.const(coeff)
        if c.is_zero():
            return self.zero()
        return SkewElement(self, {alpha: c})

    def element(self, terms) -> SkewElement:
        out = {}
        for alpha, c in dict(terms).items():
            if not isinstance(c, CommPoly):
                c = self.ring.const(c)
            elif c.ring != self.ring:
                raise RingMismatchError("coefficient over wrong ring")
            if not c.is_zero():
                out[tuple(alpha)] = c
        return SkewElement(self, out)

    # -- engine methods --------------------------------------------------

    def normal_form(self, word) -> SkewElement:
        return normal_form(word, self)

    def mul(self, f: SkewElement, g: SkewElement) -> SkewElement:
        return mul(f, g)


class SkewElement:
    """Element of a skew PBW extension in left normal form."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: dict):
        self.pres = pres
        self.terms = terms  # exponent tuple -> nonzero CommPoly; not mutated

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Max total skew degree; 0 for the zero element."""
        if not self.terms:
            return 0
        return max(sum(a) for a in self.terms)

    def sorted_terms(self, order: MonomialOrder = DEGLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def _check_mate(self, other: SkewElement):
        if self.pres is not other.pres and self.pres != other.pres:
            raise PresentationMismatchError("elements over different presentations")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CommPoly)):
            other = self.pres.const(other)
        self._check_mate(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            v = out.get(a)
            if v is None:
                out[a] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[a]
                else:
                    out[a] = v
        return SkewElement(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return SkewElement(self.pres, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CommPoly)):
            other = self.pres.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> SkewElement:
        """Left multiplication by a coefficient of R."""
        if not isinstance(c, CommPoly):
            c = self.pres.ring.const(c)
        elif c.ring != self.pres.ring:
            raise RingMismatchError("scalar over wrong ring")
        out = {}
        for a, v in self.terms.items():
            w = c * v
            if not w.is_zero():
                out[a] = w
        return SkewElement(self.pres, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, CommPoly):
            # coefficient on the right: commute it through
            return SkewElement(self.pres, _times_coeff(self.pres, self.terms, other))
        self._check_mate(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CommPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a natural number")
        out = self.pres.one()
        for _ in range(k):
            out = mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CommPoly)):
            other = self.pres.const(other)
        return (
            isinstance(other, SkewElement)
            and (self.pres is other.pres or self.pres == other.pres)
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.pres.var_names
        chunks = []
        for alpha, c in self.sorted_terms():
            mono = "*".join(
                n if a == 1 else f"{n}^{a}" for n, a in zip(names, alpha) if a
            )
            cs = _coeff_str(c)
            if not mono:
                chunks.append(cs)
            elif c.is_one():
                chunks.append(mono)
            else:
                chunks.append(f"{cs}*{mono}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"<{self} in {self.pres.name}>"


def _coeff_str(c: CommPoly) -> str:
    """Coefficient as printed left of a monomial: parenthesized unless it
    is a single positive-rational term."""
    s = str(c)
    if len(c.terms) == 1 and next(iter(c.terms.values())) > 0:
        return s
    return f"({s})"


# -- rewriting engine ---------------------------------------------------
#
# Internal functions work on raw dicts {exp tuple: CommPoly} and implement
# right multiplication by a coefficient / a variable, which is enough to
# fold any word left-to-right.  Left multiplication by a variable is also
# provided; it reduces in a genuinely different order and backs both the
# confluence checks and the right-fold normal form.


def _acc(out: dict, key: tuple, val: CommPoly):
    got = out.get(key)
    if got is None:
        if not val.is_zero():
            out[key] = val
    else:
        got = got + val
        if got.is_zero():
            del out[key]
        else:
            out[key] = got


def _commute_raw(pres: Presentation, alpha: tuple, r: CommPoly) -> dict:
    """x^alpha * r in normal form; the unique leading coefficient is
    sigma^alpha(r) and all other exponents have smaller total degree."""
    if r.is_zero():
        return {}
    if not any(alpha):
        return {alpha: r}
    j = max(k for k, a in enumerate(alpha) if a)
    a2 = list(alpha)
    a2[j] -= 1
    a2 = tuple(a2)
    out = {}
    lead = _commute_raw(pres, a2, pres.sigmas[j](r))
    for beta, c in lead.items():
        b2 = list(beta)
        b2[j] += 1
        _acc(out, tuple(b2), c)
    d = pres.deltas[j](r)
    if not d.is_zero():
        for beta, c in _commute_raw(pres, a2, d).items():
            _acc(out, beta, c)
    return out


def _mono_times_var(pres: Presentation, alpha: tuple, i: int) -> dict:
    """x^alpha * x_i in normal form."""
    nz = [k for k, a in enumerate(alpha) if a]
    if not nz or nz[-1] <= i:
        a2 = list(alpha)
        a2[i] += 1
        return {tuple(a2): pres.ring.one()}
    j = nz[-1]  # rightmost factor of x^alpha, j > i
    a2 = list(alpha)
    a2[j] -= 1
    a2 = tuple(a2)
    # x^alpha x_i = x^{a2} (x_j x_i) with x_j x_i = c x_i x_j + r0 + sum r_l x_l
    out = {}
    g = _commute_raw(pres, a2, pres.c_of(i, j))
    g = _times_var(pres, _times_var(pres, g, i), j)
    for beta, c in g.items():
        _acc(out, beta, c)
    tail = pres.tails.get((i, j))
    if tail is not None:
        if not tail.r0.is_zero():
            for beta, c in _commute_raw(pres, a2, tail.r0).items():
                _acc(out, beta, c)
        for l, rl in enumerate(tail.coeffs):
            if not rl.is_zero():
                for beta, c in _times_var(pres, _commute_raw(pres, a2, rl), l).items():
                    _acc(out, beta, c)
    return out


def _times_var(pres: Presentation, terms: dict, i: int) -> dict:
    out = {}
    for alpha, c in terms.items():
        for beta, d in _mono_times_var(pres, alpha, i).items():
            _acc(out, beta, c * d)
    return out


def _times_coeff(pres: Presentation, terms: dict, r: CommPoly) -> dict:
    if r.is_zero():
        return {}
    out = {}
    for alpha, c in terms.items():
        for beta, d in _commute_raw(pres, alpha, r).items():
            _acc(out, beta, c * d)
    return out


def _times_monomial(pres: Presentation, terms: dict, beta: tuple) -> dict:
    for i, b in enumerate(beta):
        for _ in range(b):
            terms = _times_var(pres, terms, i)
    return terms


def _var_times(pres: Presentation, k: int, terms: dict) -> dict:
    """x_k * f, peeling from the left: x_k (c x^alpha) =
    sigma_k(c) (x_k x^alpha) + delta_k(c) x^alpha."""
    out = {}
    for alpha, c in terms.items():
        s = pres.sigmas[k](c)
        if not s.is_zero():
            g = _times_monomial(pres, {_unit_vec(pres.n, k): pres.ring.one()}, alpha)
            for beta, d in g.items():
                _acc(out, beta, s * d)
        d = pres.deltas[k](c)
        if not d.is_zero():
            _acc(out, alpha, d)
    return out


def _coerce_token(pres: Presentation, tok):
    """A word token is a variable index (int, 1-based) or a coefficient."""
    if isinstance(tok, bool):
        raise PresentationError("bool is not a word token")
    if isinstance(tok, int):
        if not 1 <= tok <= pres.n:
            raise IndexError(f"generator index {tok} out of range 1..{pres.n}")
        return ("var", tok - 1)
    if isinstance(tok, str):
        return ("var", pres.var_index(tok))
    if isinstance(tok, Fraction):
        return ("coeff", pres.ring.const(tok))
    if isinstance(tok, CommPoly):
        if tok.ring != pres.ring:
            raise RingMismatchError("coefficient token over wrong ring")
        return ("coeff", tok)
    raise PresentationError(f"bad word token {tok!r}")


def normal_form(word, pres: Presentation) -> SkewElement:
    """Unique standard-form expansion of an unreduced product word.

    Tokens: variable indices 1..n (or variable names) and coefficients
    (CommPoly over the presentation's ring, or Fractions).
    """
    terms = {(0,) * pres.n: pres.ring.one()}
    for tok in word:
        kind, val = _coerce_token(pres, tok)
        if kind == "coeff":
            terms = _times_coeff(pres, terms, val)
        else:
            terms = _times_var(pres, terms, val)
        if not terms:
            break
    return SkewElement(pres, terms)


def normal_form_rightfold(word, pres: Presentation) -> SkewElement:
    """Same value as `normal_form`, reduced right-to-left instead; used
    to cross-check confluence."""
    terms = {(0,) * pres.n: pres.ring.one()}
    for tok in reversed(list(word)):
        kind, val = _coerce_token(pres, tok)
        if kind == "coeff":
            terms = {a: w for a, w in ((a, val * c) for a, c in terms.items()) if not w.is_zero()}
        else:
            terms = _var_times(pres, val, terms)
        if not terms:
            break
    return SkewElement(pres, terms)


def mul(f: SkewElement, g: SkewElement) -> SkewElement:
    """Product in normal form, bilinear over the term decomposition."""
    f._check_mate(g)
    pres = f.pres
    out = {}
    for beta, b in g.sorted_terms():
        h = _times_coeff(pres, f.terms, b)
        h = _times_monomial(pres, h, beta)
        for alpha, c in h.items():
            _acc(out, alpha, c)
    return SkewElement(pres, out)


def linear_ops(op: str, f: SkewElement, g_or_r=None) -> SkewElement:
    if op == "add":
        return f + g_or_r
    if op == "neg":
        return -f
    if op == "coeff_scale":
        return f.scale(g_or_r)
    raise UnsupportedOperationError(f"unknown op {op!r}")


def commute_past(alpha, r: CommPoly, pres: Presentation) -> SkewElement:
    """Normal form of x^alpha * r for r != 0."""
    alpha = tuple(alpha)
    if len(alpha) != pres.n:
        raise PresentationError("exponent length does not match variable count")
    if not isinstance(r, CommPoly):
        r = pres.ring.const(r)
    if r.is_zero():
        raise PresentationError("commute_past requires r != 0")
    if r.ring != pres.ring:
        raise RingMismatchError("coefficient over wrong ring")
    return SkewElement(pres, _commute_raw(pres, alpha, r))


def sigma_power(pres: Presentation, alpha, r: CommPoly) -> CommPoly:
    """sigma^alpha(r) = sigma_1^{a1}(... sigma_n^{an}(r)), rightmost first."""
    out = r
    for i in range(pres.n - 1, -1, -1):
        for _ in range(alpha[i]):
            out = pres.sigmas[i](out)
    return out


def mono_mul(alpha, beta, pres: Presentation) -> SkewElement:
    """Normal form of x^alpha * x^beta; the coefficient of x^{alpha+beta}
    is invertible and every other term has smaller total degree."""
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != pres.n or len(beta) != pres.n:
        raise PresentationError("exponent length does not match variable count")
    terms = _times_monomial(pres, {alpha: pres.ring.one()}, beta)
    return SkewElement(pres, terms)


def leading_data(f: SkewElement, order: MonomialOrder = DEGLEX):
    """(lm, lc, deg) of f; the zero element returns the zero sentinels."""
    if f.is_zero():
        return ((0,) * f.pres.n, f.pres.ring.zero(), 0)
    lm = max(f.terms, key=order.key)
    return (lm, f.terms[lm], f.degree())


def homogeneous_components(f: SkewElement) -> dict:
    """Split f by total degree deg(coefficient) + |alpha|.

    Only supported once the presentation passed `classify.graded_check`.
    """
    pres = f.pres
    ok = pres.flags.get("graded")
    if ok is None:
        from . import classify

        ok, _ = classify.graded_check(pres)
    if not ok:
        raise UnsupportedOperationError("presentation is not graded")
    comps = {}
    for alpha, c in f.terms.items():
        for d, part in c.homogeneous_parts().items():
            comps.setdefault(d + sum(alpha), {})
            _acc(comps[d + sum(alpha)], alpha, part)
    return {
        p: SkewElement(pres, t) for p, t in sorted(comps.items()) if t
    }
