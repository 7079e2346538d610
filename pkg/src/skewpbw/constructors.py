"""Build new presentations from old: change of scalars, tensor products
over the same coefficient ring and over Q, opposite, and enveloping.

Coefficient rings here are commutative, so the opposite coefficient
ring is identified with the ring itself; every ConstructionRecord
carries that note.
"""

from __future__ import annotations

from dataclasses import dataclass

from .commring import CommPoly, PolyRing, RingEndo, SigmaDerivation, verify_endo_inverse
from .errors import (
    NotBijectiveError,
    PresentationError,
    RingMismatchError,
    UnsupportedOperationError,
)
from .pbwcore import Presentation, RelationTail, _unit_vec

_COMM_NOTE = "R^op identified with R (commutative coefficients)"


@dataclass(frozen=True)
class GeneratorProvenance:
    """Where each generator of a constructed presentation came from:
    ('left'|'right'|'self', index into the source's generator list)."""

    var_sources: tuple
    coeff_sources: tuple


@dataclass(frozen=True)
class ConstructionRecord:
    kind: str
    sources: tuple
    provenance: GeneratorProvenance
    note: str = _COMM_NOTE


def _dedup(names, taken, suffix="_r"):
    """Rename colliding identifiers by appending a suffix until free."""
    out = []
    seen = set(taken)
    for nm in names:
        new = nm
        while new in seen:
            new = new + suffix
        seen.add(new)
        out.append(new)
    return tuple(out)


def _embed(p: CommPoly, target: PolyRing, positions) -> CommPoly:
    """Reinterpret p over a larger ring; positions[i] is the target slot
    of source generator i."""
    out = {}
    for e, c in p.terms.items():
        ne = [0] * target.ngens
        for i, a in enumerate(e):
            ne[positions[i]] = a
        out[tuple(ne)] = c
    return CommPoly(target, out)


def _embed_endo(s: RingEndo, target: PolyRing, positions) -> tuple:
    """(images, inverse_images) of s extended by the identity on the
    generators of `target` that are not in its source block."""
    images = list(target.gens())
    for i, img in enumerate(s.images):
        images[positions[i]] = _embed(img, target, positions)
    inv = None
    if s.inverse_images is not None:
        inv = list(target.gens())
        for i, img in enumerate(s.inverse_images):
            inv[positions[i]] = _embed(img, target, positions)
        inv = tuple(inv)
    return tuple(images), inv


def _embed_tail(t: RelationTail, target: PolyRing, positions, var_map, n_new) -> RelationTail:
    coeffs = [target.zero()] * n_new
    for l, rl in enumerate(t.coeffs):
        if not rl.is_zero():
            coeffs[var_map[l]] = _embed(rl, target, positions)
    return RelationTail(_embed(t.r0, target, positions), coeffs)


def change_of_scalars(A: Presentation, B: PolyRing, var_action=None) -> Presentation:
    """Extend the coefficient field of A to the polynomial ring B.

    By default the variables commute with the new scalars (identity
    twist, zero derivation) and A's relations carry over verbatim.  An
    optional `var_action` -- one (sigma_images, sigma_inverse_images,
    delta_values) triple per variable, over B -- installs a nontrivial
    action instead, which is how the classical factorizations of the
    additive/multiplicative analogues over k[x] arise.
    """
    if not A.ring.is_field:
        raise UnsupportedOperationError("change_of_scalars needs a field base")
    n = A.n
    if set(A.var_names) & set(B.names):
        raise PresentationError("variable names collide with new scalars")
    if var_action is None:
        sigmas = tuple(RingEndo.identity(B) for _ in range(n))
        deltas = tuple(SigmaDerivation.zero(B, s) for s in sigmas)
    else:
        if len(var_action) != n:
            raise PresentationError("one action per variable required")
        sigmas, deltas = [], []
        for images, inv_images, values in var_action:
            s = RingEndo(B, images, inv_images)
            sigmas.append(s)
            deltas.append(SigmaDerivation(B, s, values))
        sigmas, deltas = tuple(sigmas), tuple(deltas)

    lift = lambda p: B.const(p.constant_value())
    c = {key: lift(val) for key, val in A.c.items()}
    tails = {
        key: RelationTail(lift(t.r0), [lift(rl) for rl in t.coeffs])
        for key, t in A.tails.items()
    }
    prov = GeneratorProvenance(
        var_sources=tuple(("left", i) for i in range(n)),
        coeff_sources=tuple(("right", a) for a in range(B.ngens)),
    )
    return Presentation(
        B,
        A.var_names,
        sigmas,
        deltas,
        c,
        tails,
        name=f"{B!r}(x){A.name}",
        construction=ConstructionRecord("change_of_scalars", (A,), prov),
    )


def tensor_same_ring(A: Presentation, B: Presentation) -> Presentation:
    """A (x)_R B: variables concatenated, blocks keep their relations,
    cross pairs commute strictly (c = 1, zero tail)."""
    if A.ring != B.ring:
        raise RingMismatchError(
            "coefficient rings differ; use tensor_k for distinct base rings"
        )
    ring = A.ring
    n, m = A.n, B.n
    right_names = _dedup(B.var_names, A.var_names + ring.names)
    names = A.var_names + right_names

    sigmas = A.sigmas + B.sigmas
    deltas = A.deltas + B.deltas
    c = {}
    tails = {}
    for (i, j), v in A.c.items():
        c[(i, j)] = v
    for (i, j), t in A.tails.items():
        tails[(i, j)] = RelationTail(t.r0, tuple(t.coeffs) + (ring.zero(),) * m)
    for (i, j), v in B.c.items():
        c[(n + i, n + j)] = v
    for (i, j), t in B.tails.items():
        tails[(n + i, n + j)] = RelationTail(t.r0, (ring.zero(),) * n + tuple(t.coeffs))

    prov = GeneratorProvenance(
        var_sources=tuple(("left", i) for i in range(n))
        + tuple(("right", i) for i in range(m)),
        coeff_sources=tuple(("left", a) for a in range(ring.ngens)),
    )
    return Presentation(
        ring,
        names,
        sigmas,
        deltas,
        c,
        tails,
        name=f"{A.name}(x){B.name}",
        construction=ConstructionRecord("tensor_same_ring", (A, B), prov),
    )


def tensor_k(A: Presentation, B: Presentation) -> Presentation:
    """A (x)_Q B over the merged coefficient ring R (x) R'."""
    nA, nB = A.n, B.n
    mA, mB = A.ring.ngens, B.ring.ngens
    right_gen_names = _dedup(B.ring.names, A.ring.names)
    ring = PolyRing(A.ring.names + right_gen_names, A.ring.degrees + B.ring.degrees)
    left_pos = tuple(range(mA))
    right_pos = tuple(range(mA, mA + mB))

    left_names = _dedup(A.var_names, ring.names)
    right_names = _dedup(B.var_names, left_names + ring.names)
    names = left_names + right_names

    sigmas, deltas = [], []
    for src, pos in ((A, left_pos), (B, right_pos)):
        for i in range(src.n):
            images, inv = _embed_endo(src.sigmas[i], ring, pos)
            s = RingEndo(ring, images, inv)
            values = [ring.zero()] * ring.ngens
            for a, v in enumerate(src.deltas[i].values):
                values[pos[a]] = _embed(v, ring, pos)
            sigmas.append(s)
            deltas.append(SigmaDerivation(ring, s, values))

    c, tails = {}, {}
    var_map_left = tuple(range(nA))
    var_map_right = tuple(range(nA, nA + nB))
    for (i, j), v in A.c.items():
        c[(i, j)] = _embed(v, ring, left_pos)
    for (i, j), t in A.tails.items():
        tails[(i, j)] = _embed_tail(t, ring, left_pos, var_map_left, nA + nB)
    for (i, j), v in B.c.items():
        c[(nA + i, nA + j)] = _embed(v, ring, right_pos)
    for (i, j), t in B.tails.items():
        tails[(nA + i, nA + j)] = _embed_tail(t, ring, right_pos, var_map_right, nA + nB)

    prov = GeneratorProvenance(
        var_sources=tuple(("left", i) for i in range(nA))
        + tuple(("right", i) for i in range(nB)),
        coeff_sources=tuple(("left", a) for a in range(mA))
        + tuple(("right", a) for a in range(mB)),
    )
    return Presentation(
        ring,
        names,
        sigmas,
        deltas,
        c,
        tails,
        name=f"{A.name}(x)k{B.name}",
        construction=ConstructionRecord("tensor_k", (A, B), prov),
    )


# -- opposite ------------------------------------------------------------


def _require_bijective(A: Presentation):
    for i, s in enumerate(A.sigmas):
        if s.inverse_images is None or not verify_endo_inverse(s):
            raise NotBijectiveError(
                f"not bijective: sigma({A.var_names[i]}) lacks a verified inverse"
            )
    for i in range(A.n):
        for j in range(i + 1, A.n):
            if not A.c_of(i, j).is_unit():
                raise NotBijectiveError(
                    f"not bijective: c({A.var_names[i]},{A.var_names[j]}) is not a unit"
                )


def _left_term_to_right(A: Presentation, beta: tuple, coeff: CommPoly) -> dict:
    """Rewrite coeff * x^beta as sum x^gamma * (right coefficients),
    using r x_b = x_b sigma_b^{-1}(r) - delta_b(sigma_b^{-1}(r))."""
    if coeff.is_zero():
        return {}
    nz = [k for k, a in enumerate(beta) if a]
    if not nz:
        return {beta: coeff}
    b = nz[0]
    b2 = list(beta)
    b2[b] -= 1
    b2 = tuple(b2)
    s = A.sigmas[b].inverse()(coeff)
    out = {}
    for gamma, d in _left_term_to_right(A, b2, s).items():
        g2 = list(gamma)
        g2[b] += 1
        g2 = tuple(g2)
        got = out.get(g2)
        out[g2] = d if got is None else got + d
    neg = -A.deltas[b](s)
    for gamma, d in _left_term_to_right(A, b2, neg).items():
        got = out.get(gamma)
        v = d if got is None else got + d
        if v.is_zero():
            out.pop(gamma, None)
        else:
            out[gamma] = v
    return out


def _right_form(A: Presentation, terms: dict) -> dict:
    out = {}
    for beta, c in terms.items():
        for gamma, d in _left_term_to_right(A, beta, c).items():
            got = out.get(gamma)
            v = d if got is None else got + d
            if v.is_zero():
                out.pop(gamma, None)
            else:
                out[gamma] = v
    return out


def opposite(A: Presentation):
    """The opposite extension, with variables re-indexed in reverse so
    its standard monomials are the reversed words of A's.

    Returns (presentation, anti_map); the anti-map sends A's variable i
    to the opposite's variable n-1-i, and coefficients to themselves.
    """
    _require_bijective(A)
    n = A.n
    ring = A.ring
    rev = lambda i: n - 1 - i
    names = tuple(reversed(A.var_names))

    sigmas, deltas = [], []
    for p in range(n):
        i = rev(p)
        s_old = A.sigmas[i]
        s = RingEndo(ring, s_old.inverse_images, s_old.images)
        inv = s.inverse()
        values = tuple(-A.deltas[i](inv_img) for inv_img in s_old.inverse_images)
        sigmas.append(s)
        deltas.append(SigmaDerivation(ring, s, values))

    c, tails = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            rel = A.relation_element(i, j).terms  # x_j x_i in left form
            rf = _right_form(A, rel)
            lead = list(_unit_vec(n, i))
            lead[j] += 1
            c_new = rf.pop(tuple(lead), None)
            if c_new is None or c_new.is_zero():
                raise NotBijectiveError("not bijective: relation lost its leading term")
            p, q = rev(j), rev(i)
            r0 = rf.pop((0,) * n, ring.zero())
            coeffs = [ring.zero()] * n
            for gamma in list(rf):
                if sum(gamma) != 1:
                    raise PresentationError("opposite tail left the affine span")
                l = gamma.index(1)
                coeffs[rev(l)] = rf.pop(gamma)
            if not c_new.is_one():
                c[(p, q)] = c_new
            t = RelationTail(r0, coeffs)
            if not t.is_zero():
                tails[(p, q)] = t

    prov = GeneratorProvenance(
        var_sources=tuple(("left", rev(p)) for p in range(n)),
        coeff_sources=tuple(("left", a) for a in range(ring.ngens)),
    )
    pres = Presentation(
        ring,
        names,
        sigmas,
        deltas,
        c,
        tails,
        name=f"{A.name}^op",
        construction=ConstructionRecord("opposite", (A,), prov),
    )
    return pres, prov


def opposite_map(A: Presentation, Aop: Presentation, f):
    """Image of an element of A under the canonical anti-isomorphism
    (the identity on the underlying ring).

    A term c * x^alpha reads, in the opposite, as the reversed monomial
    with c on the *right*; the coefficient is then commuted back to the
    left with the opposite twists, so for nontrivial sigma this is more
    than transplanting exponents."""
    from .pbwcore import SkewElement, _acc, _times_coeff

    out = {}
    for alpha, c in f.terms.items():
        rev = tuple(reversed(alpha))
        for beta, d in _times_coeff(Aop, {rev: Aop.ring.one()}, c).items():
            _acc(out, beta, d)
    return SkewElement(Aop, out)


def enveloping(A: Presentation) -> Presentation:
    """A^e = A (x)_Q A^op; bijectivity is required and inherited."""
    Aop, _ = opposite(A)
    pres = tensor_k(A, Aop)
    pres.name = f"{A.name}^e"
    rec = pres.construction
    pres.construction = ConstructionRecord(
        "enveloping", (A,), rec.provenance, note=rec.note
    )
    return pres
