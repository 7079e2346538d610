"""Structural classification of a presentation: constant /
quasi-commutative / bijective flags, grading and connectedness,
desk-scale confluence checking, and the Calabi-Yau precondition
certificate with its Ore-tower factorization.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .commring import CommPoly, verify_endo_inverse
from .errors import SkewPBWError, UnsupportedOperationError
from .pbwcore import (
    Presentation,
    SkewElement,
    _times_coeff,
    _times_var,
    _unit_vec,
    _var_times,
    normal_form,
    normal_form_rightfold,
)


@dataclass
class DiamondWitness:
    """A failing overlap: which check, on which word, and the difference."""

    kind: str  # "overlap" | "coeff_overlap" | "derivation_law" | "word"
    word: str
    difference: SkewElement

    def __str__(self):
        return f"{self.kind} {self.word}: difference {self.difference}"


@dataclass
class CyVerdict:
    satisfied: bool
    failed: tuple = ()
    note: str = "precondition certificate - Ext conditions not computed"

    def __str__(self):
        if self.satisfied:
            return "satisfied"
        return "failed (" + ", ".join(f"{k}=false" for k in self.failed) + ")"


@dataclass
class ClassReport:
    constant: bool = False
    quasi_commutative: bool = False
    bijective: bool = False
    graded: bool = False
    connected: bool = False
    graded_reasons: tuple = ()
    diamond_ok_to_degree: int = 0
    diamond_witness: DiamondWitness | None = None
    cy_precondition: CyVerdict | None = None


def _descending_words(n: int, length: int):
    """All strictly descending variable-index words of the given length."""
    if length > n:
        return
    for combo in itertools.combinations(range(n), length):
        yield tuple(reversed(combo))


def diamond_check(P: Presentation, d: int = 4):
    """Resolve every overlap ambiguity of the rewriting rules.

    For each triple k > j > i the word x_k x_j x_i is reduced both ways
    (top pair first vs bottom pair first); for each pair j > i and ring
    generator t, (x_j x_i) t is compared with x_j (x_i t); the twisted
    Leibniz law is checked for well-definedness on generator pairs.  For
    d >= 4, full left-fold and right-fold reductions of all strictly
    descending words up to length d are compared as extra margin.

    Returns (ok, witness); the verdict is cached on P.flags.
    """
    if d < 3:
        raise SkewPBWError("diamond_check needs degree bound d >= 3")
    n = P.n
    ring = P.ring
    names = P.var_names

    def fail(kind, word, diff_terms):
        w = DiamondWitness(kind, word, SkewElement(P, dict(diff_terms)))
        P.flags["diamond"] = (False, w)
        return False, w

    def diff(a: dict, b: dict):
        out = dict(a)
        for k, v in b.items():
            got = out.get(k)
            got = -v if got is None else got - v
            if got.is_zero():
                out.pop(k, None)
            else:
                out[k] = got
        return out

    # sigma-homomorphism and twisted-Leibniz compatibility on generator pairs
    for i in range(n):
        sig, dlt = P.sigmas[i], P.deltas[i]
        for a in range(ring.ngens):
            ta = ring.gen(a)
            for b in range(a, ring.ngens):
                tb = ring.gen(b)
                if sig(ta * tb) != sig(ta) * sig(tb):
                    return fail(
                        "endo_law", f"sigma({names[i]}) on {ring.names[a]}*{ring.names[b]}", {}
                    )
                lhs = sig(ta) * dlt(tb) + dlt(ta) * tb
                rhs = sig(tb) * dlt(ta) + dlt(tb) * ta
                if lhs != rhs:
                    return fail(
                        "derivation_law",
                        f"delta({names[i]}) on {ring.names[a]}*{ring.names[b]}",
                        {(0,) * n: lhs - rhs},
                    )

    # pair-with-coefficient overlaps: (x_j x_i) t vs x_j (x_i t)
    for i in range(n):
        for j in range(i + 1, n):
            rel = P.relation_element(i, j).terms
            for a in range(ring.ngens):
                t = ring.gen(a)
                left = _times_coeff(P, rel, t)
                inner = {}
                si = P.sigmas[i](t)
                if not si.is_zero():
                    inner[_unit_vec(n, i)] = si
                di = P.deltas[i](t)
                if not di.is_zero():
                    inner[(0,) * n] = di
                right = _var_times(P, j, inner)
                delta = diff(left, right)
                if delta:
                    return fail(
                        "coeff_overlap", f"{names[j]} {names[i]} {ring.names[a]}", delta
                    )

    # triple overlaps: (x_k x_j) x_i vs x_k (x_j x_i)
    for word in _descending_words(n, 3):
        k, j, i = word
        left = _times_var(P, P.relation_element(j, k).terms, i)
        right = _var_times(P, k, P.relation_element(i, j).terms)
        delta = diff(left, right)
        if delta:
            return fail("overlap", " ".join(names[w] for w in word), delta)

    # margin: compare the two fold orders on longer descending words
    for length in range(4, d + 1):
        for word in _descending_words(n, length):
            toks = [w + 1 for w in word]
            a = normal_form(toks, P)
            b = normal_form_rightfold(toks, P)
            if a != b:
                return fail(
                    "word", " ".join(names[w] for w in word), diff(a.terms, b.terms)
                )

    P.flags["diamond"] = (True, None)
    P.flags["diamond_degree"] = d
    return True, None


def classify_flags(P: Presentation) -> ClassReport:
    """Constant / quasi-commutative / bijective verdicts."""
    rep = ClassReport()
    rep.constant = all(s.is_identity() for s in P.sigmas) and all(
        d.is_zero() for d in P.deltas
    )
    rep.quasi_commutative = all(d.is_zero() for d in P.deltas) and not P.tails
    rep.bijective = _bijective(P)
    P.flags["constant"] = rep.constant
    P.flags["quasi_commutative"] = rep.quasi_commutative
    P.flags["bijective"] = rep.bijective
    return rep


def _bijective(P: Presentation) -> bool:
    for s in P.sigmas:
        if s.inverse_images is None:
            return False
        if not verify_endo_inverse(s):
            return False
    for i in range(P.n):
        for j in range(i + 1, P.n):
            if not P.c_of(i, j).is_unit():
                return False
    return True


def graded_check(P: Presentation):
    """Degree bookkeeping for the graded-extension conditions.

    Variables sit in degree 1, so: sigma images of ring generators are
    homogeneous of degree 1, delta raises ring degree by exactly 1,
    tails have r0 in R_2 and linear parts in R_1, constants in R_0.

    Returns (ok, reasons).
    """
    ring = P.ring
    if any(d < 1 for d in ring.degrees):
        raise UnsupportedOperationError(
            "coefficient ring must be graded with generators in degree >= 1"
        )
    if any(d != 1 for d in ring.degrees):
        raise UnsupportedOperationError(
            "graded_check supports generator degree 1 only"
        )
    reasons = []
    for i, name in enumerate(P.var_names):
        for a, g in enumerate(ring.names):
            img = P.sigmas[i].images[a]
            if not img.is_homogeneous_of(1) or img.is_zero():
                reasons.append(f"sigma({name})({g}) not homogeneous of degree 1")
            val = P.deltas[i].values[a]
            if not val.is_homogeneous_of(2):
                reasons.append(f"delta({name})({g}) not homogeneous of degree 2")
    for i in range(P.n):
        for j in range(i + 1, P.n):
            pair = f"({P.var_names[i]},{P.var_names[j]})"
            if not P.c_of(i, j).is_constant():
                reasons.append(f"c{pair} not in R_0")
            t = P.tail_of(i, j)
            if not t.r0.is_homogeneous_of(2):
                reasons.append(f"tail{pair} constant part not in R_2")
            for l, rl in enumerate(t.coeffs):
                if not rl.is_homogeneous_of(1):
                    reasons.append(
                        f"tail{pair} coefficient of {P.var_names[l]} not in R_1"
                    )
    ok = not reasons
    P.flags["graded"] = ok
    return ok, tuple(reasons)


def connected_check(P: Presentation) -> bool:
    """R_0 = Q; fails only for user-declared degree-0 ring generators."""
    ok = all(d >= 1 for d in P.ring.degrees)
    P.flags["connected"] = ok
    return ok


def cy_precondition(P: Presentation, base_is_skew_cy: bool) -> CyVerdict:
    """Certificate for the structural hypotheses that force skew
    Calabi-Yau-ness of A: graded, quasi-commutative, connected, over a
    base the caller asserts to be skew Calabi-Yau.  Only the hypotheses
    are checked, never the homological conclusion itself.
    """
    flags = classify_flags(P)
    try:
        graded, _ = graded_check(P)
    except UnsupportedOperationError:
        graded = False
    connected = connected_check(P)
    failed = []
    if not graded:
        failed.append("graded")
    if not flags.quasi_commutative:
        failed.append("quasi_commutative")
    if not connected:
        failed.append("connected")
    if not base_is_skew_cy:
        failed.append("base_is_skew_cy")
    verdict = CyVerdict(satisfied=not failed, failed=tuple(failed))
    P.flags["cy_precondition"] = verdict
    return verdict


@dataclass
class OreStage:
    """Stage j of the iterated endomorphism-type tower: the new variable,
    the scaling constants theta_j(z_i) = c_{i,j} z_i for earlier
    variables, and theta_j on the coefficient generators (= sigma_j)."""

    var_name: str
    var_scalings: dict  # earlier var name -> CommPoly c_{i,j}
    ring_images: tuple  # one CommPoly per coefficient generator


@dataclass
class OreTower:
    base: str
    stages: tuple


def ore_tower(P: Presentation) -> OreTower:
    """Factor a quasi-commutative bijective presentation as an iterated
    Ore extension of endomorphism type."""
    flags = classify_flags(P)
    if not flags.quasi_commutative or not flags.bijective:
        raise UnsupportedOperationError(
            "ore_tower needs a quasi-commutative bijective presentation"
        )
    stages = []
    for j in range(P.n):
        scalings = {P.var_names[i]: P.c_of(i, j) for i in range(j)}
        stages.append(
            OreStage(
                var_name=P.var_names[j],
                var_scalings=scalings,
                ring_images=P.sigmas[j].images,
            )
        )
    return OreTower(base=repr(P.ring), stages=tuple(stages))


def growth(P: Presentation, d: int) -> list:
    """Standard-monomial counts by total degree: C(p+n-1, n-1)."""
    n = P.n
    return [math.comb(p + n - 1, n - 1) for p in range(d + 1)]
