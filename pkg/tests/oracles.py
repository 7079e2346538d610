"""Independent oracles used to freeze expected values.

`naive_normal_form` is a brute-force word rewriter: it keeps a bag of
token lists and repeatedly applies a *single* defining relation at one
position (leftmost or rightmost reducible), splicing in the resulting
words, until every word is a coefficient followed by ascending
variables.  It shares only the coefficient arithmetic with the engine;
the rewriting strategy and data layout are deliberately different.
"""

from __future__ import annotations

import random
from fractions import Fraction

from skewpbw.commring import CommPoly
from skewpbw.pbwcore import Presentation


def _normalize_tokens(pres, tokens):
    out = []
    for t in tokens:
        if isinstance(t, str):
            out.append(("var", pres.var_index(t)))
        elif isinstance(t, int):
            out.append(("var", t - 1))
        elif isinstance(t, Fraction):
            out.append(("coeff", pres.ring.const(t)))
        elif isinstance(t, CommPoly):
            out.append(("coeff", t))
        else:
            raise TypeError(f"bad token {t!r}")
    return out


def _find_redex(word, pick):
    positions = range(len(word) - 1)
    if pick == "last":
        positions = reversed(positions)
    for k in positions:
        (ka, va), (kb, vb) = word[k], word[k + 1]
        if ka == "coeff" and kb == "coeff":
            return k, "cc"
        if ka == "var" and kb == "coeff":
            return k, "vc"
        if ka == "var" and kb == "var" and va > vb:
            return k, "vv"
    return None


def _apply_redex(pres, word, redex):
    k, kind = redex
    pre, post = word[:k], word[k + 2 :]
    succ = []
    if kind == "cc":
        prod = word[k][1] * word[k + 1][1]
        if not prod.is_zero():
            succ.append(pre + [("coeff", prod)] + post)
    elif kind == "vc":
        i, r = word[k][1], word[k + 1][1]
        s = pres.sigmas[i](r)
        if not s.is_zero():
            succ.append(pre + [("coeff", s), ("var", i)] + post)
        d = pres.deltas[i](r)
        if not d.is_zero():
            succ.append(pre + [("coeff", d)] + post)
    else:  # vv: x_j x_i with j > i
        j, i = word[k][1], word[k + 1][1]
        succ.append(pre + [("coeff", pres.c_of(i, j)), ("var", i), ("var", j)] + post)
        tail = pres.tail_of(i, j)
        if not tail.r0.is_zero():
            succ.append(pre + [("coeff", tail.r0)] + post)
        for l, rl in enumerate(tail.coeffs):
            if not rl.is_zero():
                succ.append(pre + [("coeff", rl), ("var", l)] + post)
    return succ


def naive_normal_form(pres: Presentation, tokens, pick: str = "first") -> dict:
    """Exponent -> coefficient table of the word's normal form."""
    agenda = [_normalize_tokens(pres, tokens)]
    acc = {}
    steps = 0
    while agenda:
        steps += 1
        if steps > 5_000_000:
            raise RuntimeError("oracle rewriting did not terminate")
        word = agenda.pop()
        redex = _find_redex(word, pick)
        if redex is not None:
            agenda.extend(_apply_redex(pres, word, redex))
            continue
        coeff = pres.ring.one()
        alpha = [0] * pres.n
        for kind, val in word:
            if kind == "coeff":
                coeff = coeff * val
            else:
                alpha[val] += 1
        key = tuple(alpha)
        got = acc.get(key)
        got = coeff if got is None else got + coeff
        if got.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = got
    return acc


def oracle_equals(pres, tokens, element, pick="first") -> bool:
    return naive_normal_form(pres, tokens, pick) == element.terms


def sigma_alpha(pres: Presentation, alpha, r: CommPoly) -> CommPoly:
    """sigma_1^{a1}(...sigma_n^{an}(r)...) by repeated application."""
    out = r
    for i in range(pres.n - 1, -1, -1):
        for _ in range(alpha[i]):
            out = pres.sigmas[i](out)
    return out


def additive_closed_form(pres: Presentation, q: Fraction, m: int):
    """y^m x in the additive analogue over Q[x]:
    q^m * x * y^m + (1 + q + ... + q^{m-1}) * y^{m-1}."""
    x = pres.ring.gen(0)
    geom = sum((q**k for k in range(m)), Fraction(0))
    return pres.element({(m,): q**m * x, (m - 1,): pres.ring.const(geom)})


# -- random data -------------------------------------------------------------


def random_coeff(pres: Presentation, rng: random.Random, max_gen_deg: int = 1) -> CommPoly:
    ring = pres.ring
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = rng.choice([1, 1, 2])
    c = Fraction(num, den)
    if ring.ngens == 0 or rng.random() < 0.4:
        return ring.const(c)
    e = [0] * ring.ngens
    e[rng.randrange(ring.ngens)] = rng.randint(0, max_gen_deg)
    return ring.from_terms({tuple(e): c})


def random_element(pres: Presentation, rng: random.Random, max_deg: int = 3, max_terms: int = 3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_deg)
        alpha = [0] * pres.n
        for _ in range(deg):
            alpha[rng.randrange(pres.n)] += 1
        terms[tuple(alpha)] = random_coeff(pres, rng)
    return pres.element(terms)


def random_word(pres: Presentation, rng: random.Random, max_len: int = 5):
    word = []
    for _ in range(rng.randint(1, max_len)):
        if pres.ring.ngens and rng.random() < 0.35:
            word.append(random_coeff(pres, rng))
        elif rng.random() < 0.15:
            word.append(random_coeff(pres, rng))
        else:
            word.append(rng.randrange(pres.n) + 1)
    return word
