"""Line-oriented presentation files and the small expression language
used inside them.

Sections (order free, `#` starts a comment, whitespace-insensitive
within a line):

    algebra <name>
    coeff field rational
    coeff poly rational <gen> <gen> ...
    vars <v1> <v2> ...
    param <p> = <rational>
    sigma <var>: <gen> -> <poly-expr>
    sigma_inv <var>: <gen> -> <poly-expr>
    delta <var>: <gen> -> <poly-expr>
    rel <vj> <vi> = <coeff-expr> * <vi> <vj> [+ <tail-expr>]

Omitted sigma lines default to the identity (with identity inverse),
omitted delta lines to zero, omitted rel lines to c = 1 with zero tail.
Expressions use + - * / ^, integer and a/b literals, declared generators
and params.  `print_presentation` emits a canonical form whose parse
reproduces the presentation exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .commring import CommPoly, PolyRing, QQ, RingEndo, SigmaDerivation
from .errors import ParseError
from .pbwcore import Presentation, RelationTail, SkewElement

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<arrow>->)|(?P<op>[+\-*/^():=]))"
)

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def _tokenize(s: str, line_no=None):
    toks = []
    pos = 0
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if m is None:
            if s[pos:].strip():
                raise ParseError(f"bad character {s[pos:].strip()[0]!r}", line_no, pos + 1)
            break
        pos = m.end()
        if m.group("num"):
            toks.append(("num", int(m.group("num")), m.start() + 1))
        elif m.group("name"):
            toks.append(("name", m.group("name"), m.start() + 1))
        elif m.group("arrow"):
            toks.append(("op", "->", m.start() + 1))
        else:
            toks.append(("op", m.group("op"), m.start() + 1))
    return toks


class _ExprParser:
    """Recursive-descent parser over tokens; evaluation happens directly
    against an environment of name -> value, so the same code serves
    polynomial and skew contexts."""

    def __init__(self, toks, env, one, line_no=None):
        self.toks = toks
        self.env = env
        self.one = one  # multiplicative unit used to coerce rationals
        self.i = 0
        self.line_no = line_no

    def _err(self, msg):
        col = self.toks[self.i][2] if self.i < len(self.toks) else None
        raise ParseError(msg, self.line_no, col)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, _ = self.take()
        if kind != "op" or val != op:
            self._err(f"expected {op!r}")

    def parse(self):
        val = self.expr()
        if self.peek()[0] != "end":
            self._err("trailing input in expression")
        return val

    def expr(self):
        val = self.term()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in "+-":
                self.i += 1
                rhs = self.term()
                val = val + rhs if op == "+" else val - rhs
            else:
                return val

    def term(self):
        val = self.factor()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in "*/":
                self.i += 1
                rhs = self.factor()
                if op == "*":
                    val = val * rhs
                else:
                    val = val * _invert_constant(rhs, self)
            else:
                return val

    def factor(self):
        kind, op, _ = self.peek()
        if kind == "op" and op in "+-":
            self.i += 1
            val = self.factor()
            return val if op == "+" else -val
        return self.power()

    def power(self):
        base = self.atom()
        kind, op, _ = self.peek()
        if kind == "op" and op == "^":
            self.i += 1
            k, v, _ = self.take()
            if k != "num":
                self._err("exponent must be a natural number")
            return base ** v
        return base

    def atom(self):
        kind, val, _col = self.take()
        if kind == "num":
            return self.one * Fraction(val)
        if kind == "name":
            try:
                return self.env[val]
            except KeyError:
                self._err(f"unknown identifier {val!r}")
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        self._err("expected a value")


def _invert_constant(v, parser):
    if isinstance(v, CommPoly):
        if not v.is_unit():
            parser._err("division only by nonzero constants")
        return v.inverse()
    if isinstance(v, SkewElement):
        c = v.terms.get((0,) * v.pres.n)
        if len(v.terms) != 1 or c is None or not c.is_unit():
            parser._err("division only by nonzero constants")
        return v.pres.const(c.inverse())
    parser._err("division only by nonzero constants")


def eval_poly(toks, ring: PolyRing, params=None, line_no=None) -> CommPoly:
    env = {name: ring.gen(i) for i, name in enumerate(ring.names)}
    for k, v in (params or {}).items():
        env[k] = ring.const(v)
    return _ExprParser(toks, env, ring.one(), line_no).parse()


def eval_skew(toks, pres: Presentation, params=None, line_no=None) -> SkewElement:
    env = {name: pres.var(i) for i, name in enumerate(pres.var_names)}
    for i, name in enumerate(pres.ring.names):
        env[name] = pres.const(pres.ring.gen(i))
    for k, v in (params or {}).items():
        env[k] = pres.const(v)
    return _ExprParser(toks, env, pres.one(), line_no).parse()


def parse_expression(pres: Presentation, text: str, params=None) -> SkewElement:
    """Evaluate a free-standing expression (a Word and more) over a
    presentation; used by the CLI."""
    return eval_skew(_tokenize(text), pres, params)


# -- file parsing -----------------------------------------------------------


def _names_from(toks, line_no, what):
    names = []
    for kind, val, col in toks:
        if kind != "name":
            raise ParseError(f"expected {what} name", line_no, col)
        names.append(val)
    return names


def parse_presentation(text: str) -> Presentation:
    name = "A"
    ring = None
    var_names = None
    params = {}
    sig_lines = {}  # var -> {gen: poly toks (pre-parsed polys)}
    siginv_lines = {}
    delta_lines = {}
    rel_lines = []  # (line_no, vj, vi, rhs tokens)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "algebra":
            name = rest.strip() or "A"
            continue
        toks = _tokenize(rest, line_no)
        if keyword == "coeff":
            ring = _parse_coeff(toks, line_no)
        elif keyword == "vars":
            var_names = tuple(_names_from(toks, line_no, "variable"))
            if not var_names:
                raise ParseError("vars line declares no variables", line_no)
        elif keyword == "param":
            if len(toks) < 3 or toks[0][0] != "name" or toks[1][1] != "=":
                raise ParseError("expected: param <p> = <rational>", line_no)
            val = eval_poly(toks[2:], QQ, params, line_no)
            params[toks[0][1]] = val.constant_value()
        elif keyword in ("sigma", "sigma_inv", "delta"):
            target = {"sigma": sig_lines, "sigma_inv": siginv_lines, "delta": delta_lines}[keyword]
            _parse_map_line(toks, target, line_no)
        elif keyword == "rel":
            rel_lines.append((line_no, toks))
        else:
            raise ParseError(f"unknown section {keyword!r}", line_no)

    if ring is None:
        raise ParseError("missing coeff line")
    if var_names is None:
        raise ParseError("missing vars line")

    n = len(var_names)
    vpos = {v: i for i, v in enumerate(var_names)}
    for table in (sig_lines, siginv_lines, delta_lines):
        for v in table:
            if v not in vpos:
                raise ParseError(f"unknown variable {v!r} in twist line")
            for g in table[v]:
                if g not in ring.names:
                    raise ParseError(f"unknown coefficient generator {g!r}")

    def build_poly(toks, line_no):
        return eval_poly(toks, ring, params, line_no)

    sigmas, deltas = [], []
    for v in var_names:
        has_sig = v in sig_lines
        has_inv = v in siginv_lines
        if not has_sig and not has_inv:
            s = RingEndo.identity(ring)
        else:
            images = list(ring.gens())
            for g, (toks, ln) in sig_lines.get(v, {}).items():
                images[ring.index(g)] = build_poly(toks, ln)
            inv = None
            if has_inv:
                inv = list(ring.gens())
                for g, (toks, ln) in siginv_lines.get(v, {}).items():
                    inv[ring.index(g)] = build_poly(toks, ln)
            s = RingEndo(ring, images, inv)
        values = [ring.zero()] * ring.ngens
        for g, (toks, ln) in delta_lines.get(v, {}).items():
            values[ring.index(g)] = build_poly(toks, ln)
        sigmas.append(s)
        deltas.append(SigmaDerivation(ring, s, values))

    pres = Presentation(ring, var_names, sigmas, deltas, name=name)
    c, tails = {}, {}
    for line_no, toks in rel_lines:
        i, j, cij, tail = _parse_rel(toks, pres, params, line_no)
        if (i, j) in c or (i, j) in tails:
            raise ParseError(
                f"duplicate rel for {var_names[j]} {var_names[i]}", line_no
            )
        if cij.is_zero():
            raise ParseError("relation constant must be nonzero", line_no)
        c[(i, j)] = cij
        if not tail.is_zero():
            tails[(i, j)] = tail
    return Presentation(ring, var_names, sigmas, deltas, c, tails, name=name)


def _parse_coeff(toks, line_no):
    words = [t[1] for t in toks]
    if words[:2] == ["field", "rational"] and len(words) == 2:
        return QQ
    if words[:2] == ["poly", "rational"]:
        names = _names_from(toks[2:], line_no, "generator")
        if not names:
            raise ParseError("coeff poly rational needs generator names", line_no)
        return PolyRing(tuple(names))
    raise ParseError(
        "expected 'coeff field rational' or 'coeff poly rational <gens>'", line_no
    )


def _parse_map_line(toks, table, line_no):
    # <var> : <gen> -> <poly-expr>
    if (
        len(toks) < 5
        or toks[0][0] != "name"
        or toks[1][1] != ":"
        or toks[2][0] != "name"
        or toks[3][1] != "->"
    ):
        raise ParseError("expected: <var>: <gen> -> <poly-expr>", line_no)
    var, gen = toks[0][1], toks[2][1]
    table.setdefault(var, {})
    if gen in table[var]:
        raise ParseError(f"duplicate line for {var}: {gen}", line_no)
    table[var][gen] = (toks[4:], line_no)


def _parse_rel(toks, pres, params, line_no):
    names = pres.var_names
    if len(toks) < 3 or toks[0][0] != "name" or toks[1][0] != "name" or toks[2][1] != "=":
        raise ParseError("expected: rel <vj> <vi> = ...", line_no)
    vj, vi = toks[0][1], toks[1][1]
    for v in (vj, vi):
        if v not in names:
            raise ParseError(f"unknown variable {v!r}", line_no)
    j, i = names.index(vj), names.index(vi)
    if not i < j:
        raise ParseError(
            f"rel orientation: {vj!r} must come later than {vi!r} in vars", line_no
        )
    rhs = toks[3:]
    split = None
    for k in range(len(rhs) - 1):
        if rhs[k][1] == vi and rhs[k][0] == "name" and rhs[k + 1][:2] == ("name", vj):
            split = k
            break
    if split is None or split == 0 or rhs[split - 1][1] != "*":
        raise ParseError(f"rel must contain '* {vi} {vj}'", line_no)
    cij = eval_poly(rhs[: split - 1], pres.ring, params, line_no)
    rest = rhs[split + 2 :]
    tail = RelationTail.zero(pres.ring, pres.n)
    if rest:
        if rest[0][1] == "+":
            rest = rest[1:]
        elif rest[0][1] != "-":
            raise ParseError("expected '+ <tail-expr>' after the monomial", line_no)
        elem = eval_skew(rest, pres, params, line_no)
        r0 = pres.ring.zero()
        coeffs = [pres.ring.zero()] * pres.n
        for alpha, cc in elem.terms.items():
            if sum(alpha) == 0:
                r0 = cc
            elif sum(alpha) == 1:
                coeffs[alpha.index(1)] = cc
            else:
                raise ParseError("tail must lie in R + R x1 + ... + R xn", line_no)
        tail = RelationTail(r0, coeffs)
    return i, j, cij, tail


def parse_presentation_file(path) -> Presentation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read())


# -- canonical printing ------------------------------------------------------


def _poly_expr(p: CommPoly) -> str:
    return str(p)


def _coeff_factor(p: CommPoly) -> str:
    """Coefficient as a factor in front of a monomial: bare for a single
    positive term, parenthesized otherwise."""
    if len(p.terms) == 1 and next(iter(p.terms.values())) > 0:
        return str(p)
    return f"({p})"


def print_presentation(P: Presentation) -> str:
    out = [f"algebra {P.name}"]
    ring = P.ring
    if ring.is_field:
        out.append("coeff field rational")
    else:
        out.append("coeff poly rational " + " ".join(ring.names))
    out.append("vars " + " ".join(P.var_names))

    for i, v in enumerate(P.var_names):
        s = P.sigmas[i]
        nontrivial = [
            (g, img) for g, img in zip(ring.names, s.images) if img != ring.gen(ring.index(g))
        ]
        explicit_identity = not nontrivial and s.inverse_images is None and ring.ngens > 0
        for g, img in nontrivial:
            out.append(f"sigma {v}: {g} -> {_poly_expr(img)}")
        if explicit_identity:
            # identity without a supplied inverse is not the default
            for g in ring.names:
                out.append(f"sigma {v}: {g} -> {g}")
        if s.inverse_images is not None and (nontrivial or explicit_identity):
            for g, img in zip(ring.names, s.inverse_images):
                if img != ring.gen(ring.index(g)):
                    out.append(f"sigma_inv {v}: {g} -> {_poly_expr(img)}")
    for i, v in enumerate(P.var_names):
        for g, val in zip(ring.names, P.deltas[i].values):
            if not val.is_zero():
                out.append(f"delta {v}: {g} -> {_poly_expr(val)}")

    for i in range(P.n):
        for j in range(i + 1, P.n):
            cij = P.c_of(i, j)
            tail = P.tail_of(i, j)
            if cij.is_one() and tail.is_zero():
                continue
            vi, vj = P.var_names[i], P.var_names[j]
            line = f"rel {vj} {vi} = {_coeff_factor(cij)} * {vi} {vj}"
            chunks = []
            if not tail.r0.is_zero():
                chunks.append(_coeff_factor(tail.r0))
            for l, rl in enumerate(tail.coeffs):
                if rl.is_zero():
                    continue
                if rl.is_one():
                    chunks.append(P.var_names[l])
                else:
                    chunks.append(f"{_coeff_factor(rl)}*{P.var_names[l]}")
            if chunks:
                line += " + " + " + ".join(chunks)
            out.append(line)
    return "\n".join(out) + "\n"


def write_presentation_file(P: Presentation, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(print_presentation(P))
