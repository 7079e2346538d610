"""Verify algebra homomorphisms between presentations from generator
images, and certify degree-bounded isomorphisms by exact rank
computations over flattened Q-bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .commring import CommPoly
from .errors import SkewPBWError
from .pbwcore import Presentation, SkewElement, mul


@dataclass(frozen=True)
class GeneratorImages:
    """One target element per source variable, one target coefficient
    polynomial per source coefficient generator."""

    var_images: tuple
    coeff_images: tuple = ()


class DenseMatrix:
    """Dense exact-rational matrix; rank via fraction-free elimination."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def rank(self) -> int:
        """Bareiss fraction-free elimination on integer-scaled rows."""
        scaled = []
        for row in self.rows:
            den = 1
            for x in row:
                if x:
                    den = den * x.denominator // gcd(den, x.denominator)
            scaled.append([int(x * den) for x in row])
        return _bareiss_rank(scaled)

    def rank_naive(self) -> int:
        """Plain rational Gaussian elimination; cross-check oracle."""
        m = [row[:] for row in self.rows]
        nrows, ncols = self.shape
        rank = 0
        for col in range(ncols):
            piv = next((r for r in range(rank, nrows) if m[r][col]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = 1 / m[rank][col]
            for r in range(rank + 1, nrows):
                f = m[r][col] * inv
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            rank += 1
            if rank == nrows:
                break
        return rank


def _bareiss_rank(m) -> int:
    nrows = len(m)
    if not nrows:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            mr = m[r]
            f = mr[col]
            if f:
                mp = m[rank]
                for c2 in range(col + 1, ncols):
                    mr[c2] = (p * mr[c2] - f * mp[c2]) // prev
                mr[col] = 0
            elif prev != 1 or p != 1:
                mp = m[rank]
                for c2 in range(col + 1, ncols):
                    if mr[c2]:
                        mr[c2] = (p * mr[c2]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


# -- applying generator images -------------------------------------------


def _check_arity(src: Presentation, dst: Presentation, phi: GeneratorImages):
    if len(phi.var_images) != src.n:
        raise SkewPBWError("image arity mismatch: one image per variable required")
    if len(phi.coeff_images) != src.ring.ngens:
        raise SkewPBWError(
            "image arity mismatch: one image per coefficient generator required"
        )
    for g in phi.var_images:
        if g.pres is not dst and g.pres != dst:
            raise SkewPBWError("variable image over wrong presentation")
    for p in phi.coeff_images:
        if p.ring != dst.ring:
            raise SkewPBWError("coefficient image over wrong ring")


def image_of_poly(src: Presentation, dst: Presentation, phi: GeneratorImages, p: CommPoly) -> CommPoly:
    return p.substitute(phi.coeff_images, dst.ring)


class _MonomialImages:
    """Images of source standard monomials, grown prefix by prefix."""

    def __init__(self, src, dst, phi):
        self.src, self.dst, self.phi = src, dst, phi
        self.memo = {(0,) * src.n: dst.one()}

    def __call__(self, alpha: tuple) -> SkewElement:
        got = self.memo.get(alpha)
        if got is not None:
            return got
        j = max(k for k, a in enumerate(alpha) if a)
        prev = list(alpha)
        prev[j] -= 1
        out = mul(self(tuple(prev)), self.phi.var_images[j])
        self.memo[alpha] = out
        return out


def image_of_element(src: Presentation, dst: Presentation, phi: GeneratorImages, f: SkewElement,
                     mono_images: _MonomialImages | None = None) -> SkewElement:
    mono_images = mono_images or _MonomialImages(src, dst, phi)
    out = dst.zero()
    for alpha, c in f.terms.items():
        out = out + mono_images(alpha).scale(image_of_poly(src, dst, phi, c))
    return out


# -- homomorphism check ----------------------------------------------------


@dataclass
class HomReport:
    ok: bool
    failing_relation: str | None = None
    failing_value: SkewElement | None = None


def check_hom(src: Presentation, dst: Presentation, phi: GeneratorImages, d: int | None = None) -> HomReport:
    """True iff every defining relation of src maps to zero in dst:
    x_i r - sigma_i(r) x_i - delta_i(r) for each coefficient generator r,
    and x_j x_i - c_{i,j} x_i x_j - tail for each pair j > i."""
    _check_arity(src, dst, phi)
    fx = phi.var_images
    fr = lambda p: image_of_poly(src, dst, phi, p)

    for i in range(src.n):
        for a in range(src.ring.ngens):
            g = src.ring.gen(a)
            val = (
                mul(fx[i], dst.const(fr(g)))
                - mul(dst.const(fr(src.sigmas[i](g))), fx[i])
                - dst.const(fr(src.deltas[i](g)))
            )
            if not val.is_zero():
                rel = f"{src.var_names[i]}*{src.ring.names[a]} relation"
                return HomReport(False, rel, val)

    for i in range(src.n):
        for j in range(i + 1, src.n):
            t = src.tail_of(i, j)
            val = mul(fx[j], fx[i]) - mul(dst.const(fr(src.c_of(i, j))), mul(fx[i], fx[j]))
            val = val - dst.const(fr(t.r0))
            for l, rl in enumerate(t.coeffs):
                if not rl.is_zero():
                    val = val - mul(dst.const(fr(rl)), fx[l])
            if not val.is_zero():
                rel = f"{src.var_names[j]}*{src.var_names[i]} relation"
                return HomReport(False, rel, val)

    return HomReport(True)


# -- degree-bounded isomorphism check --------------------------------------


def _exponents_of_weighted_degree(ngens: int, degrees: tuple, total: int):
    """Exponent tuples e with sum(e[i]*degrees[i]) == total."""
    if ngens == 0:
        if total == 0:
            yield ()
        return
    w = degrees[0]
    top = total // w if w else 0
    for a in range(top + 1):
        for rest in _exponents_of_weighted_degree(ngens - 1, degrees[1:], total - a * w):
            yield (a,) + rest


def flattened_basis(P: Presentation, p: int):
    """Q-basis pairs (ring monomial, skew exponent) of total degree p."""
    out = []
    for d_ring in range(p + 1):
        ring_monos = list(
            _exponents_of_weighted_degree(P.ring.ngens, P.ring.degrees, d_ring)
        )
        if not ring_monos:
            continue
        for alpha in _exponents_of_weighted_degree(P.n, (1,) * P.n, p - d_ring):
            for e in ring_monos:
                out.append((e, alpha))
    return out


def _flatten(f: SkewElement) -> dict:
    coords = {}
    for alpha, c in f.terms.items():
        for e, q in c.terms.items():
            coords[(e, alpha)] = q
    return coords


@dataclass
class IsoReport:
    ok: bool
    hom: HomReport
    degree: int = 0
    table: tuple = ()  # rows (p, src_count_p, dst_count_p, cumulative rank)

    def ranks(self):
        return tuple(row[3] for row in self.table)


def check_graded_iso(src: Presentation, dst: Presentation, phi: GeneratorImages, d: int = 6) -> IsoReport:
    """Certify phi bijective up to total degree d: it is a homomorphism,
    source and target flattened monomial counts agree in each degree,
    and the images of the source basis have full row rank."""
    hom = check_hom(src, dst, phi)
    if not hom.ok:
        return IsoReport(False, hom, d)

    mono_images = _MonomialImages(src, dst, phi)
    rows_flat = []  # flattened image vectors, grouped by source degree
    table = []
    ok = True
    col_index = {}
    matrix_rows = []
    for p in range(d + 1):
        src_basis = flattened_basis(src, p)
        dst_count = len(flattened_basis(dst, p))
        for e, alpha in src_basis:
            u = CommPoly(src.ring, {e: Fraction(1)})
            img = mono_images(alpha).scale(image_of_poly(src, dst, phi, u))
            rows_flat.append(_flatten(img))
        # extend the column index with any new coordinates
        for coords in rows_flat[len(matrix_rows):]:
            for key in coords:
                if key not in col_index:
                    col_index[key] = len(col_index)
        ncols = len(col_index)
        for coords in rows_flat[len(matrix_rows):]:
            row = [Fraction(0)] * ncols
            for key, q in coords.items():
                row[col_index[key]] = q
            matrix_rows.append(row)
        padded = [row + [Fraction(0)] * (ncols - len(row)) for row in matrix_rows]
        rank = DenseMatrix(padded).rank()
        table.append((p, len(src_basis), dst_count, rank))
        if len(src_basis) != dst_count or rank != len(matrix_rows):
            ok = False
    return IsoReport(ok, hom, d, tuple(table))
