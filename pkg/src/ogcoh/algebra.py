"""Evenly graded commutative algebras given by generators and relations.

A polynomial is a dict from exponent tuples to Fractions.  Quotients are
handled one degree at a time: the relation span in degree d is row reduced
over the monomial basis, ordered lexicographically with the generators in the
order given, and the non-pivot monomials form the normal-form basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

import sympy

from .graded import GradedDims
from .linalg import RationalMatrix, rref_rows

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]
PolyLike = Union[str, int, sympy.Expr, Mapping[Monomial, object]]


class PresentationError(ValueError):
    """A relation or image is not homogeneous, or refers to unknown symbols."""


class UnsupportedGradingError(ValueError):
    """Raised for generators of odd or nonpositive degree."""


class InvalidMorphismError(ValueError):
    """A proposed morphism does not respect degrees or relations."""


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            c = out.get(m, 0) + c1 * c2
            if c:
                out[m] = c
            else:
                out.pop(m, None)
    return out


def poly_add(p: Poly, q: Poly, scale=1) -> Poly:
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + scale * c
        if v:
            out[m] = Fraction(v)
        else:
            out.pop(m, None)
    return out


def poly_pow(p: Poly, n: int, nvars: int) -> Poly:
    out: Poly = {(0,) * nvars: Fraction(1)}
    for _ in range(n):
        out = poly_mul(out, p)
    return out


def _monomials(degrees: Sequence[int], d: int) -> list[Monomial]:
    """All exponent vectors of weighted degree d, lex largest first."""
    out: list[Monomial] = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(degrees):
            if left == 0:
                out.append(tuple(acc))
            return
        for e in range(left // degrees[i], -1, -1):
            acc.append(e)
            rec(i + 1, left - e * degrees[i], acc)
            acc.pop()

    if d >= 0:
        rec(0, d, [])
    return out


class PresentedAlgebra:
    """``Q[generators] / (relations)`` with every generator in even degree."""

    def __init__(self, generators: Sequence[tuple[str, int]], relations: Sequence[PolyLike] = (),
                 name: str = ""):
        self.name = name
        names = [g for g, _ in generators]
        if len(set(names)) != len(names):
            raise PresentationError(f"duplicate generator names in {names}")
        for g, deg in generators:
            if not isinstance(deg, int) or deg <= 0:
                raise UnsupportedGradingError(f"generator {g} has nonpositive degree {deg}")
            if deg % 2:
                raise UnsupportedGradingError(
                    f"generator {g} has odd degree {deg}; only even gradings are supported")
        self.generators = tuple((g, d) for g, d in generators)
        self.names = tuple(names)
        self.degrees = tuple(d for _, d in generators)
        self._symbols = sympy.symbols(names) if names else ()
        rels = []
        for r in relations:
            p = self.poly(r)
            if p:
                self.degree_of(p)
                rels.append(p)
        self.relations = tuple(rels)

    def __repr__(self) -> str:
        gens = ", ".join(f"{g}:{d}" for g, d in self.generators)
        rels = ", ".join(self.format(r) for r in self.relations)
        return f"PresentedAlgebra({self.name or '?'}; [{gens}] / ({rels}))"

    @property
    def nvars(self) -> int:
        return len(self.generators)

    def poly(self, expr: PolyLike) -> Poly:
        """Parse a string, sympy expression, integer or monomial dict."""
        if isinstance(expr, Mapping):
            out: Poly = {}
            for m, c in expr.items():
                m = tuple(m)
                if len(m) != self.nvars:
                    raise PresentationError(f"monomial {m} has wrong length")
                c = Fraction(c)
                if c:
                    out[m] = out.get(m, 0) + c
            return {m: c for m, c in out.items() if c}
        if isinstance(expr, str):
            loc = dict(zip(self.names, self._symbols))
            try:
                expr = sympy.sympify(expr, locals=loc)
            except (sympy.SympifyError, SyntaxError, TypeError) as exc:
                raise PresentationError(f"cannot parse {expr!r}: {exc}") from None
        expr = sympy.expand(sympy.sympify(expr))
        stray = expr.free_symbols - set(self._symbols)
        if stray:
            raise PresentationError(f"unknown symbols {sorted(map(str, stray))} in {expr}")
        if expr == 0:
            return {}
        if not self._symbols:
            return {(): Fraction(str(expr))}
        try:
            sp = sympy.Poly(expr, *self._symbols, domain="QQ")
        except sympy.PolynomialError as exc:
            raise PresentationError(f"not a polynomial: {expr} ({exc})") from None
        return {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in sp.terms() if c}

    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def degree_of(self, p: Poly) -> int | None:
        """Weighted degree of a homogeneous polynomial; None for zero."""
        degs = {self.monomial_degree(m) for m in p}
        if len(degs) > 1:
            raise PresentationError(f"{self.format(p)} is not homogeneous (degrees {sorted(degs)})")
        return degs.pop() if degs else None

    def format(self, p: Poly) -> str:
        if not p:
            return "0"
        expr = sum(sympy.Rational(c.numerator, c.denominator)
                   * sympy.Mul(*[s ** e for s, e in zip(self._symbols, m)])
                   for m, c in p.items())
        return str(expr)

    def format_monomial(self, m: Monomial) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, m) if e]
        return "*".join(parts) or "1"

    def monomials(self, d: int) -> list[Monomial]:
        return _monomials(self.degrees, d)

    @lru_cache(maxsize=None)
    def _reduced(self, d: int):
        monos = self.monomials(d)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for r in self.relations:
            rd = self.degree_of(r)
            for m in self.monomials(d - rd):
                v = [Fraction(0)] * len(monos)
                for rm, c in r.items():
                    v[index[tuple(a + b for a, b in zip(rm, m))]] += c
                rows.append(v)
        basis, pivots = rref_rows(rows, len(monos))
        piv = set(pivots)
        standard = [i for i in range(len(monos)) if i not in piv]
        return monos, index, list(zip(pivots, basis)), standard

    def basis(self, d: int) -> list[Monomial]:
        """Standard monomials spanning the degree-d part of the quotient."""
        monos, _, _, standard = self._reduced(d)
        return [monos[i] for i in standard]

    def leading_monomials(self, d: int) -> list[Monomial]:
        monos, _, reduced, _ = self._reduced(d)
        return [monos[p] for p, _ in reduced]

    def dim(self, d: int) -> int:
        if d < 0 or d % 2:
            return 0
        return len(self._reduced(d)[3])

    def coordinates(self, p: Poly, d: int | None = None) -> list[Fraction]:
        """Coordinates of the class of p in ``basis(d)``."""
        deg = self.degree_of(p)
        if d is None:
            if deg is None:
                raise ValueError("degree needed for the zero polynomial")
            d = deg
        elif deg is not None and deg != d:
            raise PresentationError(f"{self.format(p)} has degree {deg}, not {d}")
        monos, index, reduced, standard = self._reduced(d)
        v = [Fraction(0)] * len(monos)
        for m, c in p.items():
            v[index[m]] += c
        for piv, row in reduced:
            c = v[piv]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return [v[i] for i in standard]

    def normal_form(self, p: Poly) -> Poly:
        """Reduce a polynomial (homogeneous or not) degree by degree."""
        parts: dict[int, Poly] = {}
        for m, c in p.items():
            parts.setdefault(self.monomial_degree(m), {})[m] = c
        out: Poly = {}
        for d, part in parts.items():
            for m, c in zip(self.basis(d), self.coordinates(part, d)):
                if c:
                    out[m] = c
        return out

    def is_zero(self, p: Poly) -> bool:
        return not self.normal_form(p)

    def multiply(self, p: Poly, q: Poly) -> Poly:
        return self.normal_form(poly_mul(p, q))

    def generator(self, name: str) -> Poly:
        i = self.names.index(name)
        return {tuple(1 if j == i else 0 for j in range(self.nvars)): Fraction(1)}

    def one(self) -> Poly:
        return {(0,) * self.nvars: Fraction(1)}


def hilbert_function(alg: PresentedAlgebra, max_degree: int) -> GradedDims:
    """Dimensions of the quotient in degrees 0..max_degree.

    A nonzero entry at ``max_degree`` signals that the quotient may not be
    finite dimensional; use :func:`is_finite` to check explicitly.
    """
    if max_degree < 0:
        return GradedDims()
    return GradedDims(tuple(alg.dim(d) for d in range(max_degree + 1)))


def is_finite(alg: PresentedAlgebra, max_degree: int) -> bool:
    """True when the quotient vanishes in every degree from some point up to max_degree.

    The check looks for a run of zero degrees as long as the largest
    generator degree; past such a run every higher degree is zero as well.
    """
    span = max(alg.degrees, default=2)
    run = 0
    for d in range(0, max_degree + 1, 2):
        run = run + 2 if alg.dim(d) == 0 else 0
        if run >= span:
            return True
    return False


class AlgebraMorphism:
    """A graded algebra map given by images of the source generators."""

    def __init__(self, source: PresentedAlgebra, target: PresentedAlgebra,
                 images: Mapping[str, PolyLike], name: str = ""):
        self.source = source
        self.target = target
        self.name = name
        missing = set(source.names) - set(images)
        extra = set(images) - set(source.names)
        if missing or extra:
            raise InvalidMorphismError(
                f"images must cover exactly {list(source.names)}; missing {sorted(missing)}, extra {sorted(extra)}")
        imgs = {}
        for g, deg in source.generators:
            p = target.poly(images[g])
            d = target.degree_of(p)
            if d is not None and d != deg:
                raise InvalidMorphismError(f"image of {g} has degree {d}, expected {deg}")
            imgs[g] = p
        self.images = imgs
        for r in source.relations:
            img = self.apply(r)
            if img:
                raise InvalidMorphismError(
                    f"relation {source.format(r)} maps to {target.format(img)}, not 0")

    def _image_raw(self, p: Poly) -> Poly:
        out: Poly = {}
        ims = [self.images[g] for g in self.source.names]
        for m, c in p.items():
            term: Poly = self.target.one()
            for img, e in zip(ims, m):
                for _ in range(e):
                    term = self.target.multiply(term, img)
            out = poly_add(out, term, c)
        return out

    def apply(self, p: Poly) -> Poly:
        """Image of p, in target normal form."""
        return self.target.normal_form(self._image_raw(p))

    def matrix(self, degree: int) -> RationalMatrix:
        """Rows index the target basis, columns the source basis, in degree d."""
        src = self.source.basis(degree)
        tgt = self.target.basis(degree)
        cols = []
        for m in src:
            img = self._image_raw({m: Fraction(1)})
            cols.append(self.target.coordinates(img, degree) if img else [Fraction(0)] * len(tgt))
        data = [[cols[j][i] for j in range(len(src))] for i in range(len(tgt))]
        return RationalMatrix(len(tgt), len(src), data)

    def then(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """``other`` after ``self``."""
        if other.source is not self.target:
            raise InvalidMorphismError("composition needs matching middle algebra")
        imgs = {g: other.apply(p) for g, p in self.images.items()}
        return AlgebraMorphism(self.source, other.target, imgs,
                               name=f"{other.name}∘{self.name}" if self.name and other.name else "")


def morphism_matrix(phi: AlgebraMorphism, degree: int) -> RationalMatrix:
    return phi.matrix(degree)


def identity_morphism(alg: PresentedAlgebra) -> AlgebraMorphism:
    return AlgebraMorphism(alg, alg, {g: {m: c for m, c in alg.generator(g).items()} for g in alg.names},
                           name="id")
