"""Cohomology of the strata of M and K, their blow-ups and resolutions.

For each variety the singular locus Sigma has its own singular locus Omega,
and four variants of each appear in the resolution diagram: the original,
the bar (blow-up along Omega), the tilde (strict transforms in the symplectic
resolution) and the hat (the common blow-up).  Every profile here is built
from a small amount of input: the K3^[2] profile (via Goettsche), the
torus profile (via exterior powers), the fiber rings of the Omega-bundles,
and the resolution rows, which are data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import data
from .algebra import AlgebraMorphism, Poly, PresentedAlgebra, hilbert_function, poly_add, poly_mul
from .blockmap import DecomposedSpace, Summand
from .graded import (GradedDims, bundle_dims, exterior_invariants_abelian, goettsche_k3_hilb2,
                     sym_square_invariants)


class TowerError(ValueError):
    """A tower failed one of its internal consistency checks."""


class FactVerificationError(AssertionError):
    """An engine-checkable fact did not survive recomputation."""


NODES = ("Y", "Ytilde", "Sigma", "SigmaBar", "SigmaTilde", "SigmaHat",
         "Omega", "OmegaBar", "OmegaTilde", "OmegaHat")

COMPLEX_DIMS = {
    "M": {"Y": 10, "Ytilde": 10, "Sigma": 8, "SigmaBar": 8, "SigmaTilde": 9, "SigmaHat": 9,
          "Omega": 4, "OmegaBar": 7, "OmegaTilde": 7, "OmegaHat": 8},
    "K": {"Y": 6, "Ytilde": 6, "Sigma": 4, "SigmaBar": 4, "SigmaTilde": 5, "SigmaHat": 5,
          "Omega": 0, "OmegaBar": 3, "OmegaTilde": 3, "OmegaHat": 4},
}

OMEGA_POINTS = 256
TORUS_B1 = 8


def check_variety(v: str) -> str:
    if v not in data.VARIETIES:
        raise ValueError(f"unknown variety {v!r}; expected one of {data.VARIETIES}")
    return v


def complex_dimension(v: str, node: str = "Y") -> int:
    check_variety(v)
    if node in ("Mtilde", "Ktilde"):
        node = "Ytilde"
    return COMPLEX_DIMS[v][node]


def resolution_name(v: str) -> str:
    return {"M": "Mtilde", "K": "Ktilde"}[check_variety(v)]


def table_rows(v: str) -> tuple[str, ...]:
    return ("Omega", "OmegaBar", "OmegaTilde", "OmegaHat",
            "Sigma", "SigmaBar", "SigmaTilde", "SigmaHat", resolution_name(v))


# ------------------------------------------------------------ local rings


def local_rings() -> dict[str, PresentedAlgebra]:
    """The four fiber rings over a point."""
    return {
        "G": PresentedAlgebra([("u1", 2), ("u2", 4)], ["u1**2 - 2*u2", "u2**2"], name="H(G)"),
        "P(V)": PresentedAlgebra([("zeta", 2)], ["zeta**4"], name="H(P(V))"),
        "P_G(U)": PresentedAlgebra([("u1", 2), ("u2", 4), ("xi", 2)],
                                   ["u1**2 - 2*u2", "u2**2", "xi**2 - u1*xi + u2"], name="H(P_G(U))"),
        "P(L+/L)": PresentedAlgebra([("h", 2), ("zeta", 2)], ["zeta**4", "h**2 + zeta**2"],
                                    name="H(P(L+/L))"),
    }


@dataclass(frozen=True)
class RestrictionConstants:
    """First Chern class identities used to write restriction maps blockwise.

    ``omega_bar_self`` is the coefficient of zeta in [OmegaBar]|OmegaBar;
    ``sigma_hat_on_omega_hat`` the coefficients of (h, zeta) in
    c1(O(SigmaHat))|OmegaHat; ``omega_og_on_omega_hat`` the coefficient of
    zeta in c1(O(OmegaHat_OG))|OmegaHat; ``sigma_tilde_on_omega_tilde`` the
    coefficient of u1 in c1(O(SigmaTilde))|OmegaTilde.
    """

    omega_bar_self: Fraction = Fraction(2)
    sigma_hat_on_omega_hat: tuple[Fraction, Fraction] = (Fraction(2), Fraction(-2))
    omega_og_on_omega_hat: Fraction = Fraction(2)
    sigma_tilde_on_omega_tilde: Fraction = Fraction(2)


RESTRICTIONS = RestrictionConstants()


class FiberModel:
    """A fiber ring over H(Omega), optionally with formal Chern classes of TOmega.

    For M the rings carry generators c2, c4 standing for c2(TOmega), c4(TOmega);
    they are never evaluated.  A normal form whose coefficient involves them
    describes a map whose rank the engine does not know.
    """

    def __init__(self, name: str, algebra: PresentedAlgebra, fiber_gens: tuple[str, ...]):
        self.name = name
        self.algebra = algebra
        self.fiber_gens = fiber_gens
        nf = len(fiber_gens)
        self._nf = nf
        top = 2 * 8
        monos = []
        for d in range(0, top + 1, 2):
            for m in algebra.basis(d):
                if all(e == 0 for e in m[nf:]):
                    monos.append(m)
        self.fiber_monomials = tuple(monos)
        self.fiber_profile = GradedDims.from_map(
            {d: sum(1 for m in monos if algebra.monomial_degree(m) == d) for d in range(top + 1)})

    def twist(self, m) -> str:
        return self.algebra.format_monomial(m)

    def degree(self, m) -> int:
        return self.algebra.monomial_degree(m)

    def split(self, p: Poly) -> list[tuple[tuple, Fraction, bool]]:
        """Normal form of p as (fiber monomial, coefficient, involves Chern classes)."""
        out = []
        for m, c in sorted(self.algebra.normal_form(p).items(), reverse=True):
            fib = m[:self._nf] + (0,) * (len(m) - self._nf)
            out.append((fib, c, any(m[self._nf:])))
        return out

    def monomial(self, **exps) -> Poly:
        m = tuple(exps.get(g, 0) for g in self.algebra.names)
        return {m: Fraction(1)}


def _relative_algebra(name, fiber, relations, chern: bool):
    gens = list(fiber) + ([("c2", 4), ("c4", 8)] if chern else [])
    subs = {"c2": "c2", "c4": "c4"} if chern else {"c2": "0", "c4": "0"}
    rels = [r.format(**subs) for r in relations]
    return PresentedAlgebra(gens, rels, name=name)


@lru_cache(maxsize=None)
def fiber_models(v: str) -> dict[str, FiberModel]:
    """Fiber rings of OmegaBar, OmegaTilde, OmegaHat over Omega."""
    chern = check_variety(v) == "M"
    bar = _relative_algebra("H(OmegaBar)", [("zeta", 2)], ["zeta**4 + zeta**2*({c2}) + ({c4})"], chern)
    tilde = _relative_algebra("H(OmegaTilde)", [("u1", 2), ("u2", 4)],
                              ["u1**2 - 2*u2 + ({c2})", "u2**2 - ({c4})"], chern)
    hat = _relative_algebra("H(OmegaHat)", [("h", 2), ("zeta", 2)],
                            ["zeta**4 + zeta**2*({c2}) + ({c4})", "h**2 + zeta**2 + ({c2})"], chern)
    return {
        "OmegaBar": FiberModel("OmegaBar", bar, ("zeta",)),
        "OmegaTilde": FiberModel("OmegaTilde", tilde, ("u1", "u2")),
        "OmegaHat": FiberModel("OmegaHat", hat, ("h", "zeta")),
    }


@lru_cache(maxsize=None)
def fiber_morphisms(v: str) -> dict[str, AlgebraMorphism]:
    """g_Omega^* and f_Omega^* on the fiber rings, checked against the relations."""
    fm = fiber_models(v)
    hat = fm["OmegaHat"].algebra
    extra = {"c2": "c2", "c4": "c4"} if v == "M" else {}
    g = AlgebraMorphism(fm["OmegaTilde"].algebra, hat,
                        {"u1": "zeta + h", "u2": "zeta*h", **extra}, name="g_Omega^*")
    f = AlgebraMorphism(fm["OmegaBar"].algebra, hat, {"zeta": "zeta", **extra}, name="f_Omega^*")
    return {"g_Omega": g, "f_Omega": f}


# ------------------------------------------------------------ towers


def omega_profile(v: str) -> tuple[str, GradedDims, int]:
    """(base key, base profile, multiplicity) of Omega."""
    if check_variety(v) == "M":
        return "Omega", goettsche_k3_hilb2(), 1
    return "pt", GradedDims.point(1), OMEGA_POINTS


def sigma_profile(v: str) -> GradedDims:
    if check_variety(v) == "M":
        return sym_square_invariants(goettsche_k3_hilb2())
    return exterior_invariants_abelian(TORUS_B1)


@dataclass(frozen=True)
class OmegaTower:
    omega: DecomposedSpace
    omega_bar: DecomposedSpace
    omega_tilde: DecomposedSpace
    omega_hat: DecomposedSpace

    def __iter__(self):
        return iter((self.omega, self.omega_bar, self.omega_tilde, self.omega_hat))


@dataclass(frozen=True)
class SigmaTower:
    sigma: DecomposedSpace
    sigma_bar: DecomposedSpace
    sigma_tilde: DecomposedSpace
    sigma_hat: DecomposedSpace

    def __iter__(self):
        return iter((self.sigma, self.sigma_bar, self.sigma_tilde, self.sigma_hat))


def omega_label(node: str, twist: str) -> str:
    return f"{node}:{twist}"


SIGMA_PULLBACK = "q*H(Sigma)"


def sigma_bar_part(r: int) -> str:
    return f"ibar_*(zeta^{r}.q_Omega*H(Omega))"


def sigma_bar_parts() -> list[tuple[str, int]]:
    """Labels of the SigmaBar decomposition with their shifts (pre-node-prefix)."""
    return [(SIGMA_PULLBACK, 0)] + [(sigma_bar_part(r), 2 + 2 * r) for r in range(3)]


C_SIGMA_HAT = "c1(O(-SigmaHat))"


@lru_cache(maxsize=None)
def omega_tower(v: str) -> OmegaTower:
    key, base, mult = omega_profile(v)
    fm = fiber_models(v)
    spaces = [DecomposedSpace("Omega", [Summand("Omega:H(Omega)", key, base, 0, mult, "1")])]
    for node in ("OmegaBar", "OmegaTilde", "OmegaHat"):
        model = fm[node]
        summands = [Summand(omega_label(node, model.twist(m)), key, base, model.degree(m), mult,
                            model.twist(m)) for m in model.fiber_monomials]
        sp = DecomposedSpace(node, summands)
        expected = bundle_dims(base, model.fiber_profile).scaled(mult)
        if sp.total != expected:
            raise TowerError(f"{node}: summands give {sp.total}, Leray-Hirsch gives {expected}")
        spaces.append(sp)
    tower = OmegaTower(*spaces)
    for sp in tower:
        _check_row(v, sp.name, sp.total)
    return tower


@lru_cache(maxsize=None)
def sigma_tower(v: str) -> SigmaTower:
    key, base, mult = omega_profile(v)
    sig = sigma_profile(v)
    sigma = DecomposedSpace("Sigma", [Summand("Sigma:H(Sigma)", "Sigma", sig, 0, 1, "1")])
    bar = []
    for label, shift in sigma_bar_parts():
        if label == SIGMA_PULLBACK:
            bar.append(Summand(f"SigmaBar:{label}", "Sigma", sig, 0, 1, "1"))
        else:
            bar.append(Summand(f"SigmaBar:{label}", key, base, shift, mult, label))
    sigma_bar = DecomposedSpace("SigmaBar", bar)
    hat = []
    for s in bar:
        part = s.label.split(":", 1)[1]
        hat.append(Summand(f"SigmaHat:f*{part}", s.base_key, s.base, s.shift, s.mult, s.twist))
    for s in bar:
        part = s.label.split(":", 1)[1]
        hat.append(Summand(f"SigmaHat:{C_SIGMA_HAT}.f*{part}", s.base_key, s.base, s.shift + 2,
                           s.mult, f"c.{s.twist}"))
    sigma_hat = DecomposedSpace("SigmaHat", hat)
    if sigma_hat.total.total != 2 * sigma_bar.total.total:
        raise TowerError("SigmaHat should have twice the total dimension of SigmaBar")
    omega_tilde = omega_tower(v).omega_tilde
    try:
        tilde = sigma_hat.total - omega_tilde.total.shifted(2)
    except ValueError as exc:
        raise TowerError(f"SigmaTilde subtraction failed: {exc}") from None
    sigma_tilde = DecomposedSpace("SigmaTilde", [Summand("SigmaTilde:H(SigmaTilde)", "SigmaTilde",
                                                         tilde, 0, 1, "1")])
    tower = SigmaTower(sigma, sigma_bar, sigma_tilde, sigma_hat)
    for sp in tower:
        _check_row(v, sp.name, sp.total)
    return tower


def resolution(v: str) -> DecomposedSpace:
    """H(Ytilde) as a single summand, read from the embedded data."""
    name = resolution_name(v)
    row = data.RESOLUTION_ROWS[check_variety(v)]
    return DecomposedSpace(name, [Summand(f"{name}:H({name})", name, row, 0, 1, "1")])


def _check_row(v: str, node: str, g: GradedDims):
    n = complex_dimension(v, node)
    if not g.odd_vanishes():
        raise TowerError(f"{v} {node}: odd cohomology should vanish, got {g}")
    if not g.is_symmetric(2 * n):
        raise TowerError(f"{v} {node}: profile {g} is not Poincare symmetric about {2 * n}")


def node_profile(v: str, node: str) -> GradedDims:
    om, sg = omega_tower(v), sigma_tower(v)
    table = {"Omega": om.omega, "OmegaBar": om.omega_bar, "OmegaTilde": om.omega_tilde,
             "OmegaHat": om.omega_hat, "Sigma": sg.sigma, "SigmaBar": sg.sigma_bar,
             "SigmaTilde": sg.sigma_tilde, "SigmaHat": sg.sigma_hat}
    if node in table:
        return table[node].total
    if node in ("Ytilde", resolution_name(v)):
        return data.RESOLUTION_ROWS[v]
    raise KeyError(node)


@dataclass
class BettiTable:
    variety: str
    top_degree: int
    rows: dict[str, GradedDims]
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def dense(self) -> dict[str, list[int]]:
        out = {}
        for k, g in self.rows.items():
            vals = [g[d] for d in range(self.top_degree + 1)]
            out[k] = vals
        return out


def betti_tables(v: str) -> BettiTable:
    """All nine rows, diffed cell by cell against the reference tables."""
    check_variety(v)
    top = 2 * complex_dimension(v)
    rows = {name: node_profile(v, name) for name in table_rows(v)}
    table = BettiTable(v, top, rows)
    res_name = resolution_name(v)
    res = rows[res_name]
    if res[2] != data.RESOLUTION_B2[v]:
        table.mismatches.append(f"{res_name}: b2 = {res[2]}, expected {data.RESOLUTION_B2[v]}")
    if not res.is_symmetric(top):
        bad = [k for k in range(top + 1) if res[k] != res[top - k]]
        table.mismatches.append(f"{res_name}: not Poincare symmetric in degrees {bad}")
    ref = data.REFERENCE_TABLES[v]
    for name, g in rows.items():
        if g.top_degree > top:
            table.mismatches.append(f"{name}: nonzero above degree {top}")
        expected = ref[name]
        for d in range(top + 1):
            want = expected[d // 2] if d % 2 == 0 else 0
            if g[d] != want:
                table.mismatches.append(f"{name}[b{d}]: computed {g[d]}, reference {want}")
    return table


# ------------------------------------------------------------ local models


@dataclass
class LocalCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class LocalModelReport:
    checks: list[LocalCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[LocalCheck]:
        return [c for c in self.checks if not c.ok]


def _series_inverse(alg: PresentedAlgebra, p: Poly, top: int) -> Poly:
    """Inverse of 1 + (nilpotent) in alg, by the geometric series."""
    one = alg.one()
    n = poly_add(p, one, -1)
    out, power = dict(one), dict(one)
    for k in range(1, top + 1):
        power = alg.multiply(power, n)
        if not power:
            break
        out = poly_add(out, power, (-1) ** k)
    return alg.normal_form(out)


def _degree_part(alg: PresentedAlgebra, p: Poly, d: int) -> Poly:
    return {m: c for m, c in p.items() if alg.monomial_degree(m) == d}


def local_model_suite() -> LocalModelReport:
    """Certify the local presentations and the comparison isomorphism."""
    rings = local_rings()
    checks: list[LocalCheck] = []
    top = 16

    def hf(name, expected):
        got = hilbert_function(rings[name], top)
        checks.append(LocalCheck(f"hilbert {name}", got == expected, f"{list(got)}"))

    hf("G", GradedDims.even([1, 1, 1, 1]))
    hf("P(V)", GradedDims.even([1, 1, 1, 1]))
    hf("P_G(U)", GradedDims.even([1, 2, 2, 2, 1]))
    hf("P(L+/L)", GradedDims.even([1, 2, 2, 2, 1]))

    G, PV, PGU, PL = rings["G"], rings["P(V)"], rings["P_G(U)"], rings["P(L+/L)"]
    # Chern relations from 0 -> U -> V -> U^dual -> 0 with c(V) = 1
    cu = G.poly("1 + u1 + u2")
    cud = G.poly("1 - u1 + u2")
    prod = poly_mul(cu, cud)
    raw = {m: c for m, c in prod.items() if sum(m) > 0}
    pieces = [_degree_part(G, raw, d) for d in (4, 8)]
    ok = all(G.is_zero(x) for x in pieces) and G.normal_form(pieces[0]) == {} \
        and G.poly("2*u2 - u1**2") == pieces[0] and G.poly("u2**2") == pieces[1]
    checks.append(LocalCheck("c(U)c(U^dual) = 1 gives the relations of H(G)", ok,
                             f"{G.format(pieces[0])}, {G.format(pieces[1])}"))
    # c(L+/L) = 1/((1 + zeta)(1 - zeta)) in H(P(V))
    c = _series_inverse(PV, PV.poly("(1 + zeta)*(1 - zeta)"), 8)
    ok = c == PV.poly("1 + zeta**2")
    checks.append(LocalCheck("c(L+/L) = 1 + zeta^2", ok, PV.format(c)))
    # h = c1(F) with F the tautological line in L+/L: h^2 - c1 h + c2 = 0
    c1 = _degree_part(PV, c, 2)
    c2 = _degree_part(PV, c, 4)
    rel = PL.poly(f"h**2 - ({PV.format(c1)})*h + ({PV.format(c2)})")
    ok = PL.is_zero(rel) and rel == PL.relations[1]
    checks.append(LocalCheck("projective bundle relation h^2 + zeta^2", ok, PL.format(rel)))
    # xi = c1 of the tautological line in U
    rel = PGU.poly("xi**2 - u1*xi + u2")
    checks.append(LocalCheck("projective bundle relation xi^2 - u1 xi + u2", PGU.is_zero(rel),
                             PGU.format(rel)))

    def morphism(name, src, tgt, images, bijective=False, injective=False):
        try:
            phi = AlgebraMorphism(src, tgt, images, name=name)
        except ValueError as exc:
            checks.append(LocalCheck(f"{name} respects relations", False, str(exc)))
            return None
        checks.append(LocalCheck(f"{name} respects relations", True))
        for d in range(0, top + 1, 2):
            mat = phi.matrix(d)
            r = mat.rank()
            if bijective:
                good = mat.rows == mat.cols == r
                what = "bijective"
            else:
                good = r == mat.cols
                what = "injective"
            if not good:
                checks.append(LocalCheck(f"{name} {what} in degree {d}", False, repr(mat)))
                return phi
        checks.append(LocalCheck(f"{name} {'bijective' if bijective else 'injective'} in every degree", True))
        return phi

    morphism("pi_Omega^*: H(G) -> H(P_G(U))", G, PGU, {"u1": "u1", "u2": "u2"}, injective=True)
    morphism("rho_Omega^*: H(P(V)) -> H(P(L+/L))", PV, PL, {"zeta": "zeta"}, injective=True)
    phi = morphism("comparison H(P_G(U)) -> H(P(L+/L))", PGU, PL,
                   {"xi": "zeta", "u1": "zeta + h", "u2": "zeta*h"}, bijective=True)
    if phi is not None:
        s, t = hilbert_function(PGU, top).total, hilbert_function(PL, top).total
        checks.append(LocalCheck(f"total dimensions {s} = {t}", s == t == 8))
        img = phi.apply(PGU.poly("u1**2"))
        checks.append(LocalCheck("u1^2 maps to 2 zeta h", img == PL.poly("2*zeta*h"), PL.format(img)))
        m0 = phi.matrix(0)
        checks.append(LocalCheck("degree 0 part is the 1x1 identity", m0.is_identity(), repr(m0)))
    # the degree-2 map H2(G) + H2(P(V)) -> H2(P(L+/L)), u1 -> zeta + h, zeta -> zeta
    cols = [PL.coordinates(PL.poly("zeta + h"), 2), PL.coordinates(PL.poly("zeta"), 2)]
    from .linalg import RationalMatrix
    mat = RationalMatrix(2, 2, [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]])
    checks.append(LocalCheck("H2(G) + H2(P(V)) -> H2(P(L+/L)) has rank 2", mat.rank() == 2, repr(mat)))
    return LocalModelReport(checks)


# ------------------------------------------------------------ facts


@dataclass(frozen=True)
class Fact:
    id: str
    statement: str
    citation: str
    status: str  # "imported" or "verified_by_engine"
    map_name: str = ""
    rank_data: tuple[tuple[int, int], ...] = ()

    def rank_at(self, q: int) -> int | None:
        return dict(self.rank_data).get(q)


def _even_ranks(g: GradedDims, top: int, start: int = 0) -> tuple[tuple[int, int], ...]:
    return tuple((q, g[q]) for q in range(start, top + 1, 2))


def fact_ledger(v: str) -> list[Fact]:
    """Imported facts with citations, plus the facts the engine re-derives."""
    from . import spectral  # late import: spectral builds on the towers

    check_variety(v)
    top = 2 * complex_dimension(v)
    om, sg = omega_tower(v), sigma_tower(v)
    facts: list[Fact] = []
    if v == "M":
        facts += [
            Fact("m-i-surjective", "i^*: H^k(Sigma) -> H^k(Omega) is surjective for every k",
                 'prop Sigma and Omega (1): i^*: H^k(Sigma) ->> H^k(Omega)',
                 "imported", "i^*", _even_ranks(om.omega.total, top)),
            Fact("m-itilde-surjective", "i~^*: H^k(Mtilde) -> H^k(OmegaTilde) is surjective for every k",
                 'prop Sigma and Omega (5): i~^*: H^k(M~) ->> H^k(Omega~)',
                 "imported", "i~^*", _even_ranks(om.omega_tilde.total, top)),
            Fact("m-j-iso-h2", "j^*: H^2(M) -> H^2(Sigma) is an isomorphism",
                 'prop Sigma and Omega (4): j^*: H^2(M) ~= H^2(Sigma)',
                 "imported", "j^*", ((2, sg.sigma.total[2]),)),
            Fact("m-sym-injection", "Sym^k H^2(M) -> H^{2k}(M) is injective for 2k <= 10",
                 'prop Betti estimates 2: Sym^{9-k}H^2(M) >-> H^{2(9-k)}(M), 9-k <= 4',
                 "imported"),
            Fact("m-sym-image-d0",
                 "g^*p^*Sym^{9-k}H^2(Sigma) (10 <= 2k <= 12) and g^*Sym^{9-k}H^2(SigmaTilde) "
                 "(14 <= 2k <= 18) lie in the image of d0",
                 'prop Betti estimates 2: g^*p^*Sym^{9-k}H^2(Sigma) < Im d_0',
                 "imported", "d0", _sym_image_ranks(v)),
            Fact("m-pullbacks-injective", "q^*, f^*, g^*, p^* are injective",
                 'prop coho of Sigmas (1)-(4): q^*, f^*, g^*, p^* injective',
                 "imported"),
        ]
    else:
        facts += [
            Fact("k-j-injective-h2", "j^*: H^2(K) -> H^2(Sigma) is injective",
                 'prop surj of hat i, OG6 (3): j^*: H^2(K) >-> H^2(Sigma)', "imported"),
            Fact("k-top-d0-surjective",
                 "H^10(Ktilde) -> H^10(SigmaTilde) -> H^10(SigmaHat) is surjective onto a line",
                 'prop Betti estimates 2 OG6: H^10(K~) -> H^10(Sigma~) -> H^10(Sigma^) = Q surjective', "imported", "(j~ g)^*", ((10, 1),)),
            Fact("k-sym-injection", "Sym^k H^2(K) -> H^{2k}(K) is injective for 2k <= 6",
                 'cor Betti estimates 1 OG6: Sym^k H^2(K) >-> H^{2k}(K), 2k <= 6', "imported"),
            Fact("k-sigma-class-not-in-W",
                 "c1(O(SigmaTilde))^m does not lie in W_{2m} for m = 1, 2, 3",
                 "prop Betti estimates 2 OG6 + restrictions (4): c_1(O(Sigma~))^m notin W_2m, "
                 "c_1(O(Sigma~))|Omega~ = 2 c_1(U)",
                 "verified_by_engine", "i~^*", spectral.verify_fact(v, "k-sigma-class-not-in-W")),
        ]
        facts.append(Fact("k-ibar-surjective", "ibar^*: H^k(SigmaBar) -> H^k(OmegaBar) is surjective for k >= 2",
                          'prop surj of hat i, OG6 (1): ibar^*: H^k(Sigma-) ->> H^k(Omega-), k >= 2', "verified_by_engine",
                          "ibar^*", spectral.verify_fact(v, "k-ibar-surjective")))
        facts.append(Fact("k-ihat-surjective", "ihat^*: H^k(SigmaHat) -> H^k(OmegaHat) is surjective for k >= 4",
                          'prop surj of hat i, OG6 (2): ihat^*: H^k(Sigma^) ->> H^k(Omega^), k >= 4', "verified_by_engine",
                          "ihat^*", spectral.verify_fact(v, "k-ihat-surjective")))
        facts.append(Fact("k-b5-nonzero", "b_5(K) > 0",
                          'thm Betti of K: b_5(K) != 0', "verified_by_engine", "",
                          spectral.verify_fact(v, "k-b5-nonzero")))
    if v == "M":
        facts.append(Fact("m-ibar-surjective", "ibar^*: H^k(SigmaBar) -> H^k(OmegaBar) is surjective for every k",
                          'prop Sigma and Omega (2): ibar^*: H^k(Sigma-) ->> H^k(Omega-)',
                          "verified_by_engine", "ibar^*", spectral.verify_fact(v, "m-ibar-surjective")))
        facts.append(Fact("m-ihat-surjective", "ihat^*: H^k(SigmaHat) -> H^k(OmegaHat) is surjective for every k",
                          'prop Sigma and Omega (3): ihat^*: H^k(Sigma^) ->> H^k(Omega^)',
                          "verified_by_engine", "ihat^*", spectral.verify_fact(v, "m-ihat-surjective")))
    return facts


def _sym_image_ranks(v: str) -> tuple[tuple[int, int], ...]:
    b2_sigma = sigma_tower(v).sigma.total[2]
    b2_sigma_tilde = sigma_tower(v).sigma_tilde.total[2]
    out = []
    for k in range(5, 10):
        m = 9 - k
        b = b2_sigma if 2 * k <= 12 else b2_sigma_tilde
        out.append((2 * k, comb(b + m - 1, m)))
    return tuple(out)
