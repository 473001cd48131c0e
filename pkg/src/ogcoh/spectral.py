"""The E1 page of the weight spectral sequence and its two differentials.

Columns:

    E1^{0,q} = H^q(Ytilde) + H^q(SigmaBar) + H^q(Omega)
    E1^{1,q} = H^q(SigmaHat) + H^q(OmegaTilde) + H^q(OmegaBar)
    E1^{2,q} = H^q(OmegaHat)

d0 sends (a, b, c) to ((j~ g)^*a - f^*b, i~^*a - p_Omega^*c, ibar^*b - q_Omega^*c) and
d1 is ihat^* - g_Omega^* - f_Omega^*.  Each is written blockwise between the
summand decompositions of the towers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import data
from .blockmap import BlockMap, DecomposedSpace, FactBacked, Local, RankInterval, Scalar, Unknown
from .graded import GradedDims
from .linalg import RationalMatrix
from .towers import (C_SIGMA_HAT, RESTRICTIONS, SIGMA_PULLBACK, FactVerificationError, check_variety,
                     complex_dimension, fiber_models, fiber_morphisms, omega_tower, resolution,
                     sigma_bar_parts, sigma_tower)


class CertificateError(AssertionError):
    """Some degree lacks a surjectivity certificate."""


def _unit(value=1) -> RationalMatrix:
    return RationalMatrix(1, 1, [[Fraction(value)]])


class SpectralPage:
    """E1 page for one variety, with d0 and d1 built lazily per degree."""

    def __init__(self, variety: str):
        self.variety = check_variety(variety)
        self.n = complex_dimension(variety)
        om, sg = omega_tower(variety), sigma_tower(variety)
        self.omega_tower, self.sigma_tower = om, sg
        self.resolution = resolution(variety)
        self.columns = (
            DecomposedSpace.direct_sum("E1^0", [self.resolution, sg.sigma_bar, om.omega]),
            DecomposedSpace.direct_sum("E1^1", [sg.sigma_hat, om.omega_tilde, om.omega_bar]),
            DecomposedSpace.direct_sum("E1^2", [om.omega_hat]),
        )
        self._d0: dict[int, BlockMap] = {}
        self._d1: dict[int, BlockMap] = {}

    def __repr__(self) -> str:
        return f"SpectralPage({self.variety})"

    @property
    def top_degree(self) -> int:
        return 2 * self.n

    def e(self, p: int, q: int) -> int:
        if not 0 <= p <= 2:
            return 0
        return self.columns[p].dim(q)

    def column_profile(self, p: int) -> GradedDims:
        return self.columns[p].total if 0 <= p <= 2 else GradedDims()

    def d0(self, q: int) -> BlockMap:
        if q not in self._d0:
            self._d0[q] = BlockMap(self.columns[0], self.columns[1], q, self._d0_terms(q), name="d0")
        return self._d0[q]

    def d1(self, q: int) -> BlockMap:
        if q not in self._d1:
            self._d1[q] = BlockMap(self.columns[1], self.columns[2], q, self._d1_terms(q), name="d1")
        return self._d1[q]

    # ------------------------------------------------------------ i^* blocks

    def _i_star(self, source: str, target: str, q: int, fact: str, coef=1) -> list:
        """The block i^*: H^q(Sigma) -> H^q(Omega) between two summands.

        In degree 0 both sides are spanned by fundamental classes and the block
        is the unit, broadcast to every component of Omega.  Above degree 0 the
        rank for M is dim H^q(Omega) by an imported fact; for K, Omega is a set
        of points and nothing survives.
        """
        if q == 0:
            return [Local(source, target, _unit(coef), "broadcast")]
        if self.variety == "M":
            rank = omega_tower("M").omega.dim(q)
            return [FactBacked((source,), (target,), fact, rank)] if rank else []
        return []

    # ------------------------------------------------------------ d0

    def _d0_terms(self, q: int) -> list:
        v = self.variety
        om, sg = self.omega_tower, self.sigma_tower
        y = self.resolution.labels[0]
        hat_labels = tuple(s.label for s in sg.sigma_hat if s.dim(q))
        tilde_labels = om.omega_tilde.labels
        terms: list = []
        # (j~ g)^*: H(Ytilde) -> H(SigmaHat)
        if q == 0:
            terms.append(Local(y, f"SigmaHat:f*{SIGMA_PULLBACK}", _unit(), "diag"))
        elif v == "K" and q == 10:
            terms.append(FactBacked((y,), hat_labels, "k-top-d0-surjective", sg.sigma_hat.dim(q)))
        elif hat_labels:
            terms.append(Unknown((y,), hat_labels, "(j~ g)^*"))
        # i~^*: H(Ytilde) -> H(OmegaTilde)
        if q == 0:
            terms.append(Local(y, "OmegaTilde:1", _unit(), "broadcast"))
        elif v == "M":
            terms.append(FactBacked((y,), tilde_labels, "m-itilde-surjective", om.omega_tilde.dim(q)))
        else:
            terms.append(Unknown((y,), tilde_labels, "i~^*"))
        # -f^*: H(SigmaBar) -> H(SigmaHat), identity on each summand
        for s in sg.sigma_bar:
            part = s.label.split(":", 1)[1]
            terms.append(Scalar(s.label, f"SigmaHat:f*{part}", Fraction(-1)))
        # ibar^*: H(SigmaBar) -> H(OmegaBar)
        terms += self._i_star(f"SigmaBar:{SIGMA_PULLBACK}", "OmegaBar:1", q, "m-i-surjective")
        for label, shift in sigma_bar_parts()[1:]:
            r = (shift - 2) // 2
            terms.append(Scalar(f"SigmaBar:{label}", f"OmegaBar:{_zeta(r + 1)}",
                                RESTRICTIONS.omega_bar_self))
        # -p_Omega^* and -q_Omega^* on H(Omega)
        terms.append(Scalar("Omega:H(Omega)", "OmegaTilde:1", Fraction(-1)))
        terms.append(Scalar("Omega:H(Omega)", "OmegaBar:1", Fraction(-1)))
        return terms

    # ------------------------------------------------------------ d1

    def _d1_terms(self, q: int) -> list:
        fm = fiber_models(self.variety)
        hat = fm["OmegaHat"]
        alg = hat.algebra
        terms: list = []

        def emit(source: str, image, scale=1, note=""):
            unknown = {}
            for m, c, has_c in hat.split(image):
                target = f"OmegaHat:{hat.twist(m)}"
                if has_c:
                    unknown[target] = True
                else:
                    terms.append(Scalar(source, target, Fraction(scale) * c))
            if unknown:
                terms.append(Unknown((source,), tuple(sorted(unknown)), note))

        h_coef, z_coef = RESTRICTIONS.sigma_hat_on_omega_hat
        # c1(O(-SigmaHat))|OmegaHat = -(h_coef h + z_coef zeta)
        c_res = alg.poly({_mono(alg, h=1): -h_coef, _mono(alg, zeta=1): -z_coef})
        # ihat^* on f^* q^* H(Sigma) and on c . f^* q^* H(Sigma)
        src = f"SigmaHat:f*{SIGMA_PULLBACK}"
        terms += self._i_star(src, "OmegaHat:1", q, "m-i-surjective")
        src = f"SigmaHat:{C_SIGMA_HAT}.f*{SIGMA_PULLBACK}"
        for m, c, _ in hat.split(c_res):
            target = f"OmegaHat:{hat.twist(m)}"
            if self.variety == "M":
                rank = omega_tower("M").omega.dim(q - 2) if q >= 2 else 0
                if rank:
                    terms.append(FactBacked((src,), (target,), "m-i-surjective", rank))
            elif q == 2:
                terms.append(Local(src, target, _unit(c), "broadcast"))
        # ihat^* on f^* ibar_*(zeta^r ...) and c . f^* ibar_*(zeta^r ...)
        for label, shift in sigma_bar_parts()[1:]:
            r = (shift - 2) // 2
            restricted = alg.poly({_mono(alg, zeta=r + 1): RESTRICTIONS.omega_bar_self})
            emit(f"SigmaHat:f*{label}", restricted, note="ihat^*")
            emit(f"SigmaHat:{C_SIGMA_HAT}.f*{label}", alg.multiply(c_res, restricted),
                 note="ihat^* against c2(TOmega), c4(TOmega)")
        # -g_Omega^* and -f_Omega^*
        morph = fiber_morphisms(self.variety)
        for name, key in (("OmegaTilde", "g_Omega"), ("OmegaBar", "f_Omega")):
            model = fm[name]
            for m in model.fiber_monomials:
                image = morph[key].apply({m: Fraction(1)})
                emit(f"{name}:{model.twist(m)}", image, scale=-1, note=f"{key}^* against c2, c4")
        return terms

    # ------------------------------------------------------------ summaries

    def d0_rank(self, q: int) -> RankInterval:
        return self.d0(q).rank_interval()

    def d1_rank(self, q: int) -> RankInterval:
        return self.d1(q).rank_interval()


def _zeta(k: int) -> str:
    return "1" if k == 0 else ("zeta" if k == 1 else f"zeta^{k}")


def _mono(alg, **exps):
    return tuple(exps.get(g, 0) for g in alg.names)


def assemble_e1(v: str) -> SpectralPage:
    """The E1 page, cached per variety and resolution row."""
    return _page(check_variety(v), data.RESOLUTION_ROWS[v])


@lru_cache(maxsize=None)
def _page(v: str, row: GradedDims) -> SpectralPage:
    return SpectralPage(v)


def certificate_range(v: str) -> range:
    return range(0, max(2 * complex_dimension(v), 16) + 1)


@dataclass(frozen=True)
class D1Certificate:
    degree: int
    target_dim: int
    rank: RankInterval

    @property
    def ok(self) -> bool:
        return self.rank.lower == self.target_dim


def d1_certificates(page: SpectralPage) -> list[D1Certificate]:
    return [D1Certificate(q, page.e(2, q), page.d1_rank(q)) for q in certificate_range(page.variety)]


def verify_d1_surjective(page: SpectralPage) -> list[D1Certificate]:
    """Certify rank d1 = e1^{2,q} in every degree, so E2^{2,q} = 0."""
    certs = d1_certificates(page)
    bad = [c.degree for c in certs if not c.ok]
    if bad:
        raise CertificateError(f"{page.variety}: no d1 surjectivity certificate in degrees {bad}")
    return certs


def alternating_e1_sum(columns: Sequence[GradedDims]) -> int:
    """Sum of (-1)^(p+q) e1^{p,q} over a page given column by column."""
    return sum((-1) ** p * g.euler for p, g in enumerate(columns))


def euler_characteristic(v: str) -> int:
    page = assemble_e1(v)
    return alternating_e1_sum([page.column_profile(p) for p in range(3)])


# ------------------------------------------------------------ engine facts


def _require(cond: bool, fact: str, msg: str):
    if not cond:
        raise FactVerificationError(f"{fact}: {msg}")


def verify_fact(v: str, fact_id: str) -> tuple[tuple[int, int], ...]:
    """Recompute an engine-checkable fact; return its per-degree ranks."""
    page = assemble_e1(v)
    om, sg = page.omega_tower, page.sigma_tower
    top = page.top_degree
    out = []
    if fact_id in ("k-ibar-surjective", "m-ibar-surjective"):
        start = 2 if v == "K" else 0
        for q in range(start, top + 1, 2):
            sub = page.d0(q).restricted(sg.sigma_bar.labels, om.omega_bar.labels)
            iv = sub.rank_interval()
            _require(iv.lower == om.omega_bar.dim(q), fact_id,
                     f"degree {q}: rank {tuple(iv)} < {om.omega_bar.dim(q)}")
            out.append((q, iv.lower))
    elif fact_id in ("k-ihat-surjective", "m-ihat-surjective"):
        start = 4 if v == "K" else 0
        for q in range(start, top + 1, 2):
            sub = page.d1(q).restricted(sg.sigma_hat.labels, om.omega_hat.labels)
            iv = sub.rank_interval()
            _require(iv.lower == om.omega_hat.dim(q), fact_id,
                     f"degree {q}: rank {tuple(iv)} < {om.omega_hat.dim(q)}")
            out.append((q, iv.lower))
    elif fact_id == "k-sigma-class-not-in-W":
        alg = fiber_models(v)["OmegaTilde"].algebra
        c = alg.poly({_mono(alg, u1=1): RESTRICTIONS.sigma_tilde_on_omega_tilde})
        power = alg.one()
        for m in range(1, 4):
            power = alg.multiply(power, c)
            _require(not alg.is_zero(power), fact_id, f"(2 u1)^{m} vanishes on OmegaTilde")
            out.append((2 * m, 1))
    elif fact_id == "k-b5-nonzero":
        from .bounds import betti_bounds
        entry = betti_bounds(v)[5]
        _require(entry.lower > 0, fact_id, f"b5 lower bound is {entry.lower}")
        out.append((5, entry.lower))
    else:
        raise KeyError(f"no engine check for fact {fact_id!r}")
    return tuple(out)


__all__ = ["SpectralPage", "CertificateError", "D1Certificate", "assemble_e1", "verify_d1_surjective",
           "d1_certificates", "euler_characteristic", "alternating_e1_sum", "verify_fact",
           "certificate_range"]
