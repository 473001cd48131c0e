"""The acceptance criteria as runnable checks, one printed line each."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

import sympy

from . import data
from .algebra import PresentedAlgebra, hilbert_function
from .bounds import betti_bounds, theorem_check
from .graded import GradedDims, goettsche_k3_hilb2
from .spectral import CertificateError, assemble_e1, certificate_range, euler_characteristic, verify_d1_surjective
from .towers import betti_tables, fiber_models, local_model_suite, local_rings

ORACLE_SEED = 20240607
ORACLE_SAMPLES = 120
ORACLE_TOP = 16


@dataclass(frozen=True)
class CriterionResult:
    number: int
    text: str
    ok: bool

    @property
    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} [{self.number}] {self.text}"


def _ok(number: int, text: str, ok: bool, failure: str = "") -> CriterionResult:
    if ok:
        return CriterionResult(number, f"{text} OK", True)
    return CriterionResult(number, f"{text} FAILED: {failure}", False)


# ------------------------------------------------------------ oracle


def groebner_hilbert(alg: PresentedAlgebra, top: int) -> GradedDims:
    """Hilbert function from a sympy Groebner basis, counting standard monomials."""
    gens = sympy.symbols(alg.names)
    degs = dict(zip(alg.names, alg.degrees))
    polys = [sympy.Add(*[sympy.Rational(c.numerator, c.denominator) *
                         sympy.Mul(*[g ** e for g, e in zip(gens, m)]) for m, c in r.items()])
             for r in alg.relations if r]
    leads = []
    if polys:
        gb = sympy.groebner(polys, *gens, order="grevlex")
        if list(gb.exprs) == [1]:
            return GradedDims()
        for p in gb.exprs:
            lm = sympy.Poly(p, *gens).monoms(order="grevlex")[0]
            leads.append(lm)
    counts = {}
    ranges = [range(top // degs[n] + 1) for n in alg.names]
    for m in product(*ranges):
        d = sum(e * degs[n] for e, n in zip(m, alg.names))
        if d > top:
            continue
        if any(all(a >= b for a, b in zip(m, lm)) for lm in leads):
            continue
        counts[d] = counts.get(d, 0) + 1
    return GradedDims.from_map(counts)


def random_presentation(rng: random.Random) -> PresentedAlgebra:
    """At most three generators of degree 2 or 4 and at most three relations."""
    ngen = rng.randint(1, 3)
    names = ["x", "y", "z"][:ngen]
    gens = [(n, rng.choice((2, 4))) for n in names]
    alg = PresentedAlgebra(gens)
    rels = []
    for _ in range(rng.randint(0, 3)):
        d = rng.choice((2, 4, 6, 8))
        monos = alg.monomials(d)
        if not monos:
            continue
        terms = {m: rng.randint(-3, 3) for m in rng.sample(monos, min(len(monos), rng.randint(1, 3)))}
        terms = {m: c for m, c in terms.items() if c}
        if terms:
            rels.append(terms)
    return PresentedAlgebra(gens, rels)


def in_scope_presentations() -> list[PresentedAlgebra]:
    rings = list(local_rings().values())
    rings += [m.algebra for m in fiber_models("M").values()]
    return rings


def oracle_mismatches(samples: int = ORACLE_SAMPLES, seed: int = ORACLE_SEED,
                      top: int = ORACLE_TOP) -> tuple[int, list[str]]:
    rng = random.Random(seed)
    algs = in_scope_presentations() + [random_presentation(rng) for _ in range(samples)]
    bad = []
    for alg in algs:
        ours, theirs = hilbert_function(alg, top), groebner_hilbert(alg, top)
        if ours != theirs:
            bad.append(f"{alg!r}: engine {list(ours)} vs groebner {list(theirs)}")
    return len(algs), bad


# ------------------------------------------------------------ criteria


def _table(number: int, v: str) -> CriterionResult:
    t = betti_tables(v)
    return _ok(number, f"table {v} ({len(t.rows)} rows) matches the reference", t.ok, "; ".join(t.mismatches))


def _euler(v: str) -> CriterionResult:
    got, want = euler_characteristic(v), data.STATED_EULER[v]
    if got == want:
        return CriterionResult(3, f"chi({v})={got} OK", True)
    return CriterionResult(3, f"chi({v})={got} FAILED: stated value {want}", False)


def _bounds(v: str) -> list[CriterionResult]:
    out = []
    for name, stated in data.STATED_BOUNDS[v].items():
        rep = betti_bounds(v, name)
        bad = []
        for d, (lo, hi) in stated.items():
            e = rep[d]
            if (lo is not None and e.lower != lo) or (hi is not None and e.upper != hi):
                bad.append(f"b{d}: computed {e}, stated [{lo}, {hi}]")
        out.append(_ok(4, f"bounds {v} {name}: {len(stated)} entries", not bad, "; ".join(bad)))
    return out


def _theorem(v: str) -> CriterionResult:
    rep = theorem_check(v)
    return _ok(5, f"theorem values {v}: {len(rep.checks)} checks", rep.ok,
               "; ".join(f"{c.name} ({c.detail})" for c in rep.failures))


def _local() -> CriterionResult:
    rep = local_model_suite()
    return _ok(6, f"local model: {len(rep.checks)} checks, comparison bijective, 8 = 8", rep.ok,
               "; ".join(f"{c.name}: {c.detail}" for c in rep.failures))


def _d1(v: str) -> CriterionResult:
    r = certificate_range(v)
    text = f"d1 surjective: degrees {r.start}..{r.stop - 1}"
    try:
        verify_d1_surjective(assemble_e1(v))
    except CertificateError as exc:
        return _ok(7, text, False, str(exc))
    return _ok(7, text, True)


def _oracle() -> CriterionResult:
    n, bad = oracle_mismatches()
    return _ok(8, f"hilbert oracle: {n} presentations, degrees <= {ORACLE_TOP}", not bad, "; ".join(bad[:3]))


def _goettsche() -> CriterionResult:
    got = goettsche_k3_hilb2()
    want = GradedDims((1, 0, 23, 0, 276, 0, 23, 0, 1))
    return _ok(9, f"goettsche K3^[2] = {list(got)}", got == want, f"expected {list(want)}")


def _safe(number: int, label: str, fn, *args) -> list[CriterionResult]:
    """Run one check; an exception becomes a failing line instead of a crash."""
    try:
        got = fn(*args)
    except Exception as exc:  # report, do not abort the suite
        return [CriterionResult(number, f"{label} FAILED: {type(exc).__name__}: {exc}", False)]
    return got if isinstance(got, list) else [got]


def run_acceptance(varieties=data.VARIETIES) -> list[CriterionResult]:
    """Run every criterion touching the given varieties, in criterion order."""
    varieties = [v for v in data.VARIETIES if v in varieties]
    out = []
    for v in varieties:
        n = 1 if v == "M" else 2
        out += _safe(n, f"table {v}", _table, n, v)
    for v in varieties:
        out += _safe(3, f"chi({v})", _euler, v)
    for v in varieties:
        out += _safe(4, f"bounds {v}", _bounds, v)
    for v in varieties:
        out += _safe(5, f"theorem values {v}", _theorem, v)
    out += _safe(6, "local model", _local)
    for v in varieties:
        out += _safe(7, f"d1 surjective {v}", _d1, v)
    out += _safe(8, "hilbert oracle", _oracle)
    out += _safe(9, "goettsche K3^[2]", _goettsche)
    return out
