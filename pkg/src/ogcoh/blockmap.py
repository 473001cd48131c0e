"""Block matrices between direct-sum decompositions, and their ranks.

A :class:`DecomposedSpace` is a list of summands, each a copy (or ``mult``
identical copies) of a base profile shifted up in degree.  A :class:`BlockMap`
fixes one degree q and lists the nonzero blocks ("terms") of a linear map
between the degree-q parts of two such spaces.  Some blocks are explicit
(scalar multiples of the identity, or small local matrices), some have a rank
known from an external fact, and some are unknown.

The rank of such a map is reported as an interval.  The upper end is the
obvious one.  The lower end comes from peeling: if a block is the only nonzero
block in its columns, the matrix is block triangular and its rank is at least
the rank of that block plus the rank of what remains after deleting the
block's rows and columns.  The same holds for a block alone in its rows, and
deleting whole rows or columns never raises the rank.  When the peeled block
has full row rank (column case) or full column rank (row case) no rank is lost,
so peeling such blocks first keeps exact answers exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .graded import GradedDims
from .linalg import RationalMatrix, rank as _rank


class BlockShapeError(ValueError):
    """A block does not conform to the summands it connects."""


@dataclass(frozen=True)
class Summand:
    """``mult`` copies of ``base`` shifted up by ``shift``, times a fiber class ``twist``."""

    label: str
    base_key: str
    base: GradedDims
    shift: int = 0
    mult: int = 1
    twist: str = ""

    def __post_init__(self):
        if self.shift < 0 or self.shift % 2:
            raise ValueError(f"{self.label}: shift must be even and nonnegative")
        if self.mult < 1:
            raise ValueError(f"{self.label}: multiplicity must be positive")

    def local_dim(self, q: int) -> int:
        return self.base[q - self.shift] if q >= self.shift else 0

    def dim(self, q: int) -> int:
        return self.mult * self.local_dim(q)

    @property
    def profile(self) -> GradedDims:
        return self.base.shifted(self.shift).scaled(self.mult)


class DecomposedSpace:
    """A graded space presented as a direct sum of labeled summands."""

    def __init__(self, name: str, summands: Sequence[Summand]):
        labels = [s.label for s in summands]
        dup = {x for x in labels if labels.count(x) > 1}
        if dup:
            raise ValueError(f"{name}: duplicate summand labels {sorted(dup)}")
        self.name = name
        self.summands = tuple(summands)
        self._by_label = {s.label: s for s in summands}
        total = GradedDims()
        for s in summands:
            total = total + s.profile
        self.total = total

    def __repr__(self) -> str:
        return f"DecomposedSpace({self.name}: {[s.label for s in self.summands]})"

    def __iter__(self):
        return iter(self.summands)

    def __getitem__(self, label: str) -> Summand:
        return self._by_label[label]

    def __contains__(self, label: str) -> bool:
        return label in self._by_label

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.summands)

    def dim(self, q: int) -> int:
        return self.total[q]

    @staticmethod
    def direct_sum(name: str, spaces: Iterable["DecomposedSpace"]) -> "DecomposedSpace":
        return DecomposedSpace(name, [s for sp in spaces for s in sp.summands])


# ---------------------------------------------------------------- terms


@dataclass(frozen=True)
class Scalar:
    """``coef`` times the identity between two summands over the same base."""

    source: str
    target: str
    coef: Fraction

    @property
    def sources(self):
        return (self.source,)

    @property
    def targets(self):
        return (self.target,)


@dataclass(frozen=True)
class Local:
    """An explicit matrix acting copy by copy.

    ``pattern`` is ``"diag"`` (the same matrix on each of the N copies),
    ``"broadcast"`` (one copy to every one of N copies) or ``"gather"``
    (the sum over N copies into one copy).
    """

    source: str
    target: str
    matrix: RationalMatrix
    pattern: str = "diag"

    @property
    def sources(self):
        return (self.source,)

    @property
    def targets(self):
        return (self.target,)


@dataclass(frozen=True)
class FactBacked:
    """A block whose rank is supplied by a named fact."""

    sources: tuple[str, ...]
    targets: tuple[str, ...]
    fact_id: str
    rank: int


@dataclass(frozen=True)
class Unknown:
    sources: tuple[str, ...]
    targets: tuple[str, ...]
    note: str = ""


Term = Union[Scalar, Local, FactBacked, Unknown]


def _is_concrete(t: Term) -> bool:
    return isinstance(t, (Scalar, Local))


@dataclass(frozen=True)
class RankInterval:
    lower: int
    upper: int
    steps: tuple[str, ...] = ()

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def __iter__(self):
        return iter((self.lower, self.upper))


class BlockMap:
    """The degree-q part of a map between two decomposed spaces."""

    def __init__(self, source: DecomposedSpace, target: DecomposedSpace, degree: int,
                 terms: Iterable[Term] = (), name: str = ""):
        self.source = source
        self.target = target
        self.degree = degree
        self.name = name
        kept = []
        for t in terms:
            self._check(t)
            if self._sdim(t.sources) and self._tdim(t.targets):
                if isinstance(t, Scalar) and t.coef == 0:
                    continue
                kept.append(t)
        self.terms = tuple(kept)
        self._memo: dict = {}

    def __repr__(self) -> str:
        return (f"BlockMap({self.name or '?'}, q={self.degree}: "
                f"{self.cols}->{self.rows}, {len(self.terms)} blocks)")

    @property
    def rows(self) -> int:
        return self.target.dim(self.degree)

    @property
    def cols(self) -> int:
        return self.source.dim(self.degree)

    def _sdim(self, labels) -> int:
        return sum(self.source[x].dim(self.degree) for x in labels)

    def _tdim(self, labels) -> int:
        return sum(self.target[x].dim(self.degree) for x in labels)

    def _check(self, t: Term):
        for x in t.sources:
            if x not in self.source:
                raise BlockShapeError(f"unknown source summand {x!r} in {self.source.name}")
        for x in t.targets:
            if x not in self.target:
                raise BlockShapeError(f"unknown target summand {x!r} in {self.target.name}")
        q = self.degree
        if isinstance(t, Scalar):
            s, u = self.source[t.source], self.target[t.target]
            if (s.base_key, s.shift, s.mult) != (u.base_key, u.shift, u.mult):
                raise BlockShapeError(
                    f"scalar block {t.source} -> {t.target} joins different bases or shifts")
        elif isinstance(t, Local):
            s, u = self.source[t.source], self.target[t.target]
            if t.matrix.shape != (u.local_dim(q), s.local_dim(q)):
                raise BlockShapeError(
                    f"block {t.source} -> {t.target} has shape {t.matrix.shape}, "
                    f"expected {(u.local_dim(q), s.local_dim(q))} in degree {q}")
            ok = {"diag": s.mult == u.mult,
                  "broadcast": s.mult == 1,
                  "gather": u.mult == 1}.get(t.pattern)
            if not ok:
                raise BlockShapeError(f"pattern {t.pattern!r} does not fit multiplicities "
                                      f"{s.mult} -> {u.mult}")
        elif isinstance(t, FactBacked):
            cap = min(self._sdim(t.sources), self._tdim(t.targets))
            if not 0 <= t.rank <= cap:
                raise BlockShapeError(f"fact {t.fact_id} claims rank {t.rank} on a block of "
                                      f"capacity {cap} in degree {q}")

    # ------------------------------------------------------------ ranks

    def term_rank(self, t: Term) -> int | None:
        if isinstance(t, Scalar):
            return self._sdim(t.sources)
        if isinstance(t, Local):
            r = t.matrix.rank()
            if t.pattern == "diag":
                r *= self.source[t.source].mult
            return r
        if isinstance(t, FactBacked):
            return t.rank
        return None

    def _term_upper(self, t: Term) -> int:
        r = self.term_rank(t)
        if r is not None:
            return r
        return min(self._sdim(t.sources), self._tdim(t.targets))

    def _active(self, rows: frozenset, cols: frozenset) -> list[Term]:
        out = []
        for t in self.terms:
            src = tuple(x for x in t.sources if x in cols)
            tgt = tuple(x for x in t.targets if x in rows)
            if not src or not tgt:
                continue
            if len(src) == len(t.sources) and len(tgt) == len(t.targets):
                out.append(t)
            else:
                note = getattr(t, "fact_id", "") or getattr(t, "note", "")
                out.append(Unknown(src, tgt, f"restriction of {note}".strip()))
        return out

    def _components(self, terms: list[Term]) -> list[list[Term]]:
        parent: dict = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t in terms:
            nodes = [("s", x) for x in t.sources] + [("t", x) for x in t.targets]
            for n in nodes[1:]:
                parent[find(n)] = find(nodes[0])
        groups: dict = {}
        for t in terms:
            groups.setdefault(find(("s", t.sources[0])), []).append(t)
        return list(groups.values())

    def _concrete_rank(self, terms: list[Term]) -> int:
        total = 0
        for comp in self._components(terms):
            if all(isinstance(t, Scalar) for t in comp):
                srcs = sorted({t.source for t in comp})
                tgts = sorted({t.target for t in comp})
                si = {x: i for i, x in enumerate(srcs)}
                ti = {x: i for i, x in enumerate(tgts)}
                coef = [[Fraction(0)] * len(srcs) for _ in tgts]
                for t in comp:
                    coef[ti[t.target]][si[t.source]] += t.coef
                per = self.source[srcs[0]].dim(self.degree)
                total += _rank(coef, len(srcs)) * per
            else:
                total += self._isotypic_rank(comp)
        return total

    def _isotypic_rank(self, comp: list[Term]) -> int:
        """Rank of a concrete component mixing N-fold and single summands.

        The copies are permuted by the symmetric group, so the map splits into
        the invariant part (one representative per N-fold summand) and N-1
        copies of the complementary part, where only N-fold summands live.
        """
        q = self.degree
        srcs = sorted({t.source for t in comp})
        tgts = sorted({t.target for t in comp})
        mults = {self.source[x].mult for x in srcs} | {self.target[x].mult for x in tgts}
        mults.discard(1)
        if len(mults) > 1:
            raise BlockShapeError(f"component mixes multiplicities {sorted(mults)}")
        n = mults.pop() if mults else 1

        def layout(labels, space, only_multi):
            off, pos = 0, {}
            for x in labels:
                s = space[x]
                if only_multi and s.mult == 1:
                    continue
                pos[x] = off
                off += s.local_dim(q)
            return pos, off

        def build(only_multi):
            cpos, ncols = layout(srcs, self.source, only_multi)
            rpos, nrows = layout(tgts, self.target, only_multi)
            if nrows * ncols > 4_000_000:
                raise BlockShapeError("explicit component too large for dense elimination")
            mat = [[Fraction(0)] * ncols for _ in range(nrows)]
            for t in comp:
                if t.source not in cpos or t.target not in rpos:
                    continue
                r0, c0 = rpos[t.target], cpos[t.source]
                if isinstance(t, Scalar):
                    for i in range(self.source[t.source].local_dim(q)):
                        mat[r0 + i][c0 + i] += t.coef
                    continue
                if only_multi and t.pattern != "diag":
                    continue
                scale = n if (t.pattern == "gather" and not only_multi) else 1
                for i in range(t.matrix.rows):
                    for j in range(t.matrix.cols):
                        mat[r0 + i][c0 + j] += scale * t.matrix[i, j]
            return _rank(mat, ncols)

        r = build(False)
        if n > 1:
            r += (n - 1) * build(True)
        return r

    def _lower(self, rows: frozenset, cols: frozenset, budget: list[int]) -> tuple[int, tuple[str, ...]]:
        key = (rows, cols)
        if key in self._memo:
            return self._memo[key]
        terms = self._active(rows, cols)
        comps = self._components(terms)
        if len(comps) > 1:
            val, steps = 0, ()
            for comp in comps:
                r = frozenset(x for t in comp for x in t.targets)
                c = frozenset(x for t in comp for x in t.sources)
                v, s = self._lower(r, c, budget)
                val += v
                steps += s
            self._memo[key] = (val, steps)
            return val, steps
        acc, steps = 0, []
        while True:
            terms = self._active(rows, cols)
            peeled = False
            for t in terms:
                r = self.term_rank(t)
                if r is None:
                    continue
                colex = not any(o is not t and set(o.sources) & set(t.sources) for o in terms)
                rowex = not any(o is not t and set(o.targets) & set(t.targets) for o in terms)
                if (colex and r == self._tdim(t.targets)) or (rowex and r == self._sdim(t.sources)):
                    acc += r
                    steps.append(_describe(t, r))
                    rows = rows - set(t.targets)
                    cols = cols - set(t.sources)
                    peeled = True
                    break
            if not peeled:
                break
        if not terms:
            result = (acc, tuple(steps))
        elif all(_is_concrete(t) for t in terms):
            r = self._concrete_rank(terms)
            result = (acc + r, tuple(steps) + (f"explicit remainder rank {r}",))
        else:
            budget[0] -= 1
            if budget[0] < 0:
                raise RuntimeError("rank search budget exhausted")
            best = (0, ())
            opaque = [t for t in terms if not _is_concrete(t)]
            for t in opaque:
                r = self.term_rank(t)
                if r is None:
                    continue
                colex = not any(o is not t and set(o.sources) & set(t.sources) for o in terms)
                rowex = not any(o is not t and set(o.targets) & set(t.targets) for o in terms)
                if colex or rowex:
                    v, s = self._lower(rows - set(t.targets), cols - set(t.sources), budget)
                    if r + v > best[0]:
                        best = (r + v, (_describe(t, r),) + s)
            for x in sorted({x for t in opaque for x in t.sources}):
                v, s = self._lower(rows, cols - {x}, budget)
                if v > best[0]:
                    best = (v, (f"drop column {x}",) + s)
            for x in sorted({x for t in opaque for x in t.targets}):
                v, s = self._lower(rows - {x}, cols, budget)
                if v > best[0]:
                    best = (v, (f"drop row {x}",) + s)
            result = (acc + best[0], tuple(steps) + best[1])
        self._memo[key] = result
        return result

    def _upper(self) -> int:
        total = 0
        for comp in self._components(list(self.terms)):
            rows = self._tdim({x for t in comp for x in t.targets})
            cols = self._sdim({x for t in comp for x in t.sources})
            if all(_is_concrete(t) for t in comp):
                total += self._concrete_rank(comp)
            else:
                total += min(rows, cols, sum(self._term_upper(t) for t in comp))
        return min(total, self.rows, self.cols)

    def rank_interval(self) -> RankInterval:
        lo, steps = self._lower(frozenset(self.target.labels), frozenset(self.source.labels), [20000])
        hi = self._upper()
        if lo > hi:
            raise AssertionError(f"{self.name}: rank lower bound {lo} exceeds upper bound {hi}")
        return RankInterval(lo, hi, steps)

    def rank(self) -> int:
        """Exact rank; raises if the blocks do not determine it."""
        iv = self.rank_interval()
        if not iv.exact:
            raise ValueError(f"{self.name} in degree {self.degree}: rank only known in [{iv.lower}, {iv.upper}]")
        return iv.lower

    def naive_rank(self) -> int:
        """Rank after deleting every Unknown block (a sanity figure, not a bound)."""
        known = [t for t in self.terms if not isinstance(t, Unknown)]
        sub = BlockMap(self.source, self.target, self.degree, known, name=self.name)
        return sub.rank_interval().lower

    def restricted(self, sources: Iterable[str] | None = None,
                   targets: Iterable[str] | None = None) -> "BlockMap":
        """The blocks between chosen summands, as a map of the same shape."""
        src = set(sources) if sources is not None else set(self.source.labels)
        tgt = set(targets) if targets is not None else set(self.target.labels)
        s = DecomposedSpace(self.source.name, [x for x in self.source if x.label in src])
        u = DecomposedSpace(self.target.name, [x for x in self.target if x.label in tgt])
        keep = [t for t in self.terms if set(t.sources) <= src and set(t.targets) <= tgt]
        return BlockMap(s, u, self.degree, keep, name=self.name)


def _describe(t: Term, r: int) -> str:
    arrow = f"{','.join(t.sources)} -> {','.join(t.targets)}"
    if isinstance(t, Scalar):
        return f"{t.coef}*id {arrow} (rank {r})"
    if isinstance(t, Local):
        return f"explicit {t.pattern} {arrow} (rank {r})"
    if isinstance(t, FactBacked):
        return f"[{t.fact_id}] {arrow} (rank {r})"
    return f"? {arrow}"
