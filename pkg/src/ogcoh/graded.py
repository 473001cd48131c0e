"""Finitely supported Betti profiles and the operations that build them."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of a graded vector space, stored densely from degree 0.

    Trailing zeros are trimmed on construction, so two profiles compare equal
    exactly when they agree in every degree.
    """

    dims: tuple[int, ...] = ()

    def __post_init__(self):
        vals = tuple(self.dims)
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"dimension must be an int, got {v!r}")
            if v < 0:
                raise ValueError(f"negative dimension {v}")
        n = len(vals)
        while n and vals[n - 1] == 0:
            n -= 1
        object.__setattr__(self, "dims", vals[:n])

    @classmethod
    def from_map(cls, m: Mapping[int, int]) -> "GradedDims":
        if not m:
            return cls(())
        if min(m) < 0:
            raise ValueError("degrees must be nonnegative")
        out = [0] * (max(m) + 1)
        for k, v in m.items():
            out[k] += v
        return cls(tuple(out))

    @classmethod
    def even(cls, values: Sequence[int]) -> "GradedDims":
        """Place ``values`` in degrees 0, 2, 4, ..."""
        out = []
        for v in values:
            out.extend((v, 0))
        return cls(tuple(out))

    @classmethod
    def point(cls, count: int = 1) -> "GradedDims":
        return cls((count,))

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.dims):
            return self.dims[k]
        return 0

    def __iter__(self):
        return iter(self.dims)

    def __len__(self):
        return len(self.dims)

    @property
    def top_degree(self) -> int:
        """Highest degree with a nonzero entry, or -1 for the zero space."""
        return len(self.dims) - 1

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def euler(self) -> int:
        return sum(v if k % 2 == 0 else -v for k, v in enumerate(self.dims))

    def items(self):
        return ((k, v) for k, v in enumerate(self.dims) if v)

    def padded(self, top: int) -> list[int]:
        """Dense list of entries for degrees 0..top inclusive."""
        if top < self.top_degree:
            raise ValueError(f"profile has nonzero entries above degree {top}")
        return [self[k] for k in range(top + 1)]

    def shifted(self, s: int) -> "GradedDims":
        """The profile of ``V[-s]``: entry k becomes entry k + s."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        if not self.dims:
            return self
        return GradedDims((0,) * s + self.dims)

    def scaled(self, n: int) -> "GradedDims":
        return GradedDims(tuple(n * v for v in self.dims))

    def __add__(self, other: "GradedDims") -> "GradedDims":
        n = max(len(self), len(other))
        return GradedDims(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "GradedDims") -> "GradedDims":
        n = max(len(self), len(other))
        diff = [self[k] - other[k] for k in range(n)]
        bad = [k for k, v in enumerate(diff) if v < 0]
        if bad:
            raise ValueError(f"difference is negative in degrees {bad}")
        return GradedDims(tuple(diff))

    def is_symmetric(self, top: int) -> bool:
        """Poincare symmetry b_k = b_{top-k}."""
        if self.top_degree > top:
            return False
        return all(self[k] == self[top - k] for k in range(top + 1))

    def odd_vanishes(self) -> bool:
        return all(v == 0 for k, v in enumerate(self.dims) if k % 2)

    def __repr__(self) -> str:
        return f"GradedDims({list(self.dims)})"


def sym_square_invariants(g: GradedDims) -> GradedDims:
    """Graded symmetric square, with the Koszul sign in odd degrees."""
    top = g.top_degree
    if top < 0:
        return GradedDims()
    out = [0] * (2 * top + 1)
    for i in range(top + 1):
        gi = g[i]
        if not gi:
            continue
        for j in range(i + 1, top + 1):
            out[i + j] += gi * g[j]
        out[2 * i] += comb(gi + 1, 2) if i % 2 == 0 else comb(gi, 2)
    return GradedDims(tuple(out))


def exterior_invariants_abelian(first_betti: int) -> GradedDims:
    """Invariants of -1 on the cohomology of a torus with given b1.

    H^k of the torus is the k-th exterior power of H^1, on which -1 acts by
    (-1)^k, so only even k survive.
    """
    if first_betti < 0:
        raise ValueError("first Betti number must be nonnegative")
    return GradedDims(tuple(comb(first_betti, k) if k % 2 == 0 else 0
                            for k in range(first_betti + 1)))


def bundle_dims(base: GradedDims, fiber: GradedDims) -> GradedDims:
    """Leray-Hirsch profile of a fibration with trivial monodromy."""
    if base.top_degree < 0 or fiber.top_degree < 0:
        return GradedDims()
    out = [0] * (base.top_degree + fiber.top_degree + 1)
    for p, a in base.items():
        for q, b in fiber.items():
            out[p + q] += a * b
    return GradedDims(tuple(out))


def goettsche_betti(surface: Sequence[int], n: int) -> GradedDims:
    """Betti numbers of the Hilbert scheme of n points on a surface.

    Expands the product over k >= 1 and i = 0..4 of
    (1 - (-1)^i z^(2k-2+i) t^k)^(-(-1)^i b_i) up to t^n and returns the
    coefficient of t^n as a polynomial in z.
    """
    b = list(surface) + [0] * (5 - len(surface))
    if len(b) != 5 or any(x < 0 for x in b):
        raise ValueError("surface Betti vector must have five nonnegative entries")
    if n < 0:
        raise ValueError("n must be nonnegative")
    # series[m] is a dict z-degree -> coefficient for the t^m part
    series: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(5):
            if not b[i]:
                continue
            a = 2 * k - 2 + i
            factor: dict[tuple[int, int], int] = {}
            for m in range(n // k + 1):
                c = comb(b[i] + m - 1, m) if i % 2 == 0 else comb(b[i], m)
                if c:
                    factor[(k * m, a * m)] = c
            new: list[dict[int, int]] = [{} for _ in range(n + 1)]
            for tdeg, poly in enumerate(series):
                for zdeg, c0 in poly.items():
                    for (dt, dz), c1 in factor.items():
                        if tdeg + dt > n:
                            continue
                        slot = new[tdeg + dt]
                        slot[zdeg + dz] = slot.get(zdeg + dz, 0) + c0 * c1
            series = new
    return GradedDims.from_map({d: c for d, c in series[n].items() if c})


K3_BETTI = (1, 0, 22, 0, 1)


def goettsche_k3_hilb2() -> GradedDims:
    return goettsche_betti(K3_BETTI, 2)


def euler_of(profiles: Iterable[tuple[int, GradedDims]]) -> int:
    """Signed sum of Euler characteristics, one sign per profile."""
    return sum(sign * g.euler for sign, g in profiles)
