"""Dyck paths in the positive roots of sl_n and their lattice polytopes.

A path is a nonempty sequence of positive roots where alpha_{i,j} is followed
by alpha_{i+1,j} or alpha_{i,j+1}; its base root combines the first row index
with the last column index.  A bound vector a = (a_alpha) cuts out the
polytope { x >= 0 : sum_{alpha in p} x_alpha <= a_{base(p)} for every path p },
and the integer points of that polytope are the objects everything downstream
counts.  Enumeration runs on the pruned system (a path whose support is
contained in another path's support with the same base is redundant) and the
full system is retained for post-hoc checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .typea import (
    Root,
    Weight,
    pairing,
    positive_root_index,
    positive_roots,
    root_as_weight,
)

__all__ = [
    "DyckPath",
    "PathInequality",
    "BoundVector",
    "LatticePoint",
    "dyck_paths",
    "inequalities",
    "bounds_from_pair",
    "bounds_from_weight",
    "lattice_points",
    "point_satisfies",
    "dominant_points",
]


@dataclass(frozen=True)
class DyckPath:
    """A successor-rule sequence of positive roots."""

    steps: tuple[Root, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a path needs at least one step")
        n = self.steps[0].n
        for a, b in zip(self.steps, self.steps[1:]):
            if b.n != n:
                raise ValueError("path steps must share one rank")
            if not ((b.i, b.j) == (a.i + 1, a.j) or (b.i, b.j) == (a.i, a.j + 1)):
                raise ValueError(
                    f"illegal step {a} -> {b}: only (i+1,j) or (i,j+1) may follow (i,j)"
                )

    @property
    def n(self) -> int:
        return self.steps[0].n

    @property
    def base(self) -> Root:
        """Root spanning the whole path: first row index, last column index."""
        return Root(self.n, self.steps[0].i, self.steps[-1].j)

    def __len__(self) -> int:
        return len(self.steps)


@lru_cache(maxsize=None)
def dyck_paths(n: int) -> tuple[DyckPath, ...]:
    """Every path in the positive roots of sl_n, in depth-first order from
    each starting root."""
    out: list[DyckPath] = []

    def extend(steps: list[Root]) -> None:
        out.append(DyckPath(tuple(steps)))
        i, j = steps[-1].i, steps[-1].j
        if i + 1 <= j:
            steps.append(Root(n, i + 1, j))
            extend(steps)
            steps.pop()
        if j + 1 <= n - 1:
            steps.append(Root(n, i, j + 1))
            extend(steps)
            steps.pop()

    for start in positive_roots(n):
        extend([start])
    return tuple(out)


@dataclass(frozen=True)
class PathInequality:
    """sum of x over `support` bounded by the entry of the base root."""

    support: tuple[Root, ...]
    base: Root


@lru_cache(maxsize=None)
def inequalities(n: int, prune: bool = True) -> tuple[PathInequality, ...]:
    """The inequality system of sl_n, one inequality per path; with
    prune=True, inequalities implied by a larger support with the same base
    are dropped (valid for every bound vector at once)."""
    all_ineqs = [PathInequality(p.steps, p.base) for p in dyck_paths(n)]
    if not prune:
        return tuple(all_ineqs)
    by_base: dict[Root, list[PathInequality]] = {}
    for iq in all_ineqs:
        by_base.setdefault(iq.base, []).append(iq)
    kept: list[PathInequality] = []
    for iq in all_ineqs:
        sup = set(iq.support)
        redundant = any(
            other is not iq and sup < set(other.support) for other in by_base[iq.base]
        )
        if not redundant:
            kept.append(iq)
    return tuple(kept)


@dataclass(frozen=True)
class BoundVector:
    """Nonnegative bound a_alpha for every positive root, stored in root order."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        expected = self.n * (self.n - 1) // 2
        if len(values) != expected:
            raise ValueError(
                f"bound vector for sl_{self.n} needs {expected} entries, got {len(values)}"
            )
        if any(v < 0 for v in values):
            raise ValueError("bounds must be nonnegative")
        object.__setattr__(self, "values", values)

    def of(self, root: Root) -> int:
        return self.values[positive_root_index(root)]

    def leq(self, other: "BoundVector") -> bool:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: sl_{self.n} vs sl_{other.n}")
        return all(a <= b for a, b in zip(self.values, other.values))


def bounds_from_pair(lambda1: Weight, lambda2: Weight) -> BoundVector:
    """a_alpha = min(lambda1(h_alpha), lambda2(h_alpha))."""
    lambda1._check_same_rank(lambda2)
    for w in (lambda1, lambda2):
        if not w.is_dominant:
            raise ValueError(f"bounds_from_pair requires dominant weights, got {w}")
    vals = tuple(
        min(pairing(lambda1, r), pairing(lambda2, r)) for r in positive_roots(lambda1.n)
    )
    return BoundVector(lambda1.n, vals)


def bounds_from_weight(weight: Weight) -> BoundVector:
    """a_alpha = weight(h_alpha) for a single dominant weight."""
    if not weight.is_dominant:
        raise ValueError(f"bounds_from_weight requires a dominant weight, got {weight}")
    return BoundVector(weight.n, tuple(pairing(weight, r) for r in positive_roots(weight.n)))


@dataclass(frozen=True)
class LatticePoint:
    """Exponent vector s = (s_alpha), one nonnegative entry per positive root."""

    n: int
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(v) for v in self.exps)
        expected = self.n * (self.n - 1) // 2
        if len(exps) != expected:
            raise ValueError(
                f"lattice point for sl_{self.n} needs {expected} exponents, got {len(exps)}"
            )
        if any(v < 0 for v in exps):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def zero(cls, n: int) -> "LatticePoint":
        return cls(n, (0,) * (n * (n - 1) // 2))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "LatticePoint":
        """The point e_{i,j}: exponent 1 on alpha_{i,j}, zero elsewhere."""
        exps = [0] * (n * (n - 1) // 2)
        exps[positive_root_index(Root(n, i, j))] = 1
        return cls(n, tuple(exps))

    @classmethod
    def from_sparse(cls, n: int, triples: Iterable[tuple[int, int, int]]) -> "LatticePoint":
        exps = [0] * (n * (n - 1) // 2)
        for i, j, s in triples:
            exps[positive_root_index(Root(n, i, j))] += int(s)
        return cls(n, tuple(exps))

    def coefficient(self, root: Root) -> int:
        return self.exps[positive_root_index(root)]

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: sl_{self.n} vs sl_{other.n}")
        return LatticePoint(self.n, tuple(a + b for a, b in zip(self.exps, other.exps)))

    @property
    def deg(self) -> int:
        """Total exponent sum."""
        return sum(self.exps)

    @property
    def wt(self) -> Weight:
        """sum s_alpha * alpha, as a Weight."""
        acc = Weight.zero(self.n)
        for root, s in zip(positive_roots(self.n), self.exps):
            if s:
                acc = acc + s * root_as_weight(root)
        return acc

    @property
    def hei(self) -> int:
        """Simple-root coefficient total of wt: sum s_alpha * height(alpha)."""
        return sum(s * r.height for s, r in zip(self.exps, positive_roots(self.n)))

    def sort_key(self) -> tuple:
        return (self.deg, self.exps)

    def to_json(self) -> dict:
        trips = [
            [r.i, r.j, s]
            for r, s in zip(positive_roots(self.n), self.exps)
            if s
        ]
        return {"exps": trips}

    @classmethod
    def from_json(cls, n: int, data: Mapping) -> "LatticePoint":
        return cls.from_sparse(n, ((i, j, s) for i, j, s in data["exps"]))


def _compiled_system(n: int, prune: bool) -> list[tuple[tuple[int, ...], int]]:
    # (coordinate positions, base position) per inequality
    compiled = []
    for iq in inequalities(n, prune):
        idxs = tuple(positive_root_index(r) for r in iq.support)
        compiled.append((idxs, positive_root_index(iq.base)))
    return compiled


def lattice_points(bounds: BoundVector, *, prune: bool = True) -> list[LatticePoint]:
    """All integer points of the polytope cut out by `bounds`, enumerated by
    depth-first search in root order with running partial sums, returned
    sorted by (degree, exponents)."""
    n = bounds.n
    num = len(bounds.values)
    system = _compiled_system(n, prune)
    limits = [bounds.values[base] for _, base in system]
    touching: list[list[int]] = [[] for _ in range(num)]
    for s, (idxs, _) in enumerate(system):
        for k in idxs:
            touching[k].append(s)
    sums = [0] * len(system)
    acc = [0] * num
    out: list[LatticePoint] = []

    def rec(k: int) -> None:
        if k == num:
            out.append(LatticePoint(n, tuple(acc)))
            return
        ids = touching[k]
        ub = min(limits[s] - sums[s] for s in ids)
        for v in range(ub + 1):
            acc[k] = v
            rec(k + 1)
            for s in ids:
                sums[s] += 1
        acc[k] = 0
        for s in ids:
            sums[s] -= ub + 1

    rec(0)
    out.sort(key=LatticePoint.sort_key)
    return out


def point_satisfies(point: LatticePoint, bounds: BoundVector, *, prune: bool = False) -> bool:
    """Membership test against the (by default full, unpruned) system."""
    if point.n != bounds.n:
        raise ValueError(f"rank mismatch: sl_{point.n} vs sl_{bounds.n}")
    for idxs, base in _compiled_system(point.n, prune):
        if sum(point.exps[k] for k in idxs) > bounds.values[base]:
            return False
    return True


def dominant_points(
    lambda1: Weight, lambda2: Weight
) -> list[tuple[LatticePoint, Weight]]:
    """Lattice points s of the pair polytope whose shifted weight
    lambda1 + lambda2 - wt(s) is dominant, each with that weight.  These are
    the candidates bounding the highest-weight points from above."""
    total = lambda1 + lambda2
    out = []
    for pt in lattice_points(bounds_from_pair(lambda1, lambda2)):
        tau = total - pt.wt
        if tau.is_dominant:
            out.append((pt, tau))
    return out
