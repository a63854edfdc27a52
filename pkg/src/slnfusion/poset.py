"""The poset of two-part splittings of a dominant weight.

Elements are unordered pairs (mu1, mu2) of dominant weights with
mu1 + mu2 = lam, compared entrywise through their min-vectors: the tuple
min(mu1(h_a), mu2(h_a)) over all positive roots a.  The pair (lam, 0) is the
minimum; an explicit halving formula produces the maximum.  Along the order,
differences of Littlewood-Richardson products give Schur-positivity evidence,
and the Littlewood-Richardson expansion at the maximal pair doubles as a
character prediction for the local Weyl module of the current algebra
truncated at t^2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from .cases import proven_regime
from .dyck import BoundVector, bounds_from_pair
from .tensor import DecompositionMap, lr_coefficients, schur_product_diff
from .typea import Weight, weyl_dim

__all__ = [
    "WeightPair",
    "enumerate_pairs",
    "order_leq",
    "maximal_pair",
    "SchurComparison",
    "SchurMonotonicityReport",
    "schur_monotonicity_check",
    "WeylModulePrediction",
    "weyl_character_prediction",
    "PosetReport",
    "poset_report",
]


@dataclass(frozen=True)
class WeightPair:
    """Unordered pair of dominant weights; the representative with the
    lexicographically larger parts vector is stored first."""

    first: Weight
    second: Weight

    def __post_init__(self):
        if self.first.n != self.second.n:
            raise ValueError(
                f"rank mismatch: sl_{self.first.n} vs sl_{self.second.n}"
            )
        for w in (self.first, self.second):
            if not w.is_dominant:
                raise ValueError(f"pair components must be dominant, got {w}")
        if self.second.to_parts() > self.first.to_parts():
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    @property
    def n(self) -> int:
        return self.first.n

    @property
    def total(self) -> Weight:
        return self.first + self.second

    @property
    def min_vector(self) -> BoundVector:
        """Pairwise minimum of coroot pairings over all positive roots."""
        return bounds_from_pair(self.first, self.second)

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"

    def to_json(self) -> dict:
        return {"first": self.first.to_json(), "second": self.second.to_json()}

    @classmethod
    def from_json(cls, n: int, data: Mapping) -> "WeightPair":
        return cls(Weight(n, tuple(data["first"])), Weight(n, tuple(data["second"])))


def enumerate_pairs(lam: Weight) -> list[WeightPair]:
    """All unordered dominant pairs summing to lam, largest first component
    first."""
    if not lam.is_dominant:
        raise ValueError(f"expected a dominant weight, got {lam}")
    seen: set[WeightPair] = set()
    for coords in itertools.product(*(range(m + 1) for m in lam.coords)):
        mu = Weight(lam.n, coords)
        seen.add(WeightPair(mu, lam - mu))
    return sorted(
        seen,
        key=lambda p: ([-x for x in p.first.to_parts()], [-x for x in p.second.to_parts()]),
    )


def order_leq(pair_a: WeightPair, pair_b: WeightPair) -> bool:
    """Entrywise min-vector comparison; only defined within one poset."""
    if pair_a.total != pair_b.total:
        raise ValueError(
            f"pairs decompose different weights: {pair_a.total} vs {pair_b.total}"
        )
    return pair_a.min_vector.leq(pair_b.min_vector)


def maximal_pair(lam: Weight) -> WeightPair:
    """The unique maximal pair: coordinates are halved, with odd coordinates
    rounded down/up alternately along the odd positions."""
    if not lam.is_dominant:
        raise ValueError(f"expected a dominant weight, got {lam}")
    half = []
    odd_seen = 0
    for m in lam.coords:
        if m % 2 == 0:
            half.append(m // 2)
        else:
            odd_seen += 1
            # j-th odd coordinate gets (m + (-1)^j) / 2
            half.append((m + (-1) ** odd_seen) // 2)
    mu = Weight(lam.n, half)
    pair = WeightPair(mu, lam - mu)
    assert pair.first.is_dominant and pair.second.is_dominant
    return pair


@dataclass(frozen=True)
class SchurComparison:
    """One comparable pair of poset elements and the sign analysis of the
    higher-minus-lower product difference."""

    low: WeightPair
    high: WeightPair
    nonnegative: bool
    negative_terms: tuple[tuple[Weight, int], ...]


@dataclass(frozen=True)
class SchurMonotonicityReport:
    lam: Weight
    comparisons: tuple[SchurComparison, ...]

    @property
    def all_nonnegative(self) -> bool:
        return all(c.nonnegative for c in self.comparisons)

    def counterexamples(self) -> list[SchurComparison]:
        return [c for c in self.comparisons if not c.nonnegative]


def schur_monotonicity_check(lam: Weight) -> SchurMonotonicityReport:
    """For every strictly comparable pair A < B in the poset of lam, expand
    product(B) - product(A) in the irreducible basis and record whether all
    coefficients are nonnegative (higher pair minus lower pair; the minimum
    element's product occurs in every other product, fixing the direction)."""
    nodes = enumerate_pairs(lam)
    comparisons = []
    for low, high in itertools.permutations(nodes, 2):
        if not order_leq(low, high):
            continue
        diff = schur_product_diff((high.first, high.second), (low.first, low.second))
        negatives = tuple(
            (tau, m) for tau, m in diff.items_sorted() if m < 0
        )
        comparisons.append(
            SchurComparison(
                low=low,
                high=high,
                nonnegative=diff.nonnegative,
                negative_terms=negatives,
            )
        )
    return SchurMonotonicityReport(lam=lam, comparisons=tuple(comparisons))


@dataclass(frozen=True)
class WeylModulePrediction:
    """Predicted character of the t^2-truncated local Weyl module at lam:
    the Littlewood-Richardson expansion at the maximal pair.  Exact in the
    proven regimes; conjectural otherwise."""

    lam: Weight
    max_pair: WeightPair
    character: DecompositionMap
    dimension: int
    proven_regime: str | None

    @property
    def conjectural(self) -> bool:
        return self.proven_regime is None

    def to_json(self) -> dict:
        return {
            "n": self.lam.n,
            "lambda": self.lam.to_json(),
            "max_pair": self.max_pair.to_json(),
            "terms": [
                {"tau": tau.to_json(), "mult": m}
                for tau, m in self.character.items_sorted()
            ],
            "dim": self.dimension,
            "proven_regime": self.proven_regime,
            "conjectural": self.conjectural,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "WeylModulePrediction":
        n = int(data["n"])
        lam = Weight(n, tuple(data["lambda"]))
        pair = WeightPair.from_json(n, data["max_pair"])
        terms = {
            Weight(n, tuple(t["tau"])): int(t["mult"]) for t in data["terms"]
        }
        return cls(
            lam=lam,
            max_pair=pair,
            character=DecompositionMap(n, terms),
            dimension=int(data["dim"]),
            proven_regime=data["proven_regime"],
        )


def weyl_character_prediction(lam: Weight) -> WeylModulePrediction:
    """Character prediction for the truncated local Weyl module at lam."""
    pair = maximal_pair(lam)
    character = lr_coefficients(pair.first, pair.second)
    dim = weyl_dim(pair.first) * weyl_dim(pair.second)
    assert character.dimension() == dim
    return WeylModulePrediction(
        lam=lam,
        max_pair=pair,
        character=character,
        dimension=dim,
        proven_regime=proven_regime(pair.first, pair.second),
    )


@dataclass(frozen=True)
class PosetReport:
    """Nodes, transitively reduced order edges (with a Schur-positivity flag
    on each), and the extremal elements of one poset."""

    lam: Weight
    nodes: tuple[WeightPair, ...]
    edges: tuple[tuple[int, int, bool], ...]  # (low index, high index, schur_positive)
    min_pair: WeightPair
    max_pair: WeightPair

    def to_json(self) -> dict:
        return {
            "n": self.lam.n,
            "lambda": self.lam.to_json(),
            "nodes": [p.to_json() for p in self.nodes],
            "edges": [
                {"from": a, "to": b, "schur_positive": pos}
                for a, b, pos in self.edges
            ],
            "min_pair": self.min_pair.to_json(),
            "max_pair": self.max_pair.to_json(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PosetReport":
        n = int(data["n"])
        nodes = tuple(WeightPair.from_json(n, p) for p in data["nodes"])
        edges = tuple(
            (int(e["from"]), int(e["to"]), bool(e["schur_positive"]))
            for e in data["edges"]
        )
        return cls(
            lam=Weight(n, tuple(data["lambda"])),
            nodes=nodes,
            edges=edges,
            min_pair=WeightPair.from_json(n, data["min_pair"]),
            max_pair=WeightPair.from_json(n, data["max_pair"]),
        )


def poset_report(lam: Weight) -> PosetReport:
    """Full poset snapshot: cover edges only (transitive reduction), each
    cover labeled with the sign of its Schur product difference."""
    nodes = enumerate_pairs(lam)
    k = len(nodes)
    strictly_below = [
        [
            a != b and order_leq(nodes[a], nodes[b]) and not order_leq(nodes[b], nodes[a])
            for b in range(k)
        ]
        for a in range(k)
    ]
    edges = []
    for a in range(k):
        for b in range(k):
            if not strictly_below[a][b]:
                continue
            if any(strictly_below[a][c] and strictly_below[c][b] for c in range(k)):
                continue
            diff = schur_product_diff(
                (nodes[b].first, nodes[b].second), (nodes[a].first, nodes[a].second)
            )
            edges.append((a, b, diff.nonnegative))
    min_pair = WeightPair(lam, Weight.zero(lam.n))
    max_pair = maximal_pair(lam)
    assert all(order_leq(min_pair, p) for p in nodes)
    assert all(order_leq(p, max_pair) for p in nodes)
    return PosetReport(
        lam=lam,
        nodes=tuple(nodes),
        edges=tuple(edges),
        min_pair=min_pair,
        max_pair=max_pair,
    )
