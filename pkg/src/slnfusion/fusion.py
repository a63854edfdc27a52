"""Explicit sl_n modules and graded fusion products of two factors.

`build_irrep` realizes V(lambda) as the cyclic span of the top vector inside
a tensor product of fundamental modules (k-th exterior powers of the vector
representation, with k-subsets of {1..n} as basis), producing exact rational
generator matrices.  `fusion_graded` then filters V(lambda1) (x) V(lambda2),
viewed as a two-point evaluation module over the current algebra at distinct
points c1 and c2, by polynomial degree: starting from the product of the two
top vectors it alternately closes under the plain sl_n action (degree 0) and
applies the degree-one current generators, recording per-weight dimensions
after every stage.  Successive differences of those characters are genuine
module characters; `peel_character` decomposes each into irreducibles, giving
the graded decomposition.

Every step is a weight-space-local row reduction over exact integers, which
is what keeps near-10^4-dimensional tensor products tractable here.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .linalg import IntegerRowSpan, RationalRowBasis
from .tensor import DecompositionMap
from .typea import (
    Weight,
    root_lattice_height,
    simple_root_weight,
    weight_multiplicities,
    weyl_dim,
)

__all__ = [
    "DEFAULT_DIM_CAP",
    "DimensionCapError",
    "ExplicitModule",
    "build_irrep",
    "GradedDecomposition",
    "fusion_graded",
    "peel_character",
]

DEFAULT_DIM_CAP = 400


class DimensionCapError(ValueError):
    """Requested module exceeds the construction dimension cap."""

    def __init__(self, message: str, dim: int, cap: int):
        super().__init__(message)
        self.dim = dim
        self.cap = cap


# ---------------------------------------------------------------------------
# Fundamental modules and their tensor products.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _fundamental_factor(n: int, k: int):
    """Basis (k-subsets in lexicographic order), weights, and single-entry
    generator maps of the k-th fundamental module of sl_n."""
    subsets = list(itertools.combinations(range(1, n + 1), k))
    index = {s: a for a, s in enumerate(subsets)}
    weights = tuple(
        Weight.from_parts(n, [1 if i in s else 0 for i in range(1, n + 1)])
        for s in subsets
    )
    e_maps = []
    f_maps = []
    for a in range(1, n):
        e_map: dict[int, int] = {}
        f_map: dict[int, int] = {}
        for s in subsets:
            if a in s and a + 1 not in s:
                f_map[index[s]] = index[tuple(sorted(set(s) - {a} | {a + 1}))]
            if a + 1 in s and a not in s:
                e_map[index[s]] = index[tuple(sorted(set(s) - {a + 1} | {a}))]
        e_maps.append(e_map)
        f_maps.append(f_map)
    return len(subsets), weights, tuple(e_maps), tuple(f_maps)


class _Ambient:
    """Tensor product of fundamental factors, addressed by mixed-radix flat
    indices; factors appear in descending node order."""

    def __init__(self, lam: Weight):
        self.n = lam.n
        factors = []
        for k in range(lam.n - 1, 0, -1):
            factors.extend([_fundamental_factor(lam.n, k)] * lam.coords[k - 1])
        self.factors = factors
        self.strides = [0] * len(factors)
        acc = 1
        for pos in range(len(factors) - 1, -1, -1):
            self.strides[pos] = acc
            acc *= factors[pos][0]
        self.dim = acc
        self._locals: dict[int, tuple[int, ...]] = {}

    def decode(self, idx: int) -> tuple[int, ...]:
        locs = self._locals.get(idx)
        if locs is None:
            rest = idx
            out = []
            for stride in self.strides:
                loc, rest = divmod(rest, stride)
                out.append(loc)
            locs = tuple(out)
            self._locals[idx] = locs
        return locs

    def apply(self, which: str, a: int, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Leibniz action of e_a / f_a across the factors."""
        sel = 2 if which == "e" else 3
        out: dict[int, Fraction] = {}
        for idx, val in vec.items():
            locs = self.decode(idx)
            for pos, factor in enumerate(self.factors):
                tgt = factor[sel][a - 1].get(locs[pos])
                if tgt is not None:
                    j = idx + (tgt - locs[pos]) * self.strides[pos]
                    out[j] = out.get(j, 0) + val
        return {k: v for k, v in out.items() if v}


@dataclass(eq=False)
class ExplicitModule:
    """An irreducible module with exact sparse generator matrices.

    Basis vectors are grouped by weight (weights[i] is the weight of basis
    vector i; index 0 is the highest-weight vector).  e/f matrices are stored
    column-wise: e[k-1][col] is a tuple of (row, Fraction) entries.  h_k is
    diagonal with integer eigenvalue h[k-1][col]."""

    n: int
    highest: Weight
    weights: tuple[Weight, ...]
    e: tuple
    f: tuple
    h: tuple

    @property
    def dim(self) -> int:
        return len(self.weights)

    def apply(self, which: str, k: int, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Action of e_k / f_k / h_k on a sparse coordinate vector."""
        if which == "h":
            diag = self.h[k - 1]
            return {i: v * diag[i] for i, v in vec.items() if v and diag[i]}
        cols = (self.e if which == "e" else self.f)[k - 1]
        out: dict[int, Fraction] = {}
        for i, v in vec.items():
            for r, c in cols[i]:
                out[r] = out.get(r, 0) + c * v
        return {i: v for i, v in out.items() if v}

    def weight_space_dims(self) -> dict[Weight, int]:
        dims: dict[Weight, int] = {}
        for w in self.weights:
            dims[w] = dims.get(w, 0) + 1
        return dims


@lru_cache(maxsize=None)
def build_irrep(lam: Weight, cap: int = DEFAULT_DIM_CAP) -> ExplicitModule:
    """Construct V(lam) explicitly; refuses modules larger than `cap`."""
    if not lam.is_dominant:
        raise ValueError(f"build_irrep requires a dominant weight, got {lam}")
    dim = weyl_dim(lam)
    if dim > cap:
        raise DimensionCapError(
            f"V({lam}) has dimension {dim}, above the construction cap {cap}",
            dim=dim,
            cap=cap,
        )
    n = lam.n
    amb = _Ambient(lam)
    alphas = [simple_root_weight(n, k) for k in range(1, n)]

    spaces: dict[Weight, RationalRowBasis] = {lam: RationalRowBasis()}
    top = spaces[lam].insert({0: Fraction(1)})
    queue: deque[tuple[Weight, dict]] = deque([(lam, dict(top))])
    while queue:
        w, row = queue.popleft()
        for k in range(1, n):
            img = amb.apply("f", k, row)
            if not img:
                continue
            tw = w - alphas[k - 1]
            space = spaces.setdefault(tw, RationalRowBasis())
            stored = space.insert(img)
            if stored is not None:
                # snapshot: stored rows mutate later under back-elimination
                queue.append((tw, dict(stored)))

    total = sum(sp.dimension for sp in spaces.values())
    if total != dim:
        raise AssertionError(
            f"cyclic span of the top vector has dimension {total}, expected {dim}"
        )

    ordered = sorted(
        spaces, key=lambda w: (root_lattice_height(lam - w), [-p for p in w.to_parts()])
    )
    gidx: dict[tuple[Weight, int], int] = {}
    flat: list[tuple[Weight, int]] = []
    for w in ordered:
        for p in spaces[w].pivots():
            gidx[(w, p)] = len(flat)
            flat.append((w, p))
    weights = tuple(w for w, _ in flat)
    if weights[0] != lam:
        raise AssertionError("highest-weight vector is not basis vector 0")

    def matrix(which: str, k: int):
        cols = []
        shift = alphas[k - 1] if which == "e" else -alphas[k - 1]
        for w, p in flat:
            img = amb.apply(which, k, spaces[w].row(p))
            if not img:
                cols.append(())
                continue
            tw = w + shift
            target = spaces.get(tw)
            if target is None:
                raise AssertionError("generator image escaped the module")
            coords = target.coordinates(img)
            cols.append(
                tuple(sorted((gidx[(tw, q)], c) for q, c in coords.items()))
            )
        return tuple(cols)

    e = tuple(matrix("e", k) for k in range(1, n))
    f = tuple(matrix("f", k) for k in range(1, n))
    h = tuple(
        tuple(w.coords[k - 1] for w in weights) for k in range(1, n)
    )
    return ExplicitModule(n=n, highest=lam, weights=weights, e=e, f=f, h=h)


# ---------------------------------------------------------------------------
# Character peeling.
# ---------------------------------------------------------------------------


def peel_character(char: Mapping[Weight, int]) -> DecompositionMap:
    """Decompose a Weyl-invariant character (weight -> multiplicity, entries
    nonnegative) into irreducibles by repeatedly stripping the diagram of a
    maximal support weight; raises ValueError if the input is not a genuine
    module character."""
    left: dict[Weight, int] = {}
    n = None
    for w, m in char.items():
        m = int(m)
        if m < 0:
            raise ValueError(f"character entries must be nonnegative, got {m} at {w}")
        if m:
            left[w] = m
            n = w.n
    if n is None:
        raise ValueError("cannot peel an empty character")
    found: dict[Weight, int] = {}
    while left:
        top = max(left, key=lambda w: w.to_parts())
        if not top.is_dominant:
            raise ValueError(
                f"maximal support weight {top} is not dominant; not a module character"
            )
        mult = left[top]
        for nu, m in weight_multiplicities(top).items():
            val = left.get(nu, 0) - mult * m
            if val > 0:
                left[nu] = val
            elif val == 0:
                left.pop(nu, None)
            else:
                raise ValueError(
                    f"stripping {mult} x V({top}) drives the multiplicity of {nu} "
                    "negative; not a module character"
                )
        found[top] = found.get(top, 0) + mult
    return DecompositionMap(n, found)


# ---------------------------------------------------------------------------
# Graded fusion product of two explicit modules.
# ---------------------------------------------------------------------------


@dataclass
class GradedDecomposition:
    """Graded constituents of a two-factor fusion product: multiplicity of
    V(tau) in the degree-s slice, keyed by (s, tau)."""

    n: int
    lambda1: Weight
    lambda2: Weight
    entries: dict[tuple[int, Weight], int]

    def __post_init__(self):
        for (s, tau), m in self.entries.items():
            if s < 0 or int(m) <= 0 or tau.n != self.n or not tau.is_dominant:
                raise ValueError(f"bad graded entry ({s}, {tau}) -> {m}")

    @property
    def max_degree(self) -> int:
        return max((s for s, _ in self.entries), default=0)

    def slices(self) -> list[tuple[int, DecompositionMap]]:
        by_degree: dict[int, dict[Weight, int]] = {}
        for (s, tau), m in self.entries.items():
            by_degree.setdefault(s, {})[tau] = m
        return [
            (s, DecompositionMap(self.n, terms)) for s, terms in sorted(by_degree.items())
        ]

    def ungraded(self) -> DecompositionMap:
        acc: dict[Weight, int] = {}
        for (_, tau), m in self.entries.items():
            acc[tau] = acc.get(tau, 0) + m
        return DecompositionMap(self.n, acc)

    def dimension(self) -> int:
        return sum(m * weyl_dim(tau) for (_, tau), m in self.entries.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda1": self.lambda1.to_json(),
            "lambda2": self.lambda2.to_json(),
            "slices": [
                {"degree": s, "terms": [
                    {"tau": tau.to_json(), "mult": m} for tau, m in dm.items_sorted()
                ]}
                for s, dm in self.slices()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedDecomposition":
        n = int(data["n"])
        entries: dict[tuple[int, Weight], int] = {}
        for sl in data["slices"]:
            s = int(sl["degree"])
            for term in sl["terms"]:
                entries[(s, Weight(n, tuple(term["tau"])))] = int(term["mult"])
        return cls(
            n=n,
            lambda1=Weight(n, tuple(data["lambda1"])),
            lambda2=Weight(n, tuple(data["lambda2"])),
            entries=entries,
        )


def _integerize(vec: Mapping[int, Fraction]) -> dict[int, int]:
    scale = 1
    for v in vec.values():
        d = v.denominator if isinstance(v, Fraction) else 1
        scale = scale * d // math.gcd(scale, d)
    return {k: int(v * scale) for k, v in vec.items()}


def fusion_graded(
    m1: ExplicitModule, c1, m2: ExplicitModule, c2
) -> GradedDecomposition:
    """Graded decomposition of the fusion product of m1 and m2 placed at the
    distinct evaluation points c1 and c2 (exact rationals)."""
    c1 = Fraction(c1)
    c2 = Fraction(c2)
    if c1 == c2:
        raise ValueError(f"evaluation points must be distinct, got {c1} = {c2}")
    if m1.n != m2.n:
        raise ValueError(f"rank mismatch: sl_{m1.n} vs sl_{m2.n}")
    n = m1.n
    d2 = m2.dim
    full = m1.dim * m2.dim
    alphas = [simple_root_weight(n, k) for k in range(1, n)]

    def tensor_apply(which: str, k: int, row: Mapping[int, int], w1, w2):
        # (x (x) t^d) v: w1, w2 scale the two Leibniz legs (1,1 for degree 0)
        cols1 = (m1.e if which == "e" else m1.f)[k - 1]
        cols2 = (m2.e if which == "e" else m2.f)[k - 1]
        out: dict[int, Fraction] = {}
        for idx, v in row.items():
            a, b = divmod(idx, d2)
            if w1:
                for r, c in cols1[a]:
                    j = r * d2 + b
                    out[j] = out.get(j, 0) + w1 * c * v
            if w2:
                for r, c in cols2[b]:
                    j = a * d2 + r
                    out[j] = out.get(j, 0) + w2 * c * v
        return {k2: v for k2, v in out.items() if v}

    def cartan_t(k: int, row: Mapping[int, int]):
        # (h_k (x) t) is diagonal on the tensor basis but not scalar on a
        # weight space, so it genuinely enlarges spans.
        out: dict[int, Fraction] = {}
        for idx, v in row.items():
            a, b = divmod(idx, d2)
            val = c1 * m1.weights[a].coords[k - 1] + c2 * m2.weights[b].coords[k - 1]
            if val:
                out[idx] = v * val
        return out

    spaces: dict[Weight, IntegerRowSpan] = {}

    def insert(weight: Weight, vec) -> dict[int, int] | None:
        span = spaces.setdefault(weight, IntegerRowSpan())
        return span.insert(_integerize(vec))

    def closure0(seed: list) -> list:
        """Close under the degree-0 action; returns the rows actually added."""
        added = []
        work = deque(seed)
        while work:
            w, vec = work.popleft()
            stored = insert(w, vec)
            if stored is None:
                continue
            added.append((w, stored))
            for k in range(1, n):
                img = tensor_apply("e", k, stored, 1, 1)
                if img:
                    work.append((w + alphas[k - 1], img))
                img = tensor_apply("f", k, stored, 1, 1)
                if img:
                    work.append((w - alphas[k - 1], img))
        return added

    def snapshot() -> dict[Weight, int]:
        return {w: sp.dimension for w, sp in spaces.items() if sp.dimension}

    top_weight = m1.highest + m2.highest
    new_rows = closure0([(top_weight, {0: 1})])
    characters = [snapshot()]
    total = sum(characters[-1].values())

    while total < full:
        raw = []
        for w, row in new_rows:
            for k in range(1, n):
                img = tensor_apply("e", k, row, c1, c2)
                if img:
                    raw.append((w + alphas[k - 1], img))
                img = tensor_apply("f", k, row, c1, c2)
                if img:
                    raw.append((w - alphas[k - 1], img))
                img = cartan_t(k, row)
                if img:
                    raw.append((w, img))
        new_rows = closure0(raw)
        if not new_rows:
            raise RuntimeError(
                "degree filtration stalled before exhausting the tensor product"
            )
        characters.append(snapshot())
        total = sum(characters[-1].values())

    entries: dict[tuple[int, Weight], int] = {}
    previous: dict[Weight, int] = {}
    for s, char in enumerate(characters):
        diff = {
            w: d - previous.get(w, 0) for w, d in char.items() if d - previous.get(w, 0)
        }
        if diff:
            for tau, m in peel_character(diff).items_sorted():
                entries[(s, tau)] = m
        previous = char

    graded = GradedDecomposition(
        n=n, lambda1=m1.highest, lambda2=m2.highest, entries=entries
    )
    if graded.dimension() != full:
        raise AssertionError("graded slices do not add up to the tensor dimension")
    return graded
