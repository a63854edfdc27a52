"""Root and weight arithmetic for the Lie algebra sl_n.

Weights are stored by their integer coefficients (m_1, ..., m_{n-1}) in the
fundamental-weight basis.  The equivalent partition-like form, the "parts"
vector (p_1, ..., p_n) with p_i = m_i + ... + m_{n-1} and p_n = 0, realizes
the same weight in epsilon-coordinates; a weight is dominant iff all coords
are nonnegative, iff its parts are weakly decreasing.  Positive roots
alpha_{i,j} = alpha_i + ... + alpha_j are indexed by 1 <= i <= j <= n-1 and
ordered first by i, then by j.  All arithmetic is exact (int / Fraction);
no floating point anywhere.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "RankContext",
    "Weight",
    "Root",
    "positive_roots",
    "positive_root_index",
    "pairing",
    "root_as_weight",
    "simple_root_weight",
    "weyl_orbit",
    "orbit_size",
    "weyl_dim",
    "weight_multiplicities",
    "dominant_weight_multiplicities",
    "root_coordinates",
    "dominance_leq",
    "root_lattice_height",
]


@dataclass(frozen=True)
class RankContext:
    """Rank parameter for sl_n; weights carry n-1 fundamental coordinates."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"rank context requires an integer n >= 2, got {self.n!r}")

    @property
    def nodes(self) -> tuple[int, ...]:
        """Dynkin node indices 1..n-1."""
        return tuple(range(1, self.n))

    @property
    def num_positive_roots(self) -> int:
        return self.n * (self.n - 1) // 2


def _check_rank(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class Weight:
    """Integral sl_n weight in fundamental-weight coordinates."""

    n: int
    coords: tuple[int, ...]

    def __post_init__(self):
        _check_rank(self.n)
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.n - 1:
            raise ValueError(
                f"weight for sl_{self.n} needs {self.n - 1} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls(n, (0,) * (n - 1))

    @classmethod
    def fundamental(cls, n: int, k: int) -> "Weight":
        """omega_k, 1 <= k <= n-1."""
        _check_rank(n)
        if not 1 <= k <= n - 1:
            raise ValueError(f"fundamental weight index must satisfy 1 <= k <= {n - 1}, got {k}")
        return cls(n, tuple(1 if i == k else 0 for i in range(1, n)))

    @classmethod
    def rho(cls, n: int) -> "Weight":
        """Half-sum of positive roots: all fundamental coordinates 1."""
        return cls(n, (1,) * (n - 1))

    @classmethod
    def from_parts(cls, n: int, parts) -> "Weight":
        """Weight whose epsilon-coordinate representative is `parts` (length n)."""
        parts = tuple(int(p) for p in parts)
        if len(parts) != n:
            raise ValueError(f"parts vector for sl_{n} needs length {n}, got {len(parts)}")
        return cls(n, tuple(parts[i] - parts[i + 1] for i in range(n - 1)))

    # -- arithmetic --------------------------------------------------------

    def _check_same_rank(self, other: "Weight") -> None:
        if not isinstance(other, Weight):
            raise TypeError(f"expected a Weight, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"rank mismatch: sl_{self.n} vs sl_{other.n}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_same_rank(other)
        return Weight(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_same_rank(other)
        return Weight(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.n, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        if not isinstance(k, int):
            return NotImplemented
        return Weight(self.n, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    # -- structure ---------------------------------------------------------

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_parts(self) -> tuple[int, ...]:
        """Epsilon-coordinate representative normalized to last part 0."""
        parts = [0] * self.n
        acc = 0
        for i in range(self.n - 2, -1, -1):
            acc += self.coords[i]
            parts[i] = acc
        return tuple(parts)

    def to_json(self) -> list[int]:
        return list(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Root:
    """Positive root alpha_{i,j} = alpha_i + ... + alpha_j of sl_n."""

    n: int
    i: int
    j: int

    def __post_init__(self):
        _check_rank(self.n)
        if not 1 <= self.i <= self.j <= self.n - 1:
            raise ValueError(
                f"positive root of sl_{self.n} needs 1 <= i <= j <= {self.n - 1}, "
                f"got (i, j) = ({self.i}, {self.j})"
            )

    @property
    def height(self) -> int:
        return self.j - self.i + 1

    @property
    def is_simple(self) -> bool:
        return self.i == self.j

    def __str__(self) -> str:
        return f"a[{self.i},{self.j}]"


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Root, ...]:
    """All positive roots of sl_n, ordered by i, then j."""
    _check_rank(n)
    return tuple(Root(n, i, j) for i in range(1, n) for j in range(i, n))


@lru_cache(maxsize=None)
def _root_positions(n: int) -> dict[tuple[int, int], int]:
    return {(r.i, r.j): k for k, r in enumerate(positive_roots(n))}


def positive_root_index(root: Root) -> int:
    """Position of `root` within positive_roots(root.n)."""
    return _root_positions(root.n)[(root.i, root.j)]


def pairing(weight: Weight, root: Root) -> int:
    """Evaluation weight(h_alpha) = m_i + ... + m_j on the coroot of alpha_{i,j}."""
    if weight.n != root.n:
        raise ValueError(f"rank mismatch: weight for sl_{weight.n}, root for sl_{root.n}")
    return sum(weight.coords[root.i - 1 : root.j])


def root_as_weight(root: Root) -> Weight:
    """alpha_{i,j} rewritten in fundamental-weight coordinates."""
    parts = [0] * root.n
    parts[root.i - 1] += 1
    parts[root.j] -= 1
    return Weight.from_parts(root.n, parts)


@lru_cache(maxsize=None)
def simple_root_weight(n: int, k: int) -> Weight:
    """alpha_k as a Weight (cached; used heavily by weight-space walks)."""
    return root_as_weight(Root(n, k, k))


# ---------------------------------------------------------------------------
# Weyl group action.  W = S_n permutes the epsilon-coordinates (parts).
# ---------------------------------------------------------------------------


def _require_dominant(weight: Weight, what: str) -> None:
    if not weight.is_dominant:
        raise ValueError(f"{what} requires a dominant weight, got {weight}")


@lru_cache(maxsize=None)
def _orbit_cached(weight: Weight) -> tuple[Weight, ...]:
    parts = weight.to_parts()
    seen = set(itertools.permutations(parts))
    orbit = [Weight.from_parts(weight.n, q) for q in seen]
    orbit.sort(key=lambda w: w.to_parts(), reverse=True)
    return tuple(orbit)


def weyl_orbit(weight: Weight) -> tuple[Weight, ...]:
    """Full Weyl orbit of a dominant weight, each element once, sorted
    descending by parts (the dominant element comes first)."""
    _require_dominant(weight, "weyl_orbit")
    return _orbit_cached(weight)


def orbit_size(weight: Weight) -> int:
    """|W.weight| = n! / prod (multiplicity of each repeated part)!."""
    _require_dominant(weight, "orbit_size")
    parts = weight.to_parts()
    size = math.factorial(weight.n)
    for value in set(parts):
        size //= math.factorial(parts.count(value))
    return size


def weyl_dim(weight: Weight) -> int:
    """Dimension of the irreducible module V(weight), by the Weyl formula."""
    _require_dominant(weight, "weyl_dim")
    shifted = [p + (weight.n - 1 - k) for k, p in enumerate(weight.to_parts())]
    num = 1
    den = 1
    for a in range(weight.n):
        for b in range(a + 1, weight.n):
            num *= shifted[a] - shifted[b]
            den *= b - a
    dim, rem = divmod(num, den)
    if rem:
        raise AssertionError("Weyl dimension product failed to divide exactly")
    return dim


# ---------------------------------------------------------------------------
# Dominance order bookkeeping.
# ---------------------------------------------------------------------------


def root_coordinates(weight: Weight) -> tuple[Fraction, ...]:
    """Coefficients (c_1, ..., c_{n-1}) expressing the weight over the simple
    roots; rational in general, integral exactly on the root lattice."""
    n = weight.n
    parts = weight.to_parts()
    total = sum(parts)
    coords = []
    pref = 0
    for k in range(1, n):
        pref += parts[k - 1]
        coords.append(Fraction(n * pref - k * total, n))
    return tuple(coords)


def dominance_leq(lower: Weight, upper: Weight) -> bool:
    """True iff upper - lower is a nonnegative integer sum of simple roots."""
    lower._check_same_rank(upper)
    for c in root_coordinates(upper - lower):
        if c.denominator != 1 or c < 0:
            return False
    return True


def root_lattice_height(weight: Weight) -> int:
    """Sum of simple-root coefficients; the weight must lie in the root lattice."""
    total = Fraction(0)
    for c in root_coordinates(weight):
        if c.denominator != 1:
            raise ValueError(f"{weight} is not in the root lattice")
        total += c
    return int(total)


# ---------------------------------------------------------------------------
# Weight multiplicities via the Freudenthal recursion.  The recursion runs on
# raw parts tuples with an integer-scaled invariant form (n * the standard
# form) to stay in plain int arithmetic.
# ---------------------------------------------------------------------------


def _dominant_parts_below(p: tuple[int, ...]) -> list[tuple[int, ...]]:
    # Weakly decreasing q with sum(q) = sum(p) and prefix sums bounded by p's:
    # exactly the dominant weights of V(lambda), in parts form.
    n = len(p)
    total = sum(p)
    prefixes = list(itertools.accumulate(p))
    found: list[tuple[int, ...]] = []

    def rec(pos: int, used: int, prev: int, acc: tuple[int, ...]) -> None:
        if pos == n - 1:
            last = total - used
            if 0 <= last <= prev:
                found.append(acc + (last,))
            return
        hi = min(prev, prefixes[pos] - used)
        remaining = total - used
        lo = -(-remaining // (n - pos))  # ceil: must leave room for decreasing tail
        for q in range(hi, lo - 1, -1):
            rec(pos + 1, used + q, q, acc + (q,))

    rec(0, 0, total, ())
    return found


def _scaled_form(n: int, p: tuple[int, ...], q: tuple[int, ...]) -> int:
    # n * (p, q) for the W-invariant form with (eps_i, eps_j) = delta_ij - 1/n.
    dot = 0
    sp = 0
    sq = 0
    for a, b in zip(p, q):
        dot += a * b
        sp += a
        sq += b
    return n * dot - sp * sq


@lru_cache(maxsize=None)
def _dominant_mults_by_parts(n: int, lam_parts: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    rho = tuple(range(n - 1, -1, -1))
    lam_rho = tuple(a + b for a, b in zip(lam_parts, rho))
    norm_top = _scaled_form(n, lam_rho, lam_rho)
    eps_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]

    dominants = _dominant_parts_below(lam_parts)
    lam_pref = list(itertools.accumulate(lam_parts))

    def level(q: tuple[int, ...]) -> int:
        acc = 0
        pref = 0
        for k in range(n - 1):
            pref += q[k]
            acc += lam_pref[k] - pref
        return acc

    dominants.sort(key=level)
    mults: dict[tuple[int, ...], int] = {lam_parts: 1}

    for q in dominants:
        if q == lam_parts:
            continue
        rhs = 0
        for a, b in eps_pairs:
            nu = list(q)
            while True:
                nu[a] += 1
                nu[b] -= 1
                m = mults.get(tuple(sorted(nu, reverse=True)))
                if m is None:
                    break  # weight strings have no gaps
                rhs += n * (nu[a] - nu[b]) * m
        q_rho = tuple(x + r for x, r in zip(q, rho))
        denom = norm_top - _scaled_form(n, q_rho, q_rho)
        mult, rem = divmod(2 * rhs, denom)
        if rem or mult <= 0:
            raise AssertionError("Freudenthal recursion produced a non-positive multiplicity")
        mults[q] = mult
    return mults


def dominant_weight_multiplicities(weight: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(weight)."""
    _require_dominant(weight, "dominant_weight_multiplicities")
    raw = _dominant_mults_by_parts(weight.n, weight.to_parts())
    return {Weight.from_parts(weight.n, q): m for q, m in raw.items()}


def weight_multiplicities(weight: Weight) -> dict[Weight, int]:
    """The full weight diagram of V(weight): every weight with its exact
    multiplicity, extended over each Weyl orbit."""
    _require_dominant(weight, "weight_multiplicities")
    raw = _dominant_mults_by_parts(weight.n, weight.to_parts())
    diagram: dict[Weight, int] = {}
    for q, m in raw.items():
        for perm in set(itertools.permutations(q)):
            diagram[Weight.from_parts(weight.n, perm)] = m
    return diagram
