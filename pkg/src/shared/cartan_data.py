"""Cartan matrices of g and B(g), root and weight arithmetic, Freudenthal multiplicities"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union
import logging
import threading

from src.shared.exact_linalg import determinant, inverse, mat_vec
import constants

log = logging.getLogger(__name__)

SERIES = ("A", "D", "E")


@dataclass(frozen=True)
class CartanMatrix:
    """Cartan matrix of B(g) indexed 0..r; index 0 is the grey node"""

    series: str
    rank: int
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.rank + 1

    @property
    def nodes(self) -> Tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def __getitem__(self, key: Tuple[int, int]) -> int:
        a, b = key
        return self.entries[a][b]

    def block(self, nodes: Sequence[int]) -> List[List[int]]:
        """Principal submatrix on the given node indices"""
        return [[self.entries[a][b] for b in nodes] for a in nodes]

    def finite_part(self) -> List[List[int]]:
        """Cartan matrix of g (nodes 1..r)"""
        return self.block(self.nodes)

    def reduced_part(self) -> List[List[int]]:
        """Cartan matrix A' of g' (nodes 2..r)"""
        return self.block(range(2, self.rank + 1))

    def determinant(self) -> Fraction:
        return determinant(self.entries)

    def inverse(self) -> List[List[Fraction]]:
        return inverse(self.entries)

    def neighbours(self, a: int) -> List[int]:
        return [b for b in range(self.size) if b != a and self.entries[a][b] != 0]


def _finite_edges(series: str, r: int) -> List[Tuple[int, int]]:
    if series == "A":
        if r < 2:
            raise ValueError(f"Unsupported (series, r) = ({series}, {r}); A needs r >= 2")
        return [(i, i + 1) for i in range(1, r)]
    if series == "D":
        if r < 4:
            raise ValueError(f"Unsupported (series, r) = ({series}, {r}); D needs r >= 4")
        return [(i, i + 1) for i in range(1, r - 1)] + [(r - 2, r)]
    if series == "E":
        if not 4 <= r <= constants.E_SERIES_MAX_RANK:
            raise ValueError(
                f"Unsupported (series, r) = ({series}, {r}); E needs 4 <= r <= {constants.E_SERIES_MAX_RANK}"
            )
        # chain 1..r-1, node r attached to node r-3
        return [(i, i + 1) for i in range(1, r - 1)] + [(r - 3, r)]
    raise ValueError(f"Unsupported series: {series}")


@lru_cache(maxsize=None)
def build_cartan(series: str, r: int) -> CartanMatrix:
    """Cartan matrix of B(g) with the grey node 0 attached to node 1"""
    edges = _finite_edges(series, r)
    size = r + 1
    rows = [[0] * size for _ in range(size)]
    for i in range(1, size):
        rows[i][i] = 2
    rows[0][1] = rows[1][0] = -1
    for a, b in edges:
        rows[a][b] = rows[b][a] = -1
    return CartanMatrix(series, r, tuple(tuple(row) for row in rows))


def cartan_for_n(n: int) -> CartanMatrix:
    """B(A_{n-1}), the Cartan matrix behind W(n)"""
    return build_cartan("A", n - 1)


@lru_cache(maxsize=None)
def inverse_cartan_B(n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Inverse of the Cartan matrix of B(A_{n-1})"""
    return tuple(tuple(row) for row in cartan_for_n(n).inverse())


# ---------------------------------------------------------------------------
# Roots and weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootVector:
    """Integer combination of the simple roots alpha_0..alpha_r"""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def simple(cls, a: int, r: int) -> "RootVector":
        return cls(tuple(int(i == a) for i in range(r + 1)))

    @classmethod
    def zero(cls, r: int) -> "RootVector":
        return cls((0,) * (r + 1))

    @property
    def level(self) -> int:
        return self.coeffs[0]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: "RootVector") -> "RootVector":
        _check_lengths(self.coeffs, other.coeffs)
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        _check_lengths(self.coeffs, other.coeffs)
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coeffs))

    def scaled(self, k: int) -> "RootVector":
        return RootVector(tuple(k * a for a in self.coeffs))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class WeightVector:
    """Rational weight stored in simple-root coordinates over alpha_0..alpha_r.

    The Dynkin-label view is derived: label_a = (lambda, alpha_a). The grey-level
    coefficient k of lambda = k*Lt_0 + sum mu_i Lt_i is the alpha_0 coefficient.
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def level(self) -> Fraction:
        return self.coeffs[0]

    def dynkin_labels(self, cartan: CartanMatrix) -> Tuple[Fraction, ...]:
        """Labels (lambda, alpha_a) for a = 0..r"""
        _check_lengths(self.coeffs, cartan.entries)
        return tuple(mat_vec(cartan.entries, self.coeffs))

    def finite_labels(self, cartan: CartanMatrix) -> Tuple[Fraction, ...]:
        """Dynkin labels mu_1..mu_r of the g-weight"""
        return self.dynkin_labels(cartan)[1:]

    @classmethod
    def from_root(cls, root: RootVector) -> "WeightVector":
        return cls(tuple(Fraction(c) for c in root.coeffs))

    @classmethod
    def from_labels(cls, cartan: CartanMatrix, k: Union[int, Fraction], mu: Sequence[Union[int, Fraction]]) -> "WeightVector":
        """Build k*Lt_0 + sum_i mu_i Lt_i"""
        if len(mu) != cartan.rank:
            raise ValueError(f"Expected {cartan.rank} Dynkin labels, got {len(mu)}")
        a_inv = inverse(cartan.finite_part())
        lt0 = [Fraction(1)] + [a_inv[i][0] for i in range(cartan.rank)]
        rest = [Fraction(0)] + mat_vec(a_inv, mu)
        return cls(tuple(k * x + y for x, y in zip(lt0, rest)))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        _check_lengths(self.coeffs, other.coeffs)
        return WeightVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        _check_lengths(self.coeffs, other.coeffs)
        return WeightVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, k: Union[int, Fraction]) -> "WeightVector":
        return WeightVector(tuple(k * a for a in self.coeffs))


Vector = Union[RootVector, WeightVector]


def _check_lengths(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise ValueError(f"Rank mismatch: {len(x)} != {len(y)}")


def inner(x: Vector, y: Vector, cartan: CartanMatrix) -> Fraction:
    """(x, y) = x^T B y in simple-root coordinates"""
    _check_lengths(x.coeffs, y.coeffs)
    _check_lengths(x.coeffs, cartan.entries)
    total = Fraction(0)
    for a, xa in enumerate(x.coeffs):
        if not xa:
            continue
        row = cartan.entries[a]
        for b, yb in enumerate(y.coeffs):
            if yb and row[b]:
                total += xa * row[b] * yb
    return total


def weyl_reflect_weight(i: int, weight: Vector, cartan: CartanMatrix) -> Vector:
    """Fundamental reflection lambda - (lambda, alpha_i) alpha_i, i = 1..r"""
    if i == 0:
        raise ValueError("No Weyl reflection in the null root alpha_0")
    if not 1 <= i <= cartan.rank:
        raise ValueError(f"Reflection index {i} outside 1..{cartan.rank}")
    shift = inner(weight, RootVector.simple(i, cartan.rank), cartan)
    coeffs = list(weight.coeffs)
    coeffs[i] -= shift
    return type(weight)(tuple(coeffs))


def weight_norm(k: Union[int, Fraction], mu: Union[Sequence, WeightVector], n: int) -> Fraction:
    """(lambda, lambda) = -((n-1)/n) k^2 + (mu, mu) for lambda = k*Lt_0 + mu"""
    cartan = cartan_for_n(n)
    labels = mu.finite_labels(cartan) if isinstance(mu, WeightVector) else tuple(mu)
    if len(labels) != n - 1:
        raise ValueError(f"Expected {n - 1} Dynkin labels, got {len(labels)}")
    return -Fraction(n - 1, n) * Fraction(k) ** 2 + label_inner(labels, labels, cartan.finite_part())


# ---------------------------------------------------------------------------
# Finite root systems (Dynkin-label arithmetic on a set of nodes)
# ---------------------------------------------------------------------------


def _check_finite(block: Sequence[Sequence[int]], series: str, r: int):
    for size in range(1, len(block) + 1):
        if determinant([row[:size] for row in block[:size]]) <= 0:
            raise ValueError(f"Root system of ({series}, {r}) is not finite-dimensional")


@lru_cache(maxsize=None)
def _positive_roots_on(series: str, r: int, nodes: Tuple[int, ...]) -> Tuple[RootVector, ...]:
    cartan = build_cartan(series, r)
    block = cartan.block(nodes)
    _check_finite(block, series, r)
    size = len(nodes)
    simple = [tuple(int(i == j) for j in range(size)) for i in range(size)]
    roots: List[Tuple[int, ...]] = list(simple)
    labels: List[List[int]] = [list(row) for row in block]
    seen = set(roots)
    count = 0
    while count < len(roots):
        root = roots[count]
        for i in range(size):
            p = 0
            lowered = list(root)
            while True:
                lowered[i] -= 1
                if tuple(lowered) in seen:
                    p += 1
                else:
                    break
            raised = list(root)
            raised[i] += 1
            raised = tuple(raised)
            if p - labels[count][i] > 0 and raised not in seen:
                roots.append(raised)
                labels.append([labels[count][j] + block[i][j] for j in range(size)])
                seen.add(raised)
        count += 1
    roots.sort(key=lambda c: (sum(c), c))
    out = []
    for c in roots:
        full = [0] * (r + 1)
        for node, x in zip(nodes, c):
            full[node] = x
        out.append(RootVector(tuple(full)))
    log.debug("positive roots of %s%d on nodes %s: %d", series, r, nodes, len(out))
    return tuple(out)


def positive_roots(series: str, r: int, nodes: Optional[Sequence[int]] = None) -> List[RootVector]:
    """Positive roots of g (default nodes 1..r), ordered by height then lexicographically.

    Returned vectors have length r+1 with a zero alpha_0 coefficient outside ``nodes``.
    """
    nodes = tuple(nodes) if nodes is not None else tuple(range(1, r + 1))
    if 0 in nodes:
        raise ValueError("The grey node has no finite root system")
    return list(_positive_roots_on(series, r, nodes))


def highest_root(series: str, r: int, nodes: Optional[Sequence[int]] = None) -> RootVector:
    return positive_roots(series, r, nodes)[-1]


def weyl_vector(series: str, r: int, nodes: Optional[Sequence[int]] = None) -> WeightVector:
    """rho of the subalgebra on ``nodes``: (rho, alpha_i) = 1, in root coordinates"""
    nodes = tuple(nodes) if nodes is not None else tuple(range(1, r + 1))
    cartan = build_cartan(series, r)
    coeffs = mat_vec(inverse(cartan.block(nodes)), [1] * len(nodes))
    full = [Fraction(0)] * (r + 1)
    for node, x in zip(nodes, coeffs):
        full[node] = x
    return WeightVector(tuple(full))


def label_inner(x: Sequence, y: Sequence, block: Sequence[Sequence[int]]) -> Fraction:
    """Inner product of weights given by Dynkin labels: x^T A^{-1} y"""
    a_inv = _cached_inverse(tuple(tuple(r) for r in block))
    return sum((Fraction(x[i]) * a_inv[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j]), Fraction(0))


@lru_cache(maxsize=None)
def _cached_inverse(block: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in inverse(block))


class FiniteWeights:
    """Weight arithmetic for g in Dynkin labels"""

    def __init__(self, series: str, r: int):
        self.series = series
        self.rank = r
        self.cartan = build_cartan(series, r)
        self.block = self.cartan.finite_part()
        self.roots = positive_roots(series, r)
        # positive roots as label vectors
        self.root_labels = [tuple(self._labels_of(root)) for root in self.roots]
        self._store: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
        self._store_lock = threading.Lock()

    def _labels_of(self, root: RootVector) -> List[int]:
        c = root.coeffs[1:]
        return [sum(self.block[i][j] * c[j] for j in range(self.rank)) for i in range(self.rank)]

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        return label_inner(x, y, self.block)

    def reflect(self, labels: Sequence[int], i: int) -> Tuple[int, ...]:
        """Reflection s_i with i = 1..r acting on Dynkin labels"""
        m = labels[i - 1]
        return tuple(labels[j] - m * self.block[i - 1][j] for j in range(self.rank))

    def dominant_conjugate(self, labels: Sequence[int]) -> Tuple[int, ...]:
        weight = tuple(labels)
        i = 0
        while i < self.rank:
            if weight[i] < 0:
                weight = self.reflect(weight, i + 1)
                i = 0
            else:
                i += 1
        return weight

    def weyl_orbit(self, labels: Sequence[int]) -> List[Tuple[int, ...]]:
        """All Weyl images of a weight, starting from its dominant conjugate"""
        start = self.dominant_conjugate(labels)
        orbit = [start]
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.rank + 1):
                    if w[i - 1] > 0:
                        image = self.reflect(w, i)
                        if image not in seen:
                            seen.add(image)
                            nxt.append(image)
            orbit.extend(nxt)
            frontier = nxt
        return orbit

    def is_dominant(self, labels: Sequence) -> bool:
        return all(x >= 0 and Fraction(x).denominator == 1 for x in labels)

    def _depth(self, highest: Tuple[int, ...], weight: Tuple[int, ...]) -> Optional[int]:
        """Height of highest - weight in the positive root lattice, None if outside"""
        a_inv = _cached_inverse(tuple(tuple(r) for r in self.block))
        diff = [highest[i] - weight[i] for i in range(self.rank)]
        coeffs = [sum((a_inv[i][j] * diff[j] for j in range(self.rank)), Fraction(0)) for i in range(self.rank)]
        if any(c < 0 or c.denominator != 1 for c in coeffs):
            return None
        return int(sum(coeffs))

    def dominant_weights(self, highest: Sequence[int]) -> Dict[Tuple[int, ...], int]:
        """Dominant weights of R(highest) with their multiplicities (Freudenthal recursion)"""
        highest = tuple(int(x) for x in highest)
        with self._store_lock:
            if highest not in self._store:
                self._store[highest] = self._freudenthal(highest)
            return self._store[highest]

    def _freudenthal(self, highest: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
        if not self.is_dominant(highest):
            raise ValueError(f"Highest weight {highest} is not dominant integral")
        found = {highest}
        frontier = [highest]
        while frontier:
            nxt = []
            for w in frontier:
                for root in self.root_labels:
                    lowered = tuple(w[i] - root[i] for i in range(self.rank))
                    if all(x >= 0 for x in lowered) and lowered not in found:
                        found.add(lowered)
                        nxt.append(lowered)
            frontier = nxt
        ordered = sorted(found, key=lambda w: (self._depth(highest, w), tuple(-x for x in w)))
        rho = (1,) * self.rank
        lam_rho = tuple(h + 1 for h in highest)
        top = self.inner(lam_rho, lam_rho)
        mult: Dict[Tuple[int, ...], int] = {highest: 1}
        for mu in ordered[1:]:
            total = Fraction(0)
            for root in self.root_labels:
                k = 1
                while True:
                    shifted = tuple(mu[i] + k * root[i] for i in range(self.rank))
                    m = mult.get(self.dominant_conjugate(shifted), 0)
                    if not m:
                        break
                    total += 2 * m * self.inner(shifted, root)
                    k += 1
            mu_rho = tuple(mu[i] + rho[i] for i in range(self.rank))
            value = total / (top - self.inner(mu_rho, mu_rho))
            if value.denominator != 1:
                raise ArithmeticError(f"Non-integral multiplicity {value} for weight {mu}")
            if value:
                mult[mu] = int(value)
        return mult

    def multiplicity(self, highest: Sequence[int], target: Sequence[int]) -> int:
        table = self.dominant_weights(highest)
        return table.get(self.dominant_conjugate(tuple(int(x) for x in target)), 0)

    def weyl_dimension(self, highest: Sequence[int]) -> int:
        rho = (1,) * self.rank
        lam_rho = tuple(h + 1 for h in highest)
        value = Fraction(1)
        for root in self.root_labels:
            value *= self.inner(lam_rho, root) / self.inner(rho, root)
        return int(value)

    def character_dimension(self, highest: Sequence[int]) -> int:
        """Sum of weight-space dimensions over all weights of R(highest)"""
        return sum(m * len(self.weyl_orbit(mu)) for mu, m in self.dominant_weights(highest).items())


@lru_cache(maxsize=None)
def finite_weights(series: str, r: int) -> FiniteWeights:
    return FiniteWeights(series, r)


def _as_labels(weight, series: str, r: int) -> Tuple[int, ...]:
    if isinstance(weight, WeightVector):
        labels = weight.finite_labels(build_cartan(series, r))
    else:
        labels = tuple(weight)
    if len(labels) != r:
        raise ValueError(f"Expected {r} Dynkin labels, got {len(labels)}")
    if any(Fraction(x).denominator != 1 for x in labels):
        raise ValueError(f"Weight {labels} is not integral")
    return tuple(int(x) for x in labels)


def freudenthal_multiplicity(highest, target, series: str = "A", r: int = 2) -> int:
    """Multiplicity of ``target`` in the irreducible g-module with highest weight ``highest``.

    Weights are Dynkin-label sequences of length r or WeightVectors of B(g).
    """
    weights = finite_weights(series, r)
    return weights.multiplicity(_as_labels(highest, series, r), _as_labels(target, series, r))
