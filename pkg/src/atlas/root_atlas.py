"""Root-space decomposition of W(n) and S(n) under span{h_0, ..., h_{n-1}}"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from src.algebra.presentation import GeneratorSymbol
from src.algebra.w_realization import (
    WElement,
    ad_eigenvalue,
    chevalley_assignment,
    s_basis,
    w_basis,
    w_dimension,
    w_levels,
)
from src.shared.cartan_data import (
    RootVector,
    WeightVector,
    cartan_for_n,
    inner,
    inverse_cartan_B,
    weight_norm,
    weyl_reflect_weight,
)
from src.verification.report import VerificationReport
import constants

log = logging.getLogger(__name__)


class NonDiagonalizableError(ValueError):
    """A basis element is not a simultaneous ad h eigenvector"""

    def __init__(self, element: WElement, h_index: int):
        self.element = element
        self.h_index = h_index
        super().__init__(f"{element} is not an eigenvector of ad h{h_index}")


@dataclass(frozen=True)
class RootEntry:
    root: RootVector
    level: int
    multiplicity: int
    length_sq: Fraction

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError(f"Root {self.root} with multiplicity {self.multiplicity}")


def _check_n(n: int):
    low, high = constants.ROOT_ATLAS_N_RANGE
    if not low <= n <= high:
        raise ValueError(f"Root atlas needs {low} <= n <= {high}, got {n}")


def _algebra_basis(algebra: str, n: int) -> List[WElement]:
    if algebra == "w":
        return [WElement(n, {sym: 1}) for level in w_levels(n) for sym in w_basis(n, level)]
    if algebra == "s":
        return [x for level in w_levels(n) for x in s_basis(n, level)]
    raise ValueError(f"Unsupported algebra for a root decomposition: {algebra}")


def weight_of(x: WElement, cartan_images: Sequence[WElement]) -> Tuple[Fraction, ...]:
    """Eigenvalues of ad h_0, ..., ad h_{n-1} on a weight vector"""
    values = []
    for a, h in enumerate(cartan_images):
        value = ad_eigenvalue(h, x)
        if value is None:
            raise NonDiagonalizableError(x, a)
        values.append(value)
    return tuple(values)


def root_from_weight(weight: Sequence[Fraction], n: int) -> RootVector:
    """Simple-root coordinates of the root with (root, alpha_a) = weight[a]"""
    b_inv = inverse_cartan_B(n)
    coeffs = [sum((b_inv[a][b] * weight[b] for b in range(n)), Fraction(0)) for a in range(n)]
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError(f"Weight {weight} is not in the root lattice")
    return RootVector(tuple(int(c) for c in coeffs))


def cartan_images(n: int) -> List[WElement]:
    assignment = chevalley_assignment(n)
    return [assignment[GeneratorSymbol("h", a)] for a in range(n)]


def root_multiplicities(algebra: str, n: int) -> Tuple[Dict[RootVector, int], int]:
    """Root multiplicities and the dimension of the zero-weight space"""
    hs = cartan_images(n)
    counts: Counter = Counter()
    zero = RootVector.zero(n - 1)
    cartan_dim = 0
    for x in _algebra_basis(algebra, n):
        root = root_from_weight(weight_of(x, hs), n)
        if root == zero:
            cartan_dim += 1
        else:
            counts[root] += 1
    return dict(counts), cartan_dim


def root_decomposition(algebra: str, n: int) -> List[RootEntry]:
    """Roots of W(n) or S(n) with multiplicities and lengths.

    Sorted by level descending, then by root coefficients.
    """
    _check_n(n)
    cartan = cartan_for_n(n)
    counts, cartan_dim = root_multiplicities(algebra, n)
    entries = [
        RootEntry(root, root.level, mult, inner(root, root, cartan))
        for root, mult in counts.items()
    ]
    entries.sort(key=lambda entry: (-entry.level, entry.root.coeffs))
    log.debug("%s(%d): %d roots, Cartan dimension %d", algebra.upper(), n, len(entries), cartan_dim)
    return entries


def level_one_roots(n: int) -> List[RootVector]:
    """alpha_0, alpha_0 + alpha_1, ..., alpha_0 + ... + alpha_{n-1}"""
    return [RootVector(tuple(int(a <= k) for a in range(n))) for k in range(n)]


def allowed_lengths(level: int) -> Tuple[int, ...]:
    if level == 1:
        return (0,)
    k = -level
    return (k - k * k, 2 + k - k * k)


def check_root_lengths(n: int, report: Optional[VerificationReport] = None, algebra: str = "w") -> VerificationReport:
    """Level -k roots have length k - k^2 or 2 + k - k^2; level-1 roots are null"""
    report = report or VerificationReport(f"root-lengths:n={n}")
    for entry in root_decomposition(algebra, n):
        report.record(
            f"length {entry.root}",
            entry.length_sq in allowed_lengths(entry.level),
            expected=list(allowed_lengths(entry.level)),
            actual=entry.length_sq,
        )
        norm = weight_norm(entry.level, WeightVector.from_root(entry.root), n)
        report.expect_equal(f"norm {entry.root}", entry.length_sq, norm)
    return report


def reflected_multiset(counts: Dict[RootVector, int], i: int, n: int) -> Dict[RootVector, int]:
    cartan = cartan_for_n(n)
    return {weyl_reflect_weight(i, root, cartan): mult for root, mult in counts.items()}


def verify_root_atlas(n: int, report: Optional[VerificationReport] = None) -> VerificationReport:
    """Multiplicity bookkeeping, level-1 roots, lengths and reflection invariance"""
    _check_n(n)
    report = report or VerificationReport(f"roots:n={n}")
    counts, cartan_dim = root_multiplicities("w", n)
    report.expect_equal("multiplicities + Cartan = dim W(n)", w_dimension(n), sum(counts.values()) + cartan_dim)
    report.expect_equal("Cartan dimension", n, cartan_dim)
    minus_alpha0 = -RootVector.simple(0, n - 1)
    report.expect_equal("mult(-alpha0)", n - 1, counts.get(minus_alpha0, 0))
    level_one = [root for root in counts if root.level == 1]
    report.expect_equal(
        "level-1 roots",
        [list(r.coeffs) for r in sorted(level_one_roots(n), key=lambda r: r.coeffs)],
        [list(r.coeffs) for r in sorted(level_one, key=lambda r: r.coeffs)],
    )
    for level in sorted({root.level for root in counts}, reverse=True):
        at_level = {root: mult for root, mult in counts.items() if root.level == level}
        for i in range(1, n):
            report.record(
                f"level {level} invariant under s{i}",
                reflected_multiset(at_level, i, n) == at_level,
            )
    check_root_lengths(n, report)
    return report
