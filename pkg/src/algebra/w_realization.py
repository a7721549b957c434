"""W(n) and S(n) by structure constants, and the Chevalley-type elements of W(n)"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union
import logging

import numpy as np
from tqdm import tqdm

from src.shared.grassmann_ops import (
    EndOp,
    Monomial,
    canonical_monomial,
    contract_monomial,
    end_supercommutator,
    k_op,
    monomial_product,
)
from src.shared.exact_linalg import SparseVector, Subspace
from src.algebra.presentation import GeneratorSymbol
from src.verification.report import VerificationReport
import constants

log = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class WBasisElement:
    """The symbol K^{uppers}_lower = xi^{uppers} d/dxi^lower"""

    uppers: Tuple[int, ...]
    lower: int

    def __post_init__(self):
        if list(self.uppers) != sorted(set(self.uppers)):
            raise ValueError(f"Upper indices {self.uppers} are not canonical")

    @property
    def p(self) -> int:
        return len(self.uppers)

    @property
    def level(self) -> int:
        return 1 - len(self.uppers)

    @property
    def parity(self) -> int:
        return (len(self.uppers) + 1) % 2

    def __str__(self) -> str:
        up = "".join(str(a) for a in self.uppers)
        return f"K^{up}_{self.lower}" if up else f"K_{self.lower}"


def canonical_symbol(uppers: Iterable[int], lower: int) -> Tuple[int, Optional[WBasisElement]]:
    """Sort uppers; returns (sign, symbol) or (0, None) for a repeated upper index"""
    sign, m = canonical_monomial(list(uppers))
    if not sign:
        return 0, None
    return sign, WBasisElement(m, lower)


def _add(terms: Dict, key, value):
    y = terms.get(key, 0) + value
    if y:
        terms[key] = y
    else:
        terms.pop(key, None)


@dataclass(frozen=True)
class WElement:
    """Rational combination of W(n) basis symbols"""

    n: int
    terms: Dict[WBasisElement, Number] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v != 0})

    @classmethod
    def symbol(cls, n: int, uppers: Iterable[int], lower: int, coeff: Number = 1) -> "WElement":
        sign, sym = canonical_symbol(uppers, lower)
        if not sign:
            return cls(n)
        return cls(n, {sym: sign * coeff})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def level(self) -> Optional[int]:
        levels = {k.level for k in self.terms}
        return levels.pop() if len(levels) == 1 else None

    @property
    def parity(self) -> Optional[int]:
        parities = {k.parity for k in self.terms}
        if not parities:
            return 0
        return parities.pop() if len(parities) == 1 else None

    def __add__(self, other: "WElement") -> "WElement":
        return self.combine(other, 1)

    def __sub__(self, other: "WElement") -> "WElement":
        return self.combine(other, -1)

    def __neg__(self) -> "WElement":
        return self.scaled(-1)

    def combine(self, other: "WElement", c: Number) -> "WElement":
        if self.n != other.n:
            raise ValueError(f"Rank mismatch: W({self.n}) and W({other.n})")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            _add(terms, k, c * v)
        return WElement(self.n, terms)

    def scaled(self, c: Number) -> "WElement":
        return WElement(self.n, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, WElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in sorted(self.terms.items()))


def _check_n(n: int):
    if not constants.W_MIN_N <= n <= constants.MAX_GRASSMANN_N:
        raise ValueError(f"W(n) needs {constants.W_MIN_N} <= n <= {constants.MAX_GRASSMANN_N}, got {n}")


@lru_cache(maxsize=None)
def _w_basis(n: int, level: int) -> Tuple[WBasisElement, ...]:
    p = 1 - level
    if p < 0 or p > n:
        return ()
    return tuple(WBasisElement(ups, b) for ups in combinations(range(n), p) for b in range(n))


def w_basis(n: int, level: int) -> List[WBasisElement]:
    """Canonical symbols at a level; n*C(n, 1-level) of them"""
    _check_n(n)
    return list(_w_basis(n, level))


def w_levels(n: int) -> List[int]:
    return list(range(1, -n, -1))


def w_full_basis(n: int) -> List[WBasisElement]:
    return [x for level in w_levels(n) for x in w_basis(n, level)]


@lru_cache(maxsize=None)
def w_index(n: int) -> Dict[WBasisElement, int]:
    """Position of every basis symbol in the full basis (level descending)"""
    return {x: i for i, x in enumerate(w_full_basis(n))}


def _derivative(c: int, uppers: Monomial) -> Tuple[int, Optional[Monomial]]:
    return contract_monomial(c, uppers)


@lru_cache(maxsize=200000)
def basis_bracket(x: WBasisElement, y: WBasisElement) -> Tuple[Tuple[WBasisElement, int], ...]:
    """[x, y] for basis symbols as a tuple of (symbol, coefficient).

    For X = f d_c and Y = g d_d: [X, Y] = f (d_c g) d_d - (-1)^{|X||Y|} g (d_d f) d_c,
    with |X| = p+1 and |Y| = q+1 mod 2.
    """
    terms: Dict[WBasisElement, int] = {}
    s1, dg = _derivative(x.lower, y.uppers)
    if s1:
        s2, m = monomial_product(x.uppers, dg)
        if s2:
            _add(terms, WBasisElement(m, y.lower), s1 * s2)
    s1, df = _derivative(y.lower, x.uppers)
    if s1:
        s2, m = monomial_product(y.uppers, df)
        if s2:
            sign = -1 if x.parity and y.parity else 1
            _add(terms, WBasisElement(m, x.lower), -sign * s1 * s2)
    return tuple(sorted(terms.items()))


def w_bracket(x: WElement, y: WElement) -> WElement:
    """Bilinear extension of the structure-constant bracket of W(n)"""
    if x.n != y.n:
        raise ValueError(f"Rank mismatch: W({x.n}) and W({y.n})")
    terms: Dict[WBasisElement, Number] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for sym, c in basis_bracket(a, b):
                _add(terms, sym, ca * cb * c)
    return WElement(x.n, terms)


def w_operator(x: WElement) -> EndOp:
    """The derivation of Lambda(n) represented by x"""
    op = EndOp(x.n)
    for sym, c in x.terms.items():
        op = op.combine(k_op(sym.uppers, sym.lower, x.n), c)
    return op


def to_vector(x: WElement) -> SparseVector:
    index = w_index(x.n)
    return SparseVector(len(index), {index[k]: v for k, v in x.terms.items()})


def from_vector(n: int, v: Union[SparseVector, Mapping[int, Number]]) -> WElement:
    basis = w_full_basis(n)
    entries = v.entries if isinstance(v, SparseVector) else v
    return WElement(n, {basis[i]: c for i, c in entries.items()})


def w_dimension(n: int) -> int:
    return n * 2 ** n


# ---------------------------------------------------------------------------
# S(n)
# ---------------------------------------------------------------------------


def s_hat(uppers: Iterable[int], lower: int, n: int) -> WElement:
    """Traceless projection of K^{uppers}_lower.

    When lower = uppers[k] (0-based), the trace over the contracted pair is removed:
    hat K = K - (-1)^{p-1-k} / (n-p+1) * sum_d K^{(uppers minus lower) d}_d
    """
    _check_n(n)
    sign, sym = canonical_symbol(uppers, lower)
    if not sign:
        return WElement(n)
    base = WElement(n, {sym: sign})
    if lower not in sym.uppers:
        return base
    p = sym.p
    k = sym.uppers.index(lower)
    rest = tuple(a for a in sym.uppers if a != lower)
    coeff = Fraction((-1) ** (p - 1 - k), n - p + 1)
    trace = WElement(n)
    for d in range(n):
        trace = trace + WElement.symbol(n, rest + (d,), d)
    return base - trace.scaled(sign * coeff)


def divergence(x: WElement) -> Dict[Monomial, Number]:
    """div(f d_b) = (-1)^{|f|} d_b f, summed; S(n) is its kernel"""
    out: Dict[Monomial, Number] = {}
    for sym, c in x.terms.items():
        s, m = contract_monomial(sym.lower, sym.uppers)
        if s:
            _add(out, m, (-1) ** sym.p * s * c)
    return out


def s_level_elements(n: int, level: int) -> List[WElement]:
    """The (redundant) spanning set of hat K symbols at a level"""
    return [s_hat(sym.uppers, sym.lower, n) for sym in w_basis(n, level)]


@lru_cache(maxsize=None)
def s_level_space(n: int, level: int) -> Subspace:
    """Subspace of W(n) coordinates spanned by S(n) at a level"""
    space = Subspace(len(w_index(n)))
    for x in s_level_elements(n, level):
        space.add(to_vector(x).entries)
    return space


def s_basis(n: int, level: int) -> List[WElement]:
    """A basis of S(n) at a level (rows of the reduced echelon form)"""
    return [from_vector(n, v) for v in s_level_space(n, level).basis()]


def s_level_dim(n: int, level: int) -> int:
    return len(s_level_space(n, level))


def s_dimension_formula(n: int, level: int) -> int:
    p = 1 - level
    if p < 0 or p > n:
        return 0
    return comb(n, p) * n - (comb(n, p - 1) if p >= 1 else 0)


# ---------------------------------------------------------------------------
# Chevalley-type generators inside W(n)
# ---------------------------------------------------------------------------


def euler(n: int) -> WElement:
    """K = sum_a K^a_a"""
    return WElement(n, {WBasisElement((a,), a): 1 for a in range(n)})


def k_upper(a: int, n: int) -> WElement:
    """K^a = sum_b K^{ab}_b"""
    out = WElement(n)
    for b in range(n):
        out = out + WElement.symbol(n, (a, b), b)
    return out


def chevalley_assignment(n: int) -> Dict[GeneratorSymbol, WElement]:
    """Images of the generators e_a, f_a, h_a, f_{0a} of B(A_{n-1}) in W(n)"""
    if n < constants.CHEVALLEY_MIN_N:
        raise ValueError(f"Chevalley assignment needs n >= {constants.CHEVALLEY_MIN_N}, got {n}")
    _check_n(n)
    k = WElement.symbol
    images = {
        GeneratorSymbol("e", 0): k(n, (), 0),
        GeneratorSymbol("h", 0): euler(n) - k(n, (0,), 0),
        GeneratorSymbol("f0", 0): k_upper(0, n),
    }
    for i in range(1, n):
        images[GeneratorSymbol("e", i)] = k(n, (i - 1,), i)
        images[GeneratorSymbol("f", i)] = k(n, (i,), i - 1)
        images[GeneratorSymbol("h", i)] = k(n, (i - 1,), i - 1) - k(n, (i,), i)
    for i in range(2, n):
        images[GeneratorSymbol("f0", i)] = k(n, (0, i - 1), i - 1) - k(n, (0, i), i)
    return images


def ad_eigenvalue(h: WElement, x: WElement) -> Optional[Fraction]:
    """lambda with [h, x] = lambda x, or None when x is not an eigenvector"""
    y = w_bracket(h, x)
    if y.is_zero():
        return Fraction(0)
    if x.is_zero():
        return None
    key = next(iter(x.terms))
    ratio = Fraction(y.terms.get(key, 0)) / x.terms[key]
    if ratio and y == x.scaled(ratio):
        return ratio
    return None


# ---------------------------------------------------------------------------
# Checks against the derivation oracle and the superalgebra axioms
# ---------------------------------------------------------------------------


def check_oracle_equivalence(n: int, report: Optional[VerificationReport] = None) -> VerificationReport:
    """Structure-constant bracket against the supercommutator of derivations, on all basis pairs"""
    low, high = constants.ORACLE_N_RANGE
    if not low <= n <= high:
        raise ValueError(f"Oracle equivalence needs {low} <= n <= {high}, got {n}")
    report = report or VerificationReport(f"oracle:n={n}")
    basis = w_full_basis(n)
    mismatches = 0
    for x in tqdm(basis, desc=f"oracle W({n})", disable=not log.isEnabledFor(logging.DEBUG)):
        ox = k_op(x.uppers, x.lower, n)
        for y in basis:
            bracket = w_operator(WElement(n, dict(basis_bracket(x, y))))
            oracle = end_supercommutator(ox, k_op(y.uppers, y.lower, n))
            if bracket != oracle:
                mismatches += 1
                report.expect_zero(f"oracle [{x}, {y}]", bracket - oracle)
    report.expect_equal(f"oracle mismatches over {len(basis) ** 2} pairs", 0, mismatches)
    return report


def _axiom_residuals(x: WBasisElement, y: WBasisElement, z: WBasisElement, n: int) -> Tuple[WElement, WElement]:
    ex, ey, ez = (WElement(n, {s: 1}) for s in (x, y, z))
    sign = -1 if x.parity and y.parity else 1
    antisymmetry = w_bracket(ex, ey) + w_bracket(ey, ex).scaled(sign)
    jacobi = w_bracket(ex, w_bracket(ey, ez)) - w_bracket(w_bracket(ex, ey), ez) - w_bracket(ey, w_bracket(ex, ez)).scaled(sign)
    return antisymmetry, jacobi


def check_superalgebra_axioms(
    n: int, report: Optional[VerificationReport] = None, samples: Optional[int] = None, seed: int = constants.PROPERTY_SEED
) -> VerificationReport:
    """Super-antisymmetry and super-Jacobi on basis triples.

    Exhaustive up to AXIOMS_EXHAUSTIVE_MAX_N, seeded random triples above it.
    """
    _check_n(n)
    report = report or VerificationReport(f"axioms:n={n}")
    basis = w_full_basis(n)
    if samples is None and n <= constants.AXIOMS_EXHAUSTIVE_MAX_N:
        triples = ((x, y, z) for x in basis for y in basis for z in basis)
        total = len(basis) ** 3
    else:
        total = samples or constants.RANDOM_TRIPLE_SAMPLES
        rng = np.random.default_rng(seed)
        picks = rng.integers(0, len(basis), size=(total, 3))
        triples = ((basis[i], basis[j], basis[k]) for i, j, k in picks)
    failures = 0
    for x, y, z in tqdm(triples, total=total, desc=f"axioms W({n})", disable=not log.isEnabledFor(logging.DEBUG)):
        antisymmetry, jacobi = _axiom_residuals(x, y, z, n)
        if not antisymmetry.is_zero():
            failures += 1
            report.expect_zero(f"antisymmetry [{x}, {y}]", antisymmetry)
        if not jacobi.is_zero():
            failures += 1
            report.expect_zero(f"jacobi ({x}, {y}, {z})", jacobi)
    report.expect_equal(f"axiom failures over {total} triples", 0, failures)
    return report
