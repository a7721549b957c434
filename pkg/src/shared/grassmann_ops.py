"""Grassmann superalgebra, contractions and sparse endomorphisms"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union
import logging

import constants

log = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Number = Union[int, Fraction]


class InhomogeneousOperatorError(ValueError):
    """Raised when a parity-dependent operation receives an inhomogeneous operand"""


def _check_rank(n: int):
    if not 1 <= n <= constants.MAX_GRASSMANN_N:
        raise ValueError(f"Grassmann rank {n} outside 1..{constants.MAX_GRASSMANN_N}")


def canonical_monomial(indices: Sequence[int]) -> Tuple[int, Optional[Monomial]]:
    """Sort generator indices; returns (sign, monomial) or (0, None) on a repeat"""
    if len(set(indices)) != len(indices):
        return 0, None
    inversions = sum(1 for i in range(len(indices)) for j in range(i + 1, len(indices)) if indices[i] > indices[j])
    return (-1) ** inversions, tuple(sorted(indices))


def monomial_product(a: Monomial, b: Monomial) -> Tuple[int, Optional[Monomial]]:
    """xi^a * xi^b for sorted monomials"""
    if not b:
        return 1, a
    if not a:
        return 1, b
    if set(a) & set(b):
        return 0, None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1) ** inversions, tuple(sorted(a + b))


def contract_monomial(b: int, monomial: Monomial) -> Tuple[int, Optional[Monomial]]:
    """Left derivative d/dxi^b of a sorted monomial"""
    if b not in monomial:
        return 0, None
    position = monomial.index(b)
    return (-1) ** position, monomial[:position] + monomial[position + 1:]


@lru_cache(maxsize=None)
def all_monomials(n: int) -> Tuple[Monomial, ...]:
    """Monomial basis of Lambda(n), ordered by degree then lexicographically"""
    return tuple(m for p in range(n + 1) for m in combinations(range(n), p))


def _add_term(terms: Dict, key, value):
    y = terms.get(key, 0) + value
    if y:
        terms[key] = y
    else:
        terms.pop(key, None)


@dataclass(frozen=True)
class GrassmannElement:
    """Rational combination of monomials in xi^0..xi^{n-1}"""

    n: int
    terms: Dict[Monomial, Number] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, c in self.terms.items():
            if c == 0:
                continue
            if any(i >= self.n or i < 0 for i in m) or list(m) != sorted(set(m)):
                raise ValueError(f"Monomial {m} is not canonical for n={self.n}")
            clean[m] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def monomial(cls, n: int, indices: Sequence[int], coeff: Number = 1) -> "GrassmannElement":
        sign, m = canonical_monomial(list(indices))
        if not sign:
            return cls(n)
        return cls(n, {m: sign * coeff})

    @classmethod
    def unit(cls, n: int) -> "GrassmannElement":
        return cls(n, {(): 1})

    @property
    def parity(self) -> Optional[int]:
        parities = {len(m) % 2 for m in self.terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_parts(self) -> Dict[int, "GrassmannElement"]:
        parts: Dict[int, Dict[Monomial, Number]] = {}
        for m, c in self.terms.items():
            parts.setdefault(len(m) % 2, {})[m] = c
        return {p: GrassmannElement(self.n, t) for p, t in parts.items()}

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        _same_rank(self.n, other.n)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _add_term(terms, m, c)
        return GrassmannElement(self.n, terms)

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return self + other.scaled(-1)

    def __mul__(self, other: "GrassmannElement") -> "GrassmannElement":
        return gr_mul(self, other)

    def scaled(self, c: Number) -> "GrassmannElement":
        return GrassmannElement(self.n, {m: v * c for m, v in self.terms.items()})


def _same_rank(a: int, b: int):
    if a != b:
        raise ValueError(f"Grassmann rank mismatch: {a} != {b}")


def gr_mul(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    """Associative product with xi^a xi^b = -xi^b xi^a"""
    _same_rank(x.n, y.n)
    terms: Dict[Monomial, Number] = {}
    for a, c in x.terms.items():
        for b, d in y.terms.items():
            sign, m = monomial_product(a, b)
            if sign:
                _add_term(terms, m, sign * c * d)
    return GrassmannElement(x.n, terms)


def contract(b: int, x: GrassmannElement) -> GrassmannElement:
    """The contraction K_b (left derivative with respect to xi^b)"""
    if not 0 <= b < x.n:
        raise ValueError(f"Contraction index {b} outside 0..{x.n - 1}")
    terms: Dict[Monomial, Number] = {}
    for m, c in x.terms.items():
        sign, rest = contract_monomial(b, m)
        if sign:
            _add_term(terms, rest, sign * c)
    return GrassmannElement(x.n, terms)


@dataclass(frozen=True)
class EndOp:
    """Column-sparse endomorphism of Lambda(n) over the monomial basis"""

    n: int
    columns: Dict[Monomial, Dict[Monomial, Number]] = field(default_factory=dict)
    parity: Optional[int] = None

    def __post_init__(self):
        columns = {m: dict(col) for m, col in self.columns.items()}
        columns = {m: {t: c for t, c in col.items() if c != 0} for m, col in columns.items()}
        columns = {m: col for m, col in columns.items() if col}
        object.__setattr__(self, "columns", columns)
        inferred = _infer_parity(columns)
        if self.parity is None:
            object.__setattr__(self, "parity", inferred if columns else 0)
        elif columns and inferred != self.parity:
            raise InhomogeneousOperatorError(
                f"Declared parity {self.parity} inconsistent with stored columns"
            )

    def is_zero(self) -> bool:
        return not self.columns

    def is_homogeneous(self) -> bool:
        return self.parity is not None

    def column(self, monomial: Monomial) -> Dict[Monomial, Number]:
        return self.columns.get(monomial, {})

    def apply(self, x: GrassmannElement) -> GrassmannElement:
        _same_rank(self.n, x.n)
        terms: Dict[Monomial, Number] = {}
        for m, c in x.terms.items():
            for t, d in self.column(m).items():
                _add_term(terms, t, c * d)
        return GrassmannElement(self.n, terms)

    def __add__(self, other: "EndOp") -> "EndOp":
        return self.combine(other, 1)

    def __sub__(self, other: "EndOp") -> "EndOp":
        return self.combine(other, -1)

    def combine(self, other: "EndOp", c: Number) -> "EndOp":
        """self + c*other"""
        _same_rank(self.n, other.n)
        columns = {m: dict(col) for m, col in self.columns.items()}
        for m, col in other.columns.items():
            target = columns.setdefault(m, {})
            for t, d in col.items():
                _add_term(target, t, c * d)
        return EndOp(self.n, columns)

    def scaled(self, c: Number) -> "EndOp":
        if c == 0:
            return EndOp(self.n)
        return EndOp(self.n, {m: {t: d * c for t, d in col.items()} for m, col in self.columns.items()}, self.parity)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EndOp):
            return NotImplemented
        return self.n == other.n and self.columns == other.columns

    def __hash__(self):
        return hash((self.n, tuple(sorted((m, tuple(sorted(c.items()))) for m, c in self.columns.items()))))


def _infer_parity(columns: Mapping[Monomial, Mapping[Monomial, Number]]) -> Optional[int]:
    shifts = {(len(m) + len(t)) % 2 for m, col in columns.items() for t in col}
    if len(shifts) == 1:
        return shifts.pop()
    return None


def end_compose(f: EndOp, g: EndOp) -> EndOp:
    """f after g"""
    _same_rank(f.n, g.n)
    columns: Dict[Monomial, Dict[Monomial, Number]] = {}
    for m, col in g.columns.items():
        out: Dict[Monomial, Number] = {}
        for t, c in col.items():
            for s, d in f.column(t).items():
                _add_term(out, s, c * d)
        if out:
            columns[m] = out
    return EndOp(f.n, columns)


def end_supercommutator(f: EndOp, g: EndOp) -> EndOp:
    """f g - (-1)^{|f||g|} g f for homogeneous operators"""
    if f.parity is None or g.parity is None:
        raise InhomogeneousOperatorError("Supercommutator needs homogeneous operands")
    sign = -1 if f.parity * g.parity else 1
    return end_compose(f, g).combine(end_compose(g, f), -sign)


def identity_op(n: int) -> EndOp:
    """The identity L of End Lambda(n)"""
    return EndOp(n, {m: {m: 1} for m in all_monomials(n)}, 0)


def left_mul_op(x: GrassmannElement) -> EndOp:
    """Left multiplication by a Grassmann element"""
    columns: Dict[Monomial, Dict[Monomial, Number]] = {}
    for m in all_monomials(x.n):
        out: Dict[Monomial, Number] = {}
        for a, c in x.terms.items():
            sign, t = monomial_product(a, m)
            if sign:
                _add_term(out, t, sign * c)
        if out:
            columns[m] = out
    return EndOp(x.n, columns)


def contract_op(b: int, n: int) -> EndOp:
    """The contraction K_b as an operator"""
    return k_op((), b, n)


@lru_cache(maxsize=4096)
def k_op(uppers: Tuple[int, ...], lower: int, n: int) -> EndOp:
    """K^{uppers}_lower = xi^{uppers} d/dxi^lower acting on Lambda(n)"""
    _check_rank(n)
    uppers = tuple(uppers)
    parity = (len(uppers) + 1) % 2
    sign, canonical = canonical_monomial(list(uppers))
    if not sign:
        log.debug("k_op: repeated upper index in %s, returning zero operator", uppers)
        return EndOp(n, {}, parity)
    columns: Dict[Monomial, Dict[Monomial, Number]] = {}
    for m in all_monomials(n):
        s1, rest = contract_monomial(lower, m)
        if not s1:
            continue
        s2, t = monomial_product(canonical, rest)
        if s2:
            columns[m] = {t: sign * s1 * s2}
    return EndOp(n, columns, parity)
