"""Operator realization of the W(E_n) generators in the local superalgebra u(Lambda(n))

u(Lambda) = U_{-1} + U_0 + U_1 with U_1 = Lambda E, U_0 = End Lambda and
U_{-1} = Hom(Lambda, End Lambda). The identity E of U_1 is odd, so a monomial
xi^A E has parity |A| + 1. Elements of U_{-1} are stored by their values on the
monomial basis. Brackets landing at node level +2 or -2 stay formal; they vanish
in the minimal algebra exactly when their brackets with the opposite level do.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Mapping, Optional, Tuple, Union
import logging

from tqdm import tqdm

from src.algebra.presentation import (
    GeneratorSymbol,
    RelationExpr,
    e,
    evaluate,
    f,
    f0,
    generator_symbols,
    h,
    h_definitions,
    relation_set,
)
from src.algebra.w_realization import chevalley_assignment, w_operator
from src.shared.cartan_data import CartanMatrix, build_cartan
from src.shared.exact_linalg import Subspace
from src.shared.grassmann_ops import (
    EndOp,
    GrassmannElement,
    Monomial,
    all_monomials,
    contract,
    end_compose,
    end_supercommutator,
    identity_op,
    k_op,
    left_mul_op,
)
from src.verification.report import VerificationReport
import constants

log = logging.getLogger(__name__)

Number = Union[int, Fraction]
MinusMap = Dict[Monomial, EndOp]
FormalPair = Tuple[Fraction, "LocalImage", "LocalImage"]


def _op_parts(op: EndOp) -> Dict[int, EndOp]:
    """Split an operator into its even and odd parts"""
    if op.is_homogeneous():
        return {op.parity: op} if not op.is_zero() else {}
    parts: Dict[int, Dict[Monomial, Dict[Monomial, Number]]] = {}
    for m, col in op.columns.items():
        for t, c in col.items():
            parts.setdefault((len(m) + len(t)) % 2, {}).setdefault(m, {})[t] = c
    return {p: EndOp(op.n, cols, p) for p, cols in parts.items()}


def _plus_parts(x: GrassmannElement) -> Dict[int, GrassmannElement]:
    """Parts of x E by U_1 parity (Grassmann degree + 1)"""
    return {(p + 1) % 2: part for p, part in x.homogeneous_parts().items()}


def _minus_parts(z: Mapping[Monomial, EndOp]) -> Dict[int, MinusMap]:
    """Parts of a map by its parity |z(m)| - |m E|"""
    parts: Dict[int, MinusMap] = {}
    for m, value in z.items():
        for p, op in _op_parts(value).items():
            parts.setdefault((p + len(m) + 1) % 2, {})[m] = op
    return parts


def _clean_map(z: Mapping[Monomial, EndOp]) -> MinusMap:
    return {m: op for m, op in z.items() if not op.is_zero()}


def _map_combine(z: Mapping[Monomial, EndOp], w: Mapping[Monomial, EndOp], c: Number) -> MinusMap:
    out = dict(z)
    for m, op in w.items():
        out[m] = out[m].combine(op, c) if m in out else op.scaled(c)
    return _clean_map(out)


@dataclass(frozen=True)
class LocalImage:
    """Element of u(Lambda(n)) by node level.

    ``plus`` lies in U_1, ``zero`` in U_0 and ``minus`` in U_{-1}; ``plus_two`` and
    ``minus_two`` hold formal sums c [x, y] of two level +1 or two level -1 elements.
    """

    n: int
    plus: GrassmannElement = None
    zero: EndOp = None
    minus: Mapping[Monomial, EndOp] = field(default_factory=dict)
    plus_two: Tuple[FormalPair, ...] = ()
    minus_two: Tuple[FormalPair, ...] = ()

    def __post_init__(self):
        if self.plus is None:
            object.__setattr__(self, "plus", GrassmannElement(self.n))
        if self.zero is None:
            object.__setattr__(self, "zero", EndOp(self.n))
        object.__setattr__(self, "minus", _clean_map(self.minus))

    @classmethod
    def of_plus(cls, x: GrassmannElement) -> "LocalImage":
        return cls(x.n, plus=x)

    @classmethod
    def of_zero(cls, op: EndOp) -> "LocalImage":
        return cls(op.n, zero=op)

    @classmethod
    def of_minus(cls, n: int, z: Mapping[Monomial, EndOp]) -> "LocalImage":
        return cls(n, minus=z)

    @property
    def levels(self) -> List[int]:
        present = [
            (2, bool(self.plus_two)),
            (1, not self.plus.is_zero()),
            (0, not self.zero.is_zero()),
            (-1, bool(self.minus)),
            (-2, bool(self.minus_two)),
        ]
        return [level for level, nonzero in present if nonzero]

    def combine(self, other: "LocalImage", c: Number) -> "LocalImage":
        if self.n != other.n:
            raise ValueError(f"Rank mismatch: u(Lambda({self.n})) and u(Lambda({other.n}))")
        return LocalImage(
            self.n,
            self.plus + other.plus.scaled(c),
            self.zero.combine(other.zero, c),
            _map_combine(self.minus, other.minus, c),
            self.plus_two + tuple((k * c, x, y) for k, x, y in other.plus_two),
            self.minus_two + tuple((k * c, x, y) for k, x, y in other.minus_two),
        )

    def __add__(self, other: "LocalImage") -> "LocalImage":
        return self.combine(other, 1)

    def __sub__(self, other: "LocalImage") -> "LocalImage":
        return self.combine(other, -1)

    def scaled(self, c: Number) -> "LocalImage":
        return LocalImage(self.n).combine(self, c)

    def homogeneous_parts(self) -> Dict[Tuple[int, int], "LocalImage"]:
        """Parts keyed by (node level, parity) for the local levels"""
        parts: Dict[Tuple[int, int], LocalImage] = {}
        for p, x in _plus_parts(self.plus).items():
            parts[(1, p)] = LocalImage.of_plus(x)
        for p, op in _op_parts(self.zero).items():
            parts[(0, p)] = LocalImage.of_zero(op)
        for p, z in _minus_parts(self.minus).items():
            parts[(-1, p)] = LocalImage.of_minus(self.n, z)
        return parts

    @property
    def parity(self) -> Optional[int]:
        parities = {p for _, p in self.homogeneous_parts()}
        if self.plus_two or self.minus_two or len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def is_zero(self) -> bool:
        if not (self.plus.is_zero() and self.zero.is_zero() and not self.minus):
            return False
        if self.plus_two and not _formal_vanishes(self.plus_two, plus_two_probes(self.n)):
            return False
        if self.minus_two and not _formal_vanishes(self.minus_two, minus_two_probes(self.n)):
            return False
        return True

    def __str__(self) -> str:
        parts = []
        if not self.plus.is_zero():
            parts.append(f"U1{dict(self.plus.terms)}")
        if not self.zero.is_zero():
            parts.append(f"U0[{len(self.zero.columns)} columns]")
        if self.minus:
            parts.append(f"U-1[{len(self.minus)} values]")
        if self.plus_two:
            parts.append(f"U2[{len(self.plus_two)} brackets]")
        if self.minus_two:
            parts.append(f"U-2[{len(self.minus_two)} brackets]")
        return " + ".join(parts) or "0"


def _sign(p: int, q: int) -> int:
    return -1 if p * q else 1


def _act_zero_on_minus(x: EndOp, px: int, z: MinusMap, pz: int) -> MinusMap:
    """[x_0, z](m) = [x_0, z(m)] - (-1)^{|x||z|} z(x_0(m))"""
    n = x.n
    out: MinusMap = {}
    for m in all_monomials(n):
        value = end_supercommutator(x, z[m]) if m in z else EndOp(n)
        pulled = EndOp(n)
        for t, c in x.column(m).items():
            if t in z:
                pulled = pulled.combine(z[t], c)
        value = value.combine(pulled, -_sign(px, pz))
        if not value.is_zero():
            out[m] = value
    return out


def _apply_minus(z: MinusMap, v: GrassmannElement) -> EndOp:
    """z(v) for v in U_1"""
    out = EndOp(v.n)
    for m, c in v.terms.items():
        if m in z:
            out = out.combine(z[m], c)
    return out


def _bracket_parts(x: LocalImage, lx: int, px: int, y: LocalImage, ly: int, py: int) -> LocalImage:
    n = x.n
    sign = _sign(px, py)
    if (lx, ly) == (1, 1):
        return LocalImage(n, plus_two=((Fraction(1), x, y),))
    if (lx, ly) == (-1, -1):
        return LocalImage(n, minus_two=((Fraction(1), x, y),))
    if (lx, ly) == (0, 0):
        return LocalImage.of_zero(end_supercommutator(x.zero, y.zero))
    if (lx, ly) == (0, 1):
        return LocalImage.of_plus(x.zero.apply(y.plus))
    if (lx, ly) == (1, 0):
        return LocalImage.of_plus(y.zero.apply(x.plus).scaled(-sign))
    if (lx, ly) == (-1, 1):
        return LocalImage.of_zero(_apply_minus(x.minus, y.plus))
    if (lx, ly) == (1, -1):
        return LocalImage.of_zero(_apply_minus(y.minus, x.plus).scaled(-sign))
    if (lx, ly) == (0, -1):
        return LocalImage.of_minus(n, _act_zero_on_minus(x.zero, px, y.minus, py))
    if (lx, ly) == (-1, 0):
        z = _act_zero_on_minus(y.zero, py, x.minus, px)
        return LocalImage.of_minus(n, {m: op.scaled(-sign) for m, op in z.items()})
    raise ValueError(f"Bracket of node levels {lx} and {ly} is outside the local part")


def en_bracket(x: LocalImage, y: LocalImage) -> LocalImage:
    """Local bracket of u(Lambda), extended bilinearly over homogeneous parts"""
    if x.plus_two or x.minus_two or y.plus_two or y.minus_two:
        raise ValueError("Formal node level 2 elements cannot be bracketed further")
    total = LocalImage(x.n)
    for (lx, px), xp in x.homogeneous_parts().items():
        for (ly, py), yp in y.homogeneous_parts().items():
            total = total + _bracket_parts(xp, lx, px, yp, ly, py)
    return total


def _formal_vanishes(terms: Tuple[FormalPair, ...], probes: List["LocalImage"]) -> bool:
    """sum c [x, y] = 0 iff sum c ([x,[y,w]] - (-1)^{|x||y|} [y,[x,w]]) = 0 for every probe w"""
    for w in probes:
        total = LocalImage(w.n)
        for c, x, y in terms:
            sign = _sign(x.parity, y.parity)
            total = total + en_bracket(x, en_bracket(y, w)).scaled(c)
            total = total + en_bracket(y, en_bracket(x, w)).scaled(-c * sign)
        if not total.is_zero():
            return False
    return True


@lru_cache(maxsize=None)
def minus_two_probes(n: int) -> List[LocalImage]:
    """U_1 is all of Lambda E: every monomial"""
    return [LocalImage.of_plus(GrassmannElement(n, {m: 1})) for m in all_monomials(n)]


def _minus_coordinates(z: MinusMap, n: int) -> Dict[int, Fraction]:
    """Flat coordinates of a level -1 element over (argument, column, row) monomial triples"""
    size = 2 ** n
    index = {m: i for i, m in enumerate(all_monomials(n))}
    out: Dict[int, Fraction] = {}
    for m, op in z.items():
        for col, entries in op.columns.items():
            offset = (index[m] * size + index[col]) * size
            for t, c in entries.items():
                out[offset + index[t]] = Fraction(c)
    return out


@lru_cache(maxsize=None)
def plus_two_probes(n: int) -> List[LocalImage]:
    """Spanning set of the level -1 part generated by f_n under the level 0 generator images.

    The h_a are left out: f_n is an eigenvector of every ad h_a and the other
    generators shift weights, so the span is already h-stable.
    """
    images = en_generator_images(n)
    movers = [x for g, x in sorted(images.items()) if g.kind != "h" and x.levels == [0]]
    start = images[f(n)]
    space = Subspace((2 ** n) ** 3)
    space.add(_minus_coordinates(start.minus, n))
    probes, queue = [start], [start]
    while queue:
        z = queue.pop()
        for g in movers:
            image = en_bracket(g, z)
            if image.minus and space.add(_minus_coordinates(image.minus, n)):
                probes.append(image)
                queue.append(image)
    log.debug("E%d: level -1 closure of f_%d has dimension %d", n, n, len(probes))
    return probes


def _perm_sign(perm: Tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def f_abc(a: int, b: int, c: int, n: int) -> MinusMap:
    """F_{abc}(x E) = 3 (K_[a K_b x) K_c] + (-1)^{|x|} (K_a K_b K_c x) L on every monomial x"""
    out: MinusMap = {}
    indices = (a, b, c)
    for m in all_monomials(n):
        x = GrassmannElement(n, {m: 1})
        value = EndOp(n)
        for perm in permutations(range(3)):
            i, j, k = (indices[p] for p in perm)
            y = contract(i, contract(j, x))
            if y.is_zero():
                continue
            term = end_compose(left_mul_op(y), k_op((), k, n))
            value = value.combine(term, Fraction(_perm_sign(perm), 2))
        top = contract(a, contract(b, contract(c, x)))
        if not top.is_zero():
            value = value.combine(left_mul_op(top), (-1) ** (len(m) % 2))
        if not value.is_zero():
            out[m] = value
    return out


def _check_n(n: int):
    low, high = constants.EN_N_RANGE
    if not low <= n <= high:
        raise ValueError(f"E_n realization needs {low} <= n <= {high}, got {n}")


def _sum_ops(ops) -> EndOp:
    ops = list(ops)
    total = ops[0]
    for op in ops[1:]:
        total = total + op
    return total


def en_generator_images(n: int) -> Dict[GeneratorSymbol, LocalImage]:
    """Images of e_a, f_a, h_a (a = 0..n) and f_{0a} in u(Lambda(n))"""
    _check_n(n)
    z = LocalImage.of_zero
    ident = identity_op(n)
    l0 = left_mul_op(GrassmannElement(n, {(0,): 1}))
    euler = _sum_ops(k_op((a,), a, n) for a in range(n))
    k0 = _sum_ops(k_op((0, b), b, n) for b in range(1, n))
    top = range(n - 3, n)
    images = {
        e(0): z(k_op((), 0, n)),
        h(0): z(euler - ident.scaled(3) - k_op((0,), 0, n)),
        f0(0): z(k0 - l0.scaled(3)),
        e(n): LocalImage.of_plus(GrassmannElement.monomial(n, top)),
        f(n): LocalImage.of_minus(n, f_abc(n - 3, n - 2, n - 1, n)),
        h(n): z(_sum_ops(k_op((a,), a, n) for a in top) - ident),
        f0(n): z(_sum_ops(k_op((0, a), a, n) for a in top) - l0),
    }
    for i in range(1, n):
        images[e(i)] = z(k_op((i - 1,), i, n))
        images[f(i)] = z(k_op((i,), i - 1, n))
        images[h(i)] = z(k_op((i - 1,), i - 1, n) - k_op((i,), i, n))
    for i in range(2, n):
        images[f0(i)] = z(k_op((0, i - 1), i - 1, n) - k_op((0, i), i, n))
    return images


def _ratio(y: LocalImage, x: LocalImage) -> Optional[Fraction]:
    """lambda with y = lambda x, or None"""
    if y.is_zero():
        return Fraction(0)
    if not x.plus.is_zero():
        key = next(iter(x.plus.terms))
        value = Fraction(y.plus.terms.get(key, 0)) / x.plus.terms[key]
    elif not x.zero.is_zero():
        m = next(iter(x.zero.columns))
        t = next(iter(x.zero.columns[m]))
        value = Fraction(y.zero.column(m).get(t, 0)) / x.zero.columns[m][t]
    else:
        return None
    return value if (y - x.scaled(value)).is_zero() else None


def eigenvalue_matrix(n: int, images: Optional[Mapping[GeneratorSymbol, LocalImage]] = None) -> List[List[Optional[Fraction]]]:
    """Entries lambda_{ab} with [h_a, e_b] = lambda_{ab} e_b"""
    images = images or en_generator_images(n)
    return [[_ratio(en_bracket(images[h(a)], images[e(b)]), images[e(b)]) for b in range(n + 1)] for a in range(n + 1)]


def en_relations(cartan: CartanMatrix) -> List[RelationExpr]:
    return relation_set(cartan) + h_definitions(cartan)


def verify_en_relations(n: int, report: Optional[VerificationReport] = None) -> VerificationReport:
    """All relations of B(E_n) vanish under the operator images; the eigenvalues rebuild the Cartan matrix"""
    _check_n(n)
    report = report or VerificationReport(f"enmap:n={n}")
    cartan = build_cartan("E", n)
    images = en_generator_images(n)
    missing = [str(g) for g in generator_symbols(cartan) if g not in images]
    report.expect_equal("generator images", [], missing)
    recovered = eigenvalue_matrix(n, images)
    report.expect_equal("eigenvalue matrix", [list(row) for row in cartan.entries], recovered)
    assignment = chevalley_assignment(n)
    for a in range(1, n):
        for g in (e(a), f(a)):
            report.record(f"A-chain image {g}", w_operator(assignment[g]) == images[g].zero)
    exprs = en_relations(cartan)
    for expr in tqdm(exprs, desc=f"E{n} relations", disable=not log.isEnabledFor(logging.DEBUG)):
        report.expect_zero(f"{expr.family}: {expr}", evaluate(expr, images, en_bracket))
    log.debug("E%d: %d relations evaluated", n, len(exprs))
    return report
