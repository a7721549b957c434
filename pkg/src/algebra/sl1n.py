"""The 3-graded superalgebra sl(1|n) = A(n-1,0) and its embedding psi into W(n)"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union
from fractions import Fraction

from src.algebra.w_realization import WElement, k_upper, to_vector, w_bracket
from src.shared.exact_linalg import span_dim
from src.verification.report import VerificationReport

Number = Union[int, Fraction]

LEVELS = {"E": 1, "G": 0, "F": -1}


@dataclass(frozen=True, order=True)
class SLBasisElement:
    """E_a (level 1), G^a_b (level 0) or F^a (level -1)"""

    kind: str
    indices: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in LEVELS:
            raise ValueError(f"Unknown sl(1|n) basis kind: {self.kind}")
        expected = 2 if self.kind == "G" else 1
        if len(self.indices) != expected:
            raise ValueError(f"{self.kind} needs {expected} indices, got {self.indices}")

    @property
    def level(self) -> int:
        return LEVELS[self.kind]

    @property
    def parity(self) -> int:
        return 0 if self.kind == "G" else 1

    def __str__(self) -> str:
        if self.kind == "G":
            return f"G^{self.indices[0]}_{self.indices[1]}"
        if self.kind == "E":
            return f"E_{self.indices[0]}"
        return f"F^{self.indices[0]}"


SLElement = Dict[SLBasisElement, Number]


def E(a: int) -> SLBasisElement:
    return SLBasisElement("E", (a,))


def G(a: int, b: int) -> SLBasisElement:
    return SLBasisElement("G", (a, b))


def F(a: int) -> SLBasisElement:
    return SLBasisElement("F", (a,))


def sl1n_basis(n: int, level: int) -> List[SLBasisElement]:
    if level == 1:
        return [E(a) for a in range(n)]
    if level == 0:
        return [G(a, b) for a in range(n) for b in range(n)]
    if level == -1:
        return [F(a) for a in range(n)]
    return []


def _add(out: SLElement, key: SLBasisElement, value: Number):
    y = out.get(key, 0) + value
    if y:
        out[key] = y
    else:
        out.pop(key, None)


def _delta(a: int, b: int) -> int:
    return int(a == b)


def _basis_bracket(x: SLBasisElement, y: SLBasisElement, n: int) -> SLElement:
    out: SLElement = {}
    if x.kind == "G" and y.kind == "G":
        a, b = x.indices
        c, d = y.indices
        if b == c:
            _add(out, G(a, d), 1)
        if d == a:
            _add(out, G(c, b), -1)
        return out
    if x.kind == "E" and y.kind == "F":
        a, = x.indices
        b, = y.indices
        _add(out, G(b, a), -1)
        if a == b:
            for d in range(n):
                _add(out, G(d, d), 1)
        return out
    if x.kind == "G" and y.kind == "F":
        a, b = x.indices
        c, = y.indices
        if b == c:
            _add(out, F(a), 1)
        return out
    if x.kind == "G" and y.kind == "E":
        a, b = x.indices
        c, = y.indices
        if c == a:
            _add(out, E(b), -1)
        return out
    if x.kind == y.kind:
        return out
    # remaining orders follow from super-antisymmetry
    sign = -1 if x.parity and y.parity else 1
    return {k: -sign * v for k, v in _basis_bracket(y, x, n).items()}


def sl1n_bracket(x: SLElement, y: SLElement, n: int) -> SLElement:
    """Bilinear extension of the A(n-1,0) structure constants"""
    out: SLElement = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for k, v in _basis_bracket(a, b, n).items():
                _add(out, k, ca * cb * v)
    return out


def psi(x: Union[SLBasisElement, SLElement], n: int) -> WElement:
    """E_a -> K_a, G^a_b -> K^a_b, F^a -> K^a"""
    if isinstance(x, SLBasisElement):
        x = {x: 1}
    out = WElement(n)
    for sym, c in x.items():
        if sym.kind == "E":
            image = WElement.symbol(n, (), sym.indices[0])
        elif sym.kind == "G":
            image = WElement.symbol(n, (sym.indices[0],), sym.indices[1])
        else:
            image = k_upper(sym.indices[0], n)
        out = out.combine(image, c)
    return out


def trace_element(n: int) -> SLElement:
    """G = sum_a G^a_a"""
    return {G(a, a): 1 for a in range(n)}


def sl1n_full_basis(n: int) -> List[SLBasisElement]:
    return [x for level in (1, 0, -1) for x in sl1n_basis(n, level)]


def verify_psi_embedding(n: int, report: Optional[VerificationReport] = None) -> VerificationReport:
    """psi is an injective homomorphism of superalgebras sl(1|n) -> W(n)"""
    report = report or VerificationReport(f"psi:n={n}")
    basis = sl1n_full_basis(n)
    images = {x: psi(x, n) for x in basis}
    for x in basis:
        for y in basis:
            lhs = psi(sl1n_bracket({x: 1}, {y: 1}, n), n)
            rhs = w_bracket(images[x], images[y])
            if lhs != rhs:
                report.expect_zero(f"psi[{x}, {y}]", lhs - rhs)
    report.record(f"psi on {len(basis) ** 2} basis pairs", not report.failures)
    rank = span_dim([to_vector(v) for v in images.values()])
    report.expect_equal("rank of psi", n * n + 2 * n, rank)
    return report
