"""Generator-level Weyl reflections of the presentation, checked by evaluation in W(n)"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional
import logging

from tqdm import tqdm

from src.algebra.presentation import (
    GeneratorSymbol,
    RelationExpr,
    e,
    evaluate,
    f,
    f0,
    f0_indices,
    generator_symbols,
    h,
    h_definitions,
    ideal_relations,
    relation,
    relation_set,
)
from src.algebra.w_realization import WElement, chevalley_assignment, w_bracket
from src.shared.cartan_data import CartanMatrix, cartan_for_n
from src.verification.report import VerificationReport
import constants

log = logging.getLogger(__name__)

Assignment = Dict[GeneratorSymbol, WElement]


@dataclass(frozen=True)
class GeneratorAutomorphism:
    """Images of the generators under the fundamental reflection w_i, as bracket words"""

    index: int
    cartan: CartanMatrix
    images: Mapping[GeneratorSymbol, RelationExpr]

    def image(self, symbol: GeneratorSymbol) -> RelationExpr:
        return self.images[symbol]

    def apply(self, assignment: Mapping[GeneratorSymbol, WElement]) -> Assignment:
        """New generator images: each transformed generator evaluated under ``assignment``"""
        return {g: evaluate(expr, assignment, w_bracket) for g, expr in self.images.items()}


def _linear(family: str, symbol: GeneratorSymbol, other: GeneratorSymbol, c: int) -> RelationExpr:
    """symbol + c * other, merging when the two coincide"""
    if symbol == other:
        return relation(family, (1 + c, (symbol,)))
    return relation(family, (1, (symbol,)), (c, (other,)))


def weyl_automorphism(i: int, n: int) -> GeneratorAutomorphism:
    """The reflection w_i for 1 <= i <= n-1 acting on e_a, f_a, f_{0a}, h_a"""
    cartan = cartan_for_n(n)
    if i == 0:
        raise ValueError("The grey node alpha_0 has no Weyl reflection")
    if not 1 <= i <= cartan.rank:
        raise ValueError(f"Reflection index {i} outside 1..{cartan.rank}")
    B = cartan
    images: Dict[GeneratorSymbol, RelationExpr] = {}
    for a in range(cartan.size):
        if a == i:
            images[e(a)] = relation("weyl", (-1, (f(a),)))
        elif B[i, a] == -1:
            images[e(a)] = relation("weyl", (1, (e(i), e(a))))
        elif B[i, a] == 0:
            images[e(a)] = relation("weyl", (1, (e(a),)))
        else:
            raise ValueError(f"Cartan entry B[{i},{a}] = {B[i, a]} is not simply laced")
    for a in cartan.nodes:
        if a == i:
            images[f(a)] = relation("weyl", (-1, (e(a),)))
        elif B[i, a] == -1:
            images[f(a)] = relation("weyl", (-1, (f(i), f(a))))
        else:
            images[f(a)] = relation("weyl", (1, (f(a),)))
    for a in f0_indices(cartan):
        if i == 1:
            images[f0(a)] = relation("weyl", (-1, (f(1), f0(a))))
        else:
            images[f0(a)] = _linear("weyl", f0(a), f0(i), -B[a, i])
    for a in range(cartan.size):
        images[h(a)] = _linear("weyl", h(a), h(i), -B[a, i])
    return GeneratorAutomorphism(i, cartan, images)


def _check_n(n: int):
    low, high = constants.WEYL_N_RANGE
    if not low <= n <= high:
        raise ValueError(f"Weyl invariance needs {low} <= n <= {high}, got {n}")


def checked_relations(cartan: CartanMatrix) -> List[RelationExpr]:
    return relation_set(cartan) + h_definitions(cartan) + ideal_relations(cartan)


def twice_sign(original: WElement, twice: WElement) -> Optional[int]:
    """+1 or -1 when w_i^2 maps the generator to plus or minus itself"""
    if twice == original:
        return 1
    if twice == -original:
        return -1
    return None


def verify_weyl_invariance(n: int, report: Optional[VerificationReport] = None) -> VerificationReport:
    """Every relation transformed by every w_i evaluates to zero in W(n)"""
    _check_n(n)
    report = report or VerificationReport(f"weyl:n={n}")
    base = chevalley_assignment(n)
    cartan = cartan_for_n(n)
    exprs = checked_relations(cartan)
    symbols = generator_symbols(cartan)
    for i in tqdm(range(1, n), desc="reflections", disable=not log.isEnabledFor(logging.DEBUG)):
        w = weyl_automorphism(i, n)
        moved = w.apply(base)
        failures = 0
        for expr in exprs:
            residual = evaluate(expr, moved, w_bracket)
            if not report.expect_zero(f"w{i} {expr.family}: {expr}", residual):
                failures += 1
        log.debug("w%d: %d relations, %d failures", i, len(exprs), failures)
        twice = w.apply(moved)
        for g in symbols:
            sign = twice_sign(base[g], twice[g])
            report.record(f"w{i}^2 {g}", sign is not None, actual=sign)
    for a in f0_indices(cartan):
        aux = relation("weyl-auxiliary", (1, (f(1), e(2), f0(a))))
        report.expect_zero(f"auxiliary {aux}", evaluate(aux, base, w_bracket))
    return report
