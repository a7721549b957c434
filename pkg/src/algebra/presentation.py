"""Generator symbols, defining relations and their evaluation in a realization"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Mapping, Sequence, Set, Tuple, Union
import logging

from src.shared.cartan_data import CartanMatrix
from src.shared.exact_linalg import Subspace
import constants

log = logging.getLogger(__name__)

Number = Union[int, Fraction]
KINDS = ("e", "f", "f0", "h")


@dataclass(frozen=True, order=True)
class GeneratorSymbol:
    """Abstract generator e_a, f_a, h_a or f_{0a}"""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"Unknown generator kind: {self.kind}")
        if self.index < 0:
            raise ValueError(f"Negative generator index: {self.index}")
        if self.kind == "f0" and self.index == 1:
            raise ValueError("f0 index 1 does not exist (f_{01} is not a generator)")
        if self.kind == "f" and self.index == 0:
            raise ValueError("f index must be >= 1")

    @property
    def parity(self) -> int:
        return int(self.kind == "f0" or (self.kind == "e" and self.index == 0))

    @property
    def multidegree(self) -> Tuple[int, int]:
        if self.kind == "e" and self.index == 0:
            return (1, 0)
        if self.kind == "f0":
            return (0, 1)
        return (0, 0)

    @property
    def level(self) -> int:
        i, j = self.multidegree
        return i - j

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def e(a: int) -> GeneratorSymbol:
    return GeneratorSymbol("e", a)


def f(a: int) -> GeneratorSymbol:
    return GeneratorSymbol("f", a)


def h(a: int) -> GeneratorSymbol:
    return GeneratorSymbol("h", a)


def f0(a: int) -> GeneratorSymbol:
    return GeneratorSymbol("f0", a)


Word = Tuple[GeneratorSymbol, ...]


def word_multidegree(word: Word) -> Tuple[int, int]:
    return (sum(g.multidegree[0] for g in word), sum(g.multidegree[1] for g in word))


def word_parity(word: Word) -> int:
    return sum(g.parity for g in word) % 2


def word_str(word: Word) -> str:
    if len(word) == 1:
        return str(word[0])
    return f"[{word[0]},{word_str(word[1:])}]"


@dataclass(frozen=True)
class RelationExpr:
    """Formal combination of right-nested bracket words; the relation reads expr = 0.

    The word (g1, ..., gk) stands for [g1, [g2, ..., [g_{k-1}, g_k]]].
    """

    family: str
    terms: Tuple[Tuple[Fraction, Word], ...]

    def __post_init__(self):
        terms = tuple((Fraction(c), tuple(w)) for c, w in self.terms if c != 0)
        if not terms:
            raise ValueError(f"Empty relation in family {self.family}")
        object.__setattr__(self, "terms", terms)

    @property
    def words(self) -> List[Word]:
        return [w for _, w in self.terms]

    @property
    def multidegree(self) -> Tuple[int, int]:
        """Multidegree of the leading bracket word"""
        return word_multidegree(self.terms[0][1])

    @property
    def multidegrees(self) -> Set[Tuple[int, int]]:
        return {word_multidegree(w) for w in self.words}

    @property
    def level(self) -> int:
        i, j = self.multidegree
        return i - j

    @property
    def parity(self) -> int:
        return word_parity(self.terms[0][1])

    def is_homogeneous(self) -> bool:
        """Homogeneous up to the (1,1) direction, which [W_(1,0), W_(0,1)] = W_(0,0) identifies"""
        levels = {i - j for i, j in self.multidegrees}
        parities = {word_parity(w) for w in self.words}
        return len(levels) == 1 and len(parities) == 1

    def symbols(self) -> Set[GeneratorSymbol]:
        return {g for w in self.words for g in w}

    def __str__(self) -> str:
        parts = []
        for c, w in self.terms:
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coeff}{word_str(w)}")
        return " + ".join(parts).replace("+ -", "- ")


def relation(family: str, *terms: Tuple[Number, Sequence[GeneratorSymbol]]) -> RelationExpr:
    return RelationExpr(family, tuple((Fraction(c), tuple(w)) for c, w in terms))


def f0_indices(cartan: CartanMatrix) -> List[int]:
    return [0] + list(range(2, cartan.rank + 1))


def generator_symbols(cartan: CartanMatrix) -> List[GeneratorSymbol]:
    r = cartan.rank
    symbols = [e(a) for a in range(r + 1)] + [f(a) for a in range(1, r + 1)]
    symbols += [h(a) for a in range(r + 1)] + [f0(a) for a in f0_indices(cartan)]
    return symbols


def _power(x: GeneratorSymbol, times: int, tail: Sequence[GeneratorSymbol]) -> Tuple[GeneratorSymbol, ...]:
    return (x,) * times + tuple(tail)


def relation_set(cartan: CartanMatrix, with_definitions: bool = False) -> List[RelationExpr]:
    """Defining relations of the presentation of W~ built on a Cartan matrix.

    The identities that define h_a ([e_0, f_{0a}] = h_a and [e_1, f_1] = h_1) come from
    ``h_definitions`` and are appended only when ``with_definitions`` is set. On A_2
    this gives 48 relations without the definitions and 51 with them.
    """
    B = cartan
    r = cartan.rank
    nodes = range(r + 1)
    finite = range(1, r + 1)
    zeros = f0_indices(cartan)
    out: List[RelationExpr] = []
    for a, b in product(nodes, nodes):
        out.append(relation("cartan-e", (1, (h(a), e(b))), (-B[a, b], (e(b),))))
    for a, b in product(nodes, finite):
        out.append(relation("cartan-f", (1, (h(a), f(b))), (B[a, b], (f(b),))))
    for a, b in product(nodes, finite):
        if (a, b) == (1, 1):
            continue
        if a == b:
            out.append(relation("chevalley-ef", (1, (e(a), f(b))), (-1, (h(b),))))
        else:
            out.append(relation("chevalley-ef", (1, (e(a), f(b)))))
    for a, b in product(nodes, nodes):
        if a != b:
            out.append(relation("serre-e", (1, _power(e(a), 1 - B[a, b], (e(b),)))))
    for a, b in product(finite, finite):
        if a != b:
            out.append(relation("serre-f", (1, _power(f(a), 1 - B[a, b], (f(b),)))))
    for a, b in product(nodes, zeros):
        out.append(relation("f0-eigen", (1, (h(a), f0(b))), (B[a, 0], (f0(b),))))
    for a in zeros:
        out.append(relation("e1-f0", (1, (e(1), f0(a)))))
    for a, b in product(nodes, zeros):
        out.append(relation("double-e", (1, (e(a), e(a), f0(b)))))
    for a, b in product(finite, zeros):
        out.append(relation("double-f", (1, (f(a), f(a), f0(b)))))
    for i, j, a in product(range(2, r + 1), range(2, r + 1), zeros):
        if i == j and B[a, j]:
            out.append(relation("mixed", (1, (e(i), f(j), f0(a))), (-B[a, j], (f0(j),))))
        else:
            out.append(relation("mixed", (1, (e(i), f(j), f0(a)))))
    if with_definitions:
        out.extend(h_definitions(cartan))
    log.debug("relation_set(%s%d): %d relations", cartan.series, r, len(out))
    return out


def h_definitions(cartan: CartanMatrix) -> List[RelationExpr]:
    """[e_0, f_{0a}] = h_a for a != 1 and [e_1, f_1] = h_1"""
    out = [relation("h-definition", (1, (e(0), f0(a))), (-1, (h(a),))) for a in f0_indices(cartan)]
    out.append(relation("h-definition", (1, (e(1), f(1))), (-1, (h(1),))))
    return out


def ideal_relations(cartan: CartanMatrix) -> List[RelationExpr]:
    """Level -2 relations generating the ideal; the middle family exists for the A series only"""
    zeros = f0_indices(cartan)
    r = cartan.rank
    out: List[RelationExpr] = []
    for i, a in enumerate(zeros):
        for b in zeros[i:]:
            out.append(relation("ideal-f0f0", (1, (f0(a), f0(b)))))
    if cartan.series == "A":
        for i in range(3, r + 1):
            for j in range(i, r + 1):
                out.append(relation("ideal-mixed", (1, (f0(i), f(1), f0(j)))))
    for i in range(3, r + 1):
        out.append(relation("ideal-difference", (1, (f0(2), f(1), f0(i))), (-1, (f0(0), f(1), f0(i)))))
    return out


def evaluate(
    expr: RelationExpr,
    assignment: Mapping[GeneratorSymbol, object],
    bracket: Callable[[object, object], object],
):
    """Evaluate a relation with the given generator images and bracket.

    Elements must support ``scaled(c)`` and ``+``.
    """
    total = None
    for c, word in expr.terms:
        try:
            value = assignment[word[-1]]
            for g in reversed(word[:-1]):
                value = bracket(assignment[g], value)
        except KeyError as err:
            raise ValueError(f"No image for generator {err.args[0]} in relation {expr}") from err
        term = value.scaled(c)
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# Free Lie superalgebra level dimensions
# ---------------------------------------------------------------------------


def _tensor_bracket(x: Dict[Tuple[int, ...], int], px: int, y: Dict[Tuple[int, ...], int], py: int) -> Dict[Tuple[int, ...], int]:
    out: Dict[Tuple[int, ...], int] = {}
    sign = -1 if px and py else 1
    for u, a in x.items():
        for v, b in y.items():
            out[u + v] = out.get(u + v, 0) + a * b
            out[v + u] = out.get(v + u, 0) - sign * a * b
    return {k: v for k, v in out.items() if v}


def free_level_dim(gens: Sequence, level: int) -> int:
    """Dimension of a level of the free Lie superalgebra on generators sharing one level.

    The free algebra is realized inside the free associative superalgebra by
    supercommutators; the degree-k part is spanned by right-normed brackets.
    """
    if abs(level) > constants.FREE_LEVEL_MAX_DEPTH:
        raise ValueError(f"Level {level} beyond supported depth {constants.FREE_LEVEL_MAX_DEPTH}")
    if not gens:
        return 0
    levels = {g.level for g in gens}
    if len(levels) != 1 or 0 in levels:
        raise ValueError("Generators must share one nonzero level")
    step = levels.pop()
    if level == 0 or level % step or level // step < 1:
        return 0
    degree = level // step
    parities = [g.parity for g in gens]
    d = len(gens)
    if degree == 1:
        return d
    space = Subspace(d ** degree)
    for word in product(range(d), repeat=degree):
        element = {(word[-1],): 1}
        parity = parities[word[-1]]
        for i in reversed(word[:-1]):
            element = _tensor_bracket({(i,): 1}, parities[i], element, parity)
            parity = (parity + parities[i]) % 2
            if not element:
                break
        if element:
            space.add({_encode(k, d): v for k, v in element.items()})
    return len(space)


def _encode(word: Tuple[int, ...], d: int) -> int:
    code = 0
    for i in word:
        code = code * d + i
    return code
