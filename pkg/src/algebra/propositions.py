"""Instance checks of the structural propositions behind the presentation of W(n).

Everything here is evaluated inside W(n) through the Chevalley assignment; g is the
A_{n-1} on nodes 1..n-1 and g' the A_{n-2} on nodes 2..n-1.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from src.algebra.presentation import GeneratorSymbol, f0_indices
from src.algebra.w_realization import (
    WElement,
    chevalley_assignment,
    to_vector,
    w_basis,
    w_bracket,
)
from src.shared.cartan_data import (
    RootVector,
    cartan_for_n,
    finite_weights,
    highest_root,
    inner,
    positive_roots,
    weyl_vector,
)
from src.shared.exact_linalg import Subspace, solve
from src.verification.report import VerificationReport
import constants

log = logging.getLogger(__name__)


class ChevalleyBasis:
    """Root vectors, coroots and f_{0 alpha} of g and g' realized in W(n)"""

    def __init__(self, n: int):
        self.n = n
        self.r = n - 1
        self.cartan = cartan_for_n(n)
        self.images = chevalley_assignment(n)
        self.prime_nodes = tuple(range(2, n))
        self.g_roots = positive_roots("A", self.r)
        self.prime_roots = positive_roots("A", self.r, self.prime_nodes)
        self._positive = set(self.g_roots)
        self._e: Dict[RootVector, WElement] = {}
        self._f: Dict[RootVector, WElement] = {}

    def gen(self, kind: str, index: int) -> WElement:
        return self.images[GeneratorSymbol(kind, index)]

    def simple(self, i: int) -> RootVector:
        return RootVector.simple(i, self.r)

    def _split(self, alpha: RootVector) -> Tuple[int, Optional[RootVector]]:
        """Smallest j with alpha - alpha_j a positive root (None for simple roots)"""
        if alpha.height == 1:
            return alpha.coeffs.index(1), None
        for j in range(1, self.r + 1):
            rest = alpha - self.simple(j)
            if rest in self._positive:
                return j, rest
        raise ValueError(f"{alpha} is not a positive root of A_{self.r}")

    def e_root(self, alpha: RootVector) -> WElement:
        """e_alpha = [e_j, e_{alpha - alpha_j}]"""
        if alpha not in self._e:
            j, rest = self._split(alpha)
            self._e[alpha] = self.gen("e", j) if rest is None else w_bracket(self.gen("e", j), self.e_root(rest))
        return self._e[alpha]

    def f_root(self, alpha: RootVector) -> WElement:
        """f_alpha = [f_{alpha - alpha_j}, f_j]"""
        if alpha not in self._f:
            j, rest = self._split(alpha)
            self._f[alpha] = self.gen("f", j) if rest is None else w_bracket(self.f_root(rest), self.gen("f", j))
        return self._f[alpha]

    def h_root(self, alpha: RootVector) -> WElement:
        out = WElement(self.n)
        for i, c in enumerate(alpha.coeffs):
            if c:
                out = out.combine(self.gen("h", i), c)
        return out

    def f0_root(self, coeffs: Sequence) -> WElement:
        """f_{0 alpha} = sum_i a_i f_{0i} over the nodes of g'"""
        out = WElement(self.n)
        for i in self.prime_nodes:
            if coeffs[i]:
                out = out.combine(self.gen("f0", i), coeffs[i])
        return out

    def ip(self, x: RootVector, y: RootVector) -> Fraction:
        return inner(x, y, self.cartan)


def _bracket(*elements: WElement) -> WElement:
    """Right-nested [x1, [x2, ... xk]]"""
    value = elements[-1]
    for x in reversed(elements[:-1]):
        value = w_bracket(x, value)
    return value


def _check_n(n: int, bounds: Tuple[int, int], what: str):
    low, high = bounds
    if not low <= n <= high:
        raise ValueError(f"{what} supports {low} <= n <= {high}, got {n}")


def check_serre_like(cb: ChevalleyBasis, report: VerificationReport) -> bool:
    """(ad e_i)^{1-B_ij} ad e_j f_{0a} = 0, the same with f, and the proportionality of [e_i, f_{0a}]"""
    B = cb.cartan
    ok = True
    zeros = f0_indices(B)
    for i, j in product(cb.prime_nodes, cb.prime_nodes):
        if i == j:
            continue
        for kind in ("e", "f"):
            for a in zeros:
                element = _bracket(*([cb.gen(kind, i)] * (1 - B[i, j])), cb.gen(kind, j), cb.gen("f0", a))
                if not element.is_zero():
                    ok = report.record(f"serre-like {kind}{i},{kind}{j} on f0{a}", False, residual=str(element))
    for i in cb.prime_nodes:
        for kind in ("e", "f"):
            for a, b in product(zeros, zeros):
                lhs = w_bracket(cb.gen(kind, i), cb.gen("f0", b)).scaled(B[i, a])
                rhs = w_bracket(cb.gen(kind, i), cb.gen("f0", a)).scaled(B[i, b])
                if lhs != rhs:
                    ok = report.record(f"proportionality {kind}{i} on f0{a}, f0{b}", False, residual=str(lhs - rhs))
    return report.record("serre-like relations and proportionality", ok)


def check_height_induction(cb: ChevalleyBasis, report: VerificationReport) -> bool:
    """The three implications for positive roots of g', and their image under e <-> f"""
    B = cb.cartan
    ok = True
    for alpha in cb.prime_roots:
        e_alpha, f_alpha = cb.e_root(alpha), cb.f_root(alpha)
        for i in cb.prime_nodes:
            pairing = cb.ip(cb.simple(i), alpha)
            for a in f0_indices(B):
                f0a = cb.gen("f0", a)
                checks = []
                if pairing <= 0:
                    checks.append(("f_i e_alpha", _bracket(cb.gen("f", i), e_alpha, f0a)))
                    checks.append(("e_i f_alpha", _bracket(cb.gen("e", i), f_alpha, f0a)))
                if pairing >= 0:
                    checks.append(("e_i e_alpha", _bracket(cb.gen("e", i), e_alpha, f0a)))
                lhs = _bracket(e_alpha, cb.gen("e", i), f0a)
                rhs = _bracket(cb.gen("e", i), e_alpha, cb.gen("f0", i)).scaled(B[i, a])
                checks.append(("exchange", lhs - rhs))
                for name, residual in checks:
                    if not residual.is_zero():
                        ok = report.record(f"{name} alpha={alpha} i={i} a={a}", False, residual=str(residual))
    return report.record("height induction lemma on positive roots of g'", ok)


def check_chevalley_action(cb: ChevalleyBasis, report: VerificationReport) -> bool:
    """[e_alpha, [f_alpha, f_{0a}]] = (alpha, alpha_a) f_{0 alpha}, and with f_{0 beta} in place of f_{0a}"""
    ok = True
    for alpha in cb.prime_roots:
        e_alpha, f_alpha = cb.e_root(alpha), cb.f_root(alpha)
        f0_alpha = cb.f0_root(alpha.coeffs)
        targets = [(f"f0{a}", cb.gen("f0", a), cb.simple(a)) for a in f0_indices(cb.cartan)]
        targets += [(f"f0{beta}", cb.f0_root(beta.coeffs), beta) for beta in cb.prime_roots]
        for name, f0x, root in targets:
            residual = _bracket(e_alpha, f_alpha, f0x) - f0_alpha.scaled(cb.ip(alpha, root))
            if not residual.is_zero():
                ok = report.record(f"chevalley action alpha={alpha} on {name}", False, residual=str(residual))
    return report.record("[e_alpha, [f_alpha, f0]] = (alpha, .) f0_alpha", ok)


def check_root_triples(cb: ChevalleyBasis, report: VerificationReport) -> bool:
    """alpha in g (or g'), beta and gamma in g': vanishing for (alpha, beta) >= 0 and the exchange identity"""
    ok = True
    for alpha, beta, gamma in product(cb.g_roots, cb.prime_roots, cb.prime_roots):
        e_alpha, e_beta = cb.e_root(alpha), cb.e_root(beta)
        f0_gamma = cb.f0_root(gamma.coeffs)
        if cb.ip(alpha, beta) >= 0:
            residual = _bracket(e_beta, e_alpha, f0_gamma)
            if not residual.is_zero():
                ok = report.record(f"vanishing alpha={alpha} beta={beta} gamma={gamma}", False, residual=str(residual))
        lhs = _bracket(e_alpha, e_beta, f0_gamma)
        rhs = _bracket(e_beta, e_alpha, cb.f0_root(beta.coeffs)).scaled(cb.ip(beta, gamma))
        if lhs != rhs:
            ok = report.record(f"exchange alpha={alpha} beta={beta} gamma={gamma}", False, residual=str(lhs - rhs))
    return report.record("root triple identities for alpha in g, beta, gamma in g'", ok)


def check_level_one_roots(cb: ChevalleyBasis, report: VerificationReport) -> bool:
    """[e_alpha, f_{0 beta}] = 0 whenever alpha contains alpha_1"""
    ok = True
    for alpha in cb.g_roots:
        if cb.ip(RootVector.simple(0, cb.r), alpha) != -1:
            continue
        for beta in cb.prime_roots:
            residual = w_bracket(cb.e_root(alpha), cb.f0_root(beta.coeffs))
            if not residual.is_zero():
                ok = report.record(f"level one alpha={alpha} beta={beta}", False, residual=str(residual))
    return report.record("[e_alpha, f0_beta] = 0 for alpha at level one", ok)


def adjoint_map(cb: ChevalleyBasis) -> List[Tuple[str, WElement, WElement]]:
    """(label, y, phi(y)) over the Chevalley basis of g'"""
    rho = weyl_vector("A", cb.r, cb.prime_nodes)
    f0_rho = cb.f0_root(rho.coeffs)
    out = []
    for alpha in cb.prime_roots:
        scale = Fraction(1, alpha.height)
        out.append((f"e{alpha}", cb.e_root(alpha), w_bracket(cb.e_root(alpha), f0_rho).scaled(-scale)))
        out.append((f"f{alpha}", cb.f_root(alpha), w_bracket(cb.f_root(alpha), f0_rho).scaled(scale)))
    for i in cb.prime_nodes:
        out.append((f"h{i}", cb.gen("h", i), cb.gen("f0", i)))
    return out


def check_adjoint_map(cb: ChevalleyBasis, report: VerificationReport) -> bool:
    """phi intertwines ad e_i and ad f_i of g', has ad e_0 as inverse and image of dimension dim g'"""
    table = adjoint_map(cb)
    basis_vectors = [to_vector(y) for _, y, _ in table]
    ok = True
    for label, y, image in table:
        back = w_bracket(cb.gen("e", 0), image)
        if back != y:
            ok = report.record(f"ad e0 inverts phi on {label}", False, residual=str(back - y))
    for i in cb.prime_nodes:
        for kind in ("e", "f"):
            x = cb.gen(kind, i)
            for label, y, image in table:
                coeffs = solve(basis_vectors, to_vector(w_bracket(x, y)))
                if coeffs is None:
                    ok = report.record(f"[{kind}{i}, {label}] outside g'", False)
                    continue
                lhs = WElement(cb.n)
                for c, (_, _, phi_y) in zip(coeffs, table):
                    if c:
                        lhs = lhs.combine(phi_y, c)
                residual = lhs - w_bracket(x, image)
                if not residual.is_zero():
                    ok = report.record(f"phi intertwines {kind}{i} on {label}", False, residual=str(residual))
    space = Subspace(cb.n * 2 ** cb.n)
    space.extend(to_vector(image).entries for _, _, image in table)
    report.expect_equal("dim phi(g')", (cb.n - 1) ** 2 - 1, len(space))
    return report.record("phi is a g'-module map with inverse ad e0", ok)


def generated_module(generator: WElement, actions: Sequence[WElement]) -> int:
    """Dimension of the module spanned by repeated ad-action on one element"""
    space = Subspace(generator.n * 2 ** generator.n)
    queue = [generator] if space.add(to_vector(generator).entries) else []
    while queue:
        x = queue.pop()
        for g in actions:
            y = w_bracket(g, x)
            if not y.is_zero() and space.add(to_vector(y).entries):
                queue.append(y)
    return len(space)


def check_minus_one_decomposition(n: int, report: VerificationReport) -> bool:
    """W_{-1} = R(Lambda_1) + R(Lambda_1 + theta) generated from f_{00} and f_{02}"""
    cb = ChevalleyBasis(n)
    actions = [cb.gen(kind, i) for i in range(1, n) for kind in ("e", "f")]
    dual = generated_module(cb.gen("f0", 0), actions)
    adjoint = generated_module(cb.gen("f0", 2), actions)
    theta = highest_root("A", cb.r, cb.prime_nodes)
    labels = [int(cb.ip(theta, cb.simple(i))) + (1 if i == 1 else 0) for i in range(1, n)]
    weyl_dim = finite_weights("A", cb.r).weyl_dimension(labels)
    ok = report.expect_equal("module of f00", n, dual)
    ok = report.expect_equal(f"module of f02 = R{tuple(labels)}", weyl_dim, adjoint) and ok
    return report.expect_equal("dim W_-1", len(w_basis(n, -1)), dual + adjoint) and ok


def check_local_completion(n: int, report: VerificationReport) -> bool:
    """[W_1, W_{-1}] spans W_0"""
    space = Subspace(n * 2 ** n)
    for x, y in product(w_basis(n, 1), w_basis(n, -1)):
        space.add(to_vector(w_bracket(WElement(n, {x: 1}), WElement(n, {y: 1}))).entries)
    return report.expect_equal("dim [W_1, W_-1]", len(w_basis(n, 0)), len(space))


def check_redundancy(cb: ChevalleyBasis, report: VerificationReport) -> bool:
    """ad e_0 of [e_i, [f_j, f_{0a}]] is B_aj [e_i, f_j]"""
    B = cb.cartan
    ok = True
    for i, j, a in product(cb.prime_nodes, cb.prime_nodes, f0_indices(B)):
        lhs = _bracket(cb.gen("e", 0), cb.gen("e", i), cb.gen("f", j), cb.gen("f0", a))
        rhs = w_bracket(cb.gen("e", i), cb.gen("f", j)).scaled(B[a, j])
        if lhs != rhs:
            ok = report.record(f"redundancy i={i} j={j} a={a}", False, residual=str(lhs - rhs))
    return report.record("ad e0 maps the mixed family onto the [e_i, f_j] family", ok)


def verify_propositions(n: int) -> VerificationReport:
    _check_n(n, constants.PROPS_N_RANGE, "verify_propositions")
    report = VerificationReport(f"props:n={n}")
    cb = ChevalleyBasis(n)
    check_serre_like(cb, report)
    check_height_induction(cb, report)
    check_chevalley_action(cb, report)
    check_root_triples(cb, report)
    check_level_one_roots(cb, report)
    check_adjoint_map(cb, report)
    check_redundancy(cb, report)
    check_minus_one_decomposition(n, report)
    check_local_completion(n, report)
    log.debug("props n=%d: %d checks", n, len(report.outcomes))
    return report
