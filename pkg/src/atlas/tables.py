"""Grading, root and multiplicity tables rendered as tsv, records or aligned text"""

from math import comb
from string import ascii_lowercase
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
import logging

import orjson

from src.algebra.sl1n import sl1n_basis
from src.algebra.w_realization import s_dimension_formula, s_level_dim, w_basis, w_dimension, w_levels
from src.atlas.root_atlas import root_decomposition
from src.shared.cartan_data import finite_weights, freudenthal_multiplicity
from src.verification.report import VerificationReport, render_value
import constants

log = logging.getLogger(__name__)

Row = Dict[str, Any]
Labels = Tuple[int, ...]

# modules as sums of fundamental weights, "n-1" and "n-2" counted from the end
MULT_20_MODULES = (
    ((4, "n-1", "n-1"), lambda n: 0),
    ((3, "n-1"), lambda n: 0),
    ((2, 2, "n-1", "n-1"), lambda n: (n - 2) * (n - 1) // 2),
    ((1, 3, "n-2"), lambda n: (n - 3) * (n - 2) // 2 - 1),
    ((1, 2, "n-1"), lambda n: n - 2),
    ((1, 1), lambda n: 1),
)
MULT_010_MODULES = (
    ((4, "n-1", "n-1"), lambda n: (n - 4) * (n - 3) // 2),
    ((3, "n-1"), lambda n: n - 3),
    ((2,), lambda n: 1),
)


def fundamental_sum(positions: Sequence, n: int) -> Labels:
    """Dynkin labels of A_{n-1} for a sum of fundamental weights omega_k (omega_0 = omega_n = 0)"""
    labels = [0] * (n - 1)
    for pos in positions:
        k = n - int(pos[2:]) if isinstance(pos, str) else pos
        if 1 <= k <= n - 1:
            labels[k - 1] += 1
    return tuple(labels)


def format_labels(labels: Labels) -> str:
    sep = "" if all(0 <= x < 10 for x in labels) else ","
    return "(" + sep.join(str(x) for x in labels) + ")"


def basis_name(p: int, hat: bool = False) -> str:
    letters = ascii_lowercase[: p + 1]
    stem = "hatK" if hat else "K"
    uppers, lower = letters[:p], letters[p]
    return f"{stem}^{uppers}_{lower}" if p else f"{stem}_{lower}"


def w_representations(n: int, p: int) -> List[Labels]:
    """A_{n-1} modules of the level 1-p of W(n): Lambda^p V tensor V*"""
    if p in (0, n):
        return [fundamental_sum(("n-1",), n)]
    return [fundamental_sum((p, "n-1"), n), fundamental_sum((p - 1,), n)]


def s_representations(n: int, p: int) -> List[Labels]:
    if p == n:
        return []
    return [fundamental_sum((p, "n-1"), n)]


def _grading_rows(n: int, algebra: str) -> List[Row]:
    rows = []
    for p in range(n + 1):
        level = 1 - p
        if algebra == "w":
            reps, dim = w_representations(n, p), len(w_basis(n, level))
        else:
            reps, dim = s_representations(n, p), s_level_dim(n, level)
            if not dim:
                continue
        rows.append(
            {
                "level": level,
                "basis": basis_name(p, hat=(algebra == "s" and p > 0)),
                "representation": " + ".join(format_labels(r) for r in reps),
                "dimension": dim,
            }
        )
    return rows


def grading_w_rows(n: int) -> List[Row]:
    return _grading_rows(n, "w")


def grading_s_rows(n: int) -> List[Row]:
    return _grading_rows(n, "s")


def root_rows(n: int) -> List[Row]:
    return [
        {
            "level": entry.level,
            "root": list(entry.root.coeffs),
            "mult": entry.multiplicity,
            "length_sq": render_value(entry.length_sq),
        }
        for entry in root_decomposition("w", n)
    ]


def _check_mult_n(n: int):
    low, high = constants.MULT_TABLE_N_RANGE
    if not low <= n <= high:
        raise ValueError(f"Multiplicity tables need {low} <= n <= {high}, got {n}")


def _mult_rows(n: int, modules, target: Sequence) -> List[Row]:
    _check_mult_n(n)
    weight = fundamental_sum(target, n)
    rows = []
    for positions, _ in modules:
        labels = fundamental_sum(positions, n)
        rows.append(
            {
                "representation": format_labels(labels),
                "multiplicity": freudenthal_multiplicity(labels, weight, "A", n - 1),
            }
        )
    return rows


def mult_20_rows(n: int) -> List[Row]:
    return _mult_rows(n, MULT_20_MODULES, (1, 1))


def mult_010_rows(n: int) -> List[Row]:
    return _mult_rows(n, MULT_010_MODULES, (2,))


TABLES: Dict[str, Tuple[Tuple[str, ...], Callable[[int], List[Row]]]] = {
    "grading-w": (("level", "basis", "representation", "dimension"), grading_w_rows),
    "grading-s": (("level", "basis", "representation", "dimension"), grading_s_rows),
    "roots": (("level", "root", "mult", "length_sq"), root_rows),
    "mult-20": (("representation", "multiplicity"), mult_20_rows),
    "mult-010": (("representation", "multiplicity"), mult_010_rows),
}


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(str(v) for v in value) + ")"
    return str(value)


def render(columns: Sequence[str], rows: List[Row], fmt: str) -> str:
    """Deterministic document in one of the output formats"""
    if fmt == "records":
        data = [{c: render_value(row[c]) for c in columns} for row in rows]
        return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode() + "\n"
    cells = [[_cell(row[c]) for c in columns] for row in rows]
    if fmt == "tsv":
        lines = ["\t".join(columns)] + ["\t".join(line) for line in cells]
        return "\n".join(lines) + "\n"
    if fmt == "text":
        widths = [max([len(c)] + [len(line[i]) for line in cells]) for i, c in enumerate(columns)]
        header = "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()
        rule = "  ".join("-" * w for w in widths)
        body = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in cells]
        return "\n".join([header, rule] + body) + "\n"
    raise ValueError(f"Unsupported format: {fmt}")


def table_rows(which: str, n: int) -> Tuple[Tuple[str, ...], List[Row]]:
    if which not in TABLES:
        raise ValueError(f"Unknown table id: {which} (choose from {', '.join(TABLES)})")
    columns, build = TABLES[which]
    return columns, build(n)


def emit_table(which: str, n: int, fmt: str = constants.DEFAULT_FORMAT) -> str:
    columns, rows = table_rows(which, n)
    log.debug("table %s(n=%d): %d rows", which, n, len(rows))
    return render(columns, rows, fmt)


def dimension_rows(algebra: str, n: int) -> List[Row]:
    """Per-level dimensions of W(n), S(n) or sl(1|n)"""
    if algebra == "w":
        return [{"level": level, "dimension": len(w_basis(n, level))} for level in w_levels(n)]
    if algebra == "s":
        rows = [{"level": level, "dimension": s_level_dim(n, level)} for level in w_levels(n)]
        return [row for row in rows if row["dimension"]]
    if algebra == "sl1n":
        return [{"level": level, "dimension": len(sl1n_basis(n, level))} for level in (1, 0, -1)]
    raise ValueError(f"Unsupported algebra: {algebra} (choose from {', '.join(constants.ALGEBRAS)})")


def emit_dims(algebra: str, n: int, fmt: str = constants.DEFAULT_FORMAT) -> str:
    return render(("level", "dimension"), dimension_rows(algebra, n), fmt)


def check_grading_tables(n: int, report: Optional[VerificationReport] = None) -> VerificationReport:
    """Level dimensions against n*C(n,p), the S(n) formula and the Weyl dimensions of the listed modules"""
    report = report or VerificationReport(f"grading:n={n}")
    weights = finite_weights("A", n - 1)
    w_total = s_total = 0
    for p in range(n + 1):
        level = 1 - p
        w_dim = len(w_basis(n, level))
        s_dim = s_level_dim(n, level)
        w_total += w_dim
        s_total += s_dim
        report.expect_equal(f"dim W_{level}", n * comb(n, p), w_dim)
        report.expect_equal(f"dim S_{level}", s_dimension_formula(n, level), s_dim)
        report.expect_equal(
            f"modules of W_{level}", w_dim, sum(weights.weyl_dimension(r) for r in w_representations(n, p))
        )
        report.expect_equal(
            f"modules of S_{level}", s_dim, sum(weights.weyl_dimension(r) for r in s_representations(n, p))
        )
    report.expect_equal("dim W(n)", w_dimension(n), w_total)
    report.expect_equal("dim S(n)", (n - 1) * 2 ** n + 1, s_total)
    return report


def check_multiplicity_tables(n: int, report: Optional[VerificationReport] = None) -> VerificationReport:
    """Freudenthal multiplicities of (20...0) and (010...0) against their closed forms; n outside the table range raises"""
    _check_mult_n(n)
    report = report or VerificationReport(f"multiplicities:n={n}")
    for name, modules, rows in (
        ("(20...0)", MULT_20_MODULES, mult_20_rows(n)),
        ("(010...0)", MULT_010_MODULES, mult_010_rows(n)),
    ):
        for (_, closed_form), row in zip(modules, rows):
            report.expect_equal(f"mult of {name} in {row['representation']}", closed_form(n), row["multiplicity"])
    return report
