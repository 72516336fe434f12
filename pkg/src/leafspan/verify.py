"""Independent re-verification of solution files.

A solution is a claim; verification recomputes everything from the instance
plus the recorded parent array and phase arc lists: arborescence validity,
leaf counts, per-phase statistics, every bound, and the certificate.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from . import certificates
from .branching import Branching
from .errors import LeafspanError, ParseError
from .graph import Digraph
from .solvers import SolveReport

PathLike = Union[str, Path]


def write_solution(path: PathLike, report: SolveReport, parent: list[Optional[int]]) -> None:
    obj = {
        "version": 1,
        "parent": parent,
        "leaf_count": report.leaf_count,
        "report": report.to_dict(),
        "phases": {name: [list(a) for a in arcs] for name, arcs in report.phase_arcs.items()},
    }
    if report.leaf_weight is not None:
        obj["leaf_weight"] = report.leaf_weight
    Path(path).write_text(json.dumps(obj, sort_keys=True, indent=1) + "\n")


def read_solution(path: PathLike) -> dict:
    try:
        raw = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from e
    if not isinstance(obj, dict) or not isinstance(obj.get("parent"), list):
        raise ParseError(f"{path}: solution must be an object with a 'parent' array")
    return obj


def _check_bound(problems: list[str], report: dict, key: str, expected: Fraction) -> None:
    raw = report.get(key)
    if raw is None:
        problems.append(f"report is missing bound '{key}'")
        return
    try:
        got = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        problems.append(f"bound '{key}' is not a valid rational: {raw!r}")
        return
    if got != expected:
        problems.append(f"bound '{key}' is {got}, recomputation gives {expected}")


def verify_solution(d: Digraph, solution: dict) -> list[str]:
    """Return a list of diagnostics; an empty list means the solution verifies."""
    problems: list[str] = []

    parent = solution.get("parent")
    if not isinstance(parent, list) or len(parent) != d.vertex_count:
        return [f"parent array must have length {d.vertex_count}"]
    try:
        t = Branching.from_parents(d, parent)
    except LeafspanError as e:
        return [f"parent array invalid: {e}"]
    if not t.is_spanning_arborescence():
        problems.append("parent array is not a spanning arborescence")
        return problems

    st = t.stats()
    if solution.get("leaf_count") != st.leaves:
        problems.append(
            f"leaf_count is {solution.get('leaf_count')}, recount gives {st.leaves}"
        )
    if "leaf_weight" in solution:
        if d.vertex_weights is None:
            problems.append("solution claims leaf_weight but instance is unweighted")
        elif solution["leaf_weight"] != t.leaf_weight():
            problems.append(
                f"leaf_weight is {solution['leaf_weight']}, recount gives {t.leaf_weight()}"
            )

    report = solution.get("report")
    if not isinstance(report, dict):
        problems.append("missing report")
        return problems
    algorithm = report.get("algorithm", "")
    if algorithm == "exact":
        return problems

    phases_raw = solution.get("phases")
    if not isinstance(phases_raw, dict):
        problems.append("missing phase arc lists")
        return problems

    stats = {}
    prev_arcs: Optional[set] = None
    expected_order = [n for n in ("F1", "F2", "F3", "T") if n in phases_raw]
    for name in expected_order:
        try:
            arcs = [tuple(a) for a in phases_raw[name]]
            b = Branching.from_arcs(d, arcs)
        except (LeafspanError, TypeError, ValueError) as e:
            problems.append(f"phase {name} arc list invalid: {e}")
            return problems
        if prev_arcs is not None and not prev_arcs.issubset(b.arc_set):
            problems.append(f"phase {name} does not contain the previous phase")
        prev_arcs = set(b.arc_set)
        stats[name] = b.stats()

    if "T" in stats:
        if prev_arcs != t.arc_set:
            problems.append("final phase arcs disagree with the parent array")
    for idx, name in enumerate([n for n in ("F1", "F2", "F3") if n in stats], start=1):
        s = stats[name]
        for field_name, value in ((f"N{idx}", s.N), (f"k{idx}", s.k)):
            if report.get(field_name) != value:
                problems.append(
                    f"report {field_name} is {report.get(field_name)}, "
                    f"recomputation gives {value}"
                )

    if algorithm == "maxleaves":
        if not {"F1", "F2", "T"}.issubset(stats):
            problems.append("maxleaves solution must record phases F1, F2, T")
            return problems
        s1, s2 = stats["F1"], stats["F2"]
        lb, u2, u3 = certificates.two_phase_bounds(s1.N, s1.k, s2.N, s2.k)
        _check_bound(problems, report, "lb_lemma1", lb)
        _check_bound(problems, report, "ub_lemma2", u2)
        _check_bound(problems, report, "ub_lemma3", u3)
        if not certificates.two_phase_certificate_ok(st.leaves, s1.N, s1.k, s2.N, s2.k):
            problems.append("certificate inequalities do not hold")
    elif algorithm == "expansion2":
        if not {"F1", "T"}.issubset(stats):
            problems.append("expansion2 solution must record phases F1, T")
            return problems
        s = stats["F1"]
        lb = certificates.baseline_lower_bound(s.N, s.k)
        _check_bound(problems, report, "lb_baseline", lb)
        _check_bound(
            problems, report, "ub_lemma2",
            certificates.upper_bound_from_two_branching(s.N, s.k),
        )
        if not st.leaves >= lb:
            problems.append("baseline leaf guarantee does not hold")
    elif algorithm.startswith("w3dm"):
        if not {"F1", "F2", "F3", "T"}.issubset(stats):
            problems.append("packing solution must record phases F1, F2, F3, T")
            return problems
        s1, s2, s3 = stats["F1"], stats["F2"], stats["F3"]
        lb = certificates.packing_lower_bound(s1.N, s1.k, s2.N, s2.k, s3.N, s3.k)
        _check_bound(problems, report, "lb_lemma4", lb)
        alpha_raw = report.get("claimed_alpha")
        if alpha_raw is None:
            problems.append("packing report is missing claimed_alpha")
        else:
            alpha = Fraction(alpha_raw)
            ub = certificates.packing_upper_bound(
                s1.N, s1.k, s2.N, s2.k, s3.N, s3.k, alpha
            )
            _check_bound(problems, report, "ub_lemma5", ub)
        if not st.leaves >= lb:
            problems.append("packing leaf guarantee does not hold")
        if not (s1.N - s1.k <= s2.N - s2.k <= s3.N - s3.k):
            problems.append("phase arc counts are not monotone")
    else:
        problems.append(f"unknown algorithm {algorithm!r} in report")

    if report.get("certificate_ok") is not True:
        problems.append("report does not claim certificate_ok")
    return problems
