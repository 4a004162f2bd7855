"""APX/TGF parsing and APX/TGF/DOT/JSON-report emission."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

import numpy as np

from .framework import ArgumentationFramework, FrameworkError
from .ranking import Ranking
from .solver import CertifiedBounds, StrengthVector

NAME = r"[A-Za-z0-9_]+"
_NAME_RE = re.compile(rf"^{NAME}$")
_APX_FACT = re.compile(rf"^(arg|att)\s*\(\s*({NAME})\s*(?:,\s*({NAME})\s*)?\)\s*\.$")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    message: str
    severity: str = "error"

    def __str__(self) -> str:
        return f"line {self.line}: {self.severity}: {self.message}"


class ParseError(ValueError):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


def _fail(line: int, message: str):
    raise ParseError(ParseDiagnostic(line, message))


def parse_apx(source: str) -> ArgumentationFramework:
    """Parse ``arg(a).`` / ``att(a,b).`` facts; ``%`` starts a comment."""
    names: list[str] = []
    declared: dict[str, int] = {}
    pending: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(source.splitlines(), 1):
        text = raw.split("%", 1)[0].strip()
        if not text:
            continue
        m = _APX_FACT.match(text)
        if m is None:
            _fail(lineno, f"malformed fact {text!r}")
        kind, a, b = m.groups()
        if kind == "arg":
            if b is not None:
                _fail(lineno, "arg/1 takes exactly one argument name")
            if a in declared:
                _fail(lineno, f"argument {a!r} declared twice (first on line {declared[a]})")
            declared[a] = lineno
            names.append(a)
        else:
            if b is None:
                _fail(lineno, "att/2 takes an attacker and a target")
            pending.append((lineno, a, b))
    index = {name: i for i, name in enumerate(names)}
    attacks = []
    for lineno, a, b in pending:
        for name in (a, b):
            if name not in index:
                _fail(lineno, f"attack references undeclared argument {name!r}")
        attacks.append((index[a], index[b]))
    return ArgumentationFramework(names, attacks)


def parse_tgf(source: str) -> ArgumentationFramework:
    """Parse ``ID [LABEL]`` node lines, a ``#`` separator, then ``SRC DST`` edge lines."""
    ids: dict[str, int] = {}
    names: list[str] = []
    attacks: list[tuple[int, int]] = []
    in_edges = False
    for lineno, raw in enumerate(source.splitlines(), 1):
        text = raw.strip()
        if not text:
            continue
        if text == "#":
            if in_edges:
                _fail(lineno, "second '#' separator")
            in_edges = True
            continue
        parts = text.split(None, 1)
        if not in_edges:
            node = parts[0]
            label = parts[1].strip() if len(parts) > 1 else node
            if node in ids:
                _fail(lineno, f"duplicate node id {node!r}")
            if not _NAME_RE.match(label):
                _fail(lineno, f"node label {label!r} is not a valid argument name")
            ids[node] = len(names)
            names.append(label)
        else:
            fields = text.split()
            if len(fields) < 2:
                _fail(lineno, f"edge line needs two node ids, got {text!r}")
            for node in fields[:2]:
                if node not in ids:
                    _fail(lineno, f"edge references unknown node id {node!r}")
            attacks.append((ids[fields[0]], ids[fields[1]]))
    if not in_edges:
        _fail(max(1, len(source.splitlines())), "missing '#' separator between nodes and edges")
    try:
        return ArgumentationFramework(names, attacks)
    except FrameworkError as exc:
        _fail(1, str(exc))


def _check_names(af: ArgumentationFramework) -> None:
    for name in af.names:
        if not _NAME_RE.match(name):
            raise ValueError(f"argument name {name!r} cannot be written in APX/TGF")


def emit_apx(af: ArgumentationFramework) -> str:
    """Canonical APX: arg facts in index order, then att facts sorted by name pair."""
    _check_names(af)
    lines = [f"arg({name})." for name in af.names]
    lines += [f"att({a},{b})." for a, b in sorted(af.named_attacks())]
    return "".join(line + "\n" for line in lines)


def emit_tgf(af: ArgumentationFramework) -> str:
    _check_names(af)
    lines = [f"{i + 1} {name}" for i, name in enumerate(af.names)]
    lines.append("#")
    lines += [f"{a + 1} {b + 1}" for a, b in sorted(af.attacks)]
    return "".join(line + "\n" for line in lines)


def _values(strengths: StrengthVector | np.ndarray | None) -> np.ndarray | None:
    if strengths is None:
        return None
    return np.asarray(strengths.values if isinstance(strengths, StrengthVector) else strengths, dtype=np.float64)


def emit_dot(af: ArgumentationFramework, strengths: StrengthVector | np.ndarray | None = None) -> str:
    values = _values(strengths)
    if values is not None and len(values) != af.n:
        raise ValueError(f"got {len(values)} strengths for {af.n} arguments")
    out = ["digraph af {"]
    for i, name in enumerate(af.names):
        label = name if values is None else f"{name}\\n{values[i]:.2f}"
        out.append(f'  "{name}" [label="{label}"];')
    for a, b in af.named_attacks():
        out.append(f'  "{a}" -> "{b}";')
    out.append("}")
    return "\n".join(out) + "\n"


def report_dict(
    af: ArgumentationFramework,
    strengths: StrengthVector,
    ranking: Ranking,
    bounds: CertifiedBounds | None = None,
) -> dict:
    n = af.n
    if len(strengths) != n or ranking.n != n or (bounds is not None and len(bounds.lower) != n):
        raise ValueError("framework, strengths, bounds and ranking disagree on the number of arguments")
    doc = {
        "arguments": list(af.names),
        "strengths": [float(x) for x in strengths.values],
        "iterations": int(strengths.iterations),
        "residual": float(strengths.residual),
        "converged": bool(strengths.converged),
    }
    if bounds is not None:
        doc["bounds"] = {
            "lower": [float(x) for x in bounds.lower],
            "upper": [float(x) for x in bounds.upper],
        }
    doc["ranking"] = [[af.names[i] for i in cls] for cls in ranking.classes]
    return doc


def emit_report(
    af: ArgumentationFramework,
    strengths: StrengthVector,
    ranking: Ranking,
    bounds: CertifiedBounds | None = None,
) -> str:
    """JSON report. Floats use Python's shortest round-trip repr, so they reload exactly."""
    return json.dumps(report_dict(af, strengths, ranking, bounds), indent=2) + "\n"


def emit_csv(af: ArgumentationFramework, strengths: StrengthVector, bounds: CertifiedBounds | None = None) -> str:
    header = "argument,strength" + (",lower,upper" if bounds is not None else "")
    rows = [header]
    for i, name in enumerate(af.names):
        row = f"{name},{float(strengths.values[i])!r}"
        if bounds is not None:
            row += f",{float(bounds.lower[i])!r},{float(bounds.upper[i])!r}"
        rows.append(row)
    return "\n".join(rows) + "\n"


READERS = {"apx": parse_apx, "tgf": parse_tgf}
WRITERS = {"apx": emit_apx, "tgf": emit_tgf, "dot": emit_dot}
