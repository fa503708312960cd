"""The ``ugg`` text format for gain graphs.

    # optional comment lines start with '#'
    ugg <n>
    u v theta
    ...

One edge per line with 0 <= u < v < n and theta a decimal angle in radians;
the edge carries gain e^{i theta} from u to v (and the conjugate back).
Blank lines are ignored.  Angles are written with 17 significant digits, so
a serialize/parse round trip reproduces every gain to within 1e-12.
"""

from __future__ import annotations

import math
from pathlib import Path

from .gains import GainGraph, gain_angle, unit_from_angle
from .graphs import Graph


class GainGraphParseError(ValueError):
    """Malformed ugg input; ``line`` is the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_gain_graph(text: str) -> GainGraph:
    header: tuple[int, int] | None = None  # (line_no, n)
    edges: dict[tuple[int, int], complex] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if header is None:
            if fields[0] != "ugg" or len(fields) != 2:
                raise GainGraphParseError(line_no, "expected header 'ugg <n>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise GainGraphParseError(line_no, f"bad vertex count {fields[1]!r}")
            if n < 0:
                raise GainGraphParseError(line_no, "vertex count must be >= 0")
            header = (line_no, n)
            continue
        if len(fields) != 3:
            raise GainGraphParseError(line_no, "expected 'u v theta'")
        n = header[1]
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GainGraphParseError(line_no, "endpoints must be integers")
        try:
            theta = float(fields[2])
        except ValueError:
            raise GainGraphParseError(line_no, f"bad angle {fields[2]!r}")
        if not math.isfinite(theta):
            raise GainGraphParseError(line_no, "angle must be finite")
        if u == v:
            raise GainGraphParseError(line_no, f"self-loop at vertex {u}")
        if not 0 <= u < v < n:
            raise GainGraphParseError(
                line_no, f"edge ({u}, {v}) must satisfy 0 <= u < v < {n}"
            )
        if (u, v) in edges:
            raise GainGraphParseError(line_no, f"duplicate edge ({u}, {v})")
        edges[(u, v)] = unit_from_angle(theta)
    if header is None:
        raise GainGraphParseError(1, "missing header 'ugg <n>'")
    return GainGraph(Graph(header[1], frozenset(edges)), edges)


def serialize_gain_graph(phi: GainGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"ugg {phi.graph.n}")
    for u, v in sorted(phi.graph.edges):
        lines.append(f"{u} {v} {gain_angle(phi.forward[(u, v)]):.17g}")
    return "\n".join(lines) + "\n"


def load_gain_graph(path: str | Path) -> GainGraph:
    return parse_gain_graph(Path(path).read_text(encoding="utf-8"))


def save_gain_graph(phi: GainGraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(serialize_gain_graph(phi, comment), encoding="utf-8")
