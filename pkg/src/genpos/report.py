"""Report records and the per-graph invariant runner."""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .distance import DistanceMatrix
from .errors import ParameterError
from .graph import Graph, VertexSet
from .position import geodetic_number, gp_number, has_universal_line, lower_gp_number
from .search import Budget
from .terminal import terminal_numbers

INFINITE = "INFINITE"
INCONCLUSIVE = "INCONCLUSIVE"

INVARIANTS = ("gp", "gp-", "tp", "tp-", "geodetic", "diameter", "universal-line")
_ALIASES = {"gp⁻": "gp-", "tp⁻": "tp-", "lower-gp": "gp-", "lower-tp": "tp-", "g": "geodetic"}


@dataclass
class ReportRecord:
    graph: str
    invariant: str
    value: object
    witness: list | None = None
    cap: str | None = None
    elapsed_ms: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        extra = d.pop("extra")
        if not timing:
            d.pop("elapsed_ms")
        d.update(extra)
        return d


def normalise_invariants(names) -> list[str]:
    out = []
    for name in names:
        name = _ALIASES.get(name.strip().lower(), name.strip().lower())
        if name not in INVARIANTS:
            raise ParameterError(f"unknown invariant {name!r}; choose from {', '.join(INVARIANTS)}")
        out.append(name)
    return out


def _value(count, cap):
    if cap is not None:
        return INCONCLUSIVE
    if isinstance(count, float) and math.isinf(count):
        return INFINITE
    return count


def _wit(ws: VertexSet | None):
    return None if ws is None else ws.to_list()


def compute_invariant(gid: str, g: Graph, name: str, budget: Budget | None = None) -> ReportRecord:
    budget = budget or Budget()
    t0 = time.perf_counter()
    if name == "gp":
        res = gp_number(g, budget)
        rec = ReportRecord(gid, name, _value(res.count, res.cap), _wit(res.witness), res.cap)
    elif name == "gp-":
        res = lower_gp_number(g, budget)
        rec = ReportRecord(gid, name, _value(res.count, res.cap), _wit(res.witness), res.cap)
    elif name in ("tp", "tp-"):
        res = terminal_numbers(g, budget)
        count, wit = (res.tp, res.tp_witness) if name == "tp" else (res.tp_minus, res.tp_minus_witness)
        rec = ReportRecord(gid, name, _value(count, res.cap), _wit(wit), res.cap)
    elif name == "geodetic":
        if not g.is_connected():
            rec = ReportRecord(gid, name, None, extra={"error": "disconnected graph"})
        else:
            res = geodetic_number(g, budget)
            rec = ReportRecord(gid, name, _value(res.count, res.cap), _wit(res.witness), res.cap)
    elif name == "diameter":
        d = DistanceMatrix(g).diameter()
        rec = ReportRecord(gid, name, d if isinstance(d, int) else INFINITE)
    elif name == "universal-line":
        if not g.is_connected():
            rec = ReportRecord(gid, name, None, extra={"error": "disconnected graph"})
        else:
            pair = has_universal_line(g)
            rec = ReportRecord(gid, name, pair is not None, None if pair is None else list(pair))
    else:
        raise ParameterError(f"unknown invariant {name!r}")
    rec.elapsed_ms = round((time.perf_counter() - t0) * 1000, 3)
    return rec


def _task(args):
    gid, g, names, limits = args
    return [compute_invariant(gid, g, name, Budget(**limits)) for name in names]


def run_invariants(graphs, which, budget_limits: dict | None = None, jobs: int = 1):
    """One record per (graph, invariant), in input order.

    ``graphs`` yields ``(id, Graph)`` pairs.  With ``jobs > 1`` graphs are
    farmed out to worker processes; results are re-assembled in input
    order, so output does not depend on the number of workers.
    """
    names = normalise_invariants(which)
    limits = budget_limits or {}
    tasks = [(gid, g, names, limits) for gid, g in graphs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
            for chunk in chunks:
                yield from chunk
    else:
        for t in tasks:
            yield from _task(t)


def emit(records, fmt: str = "jsonl", timing: bool = True) -> str:
    rows = [r.to_dict(timing) if isinstance(r, ReportRecord) else dict(r) for r in records]
    if fmt == "jsonl":
        return "".join(json.dumps(row, sort_keys=True, ensure_ascii=False) + "\n" for row in rows)
    if fmt == "csv":
        keys = sorted({k for row in rows for k in row})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
        return buf.getvalue()
    raise ParameterError(f"unknown format {fmt!r}")
