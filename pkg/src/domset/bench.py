"""Benchmark harness over seeded random connected graphs.

Each instance draws its order uniformly from an inclusive range and sets
``m = round(factor * n)``. Instance ``i`` gets its own child of
``SeedSequence(seed)``, so rows do not depend on worker scheduling.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from domset.errors import GraphError
from domset.generators import RandomSpec, random_connected_graph
from domset.oracle import DEFAULT_LIMIT, exact_gamma
from domset.purify import solve

COLUMNS = ["no", "n", "m", "greedy", "purified", "purification", "reduction_pct",
           "t_greedy", "t_forest", "t_purify", "gamma", "greedy_ratio", "purified_ratio", "note"]


@dataclass
class BenchRow:
    no: int
    n: int
    m: int
    greedy: int | None = None
    purified: int | None = None
    purification: int | None = None
    reduction_pct: float | None = None
    t_greedy: float | None = None
    t_forest: float | None = None
    t_purify: float | None = None
    gamma: int | None = None
    greedy_ratio: float | None = None
    purified_ratio: float | None = None
    note: str = ""

    @property
    def skipped(self) -> bool:
        return self.greedy is None


def instance_spec(no: int, child: np.random.SeedSequence, n_range: tuple[int, int],
                  m_factor: float) -> tuple[int, int, int]:
    rng = np.random.default_rng(child)
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    graph_seed = int(rng.integers(2**63))
    return n, round(m_factor * n), graph_seed


def run_instance(no: int, n: int, m: int, graph_seed: int, mode: str = "extended",
                 exact: bool = False, limit: int = DEFAULT_LIMIT) -> BenchRow:
    try:
        G = random_connected_graph(RandomSpec(n, m, graph_seed))
    except GraphError as exc:
        return BenchRow(no, n, m, note=f"skipped: {exc}")
    r = solve(G, mode=mode)
    g, s = len(r.greedy_set), len(r.purified_set)
    row = BenchRow(no, n, m, g, s, g - s, 100.0 * (g - s) / g,
                   r.timings["greedy"], r.timings["forest"], r.timings["purify"])
    if exact:
        if n <= limit:
            row.gamma = exact_gamma(G, limit).gamma
            row.greedy_ratio = g / row.gamma
            row.purified_ratio = s / row.gamma
        else:
            row.note = f"exact skipped: n > {limit}"
    return row


def _run(args: tuple) -> BenchRow:
    return run_instance(*args)


def run_bench(count: int, n_range: tuple[int, int], m_factor: float, seed: int,
              mode: str = "extended", exact: bool = False, limit: int = DEFAULT_LIMIT,
              jobs: int = 1) -> list[BenchRow]:
    if n_range[0] > n_range[1] or n_range[0] < 1:
        raise GraphError(f"bad order range {n_range}")
    if count <= 0:
        return []
    children = np.random.SeedSequence(seed).spawn(count)
    tasks = [(no, *instance_spec(no, c, n_range, m_factor), mode, exact, limit)
             for no, c in enumerate(children, start=1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, tasks))
    return [_run(t) for t in tasks]


def summarize(rows: list[BenchRow]) -> dict:
    done = [r for r in rows if not r.skipped]
    out = {"instances": len(rows), "solved": len(done),
           "mean_reduction_pct": float(np.mean([r.reduction_pct for r in done])) if done else None}
    with_gamma = [r for r in done if r.gamma is not None]
    if with_gamma:
        out["max_greedy_ratio"] = max(r.greedy_ratio for r in with_gamma)
        out["max_purified_ratio"] = max(r.purified_ratio for r in with_gamma)
    return out


def rows_to_csv(rows: list[BenchRow], timings: bool = True) -> str:
    cols = COLUMNS if timings else [c for c in COLUMNS if not c.startswith("t_")]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if v is None else v) for k, v in asdict(r).items()})
    return buf.getvalue()
