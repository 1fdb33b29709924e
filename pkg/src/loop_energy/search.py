"""Exhaustive scan over small labeled graphs and loop placements.

Enumeration is labeled (not isomorphism-reduced): correctness is easy to
verify by counting, and loop placements break most symmetry anyway. Records
stream in a fixed key order (order, then edge bitmask, then loop bitmask), so
a scan re-run with the same config is byte-identical regardless of how the
work is partitioned across processes.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .energy import energy_looped, energy_simple, theorem1_condition
from .graph6 import to_graph6
from .graphs import (
    Graph,
    adjacency_matrix,
    is_connected,
    union_looped,
    with_all_loops,
    with_loops,
)
from .spectra import eigenvalues

EQUAL = "EQUAL"
LOOPED_GREATER = "LOOPED_GREATER"
SIMPLE_GREATER = "SIMPLE_GREATER"
CLASSES = (EQUAL, LOOPED_GREATER, SIMPLE_GREATER)

MAX_ORDER = 8          # hard cap: 2^C(n,2) labeled graphs beyond this is out of reach
DEFAULT_MAX_ORDER = 5  # scans above this should be an explicit, acknowledged choice
DEFAULT_EQ_TOL = 1e-9  # relative: |gap| <= eq_tol * (1 + e_simple) classifies EQUAL
SUSPECT_BAND = 1e-6    # non-EQUAL records with |gap| <= this are flagged for exact follow-up

TSV_COLUMNS = ("graph6", "loops", "sigma", "n", "e_simple", "e_looped", "gap", "class")


@dataclass(frozen=True)
class SearchConfig:
    """Scan parameters. eq_tol is a relative tolerance factor (must be > 0)."""

    n_min: int = 1
    n_max: int = DEFAULT_MAX_ORDER
    sigma_policy: str = "interior"  # "interior" (0 < sigma < n) or "all"
    eq_tol: float = DEFAULT_EQ_TOL
    connected_only: bool = False
    dedupe: str = "none"  # "none" or "spectral"

    def __post_init__(self):
        if self.n_min < 1:
            raise ValueError("n_min must be >= 1")
        if self.n_max < self.n_min:
            raise ValueError("n_max must be >= n_min")
        if self.n_max > MAX_ORDER:
            raise ValueError(f"n_max exceeds the hard cap {MAX_ORDER}")
        if self.eq_tol <= 0:
            raise ValueError("eq_tol must be positive")
        if self.sigma_policy not in ("interior", "all"):
            raise ValueError(f"unknown sigma_policy {self.sigma_policy!r}")
        if self.dedupe not in ("none", "spectral"):
            raise ValueError(f"unknown dedupe {self.dedupe!r}")


@dataclass(frozen=True)
class SearchRecord:
    """One (graph, loop set) instance with both energies and a classification.

    `suspect` marks gaps in the ambiguous band just above the equality
    tolerance; `condition_met` is set only by the restricted family scan.
    """

    graph6: str
    loops: tuple
    sigma: int
    n: int
    e_simple: float
    e_looped: float
    gap: float
    classification: str
    suspect: bool = False
    condition_met: bool | None = None


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _graph_from_mask(n: int, mask: int, pairs: Sequence[tuple[int, int]]) -> Graph:
    edges = frozenset(pairs[k] for k in range(len(pairs)) if (mask >> k) & 1)
    return Graph(n, edges)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices, in edge-bitmask order."""
    if not (1 <= n <= MAX_ORDER):
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {n}")
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        g = _graph_from_mask(n, mask, pairs)
        if connected_only and not is_connected(g):
            continue
        yield g


def _classify(e_simple: float, e_looped: float, eq_tol: float) -> tuple[str, bool, float]:
    gap = e_looped - e_simple
    if abs(gap) <= eq_tol * (1.0 + e_simple):
        return EQUAL, False, gap
    label = LOOPED_GREATER if gap > 0 else SIMPLE_GREATER
    return label, abs(gap) <= SUSPECT_BAND, gap


def _loop_masks(n: int, sigma_policy: str) -> range:
    if sigma_policy == "all":
        return range(1 << n)
    return range(1, (1 << n) - 1)  # interior: exclude the empty and full sets


def _scan_one_graph(g: Graph, config: SearchConfig) -> list[SearchRecord]:
    g6 = to_graph6(g)
    e_simple = energy_simple(g).energy
    records = []
    for loop_mask in _loop_masks(g.n, config.sigma_policy):
        loops = tuple(i for i in range(g.n) if (loop_mask >> i) & 1)
        e_looped = energy_looped(with_loops(g, loops)).energy
        label, suspect, gap = _classify(e_simple, e_looped, config.eq_tol)
        records.append(
            SearchRecord(
                graph6=g6,
                loops=loops,
                sigma=len(loops),
                n=g.n,
                e_simple=e_simple,
                e_looped=e_looped,
                gap=gap,
                classification=label,
                suspect=suspect,
            )
        )
    return records


def _scan_chunk(args: tuple[SearchConfig, int, Sequence[int]]) -> list[SearchRecord]:
    config, n, masks = args
    pairs = _pairs(n)
    out: list[SearchRecord] = []
    for mask in masks:
        out.extend(_scan_one_graph(_graph_from_mask(n, mask, pairs), config))
    return out


def _graph_masks(n: int, config: SearchConfig) -> list[int]:
    pairs = _pairs(n)
    masks = []
    seen_spectra: set[tuple[int, ...]] = set()
    for mask in range(1 << len(pairs)):
        g = _graph_from_mask(n, mask, pairs)
        if config.connected_only and not is_connected(g):
            continue
        if config.dedupe == "spectral":
            spectrum = eigenvalues(adjacency_matrix(g))
            key = tuple(round(v / 1e-6) for v in spectrum)
            if key in seen_spectra:
                continue
            seen_spectra.add(key)
        masks.append(mask)
    return masks


def scan(config: SearchConfig, workers: int = 1) -> Iterator[SearchRecord]:
    """Stream records for every enumerated graph and allowed loop subset.

    `workers` > 1 partitions the graph stream across processes; the output
    order (and bytes, once rendered) is identical for any worker count.
    """
    if workers is None or workers < 1:
        workers = os.cpu_count() or 1
    for n in range(config.n_min, config.n_max + 1):
        masks = _graph_masks(n, config)
        if workers == 1 or len(masks) < 4 * workers:
            for mask in masks:
                yield from _scan_one_graph(_graph_from_mask(n, mask, _pairs(n)), config)
            continue
        chunk = max(1, len(masks) // (workers * 8))
        jobs = [(config, n, masks[i : i + chunk]) for i in range(0, len(masks), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for records in pool.map(_scan_chunk, jobs):
                yield from records


def find_theorem_family_instances(config: SearchConfig) -> Iterator[SearchRecord]:
    """Restricted scan over unions of a base graph with its fully-looped copy.

    Enumerates base graphs G with n in the config range, builds G union G^l
    with loops on the second copy, and tags each record with whether the
    |lambda| >= 1/2 condition held for G. Condition-true records must come
    out EQUAL; anything else is a defect in the energy pipeline.
    """
    for n in range(config.n_min, config.n_max + 1):
        pairs = _pairs(n)
        for mask in _graph_masks(n, config):
            g = _graph_from_mask(n, mask, pairs)
            condition = theorem1_condition(g)
            union = union_looped([with_loops(g, ()), with_all_loops(g)])
            e_simple = energy_simple(union.base).energy
            e_looped = energy_looped(union).energy
            label, suspect, gap = _classify(e_simple, e_looped, config.eq_tol)
            yield SearchRecord(
                graph6=to_graph6(union.base),
                loops=tuple(union.sorted_loops()),
                sigma=union.sigma,
                n=union.n,
                e_simple=e_simple,
                e_looped=e_looped,
                gap=gap,
                classification=label,
                suspect=suspect,
                condition_met=condition.holds,
            )


def fmt10(x: float) -> str:
    """Locale-independent rendering with exactly 10 significant digits."""
    if x == 0:
        x = 0.0  # normalize -0.0
    return f"{x:#.10g}"


def _loops_field(loops: tuple) -> str:
    return ",".join(str(i) for i in loops) if loops else "-"


def to_tsv(records: Iterable[SearchRecord], include_condition: bool = False) -> Iterator[str]:
    """Render records as TSV lines (header first, no trailing newlines)."""
    header = list(TSV_COLUMNS)
    if include_condition:
        header.append("condition_met")
    yield "\t".join(header)
    for r in records:
        label = r.classification + (";SUSPECT" if r.suspect else "")
        row = [
            r.graph6,
            _loops_field(r.loops),
            str(r.sigma),
            str(r.n),
            fmt10(r.e_simple),
            fmt10(r.e_looped),
            fmt10(r.gap),
            label,
        ]
        if include_condition:
            row.append("true" if r.condition_met else "false")
        yield "\t".join(row)


def to_jsonl(records: Iterable[SearchRecord]) -> Iterator[str]:
    """Render records as JSON lines; floats are rounded to 10 significant digits."""
    for r in records:
        obj = {
            "graph6": r.graph6,
            "loops": list(r.loops),
            "sigma": r.sigma,
            "n": r.n,
            "e_simple": float(fmt10(r.e_simple)),
            "e_looped": float(fmt10(r.e_looped)),
            "gap": float(fmt10(r.gap)),
            "class": r.classification,
            "suspect": r.suspect,
        }
        if r.condition_met is not None:
            obj["condition_met"] = r.condition_met
        yield json.dumps(obj, separators=(",", ":"))
