"""Checkers for the structural identities the library is built around.

Each checker runs one family instance, evaluates every relevant assertion at
a fixed tolerance, and returns a TheoremReport carrying the measured
quantities whether or not the assertions passed.  Reports never pass by
vacuity: a run that evaluated zero assertions is marked "skip".

The sweep driver evaluates a checker over a cartesian parameter grid in
deterministic order, recording per-instance skips and errors without
aborting the rest of the grid.
"""

import csv
import io
import itertools
import json
import time
from dataclasses import dataclass

import numpy as np

from .blocks import block_decomposition, is_block_graph, starlike_profile
from .generators import (
    block_path,
    block_starlike,
    broom_tree,
    center_label,
    complete_graph,
)
from .graph import (
    Graph,
    center,
    coalesce,
    delete_vertex_components,
    true_twin_partition,
)
from .linalg import laplacian
from .spectral import (
    classify_perron,
    spectral_summary,
    tree_type,
    vertex_perron_data,
)

TWIN_REL_TOL = 1e-8
IDENTITY_ABS_TOL = 1e-8
RESIDUAL_REL_TOL = 1e-8
ZERO_ENTRY_REL_TOL = 1e-8
DESK_SCALE_LIMIT = 400
KIRKLAND_SAMPLE_LIMIT = 10


@dataclass(frozen=True, eq=False)
class TheoremReport:
    theorem: str
    instance: dict
    status: str            # pass | fail | skip | error | info
    assertions: int
    measurements: dict
    failures: tuple[str, ...]
    elapsed_s: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class _Recorder:
    """Accumulates assertion outcomes and measurements for one report."""

    def __init__(self, theorem: str, instance: dict):
        self.theorem = theorem
        self.instance = dict(instance)
        self.assertions = 0
        self.measurements: dict = {}
        self.failures: list[str] = []
        self._start = time.perf_counter()

    def require(self, name: str, ok: bool, value, tolerance=None) -> None:
        self.assertions += 1
        if not ok:
            detail = f"{name}: got {value!r}"
            if tolerance is not None:
                detail += f" (tolerance {tolerance!r})"
            self.failures.append(detail)

    def measure(self, name: str, value) -> None:
        self.measurements[name] = value

    def report(self, status: str | None = None) -> TheoremReport:
        if status is None:
            if self.assertions == 0:
                status = "skip"
            else:
                status = "fail" if self.failures else "pass"
        return TheoremReport(
            theorem=self.theorem,
            instance=self.instance,
            status=status,
            assertions=self.assertions,
            measurements=self.measurements,
            failures=tuple(self.failures),
            elapsed_s=time.perf_counter() - self._start,
        )


def _guard_desk_scale(n: int) -> None:
    if n > DESK_SCALE_LIMIT:
        raise ValueError(f"instance has {n} vertices, above the desk-scale cap {DESK_SCALE_LIMIT}")


def check_twins_lemma(g: Graph, instance: dict | None = None) -> TheoremReport:
    """Every eigenspace basis vector at lambda2 is constant on every class of
    true twins.  Requires a block graph with at least one articulation point."""
    dec = block_decomposition(g)
    if not is_block_graph(g):
        raise ValueError("twin identity applies to block graphs only")
    if not dec.articulation_points:
        raise ValueError("twin identity requires an articulation point")
    rec = _Recorder("twins", instance or {"n": g.n})
    summary = spectral_summary(g)
    twins = true_twin_partition(g)
    worst = 0.0
    for col in range(summary.fiedler_basis.shape[1]):
        y = summary.fiedler_basis[:, col]
        scale = float(np.abs(y).max())
        for cls in twins.classes:
            if len(cls) < 2:
                continue
            entries = [float(y[v - 1]) for v in cls]
            gap = (max(entries) - min(entries)) / scale
            worst = max(worst, gap)
            rec.require(
                f"vector {col} constant on twin class {cls}",
                gap <= TWIN_REL_TOL, gap, TWIN_REL_TOL,
            )
    rec.measure("lambda2", summary.lambda2)
    rec.measure("multiplicity", summary.multiplicity)
    rec.measure("max_twin_gap_rel", worst)
    return rec.report()


def check_path_parity(k: int, p: int) -> TheoremReport:
    """A clique chain is case B exactly when its articulation count is odd,
    and then the tied vertex is the chain's center."""
    if p < 1:
        raise ValueError(f"parity check needs p >= 1, got {p}")
    _guard_desk_scale(k * (p + 1) - p)
    rec = _Recorder("path-parity", {"k": k, "p": p})
    g = block_path(k, p)
    classification, report = classify_perron(g)
    expected = "B" if p % 2 == 1 else "A"
    rec.measure("verdict", classification.verdict)
    rec.require("verdict matches parity", classification.verdict == expected,
                classification.verdict, expected)
    margins = [d.tie_margin for d in report.by_vertex.values() if d.tie_margin is not None]
    if margins:
        rec.measure("min_distinct_margin_rel", min(margins))
    if classification.verdict == "B":
        z = classification.zero_vertex
        rec.measure("zero_vertex", z)
        rec.require("tied vertex is the chain center", z == center_label(k, p),
                    z, center_label(k, p))
        data = report.by_vertex[z]
        best = max(data.values)
        tie_gap = max(abs(best - data.values[i]) / best for i in data.maximizers)
        rec.measure("tie_gap_rel", tie_gap)
        rec.measure("lambda2_from_perron", 1.0 / best)
    return rec.report()


def check_starlike_equal_arms(r: int, k: int, p: int) -> TheoremReport:
    """Equal-length arms force case B at the hub, eigenvalue multiplicity
    r - 1, and make the hub the graph's unique center vertex."""
    if p < 0:
        raise ValueError(f"arm length must be >= 0, got {p}")
    size = 1 + r * (k * (p + 1) - p - 1)
    _guard_desk_scale(size)
    rec = _Recorder("equal-arms", {"r": r, "k": k, "p": p})
    g = block_starlike(r, k, [p] * r)
    classification, report = classify_perron(g)
    rec.measure("verdict", classification.verdict)
    rec.require("verdict is B", classification.verdict == "B", classification.verdict)
    if classification.verdict == "B":
        z = classification.zero_vertex
        rec.require("tied vertex is the hub", z == 1, z)
        m = len(classification.perron_components)
        rec.measure("perron_component_count", m)
        rec.require("all arms tie", m == r, m, r)
        rec.measure("lambda2_from_perron", 1.0 / max(report.by_vertex[z].values))
    summary = spectral_summary(g)
    rec.measure("lambda2", summary.lambda2)
    rec.measure("multiplicity", summary.multiplicity)
    rec.require("multiplicity is r-1", summary.multiplicity == r - 1,
                summary.multiplicity, r - 1)
    ctr = center(g)
    rec.measure("center", ",".join(map(str, ctr)))
    rec.require("center is the hub alone", ctr == (1,), ctr)
    return rec.report()


def check_starlike_case_a(r: int, k: int, arms) -> TheoremReport:
    """A strictly longest arm no longer than the second plus third plus one
    forces case A, with the longest arm the unique maximizer at the hub.

    Instances outside the hypothesis are skipped, with the classification
    still computed and recorded for exploration.
    """
    arms = list(arms)
    if len(arms) != r:
        raise ValueError(f"expected {r} arm lengths, got {len(arms)}")
    size = 1 + sum(k * (p + 1) - p - 1 for p in arms)
    _guard_desk_scale(size)
    rec = _Recorder("starlike-A", {"r": r, "k": k, "arms": ",".join(map(str, arms))})
    g = block_starlike(r, k, arms)
    classification, report = classify_perron(g)
    rec.measure("verdict", classification.verdict)
    hypothesis = r >= 3 and arms[0] > arms[1] and arms[1] + arms[2] + 1 >= arms[0]
    rec.measure("hypothesis_satisfied", int(hypothesis))
    if not hypothesis:
        return rec.report(status="skip")
    rec.require("verdict is A", classification.verdict == "A", classification.verdict)
    hub = report.by_vertex[1]
    rec.require("unique maximizer at hub", len(hub.maximizers) == 1, len(hub.maximizers))
    first_arm_size = k * (arms[0] + 1) - arms[0] - 1
    first_arm = tuple(range(2, 2 + first_arm_size))
    best_comp = hub.components[hub.maximizers[0]]
    rec.require("longest arm is the hub maximizer", best_comp == first_arm,
                f"component of size {len(best_comp)} starting at {best_comp[0]}")
    if hub.tie_margin is not None:
        rec.measure("hub_margin_rel", hub.tie_margin)
    return rec.report()


def check_coalescence(k: int, p: int) -> TheoremReport:
    """Attaching a fresh clique at the center of an odd chain preserves
    lambda2, keeps the zero-extended Fiedler vector an eigenvector, pins the
    new-block values through (1 - lambda2) y_new = y_center, and produces a
    starlike graph (arm profile recorded)."""
    if p < 1 or p % 2 == 0:
        raise ValueError(f"coalescence check needs odd p >= 1, got {p}")
    _guard_desk_scale(k * (p + 1) - p + k - 1)
    rec = _Recorder("coalescence", {"k": k, "p": p})
    g = block_path(k, p)
    u = center_label(k, p)
    merged = coalesce(g, u, complete_graph(k), 1)
    new_vertices = tuple(range(g.n + 1, merged.n + 1))

    base = spectral_summary(g)
    grown = spectral_summary(merged)
    rec.measure("lambda2_original", base.lambda2)
    rec.measure("lambda2_coalesced", grown.lambda2)
    gap = abs(grown.lambda2 - base.lambda2)
    rec.measure("lambda2_gap", gap)
    rec.require("lambda2 preserved", gap <= IDENTITY_ABS_TOL, gap, IDENTITY_ABS_TOL)

    lap_merged = laplacian(merged)
    worst_residual = 0.0
    for col in range(base.fiedler_basis.shape[1]):
        extended = np.concatenate([base.fiedler_basis[:, col], np.zeros(k - 1)])
        residual = float(np.linalg.norm(lap_merged @ extended - base.lambda2 * extended))
        residual /= float(np.linalg.norm(extended))
        worst_residual = max(worst_residual, residual)
        rec.require(
            f"zero-extended vector {col} stays an eigenvector",
            residual <= RESIDUAL_REL_TOL, residual, RESIDUAL_REL_TOL,
        )
    rec.measure("max_extension_residual_rel", worst_residual)

    hub_data = vertex_perron_data(merged, lap_merged, u)
    new_block_comp_idx = next(
        i for i, comp in enumerate(hub_data.components) if comp == new_vertices
    )
    new_block_tied = new_block_comp_idx in hub_data.maximizers
    rec.measure("new_block_joins_tie", int(new_block_tied))
    for col in range(grown.fiedler_basis.shape[1]):
        y = grown.fiedler_basis[:, col]
        scale = float(np.abs(y).max())
        spread = (max(y[v - 1] for v in new_vertices) - min(y[v - 1] for v in new_vertices)) / scale
        rec.require(f"new-block twins equal in vector {col}",
                    spread <= ZERO_ENTRY_REL_TOL, spread, ZERO_ENTRY_REL_TOL)
        pin = max(
            abs((1.0 - grown.lambda2) * y[v - 1] - y[u - 1]) for v in new_vertices
        ) / scale
        rec.require(f"new-block pinning identity in vector {col}",
                    pin <= ZERO_ENTRY_REL_TOL, pin, ZERO_ENTRY_REL_TOL)
        if not new_block_tied:
            flat = max(abs(y[v - 1]) for v in new_vertices) / scale
            rec.require(f"new-block entries vanish in vector {col}",
                        flat <= ZERO_ENTRY_REL_TOL, flat, ZERO_ENTRY_REL_TOL)

    profile = starlike_profile(merged)
    rec.require("coalesced graph is starlike", profile is not None, profile)
    if profile is not None:
        rec.require("hub is the coalescence vertex", profile.hub == u, profile.hub, u)
        rec.measure("arm_profile", ",".join(map(str, profile.arms)))
    return rec.report()


def check_kirkland_identities(g: Graph, instance: dict | None = None) -> TheoremReport:
    """For a case-B graph: lambda2 is the reciprocal of every tied Perron
    value at z, the eigenspace dimension is one less than the number of tied
    components, eigenvectors vanish on z and on the untied components, and at
    any other vertex the unique maximizer is the component holding z."""
    classification, report = classify_perron(g)
    if classification.verdict != "B":
        raise ValueError("identities apply to case-B graphs; classification returned A")
    rec = _Recorder("kirkland", instance or {"n": g.n})
    z = classification.zero_vertex
    data = report.by_vertex[z]
    m = len(data.maximizers)
    rec.measure("zero_vertex", z)
    rec.measure("perron_component_count", m)

    summary = spectral_summary(g)
    rec.measure("lambda2", summary.lambda2)
    worst_gap = 0.0
    for i in data.maximizers:
        gap = abs(summary.lambda2 - 1.0 / data.values[i])
        worst_gap = max(worst_gap, gap)
        rec.require(f"lambda2 equals reciprocal Perron value of component {i}",
                    gap <= IDENTITY_ABS_TOL, gap, IDENTITY_ABS_TOL)
    rec.measure("max_reciprocal_gap", worst_gap)
    rec.require("multiplicity is m-1", summary.multiplicity == m - 1,
                summary.multiplicity, m - 1)

    non_perron = [
        comp for i, comp in enumerate(data.components) if i not in data.maximizers
    ]
    worst_entry = 0.0
    for col in range(summary.fiedler_basis.shape[1]):
        y = summary.fiedler_basis[:, col]
        scale = float(np.abs(y).max())
        at_z = abs(float(y[z - 1])) / scale
        worst_entry = max(worst_entry, at_z)
        rec.require(f"vector {col} vanishes at z", at_z <= ZERO_ENTRY_REL_TOL,
                    at_z, ZERO_ENTRY_REL_TOL)
        for comp in non_perron:
            flat = max(abs(float(y[v - 1])) for v in comp) / scale
            worst_entry = max(worst_entry, flat)
            rec.require(
                f"vector {col} vanishes on untied component {comp[:3]}...",
                flat <= ZERO_ENTRY_REL_TOL, flat, ZERO_ENTRY_REL_TOL,
            )
    rec.measure("max_zero_entry_rel", worst_entry)

    lap = laplacian(g)
    candidates = [v for v in g.vertices() if v != z]
    if len(candidates) > KIRKLAND_SAMPLE_LIMIT:
        picks = np.linspace(0, len(candidates) - 1, KIRKLAND_SAMPLE_LIMIT)
        candidates = sorted({candidates[int(round(i))] for i in picks})
    rec.measure("sampled_vertices", len(candidates))
    for v in candidates:
        comps = delete_vertex_components(g, v)
        if len(comps) == 1:
            rec.require(f"component at non-cut vertex {v} holds z",
                        z in comps[0], v)
            continue
        vdata = vertex_perron_data(g, lap, v)
        rec.require(f"unique maximizer at vertex {v}",
                    len(vdata.maximizers) == 1, len(vdata.maximizers))
        best_comp = vdata.components[vdata.maximizers[0]]
        rec.require(f"maximizer at vertex {v} holds z", z in best_comp, v)
    return rec.report()


def broom_type_survey(handles, bristles) -> list[TheoremReport]:
    """Exploratory: tree kind of every broom over the grid.  Informational
    only; no claim is asserted."""
    reports = []
    for handle in handles:
        for q in bristles:
            rec = _Recorder("broom-type", {"handle": handle, "bristles": q})
            result = tree_type(broom_tree(handle, q))
            rec.measure("kind", result.kind)
            if result.kind == 1:
                rec.measure("characteristic_vertex", result.characteristic_vertex)
            else:
                rec.measure("characteristic_edge",
                            ",".join(map(str, result.characteristic_edge)))
            reports.append(rec.report(status="info"))
    return reports


def _run_path_parity(inst):
    return check_path_parity(inst["k"], inst["p"])


def _run_twins(inst):
    if "arms" in inst:
        arms = _parse_arms(inst["arms"])
        g = block_starlike(inst["r"], inst["k"], arms)
    else:
        g = block_path(inst["k"], inst["p"])
    _guard_desk_scale(g.n)
    return check_twins_lemma(g, instance=inst)


def _run_equal_arms(inst):
    return check_starlike_equal_arms(inst["r"], inst["k"], inst["p"])


def _run_starlike_a(inst):
    if "arms" in inst:
        arms = _parse_arms(inst["arms"])
    else:
        arms = sorted((inst["p1"], inst["p2"], inst["p3"]), reverse=True)
        if arms != [inst["p1"], inst["p2"], inst["p3"]]:
            raise ValueError("arm lengths must be given sorted non-increasing")
    return check_starlike_case_a(inst.get("r", len(arms)), inst["k"], arms)


def _run_coalescence(inst):
    return check_coalescence(inst["k"], inst["p"])


def _run_kirkland(inst):
    if "arms" in inst:
        g = block_starlike(inst["r"], inst["k"], _parse_arms(inst["arms"]))
    else:
        g = block_path(inst["k"], inst["p"])
    _guard_desk_scale(g.n)
    return check_kirkland_identities(g, instance=inst)


def _parse_arms(arms):
    if isinstance(arms, str):
        return [int(a) for a in arms.split(",") if a != ""]
    return list(arms)


THEOREM_RUNNERS = {
    "twins": _run_twins,
    "path-parity": _run_path_parity,
    "equal-arms": _run_equal_arms,
    "starlike-A": _run_starlike_a,
    "coalescence": _run_coalescence,
    "kirkland": _run_kirkland,
}


def run_theorem(theorem: str, instance: dict) -> TheoremReport:
    """Run one checker on one instance, translating precondition mismatches
    into skip reports and unexpected failures into error reports."""
    if theorem not in THEOREM_RUNNERS:
        raise ValueError(
            f"unknown theorem id {theorem!r}; expected one of {sorted(THEOREM_RUNNERS)}"
        )
    start = time.perf_counter()
    try:
        return THEOREM_RUNNERS[theorem](instance)
    except KeyError as exc:
        return TheoremReport(
            theorem=theorem, instance=dict(instance), status="error", assertions=0,
            measurements={}, failures=(f"missing parameter {exc}",),
            elapsed_s=time.perf_counter() - start,
        )
    except ValueError as exc:
        return TheoremReport(
            theorem=theorem, instance=dict(instance), status="skip", assertions=0,
            measurements={}, failures=(str(exc),),
            elapsed_s=time.perf_counter() - start,
        )
    except Exception as exc:  # convergence or classification pathology
        return TheoremReport(
            theorem=theorem, instance=dict(instance), status="error", assertions=0,
            measurements={}, failures=(f"{type(exc).__name__}: {exc}",),
            elapsed_s=time.perf_counter() - start,
        )


def _run_pair(pair) -> TheoremReport:
    theorem, instance = pair
    return run_theorem(theorem, instance)


def sweep(grid: dict, theorems, jobs: int = 1) -> list[TheoremReport]:
    """Run each named checker on every point of the cartesian grid, in grid
    order, collecting one report per (theorem, instance).

    jobs > 1 evaluates instances in a process pool; reports come back in the
    same deterministic grid order regardless of the worker count.
    """
    keys = list(grid.keys())
    combos = list(itertools.product(*(grid[key] for key in keys))) if keys else []
    for theorem in theorems:
        if theorem not in THEOREM_RUNNERS:
            raise ValueError(
                f"unknown theorem id {theorem!r}; expected one of {sorted(THEOREM_RUNNERS)}"
            )
    work = [
        (theorem, dict(zip(keys, combo)))
        for theorem in theorems
        for combo in combos
    ]
    if jobs > 1 and len(work) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_pair, work))
    return [_run_pair(pair) for pair in work]


def parse_grid(text: str) -> dict:
    """Parse a grid such as "k=2..6,p=1..8" into {"k": [2..6], "p": [1..8]}."""
    grid: dict[str, list[int]] = {}
    if not text.strip():
        return grid
    for part in text.split(","):
        if "=" not in part:
            raise ValueError(f"grid term {part!r} is not of the form name=lo..hi")
        name, _, span = part.partition("=")
        name = name.strip()
        if not name:
            raise ValueError(f"grid term {part!r} has an empty name")
        span = span.strip()
        if ".." in span:
            lo_text, _, hi_text = span.partition("..")
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError:
                raise ValueError(f"grid bounds in {part!r} must be integers") from None
            if hi < lo:
                raise ValueError(f"grid term {part!r} has an empty range")
            grid[name] = list(range(lo, hi + 1))
        else:
            try:
                grid[name] = [int(span)]
            except ValueError:
                raise ValueError(f"grid value in {part!r} must be an integer") from None
    return grid


def reports_to_json(reports) -> str:
    payload = [
        {
            "theorem": r.theorem,
            "instance": r.instance,
            "status": r.status,
            "assertions": r.assertions,
            "measurements": r.measurements,
            "failures": list(r.failures),
            "elapsed_s": r.elapsed_s,
        }
        for r in reports
    ]
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def reports_to_csv(reports) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        ["theorem", "instance", "status", "assertions", "elapsed_s", "measurements", "failures"]
    )
    for r in reports:
        writer.writerow([
            r.theorem,
            ",".join(f"{k}={r.instance[k]}" for k in sorted(r.instance)),
            r.status,
            r.assertions,
            f"{r.elapsed_s:.6f}",
            json.dumps(r.measurements, sort_keys=True),
            " | ".join(r.failures),
        ])
    return buffer.getvalue()
