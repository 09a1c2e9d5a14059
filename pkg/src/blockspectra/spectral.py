"""Algebraic connectivity, Fiedler eigenspace, and the two case classifiers.

A connected graph with a cut vertex falls into exactly one of two regimes
with respect to any Fiedler vector:

* case A: a single block carries both positive and negative values, every
  other block is sign-pure, and cut-vertex values grow monotonically along
  chains of blocks leading away from the mixed block;
* case B: no block mixes signs, and a unique zero-valued cut vertex z
  separates all sign changes.

`classify_structural` tests those sign conditions directly on a given Fiedler
vector.  `classify_perron` decides the same dichotomy through an independent
route: for each cut vertex it compares the dominant eigenvalues of the
inverses of the component submatrices (their "Perron values"); two or more
tied maximizers at some vertex means case B at that vertex.  The two
classifiers share no numerical machinery beyond the Laplacian itself, which
is the point: each one cross-checks the other.
"""

from dataclasses import dataclass

import numpy as np

from .blocks import block_decomposition
from .graph import Graph, delete_vertex_components, is_connected
from .linalg import (
    eig_sym,
    laplacian,
    perron_of_inverse,
    principal_submatrix,
)

ZERO_REL_TOL = 1e-7
TIE_REL_TOL = 1e-9
MULTIPLICITY_REL_TOL = 1e-8
RESIDUAL_REL_TOL = 1e-8


class ClassificationError(RuntimeError):
    """Sign pattern or tie structure matches neither expected case."""


@dataclass(frozen=True, eq=False)
class SpectralSummary:
    lambda2: float
    multiplicity: int
    fiedler_basis: np.ndarray  # columns span the lambda2 eigenspace
    spectrum: np.ndarray       # ascending
    connected: bool


@dataclass(frozen=True)
class VertexPerronData:
    """Perron values of the components left by deleting one cut vertex."""

    vertex: int
    components: tuple[tuple[int, ...], ...]
    values: tuple[float, ...]
    maximizers: tuple[int, ...]      # indices into components
    tie_margin: float | None         # relative gap to the best non-maximizer

    def perron_components(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.components[i] for i in self.maximizers)


@dataclass(frozen=True)
class PerronReport:
    by_vertex: dict[int, VertexPerronData]

    def articulation_points(self) -> tuple[int, ...]:
        return tuple(sorted(self.by_vertex))


@dataclass(frozen=True)
class CaseClassification:
    verdict: str                                        # "A" or "B"
    zero_vertex: int | None = None                      # case B
    perron_components: tuple[tuple[int, ...], ...] | None = None  # case B
    predicted_multiplicity: int | None = None           # case B: m - 1
    mixed_block: tuple[int, ...] | None = None          # case A, structural route


@dataclass(frozen=True)
class TreeType:
    kind: int                                  # 1 or 2
    characteristic_vertex: int | None = None   # kind 1
    characteristic_edge: tuple[int, int] | None = None  # kind 2, (u, w) with y_u > 0 > y_w


def spectral_summary(g: Graph, *, mult_rel_tol: float = MULTIPLICITY_REL_TOL) -> SpectralSummary:
    """Second-smallest Laplacian eigenvalue with its eigenspace basis.

    Multiplicity counts eigenvalues within mult_rel_tol (relative) of the
    second-smallest one.  A disconnected graph is flagged (lambda2 ~ 0) rather
    than rejected.
    """
    if g.n == 1:
        return SpectralSummary(
            lambda2=0.0, multiplicity=0, fiedler_basis=np.zeros((1, 0)),
            spectrum=np.zeros(1), connected=True,
        )
    dec = eig_sym(laplacian(g))
    spectrum = dec.values
    lam2 = float(spectrum[1])
    scale = max(float(spectrum[-1]), 1.0)
    connected = lam2 > 1e-8 * scale
    tol = mult_rel_tol * max(abs(lam2), 1e-12 * scale)
    members = [i for i in range(1, g.n) if abs(float(spectrum[i]) - lam2) <= tol]
    return SpectralSummary(
        lambda2=lam2,
        multiplicity=len(members),
        fiedler_basis=dec.vectors[:, members].copy(),
        spectrum=spectrum,
        connected=connected,
    )


def vertex_perron_data(
    g: Graph,
    lap: np.ndarray,
    v: int,
    *,
    tie_rel_tol: float = TIE_REL_TOL,
) -> VertexPerronData:
    """Perron values of all components of g minus v (v must be a cut vertex)."""
    components = tuple(delete_vertex_components(g, v))
    values = tuple(
        perron_of_inverse(principal_submatrix(lap, comp)).value for comp in components
    )
    best = max(values)
    maximizers = tuple(
        i for i, val in enumerate(values) if best - val <= tie_rel_tol * best
    )
    rest = [val for i, val in enumerate(values) if i not in maximizers]
    margin = (best - max(rest)) / best if rest else None
    return VertexPerronData(
        vertex=v, components=components, values=values,
        maximizers=maximizers, tie_margin=margin,
    )


def classify_perron(
    g: Graph,
    *,
    tie_rel_tol: float = TIE_REL_TOL,
) -> tuple[CaseClassification, PerronReport]:
    """Case A/B decision from Perron values at every cut vertex.

    Case B is reported at the unique vertex whose deleted components have two
    or more tied maximal Perron values; if every cut vertex has a unique
    maximizer the verdict is case A.  Two distinct tied vertices would be a
    numerical pathology and raise ClassificationError rather than being
    silently resolved.
    """
    if not is_connected(g):
        raise ValueError("classification requires a connected graph")
    lap = laplacian(g)
    by_vertex: dict[int, VertexPerronData] = {}
    for v in g.vertices():
        if len(delete_vertex_components(g, v)) < 2:
            continue
        by_vertex[v] = vertex_perron_data(g, lap, v, tie_rel_tol=tie_rel_tol)
    if not by_vertex:
        raise ValueError("graph has no articulation point; case analysis needs a cut vertex")
    report = PerronReport(by_vertex=by_vertex)
    tied = [v for v, data in by_vertex.items() if len(data.maximizers) >= 2]
    if len(tied) > 1:
        raise ClassificationError(
            f"multiple vertices with tied Perron components: {sorted(tied)}; "
            "tie tolerance is likely misconfigured"
        )
    if tied:
        z = tied[0]
        data = by_vertex[z]
        perron_comps = data.perron_components()
        classification = CaseClassification(
            verdict="B",
            zero_vertex=z,
            perron_components=perron_comps,
            predicted_multiplicity=len(perron_comps) - 1,
        )
    else:
        classification = CaseClassification(verdict="A")
    return classification, report


def _sign_pattern(y: np.ndarray, zero_tol: float) -> np.ndarray:
    threshold = zero_tol * float(np.abs(y).max())
    signs = np.zeros(len(y), dtype=int)
    signs[y > threshold] = 1
    signs[y < -threshold] = -1
    return signs


def classify_structural(
    g: Graph,
    y: np.ndarray,
    *,
    zero_tol: float = ZERO_REL_TOL,
    resid_rel_tol: float = RESIDUAL_REL_TOL,
) -> CaseClassification:
    """Case A/B decision from the sign pattern of an explicit Fiedler vector.

    The vector is first verified to be a lambda2 eigenvector (relative
    residual <= resid_rel_tol).  Entries within zero_tol * max|y| of zero
    count as zero.  Raises ClassificationError when the sign pattern fits
    neither case, which signals a tolerance misconfiguration rather than a
    property of the graph.
    """
    y = np.asarray(y, dtype=float)
    if y.shape != (g.n,):
        raise ValueError(f"vector has shape {y.shape}, expected ({g.n},)")
    lap = laplacian(g)
    lam2 = float(eig_sym(lap).values[1])
    residual = float(np.linalg.norm(lap @ y - lam2 * y))
    if residual > resid_rel_tol * max(float(np.linalg.norm(y)), 1e-300):
        raise ValueError(
            f"vector is not a lambda2 eigenvector (residual {residual:.3e})"
        )
    dec = block_decomposition(g)
    signs = _sign_pattern(y, zero_tol)

    mixed = [
        i for i, block in enumerate(dec.blocks)
        if any(signs[v - 1] > 0 for v in block) and any(signs[v - 1] < 0 for v in block)
    ]
    if len(mixed) > 1:
        raise ClassificationError(
            f"{len(mixed)} blocks carry both signs; no case admits more than one"
        )
    if len(mixed) == 1:
        return _classify_case_a(g, y, dec, signs, mixed[0], zero_tol)
    return _classify_case_b(g, signs)


def _classify_case_a(g, y, dec, signs, mixed_idx, zero_tol):
    for i, block in enumerate(dec.blocks):
        if i == mixed_idx:
            continue
        block_signs = {int(signs[v - 1]) for v in block}
        if block_signs not in ({0}, {1}, {-1}):
            raise ClassificationError(
                f"block {block} is neither sign-pure nor all-zero: cannot classify"
            )
    _check_monotone_paths(g, y, dec, signs, mixed_idx, zero_tol)
    return CaseClassification(verdict="A", mixed_block=dec.blocks[mixed_idx])


def _check_monotone_paths(g, y, dec, signs, mixed_idx, zero_tol):
    """Walk the block-cut tree away from the mixed block and require the cut
    vertex values along every chain to rise, fall, or stay zero according to
    the sign of the chain's first cut vertex."""
    slack = zero_tol * float(np.abs(y).max())
    arts_of = {i: set(dec.articulations_in_block(i)) for i in range(len(dec.blocks))}
    blocks_of = {a: set(dec.blocks_containing(a)) for a in dec.articulation_points}

    def walk(block_idx, entry_art, sequence):
        nexts = [
            (a, b)
            for a in arts_of[block_idx] if a != entry_art
            for b in blocks_of[a] if b != block_idx
        ]
        if not nexts:
            _require_monotone(y, sequence, slack)
            return
        for art, nxt in nexts:
            walk(nxt, art, sequence + [art])

    for art in arts_of[mixed_idx]:
        for nxt in blocks_of[art]:
            if nxt != mixed_idx:
                walk(nxt, art, [art])


def _require_monotone(y, arts, slack):
    values = [float(y[a - 1]) for a in arts]
    first = values[0]
    if abs(first) <= slack:
        if any(abs(v) > slack for v in values):
            raise ClassificationError(
                f"cut-vertex chain {arts} starts at zero but is not all zero"
            )
        return
    direction = 1.0 if first > 0 else -1.0
    for prev, nxt in zip(values, values[1:]):
        if direction * (nxt - prev) < -slack:
            raise ClassificationError(
                f"cut-vertex values along {arts} are not monotone: {values}"
            )


def _classify_case_b(g, signs):
    zero_candidates = [
        v for v in g.vertices()
        if signs[v - 1] == 0 and any(signs[w - 1] != 0 for w in g.neighbors(v))
    ]
    if len(zero_candidates) != 1:
        raise ClassificationError(
            "no block mixes signs but the zero vertex adjacent to support is not "
            f"unique: candidates {zero_candidates}"
        )
    z = zero_candidates[0]
    components = delete_vertex_components(g, z)
    if len(components) < 2:
        raise ClassificationError(f"zero vertex {z} is not a cut vertex")
    for comp in components:
        comp_signs = {int(signs[v - 1]) for v in comp}
        if 1 in comp_signs and -1 in comp_signs:
            raise ClassificationError(
                f"a sign change avoids the zero vertex {z} (component {comp})"
            )
    return CaseClassification(
        verdict="B",
        zero_vertex=z,
        perron_components=None,
        predicted_multiplicity=None,
    )


def perron_fiedler_basis(
    g: Graph,
    z: int,
    *,
    tie_rel_tol: float = TIE_REL_TOL,
    resid_rel_tol: float = RESIDUAL_REL_TOL,
) -> list[np.ndarray]:
    """Eigenspace basis built from the Perron vectors of the tied components
    at the case-B vertex z.

    With tied components C_1..C_m at z and x_i the sum-normalized Perron
    vector of the inverse of the C_i submatrix, basis vector i-1 places x_1 on
    C_1, -x_i on C_i, and zero elsewhere.  Each vector is verified to satisfy
    the eigen equation at lambda2 = 1/perron value, and lambda2 is
    cross-checked against the eigensolver.
    """
    lap = laplacian(g)
    data = vertex_perron_data(g, lap, z, tie_rel_tol=tie_rel_tol)
    if len(data.maximizers) < 2:
        raise ValueError(f"vertex {z} does not have tied Perron components")
    comps = data.perron_components()
    perron_vectors = [
        perron_of_inverse(principal_submatrix(lap, comp)).vector for comp in comps
    ]
    lam2 = 1.0 / data.values[data.maximizers[0]]
    lam2_eig = float(eig_sym(lap).values[1])
    if abs(lam2 - lam2_eig) > resid_rel_tol * max(lam2_eig, 1e-300):
        raise ClassificationError(
            f"reciprocal Perron value {lam2!r} disagrees with eigensolver {lam2_eig!r}"
        )
    basis = []
    first = comps[0]
    for i in range(1, len(comps)):
        vec = np.zeros(g.n)
        vec[[v - 1 for v in first]] = perron_vectors[0]
        vec[[v - 1 for v in comps[i]]] = -perron_vectors[i]
        residual = float(np.linalg.norm(lap @ vec - lam2 * vec))
        if residual > resid_rel_tol * float(np.linalg.norm(vec)):
            raise ClassificationError(
                f"constructed basis vector {i} fails the eigen equation "
                f"(residual {residual:.3e})"
            )
        basis.append(vec)
    return basis


def tree_type(t: Graph, *, zero_tol: float = ZERO_REL_TOL) -> TreeType:
    """Classify a tree by its Fiedler vector: kind 1 has a zero vertex adjacent
    to support (the characteristic vertex), kind 2 an edge whose endpoints have
    opposite signs (the characteristic edge)."""
    if not is_connected(t) or t.m != t.n - 1:
        raise ValueError("tree classification requires a tree")
    if t.n < 2:
        raise ValueError("tree classification needs at least 2 vertices")
    summary = spectral_summary(t)
    y = summary.fiedler_basis[:, 0]
    signs = _sign_pattern(y, zero_tol)
    characteristic = [
        v for v in t.vertices()
        if signs[v - 1] == 0 and any(signs[w - 1] != 0 for w in t.neighbors(v))
    ]
    if characteristic:
        if len(characteristic) > 1:
            raise ClassificationError(
                f"multiple characteristic vertices {characteristic}: tolerance pathology"
            )
        return TreeType(kind=1, characteristic_vertex=characteristic[0])
    crossing = [
        (u, v) for u, v in t.edges if signs[u - 1] * signs[v - 1] < 0
    ]
    if len(crossing) != 1:
        raise ClassificationError(
            f"expected exactly one sign-crossing edge, found {crossing}"
        )
    # lower label first; the global sign of a Fiedler vector is arbitrary, so
    # some Fiedler vector is positive on the first endpoint
    return TreeType(kind=2, characteristic_edge=crossing[0])
