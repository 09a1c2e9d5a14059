"""Dense symmetric linear algebra, self-contained.

numpy supplies array storage and vector arithmetic only; the eigensolver
(cyclic Jacobi), the SPD factorization (Cholesky), and the dominant-eigenpair
iteration are implemented here.  Everything targets small dense matrices
(desk scale, n <= a few hundred).

Conventions:
* matrices are exactly symmetric float64 arrays; `laplacian` and
  `principal_submatrix` construct them that way and `eig_sym` rejects
  anything else;
* eigenvalues are returned ascending with orthonormal column eigenvectors;
* eigenvector signs are fixed so the largest-magnitude entry of each vector
  is positive (ties resolved to the lowest index), making output
  deterministic.
"""

import math
from typing import NamedTuple

import numpy as np

from .graph import Graph

JACOBI_OFF_REL_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
POWER_RQ_TOL = 1e-13
POWER_MAX_ITER = 50_000


class ConvergenceError(RuntimeError):
    """An iteration cap was hit before the convergence test was met."""


class NotPositiveDefiniteError(ValueError):
    """Cholesky factorization found a non-positive pivot."""


class EigenDecomposition(NamedTuple):
    values: np.ndarray   # ascending
    vectors: np.ndarray  # orthonormal columns, vectors[:, i] pairs values[i]


class PerronData(NamedTuple):
    value: float         # dominant eigenvalue of the inverse
    vector: np.ndarray   # strictly positive, entries summing to 1


def laplacian(g: Graph) -> np.ndarray:
    """Weighted graph Laplacian: degree sums on the diagonal, -w(u,v) off it."""
    lap = np.zeros((g.n, g.n))
    for (u, v), w in zip(g.edges, g.weights):
        lap[u - 1, v - 1] = -w
        lap[v - 1, u - 1] = -w
    np.fill_diagonal(lap, -lap.sum(axis=1))
    return lap


def principal_submatrix(m: np.ndarray, vertices) -> np.ndarray:
    """Rows and columns of m restricted to 1-based `vertices`, ascending."""
    idx = sorted(set(vertices))
    if not idx:
        raise ValueError("empty vertex set")
    if idx[0] < 1 or idx[-1] > m.shape[0]:
        raise ValueError(f"vertices out of range 1..{m.shape[0]}")
    sel = [i - 1 for i in idx]
    return m[np.ix_(sel, sel)].copy()


def eig_sym(
    m: np.ndarray,
    *,
    off_rel_tol: float = JACOBI_OFF_REL_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> EigenDecomposition:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi.

    Sweeps row-cyclically over the strict upper triangle, rotating away each
    off-diagonal entry, until the off-diagonal Frobenius mass drops below
    off_rel_tol times the Frobenius norm of the input.  Raises
    ConvergenceError if max_sweeps sweeps do not get there.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    vecs = np.eye(n)
    if n == 1:
        return EigenDecomposition(values=a.diagonal().copy(), vectors=vecs)

    norm = float(np.linalg.norm(a))
    off_target = off_rel_tol * norm
    off_diagonal = ~np.eye(n, dtype=bool)
    sweeps = 0
    while True:
        # summed directly off the diagonal; norm(a)^2 - norm(diag)^2 would
        # cancel catastrophically once the matrix is nearly diagonal
        off = float(np.linalg.norm(a[off_diagonal]))
        if off <= off_target:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"jacobi sweep limit {max_sweeps} reached (off-diagonal mass {off:.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) * 1e12 < abs(diff):
                    t = apq / diff  # small-angle limit; avoids overflow in theta
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p = vecs[:, p].copy()
                vec_q = vecs[:, q].copy()
                vecs[:, p] = c * vec_p - s * vec_q
                vecs[:, q] = s * vec_p + c * vec_q

    order = np.argsort(a.diagonal(), kind="stable")
    values = a.diagonal()[order].copy()
    vecs = vecs[:, order]
    for j in range(n):
        lead = int(np.argmax(np.abs(vecs[:, j])))
        if vecs[lead, j] < 0:
            vecs[:, j] = -vecs[:, j]
    return EigenDecomposition(values=values, vectors=vecs)


def cholesky_factor(m: np.ndarray) -> np.ndarray:
    """Lower-triangular L with L @ L.T == m; raises NotPositiveDefiniteError."""
    n = m.shape[0]
    lower = np.zeros_like(m, dtype=float)
    for j in range(n):
        pivot = m[j, j] - lower[j, :j] @ lower[j, :j]
        if not (pivot > 0.0) or not math.isfinite(pivot):
            raise NotPositiveDefiniteError(
                f"non-positive pivot {pivot!r} at column {j}; matrix is not SPD"
            )
        lower[j, j] = math.sqrt(pivot)
        if j + 1 < n:
            lower[j + 1:, j] = (m[j + 1:, j] - lower[j + 1:, :j] @ lower[j, :j]) / lower[j, j]
    return lower


def cholesky_solve(lower: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve (L L^T) x = b given the Cholesky factor L."""
    n = lower.shape[0]
    y = np.array(b, dtype=float)
    for i in range(n):
        y[i] = (y[i] - lower[i, :i] @ y[:i]) / lower[i, i]
    x = y
    for i in range(n - 1, -1, -1):
        x[i] = (x[i] - lower[i + 1:, i] @ x[i + 1:]) / lower[i, i]
    return x


def spd_solve(m: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve m x = b for symmetric positive definite m."""
    b = np.asarray(b, dtype=float)
    if b.shape != (m.shape[0],):
        raise ValueError(f"right-hand side shape {b.shape} does not match {m.shape}")
    return cholesky_solve(cholesky_factor(m), b)


def perron_of_inverse(
    m: np.ndarray,
    *,
    rq_tol: float = POWER_RQ_TOL,
    max_iter: int = POWER_MAX_ITER,
) -> PerronData:
    """Dominant eigenpair of m^{-1} for an SPD m with entrywise positive inverse.

    Power iteration applies m^{-1} through a Cholesky solve each step, starting
    from the all-ones vector (inside the positive cone, so the iteration
    converges to the Perron pair).  Convergence is declared when successive
    Rayleigh quotients differ by less than rq_tol.  The returned vector is
    normalized to sum 1.
    """
    n = m.shape[0]
    lower = cholesky_factor(m)
    x = np.ones(n) / math.sqrt(n)
    value = math.inf
    for _ in range(max_iter):
        y = cholesky_solve(lower, x)
        rq = float(x @ y)
        x = y / np.linalg.norm(y)
        if abs(rq - value) < rq_tol:
            value = rq
            break
        value = rq
    else:
        raise ConvergenceError(
            f"power iteration cap {max_iter} reached (last value {value!r})"
        )
    total = float(x.sum())
    if total < 0:
        x = -x
        total = -total
    vector = x / total
    if not (vector > 0).all():
        raise ArithmeticError(
            "computed dominant eigenvector is not strictly positive; "
            "input is not a bottleneck-type matrix"
        )
    return PerronData(value=value, vector=vector)
