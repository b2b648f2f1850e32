"""Largest eigenvalue and Perron vector of the up signless Laplacian.

The solver is power iteration with a Rayleigh-quotient readout on the
matrix-free operator application; instances with at most `DENSE_CUTOFF`
faces take a full symmetric eigensolve instead (and that dense path is
the ground-truth oracle in the tests). The final eigenvalue is always
re-evaluated with compensated summation so that the asymptotic runs at
n = 240 keep absolute accuracy near 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import chains
from .complex_core import SimplicialComplex
from .errors import (
    BadParams,
    DimensionOutOfRange,
    NoConvergence,
    NotPathConnected,
    ResidualTooLarge,
)

#: Full eigensolve below this face count; power iteration above.
DENSE_CUTOFF = 512

#: Top eigenvalues closer than this are reported as numerically multiple.
DEGENERACY_GAP = 1e-9

NORMALIZATIONS = ("unit_norm", "max_boundary_sum_one")


@dataclass(frozen=True)
class SpectralResult:
    """Converged top eigenpair of an up signless Laplacian.

    ``residual`` is ||Q f - value f||_2 / ||f||_2. ``degenerate`` flags a
    numerically multiple top eigenvalue, in which case the vector is not
    a trustworthy Perron direction.
    """

    value: float
    vector: np.ndarray
    residual: float
    iterations: int
    normalization: str
    degenerate: bool = False


def _boundary_table(K: SimplicialComplex, i: int) -> np.ndarray:
    if not 0 <= i < K.dim:
        raise DimensionOutOfRange(
            f"q_{i} needs 0 <= i < dim = {K.dim} so that S_(i+1) is nonempty")
    return chains.boundary_index_table(K, i + 1)


def _apply(tab: np.ndarray, n_i: int, f: np.ndarray) -> np.ndarray:
    s = f[tab].sum(axis=1)
    out = np.zeros(n_i)
    np.add.at(out, tab, s[:, None])
    return out


def _compensated_rayleigh(tab: np.ndarray, f: np.ndarray) -> float:
    """Rayleigh quotient evaluated with exact (fsum) accumulation."""
    s = f[tab].sum(axis=1)
    num = math.fsum(float(x) * float(x) for x in s)
    den = math.fsum(float(x) * float(x) for x in f)
    return num / den


def _power_iterate(tab, n_i, f0, tol, max_iters):
    f = f0 / np.linalg.norm(f0)
    residual = math.inf
    for it in range(1, max_iters + 1):
        g = _apply(tab, n_i, f)
        theta = float(f @ g)
        residual = float(np.linalg.norm(g - theta * f))
        norm_g = np.linalg.norm(g)
        if norm_g == 0.0:
            return f, 0.0, residual, it
        f = g / norm_g
        if residual <= tol:
            return f, theta, residual, it
    raise NoConvergence(
        f"residual {residual:.3e} above tol {tol:.1e} after {max_iters} iterations",
        iterations=max_iters, residual=residual)


def _second_eigenvalue_estimate(tab, n_i, top, seed, iters=400):
    """Deflated power iteration; lower estimate of the second eigenvalue."""
    rng = np.random.default_rng(seed + 1)
    f = rng.standard_normal(n_i)
    f -= (f @ top) * top
    norm = np.linalg.norm(f)
    if norm == 0.0:
        return 0.0
    f /= norm
    theta = 0.0
    for _ in range(iters):
        g = _apply(tab, n_i, f)
        g -= (g @ top) * top
        norm = np.linalg.norm(g)
        if norm == 0.0:
            return 0.0
        f = g / norm
        new_theta = float(f @ _apply(tab, n_i, f))
        if abs(new_theta - theta) < 1e-12 * max(1.0, abs(new_theta)):
            return new_theta
        theta = new_theta
    return theta


def spectral_radius(K: SimplicialComplex, i: int, tol: float = 1e-10,
                    seed: int = 0, max_iters: int = 100000,
                    method: str = "auto",
                    check_gap: bool = True) -> SpectralResult:
    """Largest eigenvalue of the i-up signless Laplacian.

    ``method`` is ``"dense"`` (full eigensolve), ``"power"`` (matrix-free
    power iteration from a seeded positive start), or ``"auto"`` which
    picks dense below `DENSE_CUTOFF` faces. The returned vector has unit
    norm; its Rayleigh quotient is re-evaluated in compensated summation.
    """
    if method not in ("auto", "dense", "power"):
        raise BadParams(f"unknown method {method!r}")
    tab = _boundary_table(K, i)
    n_i = K.n_faces(i)
    use_dense = method == "dense" or (method == "auto" and n_i <= DENSE_CUTOFF)

    gap = None
    if use_dense:
        Q = chains.laplacian(K, i, "Q_up").toarray()
        eigs, vecs = np.linalg.eigh(Q)
        value = float(eigs[-1])
        f = vecs[:, -1]
        if f.sum() < 0:
            f = -f
        iterations = 0
        residual = float(np.linalg.norm(_apply(tab, n_i, f) - value * f))
        gap = float(eigs[-1] - eigs[-2]) if n_i >= 2 else math.inf
        if residual > tol:
            # polish the dense pair by power iteration
            f, _, residual, iterations = _power_iterate(tab, n_i, f, tol, max_iters)
    else:
        rng = np.random.default_rng(seed)
        f0 = rng.uniform(0.5, 1.5, n_i)
        f, _, residual, iterations = _power_iterate(tab, n_i, f0, tol, max_iters)

    value = _compensated_rayleigh(tab, f)
    if gap is None and check_gap:
        second = _second_eigenvalue_estimate(tab, n_i, f, seed)
        gap = value - second
    degenerate = gap is not None and gap < DEGENERACY_GAP
    return SpectralResult(value, f, residual, iterations, "unit_norm", degenerate)


def perron_vector(K: SimplicialComplex, i: int,
                  normalization: str = "unit_norm", tol: float = 1e-10,
                  seed: int = 0, max_iters: int = 100000) -> SpectralResult:
    """Strictly positive top eigenvector of an i-path-connected complex."""
    if normalization not in NORMALIZATIONS:
        raise BadParams(f"normalization must be one of {NORMALIZATIONS}")
    if not K.is_path_connected(i):
        raise NotPathConnected(f"complex is not {i}-path connected")
    res = spectral_radius(K, i, tol=tol, seed=seed, max_iters=max_iters)
    f = res.vector.copy()
    if f.sum() < 0:
        f = -f
    if not res.degenerate and f.min() <= 0.0:
        raise NoConvergence(
            "Perron vector has nonpositive entries despite connectivity; "
            "tighten the tolerance", iterations=res.iterations,
            residual=res.residual)
    if normalization == "max_boundary_sum_one":
        f = f / chains.boundary_sums(K, i, f).max()
    else:
        f = f / np.linalg.norm(f)
    return SpectralResult(res.value, f, res.residual, res.iterations,
                          normalization, res.degenerate)


def rayleigh_quotient(K: SimplicialComplex, i: int, f) -> float:
    """Quadratic form of the boundary sums over the squared norm of f."""
    v = np.asarray(f, dtype=np.float64)
    return chains.quadratic_form(K, i, v, v) / float(v @ v)


def _require_residual(result: SpectralResult, bound: float = 1e-8) -> None:
    if not result.residual <= bound:
        raise ResidualTooLarge(
            f"eigenpair residual {result.residual:.3e} exceeds {bound:.1e}")


def transfer_to_down(K: SimplicialComplex, i: int,
                     result: SpectralResult) -> np.ndarray:
    """Push an eigenvector of the i-up operator to the (i+1)-down operator.

    The boundary-sum vector of an eigenpair is an eigenvector of the down
    operator one dimension up, at the same eigenvalue.
    """
    _require_residual(result)
    return chains.boundary_sums(K, i, result.vector)


def second_order_identity_check(K: SimplicialComplex, i: int,
                                result: SpectralResult) -> float:
    """Max absolute defect of the squared-eigenvalue expansion.

    For each (i+1)-face, value^2 * g must equal
    (i+2)^2 g + 2(i+2) (N g) + N(N g), where g is the boundary-sum vector
    and N sums over down neighbors. Returns the largest absolute
    discrepancy over all (i+1)-faces.
    """
    _require_residual(result)
    g = chains.boundary_sums(K, i, result.vector)
    k = i + 2  # vertices per (i+1)-face

    def down_neighbor_sum(x: np.ndarray) -> np.ndarray:
        return chains.apply_q_down(K, i + 1, x) - k * x

    ng = down_neighbor_sum(g)
    nng = down_neighbor_sum(ng)
    lhs = (result.value ** 2) * g
    rhs = (k * k) * g + 2 * k * ng + nng
    return float(np.abs(lhs - rhs).max())


def dense_q_up_spectrum(K: SimplicialComplex, i: int) -> np.ndarray:
    """All eigenvalues of the i-up signless Laplacian, ascending (oracle)."""
    Q = chains.laplacian(K, i, "Q_up").toarray()
    return np.linalg.eigvalsh(Q)
