"""Numeric eigenvalue flag map on real symmetric matrices.

A symmetric matrix that is not a multiple of the identity determines a point
in the join of the subspace strata: nested eigenvector spans weighted by
normalized eigenvalue gaps.  The map is invariant under A -> alpha A + beta I
(alpha > 0), and the trace-free unit-norm slice picks one representative per
orbit; both facts are checked numerically on sampled inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SYM_TOL = 1e-12
WEIGHT_DROP = 1e-10
CHECK_TOL = 1e-8


class GrassmannError(ValueError):
    """Invalid matrix input or undefined map value."""


def _as_symmetric(A) -> np.ndarray:
    M = np.asarray(A, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise GrassmannError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise GrassmannError("matrix entries must be finite")
    scale = max(1.0, float(np.abs(M).max()))
    if float(np.abs(M - M.T).max()) > SYM_TOL * scale:
        raise GrassmannError("matrix is not symmetric within tolerance")
    return (M + M.T) / 2.0


@dataclass(frozen=True)
class FlagComponent:
    """One weighted stage of a flag: an orthonormal basis of the subspace."""

    weight: float
    basis: np.ndarray  # shape (n, k), orthonormal columns

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


@dataclass(frozen=True)
class FlagPoint:
    """Strictly nested weighted subspaces; weights are positive and sum to 1."""

    components: tuple[FlagComponent, ...]

    def __post_init__(self):
        dims = [c.dim for c in self.components]
        if any(a >= b for a, b in zip(dims, dims[1:])):
            raise GrassmannError("flag subspaces must be strictly nested")
        if any(c.weight <= 0 for c in self.components):
            raise GrassmannError("flag weights must be positive")
        total = sum(c.weight for c in self.components)
        if abs(total - 1.0) > 1e-10:
            raise GrassmannError(f"flag weights must sum to 1, got {total}")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(c.dim for c in self.components)

    @property
    def reduced_support(self) -> bool:
        """True when eigenvalue coincidences removed some flag stages."""
        n = self.components[0].basis.shape[0] if self.components else 0
        return len(self.components) < n - 1


def phi(A) -> FlagPoint:
    """Map a symmetric matrix to its weighted eigenvector flag.

    With eigenvalues l_1 <= ... <= l_n, stage i (spanning the first i
    eigenvectors) gets weight (l_{i+1} - l_i) / (l_n - l_1); stages whose
    weight falls below 1e-10 are dropped, which is how coinciding eigenvalues
    shrink the support.  Multiples of the identity are rejected: the flag is
    undefined there.
    """
    M = _as_symmetric(A)
    n = M.shape[0]
    lam, vecs = np.linalg.eigh(M)
    spread = float(lam[-1] - lam[0])
    scale = max(1.0, float(np.abs(lam).max()))
    if spread <= SYM_TOL * scale:
        raise GrassmannError("map undefined: matrix is a multiple of the identity")
    components = []
    for i in range(1, n):
        weight = float(lam[i] - lam[i - 1]) / spread
        if weight > WEIGHT_DROP:
            components.append(FlagComponent(weight, vecs[:, :i].copy()))
    total = sum(c.weight for c in components)
    components = [FlagComponent(c.weight / total, c.basis) for c in components]
    return FlagPoint(tuple(components))


def subspace_gap(U: np.ndarray, V: np.ndarray) -> float:
    """Sine of the largest principal angle between equal-dimension spans.

    Computed from the projection residual, which stays well conditioned for
    tiny angles (the arccos of a singular value near 1 does not).
    """
    if U.shape != V.shape:
        raise GrassmannError("subspace bases have different shapes")
    resid = V - U @ (U.T @ V)
    return float(np.linalg.norm(resid, 2))


@dataclass(frozen=True)
class OrbitReport:
    """Flag comparison between A and alpha A + beta I."""

    support_match: bool
    weight_dev: float
    angle_dev: float
    reduced_support: bool

    @property
    def passed(self) -> bool:
        return (
            self.support_match
            and self.weight_dev < CHECK_TOL
            and self.angle_dev < CHECK_TOL
        )


def orbit_invariance_check(A, alpha: float, beta: float) -> OrbitReport:
    """Check phi(A) == phi(alpha A + beta I) within tolerance; alpha > 0."""
    if alpha <= 0:
        raise GrassmannError("alpha must be positive")
    M = _as_symmetric(A)
    fa = phi(M)
    fb = phi(alpha * M + beta * np.eye(M.shape[0]))
    if fa.support != fb.support:
        return OrbitReport(False, float("inf"), float("inf"), fa.reduced_support)
    weight_dev = max(
        (abs(ca.weight - cb.weight) for ca, cb in zip(fa.components, fb.components)),
        default=0.0,
    )
    angle_dev = max(
        (subspace_gap(ca.basis, cb.basis) for ca, cb in zip(fa.components, fb.components)),
        default=0.0,
    )
    return OrbitReport(True, weight_dev, angle_dev, fa.reduced_support)


def slice_representative(A) -> np.ndarray:
    """The unique trace-free, unit-Frobenius-norm point on the orbit of A."""
    M = _as_symmetric(A)
    n = M.shape[0]
    centered = M - (np.trace(M) / n) * np.eye(n)
    norm = float(np.linalg.norm(centered))
    if norm <= SYM_TOL * max(1.0, float(np.linalg.norm(M))):
        raise GrassmannError("slice undefined: matrix is a multiple of the identity")
    return centered / norm


@dataclass(frozen=True)
class BatteryReport:
    """Aggregate outcome of the sampled property battery."""

    n: int
    samples: int
    failures: int
    max_weight_dev: float
    max_angle_dev: float
    max_slice_dev: float
    reduced_support_count: int

    @property
    def passed(self) -> bool:
        return self.failures == 0


def check_battery(n: int, samples: int, seed: int) -> BatteryReport:
    """Run orbit-invariance and slice-agreement checks on seeded random
    symmetric matrices; failures are deviations at or above 1e-8."""
    if n < 2:
        raise GrassmannError("need matrix order n >= 2")
    rng = np.random.default_rng(seed)
    failures = 0
    max_weight = max_angle = max_slice = 0.0
    reduced = 0
    for _ in range(samples):
        raw = rng.standard_normal((n, n))
        A = (raw + raw.T) / 2.0
        alpha = float(rng.uniform(0.1, 3.0))
        beta = float(rng.uniform(-5.0, 5.0))
        report = orbit_invariance_check(A, alpha, beta)
        slice_dev = float(
            np.abs(
                slice_representative(A) - slice_representative(alpha * A + beta * np.eye(n))
            ).max()
        )
        max_weight = max(max_weight, report.weight_dev)
        max_angle = max(max_angle, report.angle_dev)
        max_slice = max(max_slice, slice_dev)
        if report.reduced_support:
            reduced += 1
        if not report.passed or slice_dev >= CHECK_TOL:
            failures += 1
    return BatteryReport(n, samples, failures, max_weight, max_angle, max_slice, reduced)
