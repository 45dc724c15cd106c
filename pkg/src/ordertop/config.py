"""Configuration-poset computations: binary-partition cohomology counts for
unordered planar configurations, the duality-predicted Betti table for point
clouds on the 2-sphere, the cyclic-polytope circle model, and the neighborly
embedding bound.

The Betti numbers for the 2-sphere case are never computed from a simplicial
model (none is available); they come from the mod-2 cohomology of planar
configuration spaces pushed through duality, so all ranks are over Z/2 and
integral torsion is reported as unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import cyclic_polytope_boundary, is_pseudomanifold
from .homology import HomologyProfile, reduced_homology
from .posets import exp_discrete_poset


class ConfigError(ValueError):
    """Parameter out of range."""


@lru_cache(maxsize=None)
def _power_sum_count(total: int, parts: int, max_exp: int) -> int:
    """Multisets of exactly ``parts`` powers of two, each at most 2^max_exp,
    summing to ``total``."""
    if parts == 0:
        return 1 if total == 0 else 0
    if total <= 0:
        return 0
    count = 0
    exp = min(max_exp, total.bit_length() - 1)
    for a in range(exp, -1, -1):
        count += _power_sum_count(total - (1 << a), parts - 1, a)
    return count


def fuchs_dimension(n: int, k: int) -> int:
    """Z/2 dimension of H^k of the space of n distinct unordered points in the
    plane: the number of multisets of n-k powers of two summing to n."""
    if n < 1:
        raise ConfigError("need n >= 1")
    if k < 0 or k >= n:
        return 0
    return _power_sum_count(n, n - k, n.bit_length())


def binary_partition_count(n: int) -> int:
    """Number of multisets of powers of two summing to n (any part count)."""
    if n < 0:
        raise ConfigError("need n >= 0")
    return sum(_power_sum_count(n, p, n.bit_length()) for p in range(n + 1))


@dataclass(frozen=True)
class FuchsTable:
    """Per-degree Z/2 cohomology dimensions for n unordered planar points."""

    n: int
    dims: dict[int, int]

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)


def fuchs_table(n: int) -> FuchsTable:
    return FuchsTable(n, {k: fuchs_dimension(n, k) for k in range(n)})


@dataclass(frozen=True)
class PredictedBetti:
    """Duality-predicted reduced Z/2 Betti table for at most n points on S^2."""

    n: int
    m: int
    betti: dict[int, int]

    def betti_number(self, p: int) -> int:
        return self.betti.get(p, 0)

    @property
    def sphere_like(self) -> bool:
        return sum(1 for v in self.betti.values() if v) == 1


def predicted_betti_exp2(n: int) -> PredictedBetti:
    """Reduced Betti numbers (Z/2) of the order complex for at most n points
    on the 2-sphere: degree p receives the planar configuration cohomology in
    degree 3n - p - 1."""
    if n < 1:
        raise ConfigError("need n >= 1")
    betti = {}
    for p in range(3 * n):
        rank = fuchs_dimension(n, 3 * n - p - 1)
        if rank:
            betti[p] = rank
    return PredictedBetti(n, 2, betti)


def neighborly_bound(n: int) -> int:
    """Lower bound 3n for the ambient dimension of an n-neighborly embedding
    of the 2-sphere, valid because the degree 3n-1 predicted rank is nonzero."""
    if n < 1:
        raise ConfigError("need n >= 1")
    top = predicted_betti_exp2(n).betti_number(3 * n - 1)
    if top == 0:
        raise ConfigError(f"internal failure: degree {3 * n - 1} rank is zero")
    return 3 * n


@dataclass(frozen=True)
class CircleModelReport:
    """Homology verdict for the cyclic-polytope model of n points on a circle."""

    n: int
    m: int
    profile: HomologyProfile
    pseudomanifold: bool

    @property
    def passed(self) -> bool:
        want = {2 * self.n - 1: 1}
        return (
            self.pseudomanifold
            and self.profile.betti == want
            and not self.profile.torsion
        )


def circle_model_check(n: int, m: int, coeff: str = "Z") -> CircleModelReport:
    """Build the boundary of the cyclic polytope with m vertices in dimension
    2n and check it has exactly the homology of S^{2n-1} plus the
    every-ridge-in-two-facets property."""
    if n < 1:
        raise ConfigError("need n >= 1")
    if m < 2 * n + 2:
        raise ConfigError(f"need m >= 2n + 2 = {2 * n + 2}, got {m}")
    K = cyclic_polytope_boundary(m, 2 * n)
    return CircleModelReport(
        n=n,
        m=m,
        profile=reduced_homology(K, coeff),
        pseudomanifold=is_pseudomanifold(K),
    )


@dataclass(frozen=True)
class ExpDiscreteReport:
    """Order-complex homology of bounded-size subsets of a finite set against
    the expected wedge of C(m-1, n) spheres of dimension n-1."""

    m: int
    n: int
    profile: HomologyProfile
    expected_count: int
    expected_dim: int

    @property
    def passed(self) -> bool:
        want = {self.expected_dim: self.expected_count} if self.expected_count else {}
        return self.profile.betti == want and not self.profile.torsion


def exp_discrete_check(m: int, n: int, coeff: str = "Z") -> ExpDiscreteReport:
    from math import comb

    if not 1 <= n <= m:
        raise ConfigError(f"need 1 <= n <= m, got n={n}, m={m}")
    P = exp_discrete_poset(m, n)
    return ExpDiscreteReport(
        m=m,
        n=n,
        profile=reduced_homology(P.order_complex(), coeff),
        expected_count=comb(m - 1, n),
        expected_dim=n - 1,
    )
