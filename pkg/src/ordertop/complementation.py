"""Complement-removal acyclicity and wedge decompositions of bounded posets.

For a bounded poset L with proper part L~ and Co(z) the set of complements
of z, two finite, checkable statements are exercised:

* removing Co(z) from L~ leaves a poset whose order complex is acyclic;
* when Co(z) is an antichain, the order complex of L~ has the homology of
  the wedge over y in Co(z) of suspensions of Delta(L~_{<y}) * Delta(L~_{>y}).

Acyclicity is certified at the homology level only; contractibility itself
has no algorithmic certificate here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, join, quotient_model, suspension_pointed, wedge
from .homology import HomologyProfile, reduced_homology
from .posets import BoundedPoset, FinitePoset, PosetError


class AntichainError(PosetError):
    """The wedge decomposition requires an antichain of complements."""


@dataclass(frozen=True)
class ComplementationReport:
    """Outcome of the complementation checks for one element z."""

    z: str
    complements: frozenset[str]
    antichain: bool
    coeff: str
    removed_acyclic: bool | None = None
    removed_profile: HomologyProfile | None = None
    left_profile: HomologyProfile | None = None
    right_profile: HomologyProfile | None = None
    wedge_match: bool | None = None

    @property
    def passed(self) -> bool:
        if self.removed_acyclic is False:
            return False
        if self.wedge_match is False:
            return False
        return True


def complements_removed_acyclic(L: BoundedPoset, z: str, coeff: str = "Z") -> ComplementationReport:
    """Remove Co(z) from the proper part and test that what remains is acyclic."""
    co = L.complements(z)
    trunc = L.truncate()
    remaining = trunc.remove(co)
    profile = reduced_homology(remaining.order_complex(), coeff)
    return ComplementationReport(
        z=z,
        complements=co,
        antichain=trunc.is_antichain(co),
        coeff=profile.coeff,
        removed_acyclic=profile.is_acyclic,
        removed_profile=profile,
    )


def wedge_side(trunc: FinitePoset, antichain: frozenset[str]) -> SimplicialComplex:
    """The explicit wedge over the antichain of suspended joins of open cones.

    Empty cones follow the join identity convention, so a summand with both
    cones empty is the suspension of the empty complex, i.e. two points.
    """
    parts = []
    for y in sorted(antichain):
        lower, upper = trunc.cones(y)
        parts.append(suspension_pointed(join(lower.order_complex(), upper.order_complex())))
    return wedge(parts).complex


def wedge_decomposition(
    L: BoundedPoset, z: str, coeff: str = "Z"
) -> tuple[SimplicialComplex, ComplementationReport]:
    """Build the wedge side for Co(z) and compare its homology with the
    order complex of the proper part; Co(z) must be an antichain."""
    co = L.complements(z)
    trunc = L.truncate()
    if not trunc.is_antichain(co):
        raise AntichainError(
            f"Co({z}) = {sorted(co)} is not an antichain; the decomposition does not apply"
        )
    right = wedge_side(trunc, co)
    left_profile = reduced_homology(trunc.order_complex(), coeff)
    right_profile = reduced_homology(right, coeff)
    report = ComplementationReport(
        z=z,
        complements=co,
        antichain=True,
        coeff=left_profile.coeff,
        left_profile=left_profile,
        right_profile=right_profile,
        wedge_match=left_profile == right_profile,
    )
    return right, report


def verify(L: BoundedPoset, z: str, coeff: str = "Z") -> ComplementationReport:
    """Full report for one z: acyclicity always, wedge comparison when Co(z)
    is an antichain."""
    base = complements_removed_acyclic(L, z, coeff)
    if not base.antichain:
        return base
    _, wreport = wedge_decomposition(L, z, coeff)
    return ComplementationReport(
        z=z,
        complements=base.complements,
        antichain=True,
        coeff=base.coeff,
        removed_acyclic=base.removed_acyclic,
        removed_profile=base.removed_profile,
        left_profile=wreport.left_profile,
        right_profile=wreport.right_profile,
        wedge_match=wreport.wedge_match,
    )


@dataclass(frozen=True)
class QuotientWedgeReport:
    """Homology of the collapsed-complement model against the antichain wedge."""

    antichain: tuple[str, ...]
    applicable: bool
    quotient_profile: HomologyProfile
    wedge_profile: HomologyProfile

    @property
    def passed(self) -> bool:
        return self.quotient_profile == self.wedge_profile


def quotient_wedge_check(P: FinitePoset, C, coeff: str = "Z") -> QuotientWedgeReport:
    """For an antichain C in P, compare the homology of Delta(P) with the
    subcomplex Delta(P minus C) collapsed against the wedge over C of
    suspended joins of open cones.

    C empty is a documented degenerate case: the collapse is by everything,
    the wedge is a point, and both sides are acyclic; the report is marked
    not applicable.
    """
    C = frozenset(C)
    if not P.is_antichain(C):
        raise AntichainError(f"{sorted(C)} is not an antichain")
    K = P.order_complex()
    A = P.remove(C).order_complex()
    quotient = quotient_model(K, A)
    right = wedge_side(P, C)
    return QuotientWedgeReport(
        antichain=tuple(sorted(C)),
        applicable=bool(C),
        quotient_profile=reduced_homology(quotient, coeff),
        wedge_profile=reduced_homology(right, coeff),
    )
