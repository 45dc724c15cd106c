"""Diagrams of finite posets over a finite base poset.

A diagram assigns a fiber poset to each base element and a monotone
connecting map D_{q'} -> D_q to each base relation q <= q' (maps go down).
Two flattenings are provided: the pair construction whose order uses the
fiber order through the connecting maps, and the strict-equality flattening
where x precedes y exactly when the connecting map sends y to x.  They agree
when every fiber is an antichain but differ in general, and no equivalence
between them is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import HomologyProfile, reduced_homology
from .posets import FinitePoset, PosetError, parse_poset


class DiagramError(ValueError):
    """Structurally invalid diagram input."""


class PosetDiagram:
    """Base poset, fiber posets, and connecting maps for the base covers.

    ``maps[(q, q')]`` sends elements of the fiber over q' to the fiber over q
    and must be supplied for every cover q < q' of the base; maps for longer
    relations are composites.  ``validate`` checks identity, monotonicity and
    path-independence of composition.
    """

    def __init__(
        self,
        base: FinitePoset,
        fibers: dict[str, FinitePoset],
        maps: dict[tuple[str, str], dict[str, str]],
    ):
        self.base = base
        self.fibers = dict(fibers)
        self.maps = {pair: dict(m) for pair, m in maps.items()}
        for q in base:
            if q not in self.fibers:
                raise DiagramError(f"missing fiber for base element {q!r}")
        for q, q2 in self.maps:
            if not base.lt(q, q2):
                raise DiagramError(f"map pair ({q!r}, {q2!r}) is not a base relation")
        for a, b in base.covers:
            if (a, b) not in self.maps:
                raise DiagramError(f"missing connecting map for base cover {a!r} < {b!r}")

    def full_maps(self) -> dict[tuple[str, str], dict[str, str]]:
        """Connecting maps for every strict base relation, built from covers.

        When several cover paths exist the composite along the first one is
        used; ``validate`` is responsible for checking they all agree.
        """
        full = {}
        pairs = sorted(
            ((a, b) for a in self.base for b in self.base.upset(a)),
            key=lambda p: (len(self.base.upset(p[0]) & self.base.downset(p[1])), p),
        )
        for a, b in pairs:
            if (a, b) in self.maps:
                full[(a, b)] = self.maps[(a, b)]
                continue
            via = sorted(self.base.upset(a) & self.base.downset(b))
            w = via[0]
            lower, upper = full[(a, w)], full[(w, b)]
            full[(a, b)] = {x: lower[upper[x]] for x in upper}
        return full

    def fiber(self, q: str) -> FinitePoset:
        return self.fibers[q]


@dataclass(frozen=True)
class DiagramReport:
    """Validation verdict with one witness string per failure."""

    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def validate(D: PosetDiagram) -> DiagramReport:
    """Check identities, totality, codomains, monotonicity, and that all
    cover-path composites agree (plus any supplied long maps)."""
    failures: list[str] = []
    base = D.base
    for (q, q2), mapping in sorted(D.maps.items()):
        upper, lower = D.fibers[q2], D.fibers[q]
        for x in upper:
            if x not in mapping:
                failures.append(f"map {q}<{q2}: no image for {x!r}")
            elif mapping[x] not in lower:
                failures.append(f"map {q}<{q2}: image {mapping[x]!r} not in fiber {q!r}")
        for x in mapping:
            if x not in upper:
                failures.append(f"map {q}<{q2}: domain element {x!r} not in fiber {q2!r}")
    if failures:
        return DiagramReport(tuple(failures))

    for (q, q2), mapping in sorted(D.maps.items()):
        upper = D.fibers[q2]
        lower = D.fibers[q]
        for x in upper:
            for y in upper.upset(x):
                if not lower.leq(mapping[x], mapping[y]):
                    failures.append(
                        f"map {q}<{q2} is not monotone: {x!r} <= {y!r} but "
                        f"{mapping[x]!r} !<= {mapping[y]!r}"
                    )

    composite: dict[tuple[str, str], dict[str, str]] = {}
    pairs = sorted(
        ((a, b) for a in base for b in base.upset(a)),
        key=lambda p: (len(base.upset(p[0]) & base.downset(p[1])), p),
    )
    for a, b in pairs:
        via = sorted(base.upset(a) & base.downset(b))
        candidates = []
        if (a, b) in D.maps:
            candidates.append(("given", D.maps[(a, b)]))
        for w in via:
            if (a, w) in composite and (w, b) in composite:
                lower, upper = composite[(a, w)], composite[(w, b)]
                candidates.append((w, {x: lower.get(upper.get(x)) for x in D.fibers[b]}))
        if not candidates:
            failures.append(f"no map derivable for base relation {a!r} < {b!r}")
            continue
        _, first = candidates[0]
        for name, other in candidates[1:]:
            if other != first:
                failures.append(
                    f"composition mismatch for {a!r} < {b!r}: path via {name!r} disagrees"
                )
        composite[(a, b)] = first
    return DiagramReport(tuple(failures))


def _require_valid(D: PosetDiagram) -> None:
    report = validate(D)
    if not report.passed:
        raise DiagramError("invalid diagram: " + "; ".join(report.failures[:3]))


def _pair_label(x: str, q: str) -> str:
    return f"{x}@{q}"


def grothendieck(D: PosetDiagram) -> FinitePoset:
    """Poset on fiber-element/base-element pairs: (x, q) <= (y, q') when
    q <= q' and x lies below the image of y in the fiber over q."""
    _require_valid(D)
    full = D.full_maps()
    elements = [_pair_label(x, q) for q in D.base for x in D.fibers[q]]
    rels = []
    for q in D.base:
        fib = D.fibers[q]
        for x in fib:
            for y in fib.upset(x):
                rels.append((_pair_label(x, q), _pair_label(y, q)))
        for q2 in D.base.upset(q):
            mapping = full[(q, q2)]
            for y in D.fibers[q2]:
                img = mapping[y]
                for x in fib:
                    if fib.leq(x, img):
                        rels.append((_pair_label(x, q), _pair_label(y, q2)))
    return FinitePoset(elements, rels)


def diagram_flatten(D: PosetDiagram) -> FinitePoset:
    """Strict-equality flattening: fibers count as antichains and x < y holds
    exactly when the connecting map sends y to x."""
    _require_valid(D)
    full = D.full_maps()
    elements = [_pair_label(x, q) for q in D.base for x in D.fibers[q]]
    rels = []
    for (q, q2), mapping in full.items():
        for y, x in mapping.items():
            rels.append((_pair_label(x, q), _pair_label(y, q2)))
    return FinitePoset(elements, rels)


@dataclass(frozen=True)
class CylinderReport:
    """Homology of the flattened total poset against the lower fiber."""

    lower_profile: HomologyProfile
    total_profile: HomologyProfile

    @property
    def passed(self) -> bool:
        return self.lower_profile == self.total_profile


def cylinder_check(D: PosetDiagram, coeff: str = "Z") -> CylinderReport:
    """Over a two-element chain the flattened poset is a mapping cylinder and
    retracts to the lower fiber, so the two homology profiles must agree."""
    base = D.base
    if len(base) != 2 or len(base.covers) != 1:
        raise DiagramError("cylinder check needs a two-element chain base")
    ((lo, _hi),) = base.covers
    total = grothendieck(D)
    return CylinderReport(
        lower_profile=reduced_homology(D.fibers[lo].order_complex(), coeff),
        total_profile=reduced_homology(total.order_complex(), coeff),
    )


# -- the .pdiag text format ----------------------------------------------------


def parse_pdiag(text: str) -> PosetDiagram:
    """Parse the ``.pdiag`` format.

    A ``base:`` block and one ``fiber <q>:`` block per base element, each in
    ``.poset`` syntax; one ``map <q> <q'>: x->y, ...`` line per base cover,
    where x is in the fiber over q' and y is its image in the fiber over q.
    """
    base_lines: list[str] = []
    fiber_lines: dict[str, list[str]] = {}
    map_specs: dict[tuple[str, str], dict[str, str]] = {}
    current: list[str] | None = None
    for line in text.splitlines():
        line = line.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped == "base:":
            current = base_lines
            continue
        if stripped.startswith("fiber ") and stripped.endswith(":"):
            q = stripped[len("fiber "):-1].strip()
            if q in fiber_lines:
                raise DiagramError(f"duplicate fiber block for {q!r}")
            current = fiber_lines.setdefault(q, [])
            continue
        if stripped.startswith("map "):
            head, _, body = stripped.partition(":")
            parts = head.split()
            if len(parts) != 3:
                raise DiagramError(f"malformed map header: {stripped!r}")
            key = (parts[1], parts[2])
            if key in map_specs:
                raise DiagramError(f"duplicate map block for {key}")
            mapping = {}
            for item in body.split(","):
                item = item.strip()
                if not item:
                    continue
                src, arrow, dst = item.partition("->")
                if not arrow:
                    raise DiagramError(f"malformed map entry: {item!r}")
                mapping[src.strip()] = dst.strip()
            map_specs[key] = mapping
            current = None
            continue
        if current is None:
            raise DiagramError(f"line outside any block: {stripped!r}")
        current.append(line)

    if not base_lines:
        raise DiagramError("missing base: block")
    try:
        base = parse_poset("\n".join(base_lines))
        fibers = {q: parse_poset("\n".join(lines)) for q, lines in fiber_lines.items()}
    except PosetError as exc:
        raise DiagramError(str(exc)) from exc
    return PosetDiagram(base, fibers, map_specs)
