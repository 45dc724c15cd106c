"""Finite posets: parsing, generators, Mobius function, complements, order complexes.

Order data is kept as reachability bitmasks over the canonical (lexicographic)
element ordering, which makes comparability queries, cone extraction and
brute-force meets/joins cheap at desk scale.
"""

from __future__ import annotations

from itertools import combinations, product as iproduct
from typing import Iterable, Iterator, Sequence

from .complexes import SimplicialComplex


class PosetError(ValueError):
    """Malformed poset input: duplicate or unknown labels, cycles."""


class MeetJoinError(PosetError):
    """A required meet or join does not exist; the witness element is reported."""


def _check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise PosetError(f"element label must be a nonempty string, got {label!r}")
    if any(ch.isspace() for ch in label) or "<" in label:
        raise PosetError(f"element label may not contain whitespace or '<': {label!r}")
    return label


class FinitePoset:
    """Immutable finite poset on string labels.

    Built from an element list and arbitrary strict relations; the stored
    order is their transitive closure and ``covers`` is the transitive
    reduction.  Cycles (including a < a) are rejected.
    """

    __slots__ = ("elements", "_index", "_up", "_down", "_covers")

    def __init__(self, elements: Iterable[str], relations: Iterable[tuple[str, str]] = ()):
        labels = [_check_label(e) for e in elements]
        if len(set(labels)) != len(labels):
            dup = next(lab for lab in labels if labels.count(lab) > 1)
            raise PosetError(f"duplicate element label: {dup!r}")
        self.elements: tuple[str, ...] = tuple(sorted(labels))
        self._index = {lab: i for i, lab in enumerate(self.elements)}
        n = len(self.elements)
        succ = [0] * n
        for a, b in relations:
            ia, ib = self._idx(a), self._idx(b)
            if ia == ib:
                raise PosetError(f"cycle in relations: {a!r} < {a!r}")
            succ[ia] |= 1 << ib

        # Strict reachability by iterative DFS; gray nodes detect cycles.
        up = [-1] * n
        state = [0] * n  # 0 new, 1 on stack, 2 done
        for root in range(n):
            if state[root] == 2:
                continue
            stack = [root]
            while stack:
                i = stack[-1]
                if state[i] == 0:
                    state[i] = 1
                    for j in _bits(succ[i]):
                        if state[j] == 1:
                            raise PosetError(
                                f"cycle in relations through {self.elements[j]!r}"
                            )
                        if state[j] == 0:
                            stack.append(j)
                else:
                    stack.pop()
                    if state[i] == 2:
                        continue
                    mask = succ[i]
                    for j in _bits(succ[i]):
                        mask |= up[j]
                    up[i] = mask
                    state[i] = 2
        self._up = tuple(0 if m < 0 else m for m in up)
        down = [0] * n
        for i, mask in enumerate(self._up):
            for j in _bits(mask):
                down[j] |= 1 << i
        self._down = tuple(down)
        self._covers: frozenset[tuple[str, str]] | None = None

    # -- basic queries ------------------------------------------------------

    def _idx(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PosetError(f"unknown element: {label!r}") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.elements, self._up))

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements, {len(self.covers)} covers)"

    def lt(self, a: str, b: str) -> bool:
        return bool(self._up[self._idx(a)] >> self._idx(b) & 1)

    def leq(self, a: str, b: str) -> bool:
        return a == b or self.lt(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return a == b or self.lt(a, b) or self.lt(b, a)

    @property
    def covers(self) -> frozenset[tuple[str, str]]:
        """Irredundant cover pairs (a, b): a < b with nothing in between."""
        if self._covers is None:
            found = []
            for i, lab in enumerate(self.elements):
                for j in _bits(self._up[i]):
                    if not self._up[i] & self._down[j]:
                        found.append((lab, self.elements[j]))
            self._covers = frozenset(found)
        return self._covers

    def upset(self, a: str, strict: bool = True) -> frozenset[str]:
        mask = self._up[self._idx(a)]
        if not strict:
            mask |= 1 << self._idx(a)
        return frozenset(self.elements[j] for j in _bits(mask))

    def downset(self, a: str, strict: bool = True) -> frozenset[str]:
        mask = self._down[self._idx(a)]
        if not strict:
            mask |= 1 << self._idx(a)
        return frozenset(self.elements[j] for j in _bits(mask))

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.elements) if not self._down[i])

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.elements) if not self._up[i])

    def is_antichain(self, labels: Iterable[str]) -> bool:
        """True iff no two distinct members of the set are comparable."""
        idx = [self._idx(lab) for lab in set(labels)]
        return all(
            not (self._up[i] >> j & 1 or self._up[j] >> i & 1)
            for i, j in combinations(idx, 2)
        )

    # -- derived posets -----------------------------------------------------

    def subposet(self, labels: Iterable[str]) -> "FinitePoset":
        """Induced subposet on the given elements."""
        keep = sorted(set(labels), key=self._idx)
        keepset = set(keep)
        rels = [
            (a, b)
            for a in keep
            for b in self.upset(a)
            if b in keepset
        ]
        return FinitePoset(keep, rels)

    def below(self, y: str) -> "FinitePoset":
        return self.subposet(self.downset(y))

    def above(self, y: str) -> "FinitePoset":
        return self.subposet(self.upset(y))

    def cones(self, y: str) -> tuple["FinitePoset", "FinitePoset"]:
        """The open lower and upper cones at y, with the restricted order."""
        return self.below(y), self.above(y)

    def dual(self) -> "FinitePoset":
        rels = [(b, a) for a in self.elements for b in self.upset(a)]
        return FinitePoset(self.elements, rels)

    def remove(self, labels: Iterable[str]) -> "FinitePoset":
        drop = set(labels)
        return self.subposet(e for e in self.elements if e not in drop)

    # -- chains and the order complex --------------------------------------

    def maximal_chains(self) -> list[tuple[str, ...]]:
        """All maximal chains, as ascending label tuples."""
        n = len(self.elements)
        covers_up: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.covers:
            covers_up[self._idx(a)].append(self._idx(b))
        for lst in covers_up:
            lst.sort()
        out = []
        stack = [
            ([i], covers_up[i])
            for i, e in enumerate(self.elements)
            if not self._down[i]
        ]
        while stack:
            chain, nxt = stack.pop()
            if not nxt:
                out.append(tuple(self.elements[i] for i in chain))
            else:
                for j in nxt:
                    stack.append((chain + [j], covers_up[j]))
        return out

    def order_complex(self) -> SimplicialComplex:
        """Complex of all chains; facets are the maximal chains."""
        return SimplicialComplex(self.maximal_chains())


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BoundedPoset:
    """A finite poset with distinguished bottom and top elements."""

    __slots__ = ("poset", "bottom", "top", "_mobius")

    def __init__(self, poset: FinitePoset, bottom: str, top: str):
        if bottom == top:
            raise PosetError("bottom and top must be distinct")
        for e in poset:
            if not (poset.leq(bottom, e) and poset.leq(e, top)):
                raise PosetError(f"element {e!r} is not between the given bounds")
        self.poset = poset
        self.bottom = bottom
        self.top = top
        self._mobius: dict[tuple[str, str], int] = {}

    @classmethod
    def from_poset(cls, poset: FinitePoset) -> "BoundedPoset":
        mins, maxs = poset.minimal_elements(), poset.maximal_elements()
        if len(mins) != 1 or len(maxs) != 1:
            raise PosetError("poset is not bounded: bottom or top is not unique")
        return cls(poset, mins[0], maxs[0])

    def __len__(self) -> int:
        return len(self.poset)

    def __repr__(self) -> str:
        return f"BoundedPoset({len(self.poset)} elements, {self.bottom!r}..{self.top!r})"

    def truncate(self) -> FinitePoset:
        """The proper part: everything strictly between bottom and top."""
        return self.poset.remove((self.bottom, self.top))

    # -- meets, joins, complements ------------------------------------------

    def meet(self, a: str, b: str) -> str | None:
        """Greatest lower bound by brute force; None when it does not exist."""
        P = self.poset
        ia, ib = P._idx(a), P._idx(b)
        common = (P._down[ia] | 1 << ia) & (P._down[ib] | 1 << ib)
        tops = [j for j in _bits(common) if not P._up[j] & common]
        return P.elements[tops[0]] if len(tops) == 1 else None

    def join(self, a: str, b: str) -> str | None:
        P = self.poset
        ia, ib = P._idx(a), P._idx(b)
        common = (P._up[ia] | 1 << ia) & (P._up[ib] | 1 << ib)
        bottoms = [j for j in _bits(common) if not P._down[j] & common]
        return P.elements[bottoms[0]] if len(bottoms) == 1 else None

    def is_lattice(self) -> bool:
        return all(
            self.meet(a, b) is not None and self.join(a, b) is not None
            for a, b in combinations(self.poset.elements, 2)
        )

    def complements(self, z: str) -> frozenset[str]:
        """All x in the proper part with x meet z = bottom and x join z = top.

        Meets and joins with z must exist for every x; a missing one raises
        MeetJoinError naming the witness.
        """
        if z in (self.bottom, self.top):
            raise PosetError("z must lie strictly between the bounds")
        self.poset._idx(z)
        out = []
        for x in self.truncate():
            m, j = self.meet(x, z), self.join(x, z)
            if m is None:
                raise MeetJoinError(f"meet of {x!r} and {z!r} does not exist")
            if j is None:
                raise MeetJoinError(f"join of {x!r} and {z!r} does not exist")
            if m == self.bottom and j == self.top:
                out.append(x)
        return frozenset(out)

    # -- Mobius function -----------------------------------------------------

    def mobius_pair(self, x: str, y: str) -> int:
        """mu(x, y) by the defining recursion, memoized per element pair."""
        if x == y:
            return 1
        P = self.poset
        if not P.lt(x, y):
            return 0
        key = (x, y)
        cached = self._mobius.get(key)
        if cached is None:
            interval = (P.upset(x, strict=False) & P.downset(y)) | {x}
            cached = -sum(self.mobius_pair(x, z) for z in interval)
            self._mobius[key] = cached
        return cached

    def mobius(self) -> int:
        """The Mobius number mu(bottom, top)."""
        return self.mobius_pair(self.bottom, self.top)


# -- generators --------------------------------------------------------------

_ELEMENT_CHARS = "123456789abcdefghijklmnopqrstuvwxyz"


def _subset_label(items: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(items)) + "}"


def chain_poset(k: int) -> FinitePoset:
    """Total order on k elements labeled 1..k."""
    if k < 0:
        raise PosetError("chain length must be >= 0")
    labels = [str(i) for i in range(1, k + 1)]
    return FinitePoset(labels, zip(labels, labels[1:]))


def boolean_lattice(n: int) -> FinitePoset:
    """All subsets of {1..n}, including the empty set, ordered by inclusion."""
    if n < 0:
        raise PosetError("boolean rank must be >= 0")
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    rels = [
        (_subset_label(a), _subset_label(b))
        for a in subsets
        for b in subsets
        if len(a) < len(b) and a < b
    ]
    return FinitePoset((_subset_label(s) for s in subsets), rels)


def exp_discrete_poset(m: int, n: int) -> FinitePoset:
    """Nonempty subsets of {1..m} of cardinality at most n, by inclusion."""
    if not 1 <= n <= m:
        raise PosetError(f"need 1 <= n <= m, got n={n}, m={m}")
    subsets = [frozenset(c) for k in range(1, n + 1) for c in combinations(range(1, m + 1), k)]
    rels = [
        (_subset_label(a), _subset_label(b))
        for a in subsets
        for b in subsets
        if len(a) < len(b) and a < b
    ]
    return FinitePoset((_subset_label(s) for s in subsets), rels)


def set_partitions(n: int) -> list[tuple[frozenset[int], ...]]:
    """All set partitions of {1..n}, blocks sorted by least element."""
    parts: list[tuple[frozenset[int], ...]] = [()]
    for item in range(1, n + 1):
        nxt = []
        for p in parts:
            for i in range(len(p)):
                nxt.append(p[:i] + (p[i] | {item},) + p[i + 1:])
            nxt.append(p + (frozenset((item,)),))
        parts = nxt
    return [tuple(sorted(p, key=min)) for p in parts]


def partition_label(blocks: Sequence[frozenset[int]]) -> str:
    if any(i > len(_ELEMENT_CHARS) for b in blocks for i in b):
        raise PosetError("partition labels support ground sets up to 35 elements")
    return "".join(
        "(" + "".join(_ELEMENT_CHARS[i - 1] for i in sorted(b)) + ")"
        for b in sorted(blocks, key=min)
    )


def _refines(p: Sequence[frozenset[int]], q: Sequence[frozenset[int]]) -> bool:
    return all(any(b <= c for c in q) for b in p)


def partition_lattice(n: int) -> FinitePoset:
    """Partitions of {1..n} ordered by refinement; the discrete one is bottom."""
    if n < 1:
        raise PosetError("partition lattice needs n >= 1")
    parts = set_partitions(n)
    labels = [partition_label(p) for p in parts]
    rels = []
    for i, p in enumerate(parts):
        for j, q in enumerate(parts):
            if len(p) > len(q) and _refines(p, q):
                rels.append((labels[i], labels[j]))
    return FinitePoset(labels, rels)


def face_poset(K: SimplicialComplex) -> FinitePoset:
    """Nonempty faces of a complex ordered by inclusion."""
    faces = [set(f) for fs in K.faces_by_dim().values() for f in fs]

    def lab(f: set) -> str:
        return "{" + ",".join(sorted(f)) + "}"

    rels = [(lab(a), lab(b)) for a in faces for b in faces if len(a) < len(b) and a < b]
    return FinitePoset((lab(f) for f in faces), rels)


def poset_product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    """Componentwise order on pairs, labeled (p,q)."""

    def lab(p: str, q: str) -> str:
        return f"({p},{q})"

    labels = [lab(p, q) for p in P for q in Q]
    rels = [
        (lab(p1, q1), lab(p2, q2))
        for p1, p2 in iproduct(P.elements, repeat=2)
        for q1, q2 in iproduct(Q.elements, repeat=2)
        if P.leq(p1, p2) and Q.leq(q1, q2) and (p1, q1) != (p2, q2)
    ]
    return FinitePoset(labels, rels)


def generate(kind: str, *params) -> FinitePoset:
    """Named generator dispatch: boolean, partition, chain, exp_discrete,
    face_poset, product, dual."""
    if kind == "boolean":
        return boolean_lattice(*params)
    if kind == "partition":
        return partition_lattice(*params)
    if kind == "chain":
        return chain_poset(*params)
    if kind == "exp_discrete":
        return exp_discrete_poset(*params)
    if kind == "face_poset":
        return face_poset(*params)
    if kind == "product":
        return poset_product(*params)
    if kind == "dual":
        (P,) = params
        return P.dual()
    raise PosetError(f"unknown generator kind: {kind!r}")


# -- the .poset text format ---------------------------------------------------


def parse_poset(text: str) -> FinitePoset:
    """Parse the ``.poset`` format.

    ``#`` starts a comment; one ``elements: a b c`` line declares the ground
    set, before any relation; each following statement ``a < b`` declares a
    relation.  Semicolons separate statements within a line; several
    relations may share a line, separated by commas.  Labels contain no
    whitespace and no ``<``, which makes relation statements tokenizable;
    commas trailing a label are stripped unless the label itself is declared
    with one.
    """
    statements = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if stmt:
                statements.append(stmt)
    elements: list[str] | None = None
    declared: set[str] = set()
    relations = []

    def clean(token: str, side: str) -> str:
        while token not in declared:
            if side == "right" and token.endswith(","):
                token = token[:-1]
            elif side == "left" and token.startswith(","):
                token = token[1:]
            else:
                break
        return token

    for stmt in statements:
        if stmt.startswith("elements:"):
            if elements is not None:
                raise PosetError("multiple 'elements:' declarations")
            elements = stmt[len("elements:"):].split()
            declared = set(elements)
            continue
        if elements is None:
            raise PosetError("the 'elements:' line must come before relations")
        tokens = stmt.replace("<", " < ").split()
        positions = [i for i, t in enumerate(tokens) if t == "<"]
        if not positions:
            raise PosetError(f"malformed relation statement: {stmt!r}")
        used = set()
        for i in positions:
            if i == 0 or i + 1 >= len(tokens):
                raise PosetError(f"malformed relation statement: {stmt!r}")
            used.update((i - 1, i, i + 1))
            relations.append(
                (clean(tokens[i - 1], "left"), clean(tokens[i + 1], "right"))
            )
        if len(used) != len(tokens):
            raise PosetError(f"malformed relation statement: {stmt!r}")
    if elements is None:
        raise PosetError("missing 'elements:' line")
    return FinitePoset(elements, relations)


def format_poset(P: FinitePoset) -> str:
    lines = ["elements: " + " ".join(P.elements)]
    lines += [f"{a} < {b}" for a, b in sorted(P.covers)]
    return "\n".join(lines) + "\n"
