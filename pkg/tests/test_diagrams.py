import random

import pytest

from randgen import random_two_chain_diagram
from ordertop.diagrams import (
    DiagramError,
    PosetDiagram,
    cylinder_check,
    diagram_flatten,
    grothendieck,
    parse_pdiag,
    validate,
)
from ordertop.posets import FinitePoset, chain_poset

TWO_CHAIN = FinitePoset(["0", "1"], [("0", "1")])


def two_chain_diagram(lower, upper, mapping):
    return PosetDiagram(TWO_CHAIN, {"0": lower, "1": upper}, {("0", "1"): mapping})


class TestValidate:
    def test_constant_diagram(self):
        fiber = chain_poset(3)
        D = two_chain_diagram(fiber, fiber, {x: x for x in fiber})
        assert validate(D).passed

    def test_non_monotone_witnessed(self):
        lower = chain_poset(2)
        upper = chain_poset(2)
        D = two_chain_diagram(lower, upper, {"1": "2", "2": "1"})
        report = validate(D)
        assert not report.passed
        assert any("not monotone" in f for f in report.failures)

    def test_composition_mismatch_witnessed(self):
        base = chain_poset(3)
        fiber = FinitePoset(["a", "b"])
        maps = {
            ("1", "2"): {"a": "a", "b": "b"},
            ("2", "3"): {"a": "a", "b": "b"},
            ("1", "3"): {"a": "b", "b": "a"},  # disagrees with the composite
        }
        D = PosetDiagram(base, {q: fiber for q in base}, maps)
        report = validate(D)
        assert not report.passed
        assert any("mismatch" in f for f in report.failures)

    def test_partial_map_witnessed(self):
        D = two_chain_diagram(chain_poset(1), chain_poset(2), {"1": "1"})
        report = validate(D)
        assert any("no image" in f for f in report.failures)

    def test_missing_cover_map_rejected(self):
        with pytest.raises(DiagramError, match="missing connecting map"):
            PosetDiagram(TWO_CHAIN, {"0": chain_poset(1), "1": chain_poset(1)}, {})


class TestGrothendieck:
    def test_two_chain_singletons(self):
        D = two_chain_diagram(FinitePoset(["a"]), FinitePoset(["b"]), {"b": "a"})
        G = grothendieck(D)
        assert G.covers == {("a@0", "b@1")}

    def test_point_base_recovers_fiber(self):
        fiber = chain_poset(3)
        D = PosetDiagram(FinitePoset(["q"]), {"q": fiber}, {})
        G = grothendieck(D)
        assert sorted(G.covers) == [("1@q", "2@q"), ("2@q", "3@q")]

    def test_partial_cover_example(self):
        D = two_chain_diagram(FinitePoset(["x", "y"]), FinitePoset(["p"]), {"p": "x"})
        G = grothendieck(D)
        assert G.lt("x@0", "p@1")
        assert not G.comparable("y@0", "p@1")

    def test_invalid_diagram_rejected(self):
        D = two_chain_diagram(chain_poset(2), chain_poset(2), {"1": "2", "2": "1"})
        with pytest.raises(DiagramError, match="invalid"):
            grothendieck(D)

    @pytest.mark.parametrize("seed", range(8))
    def test_level_restriction_recovers_fiber(self, seed):
        D = random_two_chain_diagram(random.Random(seed))
        G = grothendieck(D)
        for q in D.base:
            fiber = D.fibers[q]
            level = G.subposet([f"{x}@{q}" for x in fiber])
            expected = FinitePoset(
                [f"{x}@{q}" for x in fiber],
                [(f"{a}@{q}", f"{b}@{q}") for a in fiber for b in fiber.upset(a)],
            )
            assert level == expected


class TestFlatten:
    def test_point_base_is_antichain(self):
        D = PosetDiagram(FinitePoset(["q"]), {"q": chain_poset(3)}, {})
        F = diagram_flatten(D)
        assert not F.covers

    def test_two_chain(self):
        D = two_chain_diagram(FinitePoset(["a"]), FinitePoset(["b"]), {"b": "a"})
        assert diagram_flatten(D).covers == {("a@0", "b@1")}

    def test_shared_image(self):
        D = two_chain_diagram(
            FinitePoset(["a", "a'"]), FinitePoset(["b", "b'"]), {"b": "a", "b'": "a"}
        )
        F = diagram_flatten(D)
        assert F.lt("a@0", "b@1") and F.lt("a@0", "b'@1")
        assert not any(F.comparable("a'@0", x) for x in ("b@1", "b'@1", "a@0"))

    @pytest.mark.parametrize("seed", range(10))
    def test_agrees_with_grothendieck_on_antichain_fibers(self, seed):
        rng = random.Random(200 + seed)
        lower = FinitePoset([f"l{i}" for i in range(rng.randint(1, 4))])
        upper = FinitePoset([f"u{i}" for i in range(rng.randint(1, 4))])
        mapping = {u: rng.choice(lower.elements) for u in upper.elements}
        D = two_chain_diagram(lower, upper, mapping)
        assert diagram_flatten(D) == grothendieck(D)


class TestCylinder:
    def test_collapse_two_points(self):
        D = two_chain_diagram(
            FinitePoset(["a", "b"]), FinitePoset(["p"]), {"p": "a"}
        )
        report = cylinder_check(D)
        assert report.lower_profile.betti == {0: 1}
        assert report.passed

    def test_cone_direction(self):
        D = two_chain_diagram(
            FinitePoset(["a"]), FinitePoset(["p", "q"]), {"p": "a", "q": "a"}
        )
        report = cylinder_check(D)
        assert report.lower_profile.is_acyclic
        assert report.passed

    def test_identity_cylinder(self):
        fiber = chain_poset(2)
        D = two_chain_diagram(fiber, fiber, {x: x for x in fiber})
        report = cylinder_check(D)
        assert report.passed

    def test_base_must_be_two_chain(self):
        D = PosetDiagram(FinitePoset(["q"]), {"q": chain_poset(1)}, {})
        with pytest.raises(DiagramError, match="chain"):
            cylinder_check(D)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_diagrams(self, seed):
        D = random_two_chain_diagram(random.Random(300 + seed))
        assert cylinder_check(D).passed


class TestPdiagFormat:
    GOOD = """
# cylinder over a two-chain
base:
elements: 0 1
0 < 1
fiber 0:
elements: x y
x < y
fiber 1:
elements: p
map 0 1: p->x
"""

    def test_parse(self):
        D = parse_pdiag(self.GOOD)
        assert validate(D).passed
        assert D.maps[("0", "1")] == {"p": "x"}
        assert D.fibers["0"].lt("x", "y")

    def test_missing_fiber(self):
        bad = self.GOOD.replace("fiber 1:\nelements: p\n", "")
        with pytest.raises(DiagramError, match="missing fiber|unknown"):
            parse_pdiag(bad)

    def test_missing_base(self):
        with pytest.raises(DiagramError, match="base"):
            parse_pdiag("fiber 0:\nelements: x\n")

    def test_bad_map_entry(self):
        with pytest.raises(DiagramError, match="map"):
            parse_pdiag(self.GOOD.replace("p->x", "p x"))

    def test_stray_line(self):
        with pytest.raises(DiagramError, match="outside"):
            parse_pdiag("elements: a\n" + self.GOOD)
