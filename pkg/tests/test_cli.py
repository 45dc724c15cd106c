import pytest

from ordertop import complementation, config, grassmann, spheres
from ordertop.cli import CommandOutcome, run
from ordertop.complexes import format_cplx, parse_cplx
from ordertop.homology import reduced_homology
from ordertop.posets import BoundedPoset, boolean_lattice, format_poset, parse_poset

B3_POSET = format_poset(boolean_lattice(3))
TRIANGLE_CPLX = "a b\nb c\na c\n"


@pytest.fixture
def b3_file(tmp_path):
    path = tmp_path / "b3.poset"
    path.write_text(B3_POSET)
    return str(path)


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "tri.cplx"
    path.write_text(TRIANGLE_CPLX)
    return str(path)


@pytest.fixture
def cylinder_file(tmp_path):
    path = tmp_path / "cyl.pdiag"
    path.write_text(
        "base:\nelements: 0 1\n0 < 1\n"
        "fiber 0:\nelements: x y\n"
        "fiber 1:\nelements: p\n"
        "map 0 1: p->x\n"
    )
    return str(path)


class TestHomologyCommand:
    def test_matches_library(self, triangle_file):
        outcome = run(["homology", triangle_file])
        assert outcome.exit_code == 0
        profile = reduced_homology(parse_cplx(TRIANGLE_CPLX))
        expected = [
            f"betti {k} {profile.betti_number(k)}" for k in range(-1, profile.dim + 1)
        ]
        assert list(outcome.stdout_lines) == expected

    def test_z2(self, triangle_file):
        outcome = run(["homology", triangle_file, "--coeff", "z2"])
        assert "betti 1 1" in outcome.stdout_lines

    def test_missing_file_is_usage_error(self):
        outcome = run(["homology", "missing.cplx"])
        assert outcome.exit_code == 2
        assert any("missing.cplx" in line for line in outcome.stderr_lines)


class TestPosetCommands:
    def test_mobius(self, b3_file):
        outcome = run(["mobius", b3_file])
        assert outcome.stdout_lines == ("mobius -1",)
        assert outcome.exit_code == 0

    def test_mobius_unbounded_is_input_error(self, tmp_path):
        path = tmp_path / "anti.poset"
        path.write_text("elements: a b\n")
        assert run(["mobius", str(path)]).exit_code == 2

    def test_ordercomplex_roundtrip(self, b3_file):
        outcome = run(["ordercomplex", b3_file])
        expected = format_cplx(parse_poset(B3_POSET).order_complex())
        assert "\n".join(outcome.stdout_lines) + "\n" == expected

    def test_malformed_poset(self, tmp_path):
        path = tmp_path / "bad.poset"
        path.write_text("elements: a; a < a")
        assert run(["mobius", str(path)]).exit_code == 2


class TestComplementationCommand:
    def test_verify_record(self, b3_file):
        outcome = run(["complementation", "verify", b3_file, "--z", "{1}"])
        assert outcome.exit_code == 0
        report = complementation.verify(
            BoundedPoset.from_poset(boolean_lattice(3)), "{1}"
        )
        assert outcome.stdout_lines == (
            "z {1}",
            "complement {2,3}",
            f"antichain {'true' if report.antichain else 'false'}",
            "removed_acyclic true",
            "wedge_match true",
            "verdict pass",
        )

    def test_bad_z(self, b3_file):
        assert run(["complementation", "verify", b3_file, "--z", "nope"]).exit_code == 2


class TestCalcCommand:
    def test_partition(self):
        outcome = run(["calc", "partition", "--n", "4"])
        assert outcome.stdout_lines == ("wedge 6 x S^1",)
        assert outcome.exit_code == 0

    def test_matches_library(self):
        outcome = run(["calc", "oriented", "--n", "4"])
        result = spheres.oriented_grassmannian_type(4)
        assert outcome.stdout_lines == tuple(
            f"wedge {c} x S^{d}" for d, c in result.dim_counts().items()
        )

    def test_grassmannian_flags(self):
        assert run(["calc", "grassmannian", "--n", "3", "--d", "2"]).stdout_lines == (
            "wedge 1 x S^7",
        )

    def test_exp_circle(self):
        assert run(["calc", "exp-circle", "--n", "2"]).stdout_lines == ("wedge 1 x S^3",)

    def test_bad_params(self):
        assert run(["calc", "grassmannian", "--n", "1"]).exit_code == 2


class TestConfigCommand:
    def test_exp2_betti(self):
        outcome = run(["config", "exp2-betti", "--n", "2"])
        assert outcome.stdout_lines == ("betti 5 1", "betti 4 1", "verdict not-sphere")
        assert outcome.exit_code == 0

    def test_exp2_betti_sphere_case(self):
        outcome = run(["config", "exp2-betti", "--n", "1"])
        assert outcome.stdout_lines == ("betti 2 1", "verdict sphere")

    def test_fuchs(self):
        outcome = run(["config", "fuchs", "--n", "3"])
        assert outcome.stdout_lines == ("dim 0 1", "dim 1 1", "dim 2 0")
        table = config.fuchs_table(3)
        assert all(
            line == f"dim {k} {table.dim(k)}"
            for k, line in enumerate(outcome.stdout_lines)
        )

    def test_circle(self):
        outcome = run(["config", "circle", "--n", "1", "--m", "5"])
        assert outcome.stdout_lines == (
            "betti 1 1",
            "pseudomanifold true",
            "verdict pass",
        )

    def test_neighborly(self):
        assert run(["config", "neighborly", "--n", "2"]).stdout_lines == ("bound 6",)


class TestGrassmannCommand:
    def test_record_matches_library(self):
        outcome = run(["grassmann", "check", "--n", "3", "--samples", "15", "--seed", "7"])
        report = grassmann.check_battery(3, 15, 7)
        assert outcome.exit_code == 0
        assert outcome.stdout_lines == (
            "samples 15",
            "failures 0",
            f"max_weight_dev {report.max_weight_dev:.3e}",
            f"max_angle_dev {report.max_angle_dev:.3e}",
            f"max_slice_dev {report.max_slice_dev:.3e}",
            f"reduced_support {report.reduced_support_count}",
            "verdict pass",
        )

    def test_deterministic(self):
        args = ["grassmann", "check", "--n", "4", "--samples", "10", "--seed", "3"]
        assert run(args) == run(args)


class TestDiagramCommand:
    def test_check(self, cylinder_file):
        outcome = run(["diagram", "check", cylinder_file])
        assert outcome.stdout_lines == (
            "valid true",
            "cylinder_match true",
            "verdict pass",
        )
        assert outcome.exit_code == 0

    def test_invalid_diagram_fails(self, tmp_path):
        path = tmp_path / "bad.pdiag"
        path.write_text(
            "base:\nelements: 0 1\n0 < 1\n"
            "fiber 0:\nelements: x y\nx < y\n"
            "fiber 1:\nelements: p q\np < q\n"
            "map 0 1: p->y, q->x\n"  # not monotone
        )
        outcome = run(["diagram", "check", str(path)])
        assert outcome.exit_code == 1
        assert outcome.stdout_lines[0] == "valid false"

    def test_grothendieck_emits_poset(self, cylinder_file):
        outcome = run(["diagram", "grothendieck", cylinder_file])
        emitted = parse_poset("\n".join(outcome.stdout_lines))
        assert emitted.lt("x@0", "p@1")


class TestUsage:
    def test_unknown_subcommand(self):
        outcome = run(["nonsense"])
        assert outcome.exit_code == 2

    def test_no_args(self):
        assert run([]).exit_code == 2

    def test_quiet_silences_summary(self):
        loud = run(["calc", "partition", "--n", "4"])
        quiet = run(["--quiet", "calc", "partition", "--n", "4"])
        assert loud.stderr_lines == ("ok",)
        assert quiet.stderr_lines == ()
        assert loud.stdout_lines == quiet.stdout_lines

    def test_outcome_is_a_record(self):
        outcome = run(["calc", "partition", "--n", "3"])
        assert isinstance(outcome, CommandOutcome)
