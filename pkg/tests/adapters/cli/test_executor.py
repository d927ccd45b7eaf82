"""Tests for command execution and exit codes."""

import io
from unittest.mock import Mock

import pytest
from pydantic import ValidationError

from galois_covers.adapters.cli.executor import Services, execute_plan, format_invariants
from galois_covers.adapters.cli.exit_codes import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_RESOURCE_EXHAUSTED,
    EXIT_VERIFICATION_FAILED,
    exit_code_for,
)
from galois_covers.adapters.cli.plan import parse_cli
from galois_covers.adapters.textfile.stream_writer import StreamArtifactWriter
from galois_covers.config.settings import Settings
from galois_covers.domain.cover import RoundTripReport, RoundTripResult
from galois_covers.domain.exceptions import CoveringEngineError
from galois_covers.domain.presentation import AbelianInvariants
from galois_covers.main import build_services


@pytest.fixture
def stream():
    """Captured standard output."""
    return io.StringIO()


@pytest.fixture
def run(stream):
    """Parse argv, wire real services and execute; returns (exit code, output)."""

    def _run(*argv):
        plan = parse_cli(list(argv))
        services = build_services(plan, Settings())
        code = execute_plan(plan, services, StreamArtifactWriter(stream))
        return code, stream.getvalue()

    return _run


def test_order_of_binary_icosahedral(run):
    """Test that the binary icosahedral group has order 120."""
    assert run("order", "<r s t | r^2TSR, s^3TSR, t^5TSR>") == (EXIT_OK, "120\n")


def test_universal_cover_of_circle_is_exhausted(run):
    """Test exit code 3 when the coset cap is hit."""
    code, output = run("universal", "@circle", "--max-cosets", "1000")

    assert code == EXIT_RESOURCE_EXHAUSTED
    assert output == ""


def test_verify_galois_on_torus(run):
    """Test the round trips for the 15 subgroups of Z^2 of index at most 4."""
    assert run("verify-galois", "@torus", "--max-index", "4") == (
        EXIT_OK,
        "all 15 round trips passed\n",
    )


@pytest.mark.parametrize(
    "ref,expected",
    [
        ("@binary-icosahedral", "trivial\n"),
        ("@quaternion", "factors: 2,2\nfree_rank: 0\n"),
        ("@torus", "factors: none\nfree_rank: 2\n"),
    ],
)
def test_abelianize(run, ref, expected):
    """Test the abelianization output."""
    assert run("abelianize", ref) == (EXIT_OK, expected)


def test_pi1_of_torus(run):
    """Test the presentation of pi1 of the torus."""
    assert run("pi1", "@torus") == (EXIT_OK, "<a b | abAB>\n")


def test_pi1_of_a_point(run, tmp_path):
    """Test that a complex without loops has trivial pi1."""
    path = tmp_path / "point.complex"
    path.write_text("vertices 1\nbasepoint 0\n", encoding="utf-8")

    assert run("pi1", str(path)) == (EXIT_OK, "trivial\n")


def test_cover_to_stdout(run, tmp_path):
    """Test that the cover and its projection are printed together."""
    subgroup = tmp_path / "triple.sub"
    subgroup.write_text("generators\na^3\n", encoding="utf-8")

    code, output = run("cover", "@circle", str(subgroup))

    assert code == EXIT_OK
    assert "vertices 3\n" in output
    assert "vmap 2 0\n" in output


def test_cover_to_files(run, tmp_path):
    """Test that --output writes a complex and a projection file."""
    prefix = tmp_path / "triple"
    subgroup = tmp_path / "triple.sub"
    subgroup.write_text("generators\na^3\n", encoding="utf-8")

    code, output = run("cover", "@circle", str(subgroup), "--output", str(prefix))

    assert (code, output) == (EXIT_OK, "sheets 3\n")
    assert "vertices 3" in (tmp_path / "triple.complex").read_text(encoding="utf-8")
    assert (tmp_path / "triple.projection").exists()


def test_cover_files_give_back_the_subgroup(run, tmp_path):
    """Test that cover-subgroup reads what cover --output wrote."""
    subgroup = tmp_path / "half.sub"
    subgroup.write_text("generators\na^2\nb\n", encoding="utf-8")
    prefix = tmp_path / "half"

    _, written = run("cover", "@torus", str(subgroup), "--output", str(prefix))
    code, output = run(
        "cover-subgroup", "@torus", f"{prefix}.complex", f"{prefix}.projection"
    )

    assert written == "sheets 2\n"
    assert code == EXIT_OK
    assert output[len(written) :] == "table 2\n1 1 0 0\n0 0 1 1\n"


def test_cosets_as_generators(run, tmp_path):
    """Test that --generators prints the subgroup in generator form."""
    subgroup = tmp_path / "half.sub"
    subgroup.write_text("generators\na^2\nb\n", encoding="utf-8")

    assert run("cosets", "@torus", str(subgroup), "--generators") == (
        EXIT_OK,
        "generators\na^2\nb\n",
    )


def test_missing_subgroup_file(run, tmp_path):
    """Test exit code 2 for a missing file."""
    code, _ = run("cover", "@circle", str(tmp_path / "absent.sub"))

    assert code == EXIT_INPUT_ERROR


def test_binary_complex_file(run, tmp_path):
    """Test exit code 2 for a complex file that is not UTF-8 text."""
    path = tmp_path / "bad.complex"
    path.write_bytes(b"\xff\xfe vertices 1\n")

    assert run("pi1", str(path)) == (EXIT_INPUT_ERROR, "")


def test_unwritable_output(run, tmp_path):
    """Test exit code 2 when --output cannot be created."""
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")

    code, output = run("order", "@cyclic4", "--output", str(blocker / "order.txt"))

    assert (code, output) == (EXIT_INPUT_ERROR, "")


def test_trivial_subgroup_cover(run):
    """Test the @trivial subgroup over Z/4."""
    code, output = run("cover", "@cyclic4", "@trivial")

    assert code == EXIT_OK
    assert "vertices 4\n" in output


def test_deck(run):
    """Test the deck group of the universal cover of Z/4."""
    assert run("deck", "@cyclic4") == (EXIT_OK, "4\n")


def test_subgroups(run):
    """Test the subgroup listing header."""
    code, output = run("subgroups", "@quaternion", "--max-index", "8")

    assert code == EXIT_OK
    assert output.startswith("subgroups 6\ntable 1\n")


def test_subgroups_by_conjugacy(run):
    """Test the conjugacy class listing for S3 written as a presentation."""
    code, output = run(
        "subgroups", "<a b | a^2, b^3, abab>", "--max-index", "6", "--conjugacy"
    )

    assert code == EXIT_OK
    assert output.startswith("classes 4\nclass 0 size 1 normal yes\n")
    assert "class 2 size 3 normal no\n" in output


def test_lens_classify(run):
    """Test one line per divisor with its sheet count."""
    code, output = run("lens-classify", "12", "1,1")

    assert code == EXIT_OK
    assert output.splitlines() == [
        "1 12 L(1; 0, 0)",
        "2 6 L(2; 1, 1)",
        "3 4 L(3; 1, 1)",
        "4 3 L(4; 1, 1)",
        "6 2 L(6; 1, 1)",
        "12 1 L(12; 1, 1)",
    ]


def test_lens_classify_single_parameter(run):
    """Test that k = 1 is an input error."""
    code, _ = run("lens-classify", "5", "1")

    assert code == EXIT_INPUT_ERROR


def test_lens_verify(run):
    """Test n = 12, m = 4, l = 5 with window 120 and its witness multipliers."""
    code, output = run("lens-verify", "12", "4", "5", "--window", "120")
    lines = output.splitlines()

    assert code == EXIT_OK
    assert lines[0] == "pass n=12 m=4 l=5 window=120 solutions=81"
    assert len(lines) == 82
    assert lines[1] == "a=-120 b=0 x=-40"
    assert "a=3 b=1 x=1" in lines
    assert lines[-1] == "a=120 b=0 x=40"


def test_lens_compose(run):
    """Test the 2-cover of the 6-cover of L(12; 1, 5)."""
    assert run("lens-compose", "12", "1,5", "6", "2") == (EXIT_OK, "2 6 L(2; 1, 1)\n")


def test_lens_compose_needs_divisors(run):
    """Test that 5 does not divide 6."""
    code, _ = run("lens-compose", "12", "1,5", "6", "5")

    assert code == EXIT_INPUT_ERROR


def test_lens_verify_inconclusive(run):
    """Test that a tiny window is reported but not a failure."""
    code, output = run("lens-verify", "12", "4", "5", "--window", "2")

    assert code == EXIT_OK
    assert output.startswith("inconclusive")


def test_lens_sweep(run):
    """Test the 57 cases with n <= 8."""
    assert run("lens-verify", "--sweep", "8") == (EXIT_OK, "all 57 cases passed\n")


def test_catalog_listing(run):
    """Test that parametric entries are marked."""
    code, output = run("catalog")

    assert code == EXIT_OK
    assert "@cyclic<n> complex Presentation complex of <a | a^n>\n" in output
    assert "@torus complex Torus; pi1 = Z^2\n" in output


def test_serialize(run):
    """Test printing a catalog presentation and a catalog complex."""
    assert run("serialize", "@quaternion") == (EXIT_OK, "<a b | a^4, a^2B^2, baBa>\n")


def test_serialize_complex(run):
    """Test the complex text of the circle."""
    assert run("serialize", "@circle") == (
        EXIT_OK,
        "complex circle\nvertices 1\nedge 0 0 0\nbasepoint 0\n",
    )


def test_serialize_unknown_name(run):
    """Test exit code 2 for an @name the catalog does not know."""
    assert run("serialize", "@moebius") == (EXIT_INPUT_ERROR, "")


def test_verification_failure_exit_code(stream):
    """Test that failed round trips are listed and exit with code 1."""
    services = Services(group=Mock(), cover=Mock(), lens=Mock())
    services.cover.verify_galois.return_value = RoundTripReport(
        (RoundTripResult(0, 1, True, True), RoundTripResult(1, 2, False, True))
    )
    plan = parse_cli(["verify-galois", "@torus", "--max-index", "2"])

    code = execute_plan(plan, services, StreamArtifactWriter(stream))

    assert code == EXIT_VERIFICATION_FAILED
    assert stream.getvalue() == (
        "subgroup 1 (index 2): subgroup->cover FAILED, cover->action ok\n"
    )


def test_unexpected_errors_propagate(stream):
    """Test that non-engine exceptions are not turned into exit codes."""
    services = Services(group=Mock(), cover=Mock(), lens=Mock())
    services.group.order.side_effect = RuntimeError("boom")

    with pytest.raises(RuntimeError):
        execute_plan(parse_cli(["order", "@z5"]), services, StreamArtifactWriter(stream))


def test_exit_code_families():
    """Test the exit code table, including settings validation errors."""
    with pytest.raises(ValidationError) as exc_info:
        Settings(max_cosets=0)

    assert exit_code_for(exc_info.value) == EXIT_INPUT_ERROR
    assert exit_code_for(CoveringEngineError("bare")) is None


def test_format_invariants():
    """Test finite and free parts together."""
    assert format_invariants(AbelianInvariants((2, 6), 1)) == "factors: 2,6\nfree_rank: 1\n"
