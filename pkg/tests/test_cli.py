import pytest

from helpers import dihedral, free_bouquet
from vfree.cli import main
from vfree.gog import serialize_gog

DIHEDRAL = "vertex a 2\nvertex b 2\nedge s a b 1\n"
F2 = "vertex v 1\nedge p v v 1\nedge q v v 1\n"
C2C3 = "vertex a 2\nvertex b 3\nedge s a b 1\n"
COLLAPSIBLE = "vertex a 4\nvertex b 2\nedge s a b 2\n"
BAD_DIVISIBILITY = "vertex a 2\nvertex b 3\nedge s a b 2\n"


@pytest.fixture
def gog_file(tmp_path):
    def write(text, name="input.gog"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_ok(self, gog_file, capsys):
        code, out, err = run(capsys, "validate", gog_file(DIHEDRAL))
        assert code == 0
        assert out == "ok\n"

    def test_divisibility_error(self, gog_file, capsys):
        code, out, err = run(capsys, "validate", gog_file(BAD_DIVISIBILITY))
        assert code == 1
        assert "DivisibilityViolation" in err

    def test_syntax_error_exit_code(self, gog_file, capsys):
        code, out, err = run(capsys, "validate", gog_file("vertex a\n"))
        assert code == 1
        assert "SyntaxError" in err

    def test_missing_file_is_usage_error(self, capsys):
        code, out, err = run(capsys, "validate", "/nonexistent/x.gog")
        assert code == 2


class TestCount:
    def test_free_group_counts(self, gog_file, capsys):
        code, out, _ = run(capsys, "count", "--terms", "5", gog_file(F2))
        assert code == 0
        assert out.splitlines() == ["1 1", "2 3", "3 13", "4 71", "5 461"]

    def test_g_column(self, gog_file, capsys):
        code, out, _ = run(capsys, "count", "--terms", "3", "--g", gog_file(DIHEDRAL))
        assert code == 0
        assert out.splitlines() == ["1 1 1/2", "2 1 3/8", "3 1 5/16"]

    def test_terms_cap(self, gog_file, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count", "--terms", "201", gog_file(DIHEDRAL)])
        assert exc.value.code == 2


class TestInvariants:
    def test_dihedral(self, gog_file, capsys):
        code, out, _ = run(capsys, "invariants", gog_file(DIHEDRAL))
        assert code == 0
        assert out.splitlines() == [
            "m=2",
            "chi=0/1",
            "zeta_1=1",
            "zeta_2=-1",
            "mu=1",
            "edge_bound=ok (2 <= 2)",
        ]

    def test_c2c3(self, gog_file, capsys):
        code, out, _ = run(capsys, "invariants", gog_file(C2C3))
        assert code == 0
        lines = out.splitlines()
        assert "m=6" in lines
        assert "chi=-1/6" in lines
        assert "mu=2" in lines


class TestNormalize:
    def test_collapses_and_logs_steps(self, gog_file, capsys):
        code, out, _ = run(capsys, "normalize", "--steps", gog_file(COLLAPSIBLE))
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("# step contract=s removed=b surviving=a")
        assert lines[1] == "vertex a 4"

    def test_output_is_fixed_point(self, gog_file, capsys, tmp_path):
        code, out, _ = run(capsys, "normalize", gog_file(COLLAPSIBLE))
        assert code == 0
        path2 = tmp_path / "second.gog"
        path2.write_text(out)
        code2, out2, _ = run(capsys, "normalize", "--steps", str(path2))
        assert code2 == 0
        assert out2 == out  # no steps logged, identical serialization


class TestClassify:
    def test_c2c3_line(self, gog_file, capsys):
        code, out, _ = run(capsys, "classify", gog_file(C2C3))
        assert code == 0
        assert out.splitlines()[0] == "rank=2 class=III_1 a=(2,3) |S|=1"

    def test_dihedral(self, gog_file, capsys):
        code, out, _ = run(capsys, "classify", gog_file(DIHEDRAL))
        assert out.splitlines()[0] == "rank=1 class=II m=2 |S|=1"

    def test_higher(self, gog_file, capsys):
        text = serialize_gog(free_bouquet(3))
        code, out, _ = run(capsys, "classify", gog_file(text))
        assert out.splitlines()[0] == "rank=3 class=HIGHER m=1"


class TestLargeness:
    def test_dihedral(self, gog_file, capsys):
        code, out, _ = run(capsys, "largeness", gog_file(DIHEDRAL))
        assert code == 0
        lines = out.splitlines()
        assert "chi_negative=false" in lines
        assert "rank_ge_2=false" in lines
        assert "structural=false" in lines
        assert any(line.startswith("f_strictly_increasing=false") for line in lines)
        assert "ends=implied-equivalent (not computed)" in lines

    def test_c2c3_with_prefix(self, gog_file, capsys):
        code, out, _ = run(capsys, "largeness", "--prefix", "6", gog_file(C2C3))
        assert "f_strictly_increasing=true (prefix 6)" in out.splitlines()


class TestVerify:
    def test_parity_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "parity", "--bound", "16")
        assert code == 0
        assert out.count("PASS") == 4
        assert "FAIL" not in out

    def test_oracle_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "oracle", "--bound", "4")
        assert code == 0
        assert "FAIL" not in out

    def test_unknown_suite_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "bogus"])
        assert exc.value.code == 2

    def test_property_failure_exits_3(self, capsys, monkeypatch):
        import vfree.cli as cli

        def failing_suite(seed, bound):
            yield ("rigged-check", False, "forced failure")

        monkeypatch.setitem(cli.SUITES, "parity", (failing_suite, 1))
        code, out, _ = run(capsys, "verify", "parity")
        assert code == 3
        assert "FAIL rigged-check: forced failure" in out


class TestDeterminism:
    def test_byte_identical_reruns(self, gog_file, capsys):
        path = gog_file(C2C3)
        results = []
        for _ in range(2):
            code, out, err = run(capsys, "invariants", path)
            results.append((code, out, err))
        assert results[0] == results[1]
