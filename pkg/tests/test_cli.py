import pytest

from halfgrids.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBuild:
    def test_tree_pair(self, capsys):
        code, out, _ = run(capsys, "build", "--trees", "(..)|(..)")
        assert code == 0
        assert out == (
            "plus:  n=2; X=2,3; O=4,1\n"
            "minus: n=2; X=2,3; O=4,1\n"
            "grid:  n=4; X=1,4,2,3; O=3,2,4,1; oriented=true\n"
        )

    def test_partitions(self, capsys):
        code, out, _ = run(capsys, "build", "--partitions", "0,1/2,1", "0,1/2,1")
        assert code == 0
        assert "grid:  n=4" in out

    def test_incompatible_is_domain_error(self, capsys):
        code, _, err = run(capsys, "build", "--perms", "4 2 5 3 1 6", "3 1 5 2 6 4")
        assert code == 1
        assert "not compatible" in err

    def test_incompatible_with_unoriented_flag(self, capsys):
        code, out, _ = run(
            capsys, "build", "--unoriented", "--perms", "4 2 5 3 1 6", "3 1 5 2 6 4"
        )
        assert code == 0
        assert "oriented=false" in out

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "build", "--trees", "(..")
        assert code == 2
        assert "error:" in err

    def test_bad_permutation_is_domain_error(self, capsys):
        code, _, _ = run(capsys, "build", "--perms", "1 1", "2 1")
        assert code == 1

    def test_requires_exactly_one_source(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["build"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit):
            main(["build", "--trees", "(..)|(..)", "--perms", "2 1", "2 1"])

    def test_grid_file(self, capsys, tmp_path):
        path = tmp_path / "grid.txt"
        path.write_text("n=2; X=1,2; O=2,1; oriented=true\n")
        code, out, _ = run(capsys, "build", "--grid", str(path))
        assert code == 0
        assert out == "n=2; X=1,2; O=2,1; oriented=true\n"

    def test_missing_grid_file(self, capsys):
        code, _, err = run(capsys, "build", "--grid", "/nonexistent/grid.txt")
        assert code == 2


class TestInvariants:
    def test_oriented(self, capsys):
        code, out, _ = run(capsys, "invariants", "--trees", "(..)|(..)")
        assert code == 0
        assert "components=2" in out
        assert "writhe=0" in out
        assert "tb=-2" in out
        assert "rot=0" in out
        assert "seifert_euler=0" in out

    def test_unoriented_subset(self, capsys):
        code, out, _ = run(
            capsys, "invariants", "--unoriented", "--perms", "4 2 5 3 1 6", "3 1 5 2 6 4"
        )
        assert code == 0
        assert "components=1" in out
        assert "writhe" not in out
        assert "bracket=1*A^(-7) + -1*A^(-3) + -1*A^5" in out


class TestGroup:
    def test_trefoil(self, capsys):
        code, out, _ = run(capsys, "group", "--perms", "4 2 5 3 1 6", "3 1 5 2 6 4")
        assert code == 0
        assert out == (
            "gens=6\n"
            "rel: x1 x2 x3 x4 x5 x6\n"
            "rel: x1 x3 x5 x6\n"
            "rel: x1 x6\n"
            "rel: x2 x4 x5 x6\n"
            "rel: x4 x6\n"
            "abelianization: free rank 1, torsion none\n"
        )

    def test_gap_form(self, capsys):
        code, out, _ = run(
            capsys, "group", "--gap", "--perms", "4 2 5 3 1 6", "3 1 5 2 6 4"
        )
        assert code == 0
        assert out.startswith("F := FreeGroup(6);;\n")

    def test_from_grid_file(self, capsys, tmp_path):
        path = tmp_path / "grid.txt"
        path.write_text("n=2; X=1,2; O=2,1; oriented=true\n")
        code, out, _ = run(capsys, "group", "--grid", str(path))
        assert code == 0
        assert "gens=2" in out and "rel: x1 x2" in out


class TestEncode:
    def test_roundtrip_display(self, capsys):
        code, out, _ = run(capsys, "encode", "--trees", "(..)|(..)")
        assert code == 0
        assert out == "sigma_plus:  2 4 3 1\nsigma_minus: 2 4 3 1\n"


class TestRender:
    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "render", "--trees", "(..)|(..)")
        assert code == 0
        assert out == "O─X \n│X─O\n│O─X\nX─O \n"

    def test_ascii_only(self, capsys):
        code, out, _ = run(capsys, "render", "--ascii-only", "--trees", "(..)|(..)")
        assert code == 0
        assert all(ord(ch) < 128 for ch in out)

    def test_svg_out(self, capsys, tmp_path):
        path = tmp_path / "diagram.svg"
        code, out, _ = run(capsys, "render", "--trees", "(..)|(..)", "--out", str(path))
        assert code == 0
        text = path.read_text()
        assert text.startswith("<svg ")
        assert text.rstrip().endswith("</svg>")

    def test_deterministic(self, capsys):
        _, one, _ = run(capsys, "render", "--trees", "(..)|(..)")
        _, two, _ = run(capsys, "render", "--trees", "(..)|(..)")
        assert one == two


class TestExport:
    def test_plain(self, capsys):
        code, out, _ = run(capsys, "export", "--trees", "(..)|(..)")
        assert code == 0
        assert out == "n=4; X=1,4,2,3; O=3,2,4,1; oriented=true\n"

    def test_rotate90(self, capsys):
        code, out, _ = run(capsys, "export", "--rotate90", "--trees", "(..)|(..)")
        assert code == 0
        assert out != "n=4; X=1,4,2,3; O=3,2,4,1; oriented=true\n"
        assert out.startswith("n=4;")


class TestVerifyCommand:
    def test_success(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-leaves", "3")
        assert code == 0
        assert "all checks passed" in out

    def test_failure_exit_code(self, capsys, monkeypatch):
        from halfgrids import linkdiag

        monkeypatch.setattr(linkdiag, "_rotate_cw", lambda d: (-d[1], d[0]))
        code, out, _ = run(capsys, "verify", "--max-leaves", "3")
        assert code == 3
        assert "FAIL" in out
        assert "counterexample" in out

    def test_bad_bound_is_domain_error(self, capsys):
        code, _, err = run(capsys, "verify", "--max-leaves", "12")
        assert code == 1
