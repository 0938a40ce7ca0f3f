import csv
import io
import json

import pytest

from vknot.cli import EX_USAGE, main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_validate(capsys):
    assert run("validate", "O1+U1+", "virtual_trefoil") == (0, "ok O1+U1+\nok O1+O2+U1+U2+\n")
    capsys.readouterr()
    assert run("validate", "O1+U1-", "O1+X1+")[0] == 1
    err = capsys.readouterr().err
    assert "ValidationError" in err and "GaussSyntaxError" in err


def test_canon():
    assert run("canon", "U1+O1+", "O2+;U2+;@") == (0, "O1+U1+\n@;O1+;U1+\n")


def test_invariants_csv():
    code, text = run("invariants", "virtual_trefoil", "O1+;U1+", "O1+U9+")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["J"] for r in rows] == ["2", "n/a", ""]
    assert rows[0]["genus"] == "1" and rows[0]["f_polynomial"] == "-1*A^-10 + 1*A^-6 + 1*A^-4"
    assert rows[2]["error"].startswith("ValidationError")


def test_invariants_json_file(tmp_path):
    p = tmp_path / "codes.txt"
    p.write_text("# sample\ntrefoil\n\n@\n")
    code, text = run("invariants", "--file", str(p), "--format", "json", "--threads", "2")
    rows = json.loads(text)
    assert code == 0 and [r["code"] for r in rows] == ["trefoil", "@"]
    assert rows[0]["genus"] == 0 and rows[1]["f_polynomial"] == "1*A^0"


def test_invariants_golden():
    # Frozen output; any change in formatting or values shows up here.
    assert run("invariants", "kprime", "O1+;U1+") == (
        0,
        "code,components,writhe,J,genus,f_polynomial,error\n"
        "kprime,1,4,2,1,-1*A^-16 + -1*A^-14 + 1*A^-12 + 1*A^-10 + 1*A^-8,\n"
        "O1+;U1+,2,1,n/a,1,-1*A^-4 + -1*A^-2,\n",
    )


def test_genus_json():
    code, text = run("genus", "trefoil")
    data = json.loads(text)
    assert code == 0 and (data["crossings"], data["boundary_curves"], data["genus"]) == (3, 5, 0)


def test_mirror_and_sum():
    assert run("mirror", "O1+U1+") == (0, "U1-O1-\n")
    assert run("sum", "O1+U1+", "0", "O1-U1-", "1") == (0, "O1+U1+U2-O2-\n")
    assert run("sum", "O1+U1+", "5", "@", "0")[0] == EX_USAGE


def test_search_verdicts(tmp_path):
    code, text = run("search", "virtual_trefoil", "unknot")
    assert (code, text) == (1, "distinguished odd_writhe 2 | 0\n")
    code, text = run("search", "virtual_trefoil", "unknot", "--regime", "all-forbidden")
    assert code == 0 and text.startswith("vknot-certificate 1\n")
    cert = tmp_path / "c.txt"
    code, text = run("search", "O1+U2-U1+O2-", "@", "--certificate", str(cert))
    assert (code, text) == (0, f"proven 1 moves; certificate {cert}\n")
    assert run("replay", str(cert)) == (0, "ok @\n")
    code, text = run("search", "kishino", "@", "--budget-nodes", "200", "--max-arrows", "8")
    assert code == 2 and text.startswith("unknown ")


def test_replay_rejects(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("vknot-certificate 1\nnonsense\n")
    assert run("replay", str(p))[0] == 1
    assert run("replay", str(tmp_path / "missing.txt"))[0] == EX_USAGE


def test_orbit():
    assert run("orbit", "@", "--max-arrows", "1") == (0, "@\nO1+U1+\nO1-U1-\n")


def test_render(tmp_path):
    code, text = run("render", "virtual_trefoil")
    assert code == 0 and text.count('class="arrow"') == 2
    out = tmp_path / "vt.svg"
    assert run("render", "virtual_trefoil", str(out)) == (0, "")
    assert out.read_text() == text


def test_catalog():
    code, text = run("catalog")
    assert code == 0 and text.splitlines()[0].split() == ["unknot", "@", "verified"]
    assert run("catalog", "show", "kprime") == (0, "O1+O2+O3+O4+U3+U1+U4+U2+\n")
    assert run("catalog", "show", "nope")[0] == EX_USAGE


@pytest.mark.parametrize(
    "argv",
    [["frobnicate"], [], ["canon", "O1+"], ["search", "@"], ["search", "@", "@", "--threads", "0"],
     ["search", "@", "@", "--regime", "classical"], ["invariants"]],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv, out=io.StringIO())
        raise SystemExit(code)
    assert exc.value.code == EX_USAGE
