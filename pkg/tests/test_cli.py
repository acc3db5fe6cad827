import subprocess
import sys

import pytest

from meanderknots.cli import main, resolve


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_census_row(capsys):
    code, out, _ = run(capsys, "census", "knots", "--n", "7")
    assert code == 0
    assert "7,knot,1,5" in out.splitlines()


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "links", "--n", "6", "--format", "json", "--jobs", "1")
    assert code == 0 and '"count": 2' in out


def test_product_name(capsys):
    code, out, _ = run(capsys, "product", "--ogc", "9_2", "9_4")
    assert code == 0 and out.splitlines()[0] == "9_6"


def test_link_product(capsys):
    code, out, _ = run(capsys, "product", "--ogc", "8_1", "8_3")
    assert code == 0 and out.splitlines()[0] == "8_1^2"


def test_even_knot_product_is_parity_error(capsys):
    code, _, err = run(capsys, "product", "--ogc", "8_1", "8_3", "--as-knot")
    assert code == 1 and "odd" in err


def test_sum(capsys):
    code, out, _ = run(capsys, "sum", "(1,2,3)", "(1,2)")
    assert code == 0
    assert out.splitlines()[1] == "(1,2,3,4,5)"


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "4_1")
    assert code == 0
    assert "determinant: 5" in out and "name: 4_1" in out


@pytest.mark.parametrize("text,crossings", [("(1,2,3)", 3), ("dt:{4,6,2}", 3), ("{4,6,2}", 3),
                                            ("{1,-2,3,-1,2,-3}", 3), ("gauss:{1,-2,3,-1,2,-3}", 3),
                                            ("7_4", 7)])
def test_input_forms(text, crossings):
    assert resolve(text).n_crossings == crossings


def test_search(capsys):
    code, out, _ = run(capsys, "search", "4_1", "--max-n", "7")
    assert code == 0 and out.splitlines()[0] == "5"


def test_render(tmp_path, capsys):
    path = tmp_path / "m.svg"
    code, _, _ = run(capsys, "render", "(1,10,9,4,3,2,5,8,7,6)", "--style", "checkerboard",
                     "-o", str(path))
    assert code == 0 and path.read_text().startswith("<?xml")
    code, out, _ = run(capsys, "render", "(1,2,3)")
    assert code == 0 and out.startswith("<?xml")


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "meanders", "--n", "5", "--count")
    assert out.strip() == "8"
    code, out, _ = run(capsys, "enumerate", "meanders", "--n", "3")
    assert sorted(out.split()) == ["(1,2,3)", "(3,2,1)"]
    code, out, _ = run(capsys, "enumerate", "arches", "--arcs", "3", "--count")
    assert out.strip() == "5"
    code, out, _ = run(capsys, "enumerate", "systems", "--n", "6", "--k", "1", "--count")
    assert out.strip() == "8"


@pytest.mark.parametrize("argv", [["bogus"], ["census", "knots"], ["invariants", "nope"],
                                  ["census", "knots", "--n", "13"], ["invariants", "{1,1}"],
                                  ["invariants", "(2,1,3)"]])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_domain_errors(capsys):
    code, _, _ = run(capsys, "invariants", "{1,2,3,-1,-2,4,5,-3,-4,-5}")
    assert code == 1
    code, _, _ = run(capsys, "census", "knots", "--n", "4")
    assert code == 1


def test_deterministic_output(capsys):
    a = run(capsys, "render", "(1,2,3)", "--style", "alternating")[1]
    b = run(capsys, "render", "(1,2,3)", "--style", "alternating")[1]
    assert a == b


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "meanderknots.cli", "census", "knots", "--n", "5"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "5,knot,1,2" in out.stdout
    bad = subprocess.run([sys.executable, "-m", "meanderknots.cli"], capture_output=True, text=True)
    assert bad.returncode == 2
