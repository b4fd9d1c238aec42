import re
import subprocess
import sys

import pytest

from blfilters.cli import run
from conftest import CORPUS

ALG = str(CORPUS / "example_2_2.alg")
FS = str(CORPUS / "example_2_10.fs")

BROKEN = """algebra broken
elements 0 a 1
bottom 0
top 1
odot:
0 0 0
a a a
0 a 1
imp:
1 1 1
0 1 1
0 a 1
end
"""


def test_validate():
    status, text = run(["validate", ALG])
    assert status == 0
    assert "bl_valid = true" in text.splitlines()
    assert "property.negation_swap = pass" in text


def test_validate_invalid_algebra_exits_one(tmp_path):
    path = tmp_path / "broken.alg"
    path.write_text(BROKEN)
    status, text = run(["validate", str(path)])
    assert status == 1
    assert "bl_valid = false" in text
    assert "violation.commutative" in text


def test_profile():
    status, text = run(["profile", ALG, FS, "--kind", "plain"])
    assert status == 0
    assert "profile.plain = (0,1/5] (2/5,3/5] (4/5,1]" in text.splitlines()


def test_filters():
    status, text = run(["filters", ALG, "--kind", "fantastic"])
    assert status == 0
    assert text.splitlines()[-3:] == ["filters.count = 2", "filters.1 = {b,1}", "filters.2 = {0,a,b,1}"]


def test_missing_file_exits_two():
    status, text = run(["filters", "/nonexistent/path.alg", "--kind", "plain"])
    assert status == 2
    assert text.startswith("error: cannot read")


@pytest.mark.parametrize(
    "argv",
    [
        ["filters", ALG, "--kind", "weird"],
        ["verify", ALG, "--grid", "0"],
        ["verify", ALG, "--theorems", "nonsense"],
        ["classify", ALG, FS, "--thresholds", "3/5", "2/5"],
        ["generate", "--size", "9"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_two(argv):
    assert run(argv)[0] == 2


def test_malformed_file_exits_two(tmp_path):
    path = tmp_path / "bad.alg"
    path.write_text("algebra x\nelements 0 0\n")
    status, text = run(["validate", str(path)])
    assert status == 2
    assert "line 2" in text


def test_classify_with_thresholds():
    status, text = run(["classify", ALG, FS, "--thresholds", "2/5", "3/5"])
    assert status == 0
    lines = text.splitlines()
    assert "thresholds(2/5,3/5).plain = true" in lines
    assert "overline.plain = false" in lines


def test_verify_subset():
    status, text = run(["verify", ALG, "--grid", "1", "--theorems", "decomposition"])
    assert status == 0
    assert text.splitlines()[-1] == "verify.passed = true"
    assert "equivalences." not in text


def test_generate(tmp_path):
    status, text = run(["generate", "--size", "3", "--out", str(tmp_path)])
    assert status == 0
    assert "generate.count = 2" in text
    assert sorted(p.name for p in tmp_path.iterdir()) == ["bl3_0.alg", "bl3_1.alg"]
    assert run(["validate", str(tmp_path / "bl3_0.alg")])[0] == 0


def test_audit_exits_one_on_disagreement():
    status, text = run(["audit", str(CORPUS)])
    assert status == 1
    assert "audit.examples = 8" in text
    assert "audit.agreeing = 5" in text
    assert "audit.tool_matches_oracle = 8" in text


def test_audit_clean_corpus_exits_zero(tmp_path):
    for name in ("example_2_2.alg", "example_2_2.fs", "example_2_2.audit"):
        (tmp_path / name).write_text((CORPUS / name).read_text())
    assert run(["audit", str(tmp_path)])[0] == 0


def test_summary_follows_key_value_block():
    status, text = run(["profile", ALG, FS, "--kind", "plain", "--summary"])
    block, _, summary = text.partition("\n\n")
    assert all(" = " in line for line in block.splitlines())
    assert summary.strip().endswith(".")


def test_no_decimals_in_reports():
    for argv in (["classify", ALG, FS], ["audit", str(CORPUS)], ["verify", ALG, "--grid", "1"]):
        _, text = run(argv)
        for line in text.splitlines():
            key, _, value = line.partition(" = ")
            if key.endswith(".example"):
                continue  # example labels such as "Example 2.10" are names
            assert not re.search(r"\d\.\d", value), line


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "blfilters", "validate", ALG], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "bl_valid = true" in proc.stdout
