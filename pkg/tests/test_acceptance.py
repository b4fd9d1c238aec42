"""Acceptance criteria 1-10. Each test prints one PASS/FAIL line."""

import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import combinations

from blfilters import (
    EQ_VQ,
    KINDS,
    NAMED_VARIANTS,
    ORDINARY,
    OVERLINE,
    FilterKind,
    canonical_form,
    check_arithmetic_properties,
    check_filter_theorems,
    classify,
    filter_via_characterization,
    is_filter,
    is_isomorphic,
    threshold_profile,
    thresholds,
    validate_bl,
)
from blfilters.verify import (
    GridSpec,
    audit_examples,
    generate_bl_algebras,
    generate_bl_algebras_naive,
    verify_equivalences,
    verify_implicative_decomposition,
)
from conftest import ACCEPTANCE_LINES, CORPUS, CORPUS_ALGEBRAS, generated, load_algebra, load_fuzzy


@contextmanager
def criterion(number, title, budget=None):
    """Report one PASS/FAIL line; failures inside the block re-raise."""
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        line = f"criterion {number}: {status} {title} ({elapsed:.2f}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_criterion_01_corpus_algebras_validate():
    with criterion(1, "corpus algebras validate with all seven laws", budget=1.0):
        for stem in CORPUS_ALGEBRAS:
            alg = load_algebra(stem)
            assert validate_bl(alg).valid, stem
            assert check_arithmetic_properties(alg).passed, stem


def test_criterion_02_example_2_2_classification():
    with criterion(2, "example 2.2 plain verdicts", budget=1.0):
        F = load_fuzzy("example_2_2", "example_2_2")
        rec = classify(F)
        plain = FilterKind.PLAIN
        assert rec.verdict(OVERLINE, plain) is True
        assert rec.verdict(ORDINARY, plain) is False
        assert rec.verdict(EQ_VQ, plain) is False


def test_criterion_03_example_2_10_profile():
    with criterion(3, "example 2.10 threshold profile"):
        F = load_fuzzy("example_2_10", "example_2_2")
        custom = thresholds("2/5", "3/5")
        rec = classify(F, extra=[custom])
        assert str(threshold_profile(F, FilterKind.PLAIN)) == "(0,1/5] (2/5,3/5] (4/5,1]"
        assert rec.verdict(custom, FilterKind.PLAIN) is True
        for v in NAMED_VARIANTS:
            assert rec.verdict(v, FilterKind.PLAIN) is False


def test_criterion_04_examples_3_2_2_and_3_3_2():
    with criterion(4, "examples 3.2.2 and 3.3.2 with witnesses"):
        cases = (
            ("example_3_2_2", FilterKind.POSITIVE_IMPLICATIVE),
            ("example_3_3_2", FilterKind.FANTASTIC),
        )
        for stem, kind in cases:
            rec = classify(load_fuzzy(stem, stem))
            assert rec.verdict(OVERLINE, kind) is True, stem
            for v in (ORDINARY, EQ_VQ):
                assert rec.verdict(v, kind) is False, (stem, v)
                w = rec.witness(v, kind)
                assert w is not None and w.lhs < w.rhs and w.elements


def test_criterion_05_audit_completeness():
    with criterion(5, "audit covers eight examples, tool equals oracle on every claim"):
        findings = audit_examples(CORPUS)
        assert len(findings) == 8
        claims = 0
        for f in findings:
            assert f.error is None, f.example
            assert f.results, f.example
            for r in f.results:
                claims += 1
                assert r.machine == r.oracle, (f.example, r.claim.text)
                if not r.agrees:
                    assert r.witness and r.witness != "no violating instance"
        assert claims > 0
        disagreeing = sorted(f.example for f in findings if not f.agreement)
        assert disagreeing == ["Example 3.1.2", "Example 3.1.9", "Example 3.3.9"]


def test_criterion_06_equivalence_suite():
    with criterion(6, "equivalence suite, grid 1/2, zero counterexamples", budget=60.0):
        algebras = [load_algebra(s) for s in CORPUS_ALGEBRAS] + list(generated(4))
        total = 0
        for alg in algebras:
            report = verify_equivalences(alg, GridSpec(2))
            assert report.passed, "\n".join(report.lines())
            total += report.instances
        assert total > 1000


def test_criterion_07_implicative_decomposition():
    with criterion(7, "crisp inclusions to n=5 and overline decomposition", budget=60.0):
        for alg in generated(5):
            assert check_filter_theorems(alg).passed, alg.name
        for alg in [load_algebra(s) for s in CORPUS_ALGEBRAS] + list(generated(4)):
            assert verify_implicative_decomposition(alg, GridSpec(2)).passed, alg.name


def test_criterion_08_generation_sanity():
    with criterion(8, "generation counts and naive agreement"):
        assert len(generate_bl_algebras(2)) == 1
        assert len(generate_bl_algebras(3)) == 2
        fast = generate_bl_algebras(4)
        slow = generate_bl_algebras_naive(4)
        assert {canonical_form(a) for a in fast} == {canonical_form(a) for a in slow}
        ex = load_algebra("example_2_2")
        assert any(is_isomorphic(ex, a) for a in fast)


def test_criterion_09_oracle_pairing():
    with criterion(9, "definitional and characterization deciders agree to n=5"):
        for alg in generated(5):
            for kind in KINDS:
                for r in range(1, alg.n + 1):
                    for s in combinations(range(alg.n), r):
                        assert is_filter(alg, s, kind) == filter_via_characterization(alg, s, kind)


def _cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "blfilters", *argv], capture_output=True, check=False
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_criterion_10_determinism():
    with criterion(10, "repeated CLI runs are byte-identical"):
        alg = str(CORPUS / "example_2_2.alg")
        fs = str(CORPUS / "example_2_10.fs")
        commands = [
            ("validate", alg),
            ("filters", alg, "--kind", "fantastic"),
            ("classify", alg, fs, "--thresholds", "2/5", "3/5", "--summary"),
            ("profile", alg, fs, "--kind", "plain"),
            ("verify", alg, "--grid", "2"),
            ("generate", "--size", "4"),
            ("audit", str(CORPUS)),
        ]
        for cmd in commands:
            first, second = _cli(*cmd), _cli(*cmd)
            assert first == second, cmd
            assert first[1], cmd
