from functools import lru_cache
from pathlib import Path

import pytest

from blfilters import parse_algebra, parse_fuzzy_set
from blfilters.verify import default_corpus, generate_bl_algebras

CORPUS = default_corpus()
CORPUS_ALGEBRAS = ("example_2_2", "example_3_1_2", "example_3_2_2", "example_3_3_2")


def load_algebra(stem):
    return parse_algebra((CORPUS / f"{stem}.alg").read_text())


def load_fuzzy(stem, alg_stem):
    alg = load_algebra(alg_stem)
    return parse_fuzzy_set((CORPUS / f"{stem}.fs").read_text(), alg)


@lru_cache(maxsize=None)
def generated(max_n):
    out = []
    for n in range(2, max_n + 1):
        out.extend(generate_bl_algebras(n))
    return tuple(out)


@pytest.fixture
def ex22():
    return load_algebra("example_2_2")


@pytest.fixture(params=CORPUS_ALGEBRAS)
def corpus_algebra(request):
    return load_algebra(request.param)


@pytest.fixture
def corpus():
    return Path(CORPUS)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
