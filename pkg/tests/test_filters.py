from itertools import combinations, product

import pytest

from blfilters import (
    KINDS,
    FilterKind,
    check_filter_theorems,
    enumerate_filters,
    filter_via_characterization,
    is_filter,
    render_subset,
)
from conftest import generated, load_algebra


def brute_filter(alg, subset, kind):
    """Literal definition over element names: top, modus ponens, kind triple."""
    els = alg.elements
    top = alg.top
    imp = {(x, y): alg.imp[i][j] for i, x in enumerate(els) for j, y in enumerate(els)}
    neg = lambda x: imp[x, alg.bottom]
    S = {els[i] if isinstance(i, int) else i for i in subset}
    if top not in S:
        return False
    for x, y in product(els, repeat=2):
        if x in S and imp[x, y] in S and y not in S:
            return False
    for x, y, z in product(els, repeat=3):
        if kind is FilterKind.IMPLICATIVE:
            if imp[x, imp[neg(z), y]] in S and imp[y, z] in S and imp[x, z] not in S:
                return False
        elif kind is FilterKind.POSITIVE_IMPLICATIVE:
            if imp[x, imp[y, z]] in S and imp[x, y] in S and imp[x, z] not in S:
                return False
        elif kind is FilterKind.FANTASTIC:
            if imp[z, imp[y, x]] in S and z in S and imp[imp[imp[x, y], y], x] not in S:
                return False
    return True


EXPECTED = {
    "example_2_2": {
        "plain": ["{1}", "{b,1}", "{0,a,b,1}"],
        "implicative": ["{0,a,b,1}"],
        "positive_implicative": ["{0,a,b,1}"],
        "fantastic": ["{b,1}", "{0,a,b,1}"],
    },
    "example_3_1_2": {
        "plain": ["{1}", "{a,b,1}", "{0,a,b,1}"],
        "implicative": ["{a,b,1}", "{0,a,b,1}"],
        "positive_implicative": ["{a,b,1}", "{0,a,b,1}"],
        "fantastic": ["{a,b,1}", "{0,a,b,1}"],
    },
    "example_3_2_2": {
        "plain": ["{1}", "{b,1}", "{c,1}", "{a,b,c,1}", "{0,a,b,c,1}"],
        "implicative": ["{a,b,c,1}", "{0,a,b,c,1}"],
        "positive_implicative": ["{1}", "{b,1}", "{c,1}", "{a,b,c,1}", "{0,a,b,c,1}"],
        "fantastic": ["{a,b,c,1}", "{0,a,b,c,1}"],
    },
    "example_3_3_2": {
        "plain": ["{1}", "{0,a,b,1}"],
        "implicative": ["{0,a,b,1}"],
        "positive_implicative": ["{0,a,b,1}"],
        "fantastic": ["{1}", "{0,a,b,1}"],
    },
}


@pytest.mark.parametrize("stem", sorted(EXPECTED))
@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_filter_listing(stem, kind):
    alg = load_algebra(stem)
    found = [render_subset(alg, s) for s in enumerate_filters(alg, kind)]
    assert found == EXPECTED[stem][kind.value]


def test_kind_tokens():
    assert [k.value for k in KINDS] == ["plain", "implicative", "positive_implicative", "fantastic"]
    assert FilterKind.parse("fantastic") is FilterKind.FANTASTIC
    with pytest.raises(ValueError):
        FilterKind.parse("bogus")


def test_empty_subset_rejected(ex22):
    with pytest.raises(ValueError):
        is_filter(ex22, set())


def test_subset_may_use_names(ex22):
    assert is_filter(ex22, {"b", "1"})
    assert not is_filter(ex22, {"a", "1"})


def _all_subsets(alg):
    for r in range(1, alg.n + 1):
        yield from combinations(range(alg.n), r)


def test_deciders_match_brute_force_up_to_four():
    for alg in generated(4):
        for kind in KINDS:
            for s in _all_subsets(alg):
                expected = brute_filter(alg, s, kind)
                assert is_filter(alg, s, kind) == expected, (alg.name, kind, s)
                assert filter_via_characterization(alg, s, kind) == expected, (alg.name, kind, s)


def test_filter_theorems_on_generated():
    for alg in generated(5):
        report = check_filter_theorems(alg)
        assert report.passed, alg.name
        assert [c.name for c in report.checks] == [
            "implicative_within_positive_implicative",
            "implicative_within_fantastic",
            "implicative_equals_positive_implicative_and_fantastic",
        ]


def test_whole_carrier_is_always_every_kind():
    for alg in generated(5):
        for kind in KINDS:
            assert is_filter(alg, range(alg.n), kind)
