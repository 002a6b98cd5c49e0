import pytest

import oracles
from tgp.arrow import format_arrow, invariants, parse
from tgp.catalog import MAX_CATALOG_EDGES, by_name, catalog, cube_plane, k4_plane, random_presentation, random_sample
from tgp.surgery import geometric_dual, petrial

REQUIRED = ["point", "loop", "loop-twisted", "1-path", "2-path", "digon", "theta", "C3", "B2-plane", "B2-twisted",
            "abcabc", "torus-pair"]


def test_required_entries_present():
    names = {ent.name for ent in catalog()}
    assert set(REQUIRED) <= names
    for base in ("1-path", "loop", "theta", "C3", "digon", "B2-twisted"):
        assert f"D({base})" in names and f"S({base})" in names


@pytest.mark.parametrize("entry", catalog(), ids=lambda ent: ent.name)
def test_expected_invariants_match_oracle(entry):
    got = oracles.ribbon_invariants([list(c) for c in entry.graph.circles])
    exp = entry.expected
    assert got == {"v": exp.v, "e": exp.e, "c": exp.c, "f": exp.f, "gamma": exp.gamma, "orientable": exp.orientable}


def test_named_examples():
    theta = by_name("theta").expected
    assert theta.f == 3 and theta.gamma == 0
    torus = by_name("torus-pair").expected
    assert torus.f == 1 and torus.gamma == 2 and torus.orientable
    h = invariants(petrial(geometric_dual(by_name("abcabc").graph)))
    assert (h.v, h.e, h.f, h.gamma, h.orientable) == (3, 3, 2, 0, True)
    with pytest.raises(KeyError):
        by_name("nope")


def test_catalog_bounds():
    assert all(ent.expected.e <= 3 for ent in catalog(3))
    with pytest.raises(ValueError):
        catalog(MAX_CATALOG_EDGES + 1)


def test_plane_fixtures():
    for g, (v, e) in ((k4_plane(), (4, 6)), (cube_plane(), (8, 12))):
        inv = invariants(g)
        assert (inv.v, inv.e, inv.plane) == (v, e, True)


def test_random_presentation_determinism():
    a = random_presentation(7, 4, 6)
    assert format_arrow(a) == format_arrow(random_presentation(7, 4, 6))
    assert parse(format_arrow(a)) == a
    assert [format_arrow(g) for g in random_sample(3, 10)] == [format_arrow(g) for g in random_sample(3, 10)]
    with pytest.raises(ValueError):
        random_presentation(1, 0, 3)


def test_euler_on_random_samples():
    for g in random_sample(2024, 200):
        inv = invariants(g)
        assert inv.v - inv.e + inv.f == 2 * inv.c - inv.gamma
        assert inv.e <= MAX_CATALOG_EDGES
