import pytest

from edgeideal.formulas import (
    cycle_height,
    is_stci_cycle,
    pd_bicyclic_vertex,
    pd_cycle,
    pd_dumbbell,
    pd_for_spec,
    pd_line,
)
from edgeideal.graphs import build_from_string, min_vertex_cover_size, parse_spec
from edgeideal.homcomplex import projective_dimension


def test_pd_cycle_cases():
    assert (pd_cycle(6).value, pd_cycle(6).case_tag) == (4, "n≡0")
    assert (pd_cycle(4).value, pd_cycle(4).case_tag) == (3, "n≡1")
    assert (pd_cycle(5).value, pd_cycle(5).case_tag) == (3, "n≡2")


def test_pd_cycle_rejects_small():
    with pytest.raises(ValueError):
        pd_cycle(2)


def test_pd_line_cases():
    assert pd_line(3).value == 2
    assert pd_line(4).value == 2
    assert pd_line(2).value == 1
    assert pd_line(2).case_tag == "n≡2"
    with pytest.raises(ValueError):
        pd_line(1)


def test_pd_bicyclic_cases():
    assert pd_bicyclic_vertex(3, 3).value == 4  # |V|=5, both cycles ≡0
    assert pd_bicyclic_vertex(4, 4).value == 5  # |V|=7≡1
    assert pd_bicyclic_vertex(4, 5).value == 5  # |V|=8≡2, neither ≡0
    assert pd_bicyclic_vertex(3, 3).case_tag.startswith("|V|≡2")


def test_pd_dumbbell_cases():
    assert pd_dumbbell(3, 0, 3).value == 4   # |V|=6≡0
    assert pd_dumbbell(5, 1, 5).value == 7   # |V|=11≡2, both ≡2
    assert pd_dumbbell(5, 0, 5).value == 6   # |V|=10≡1 with m≡n≡2
    assert pd_dumbbell(5, 0, 5).case_tag == "|V|≡1, m≡n≡2"


def test_formula_bounds():
    with pytest.raises(ValueError):
        pd_bicyclic_vertex(2, 5)
    with pytest.raises(ValueError):
        pd_dumbbell(3, -1, 3)


def test_stci_only_three_and_five():
    for n in range(3, 13):
        assert is_stci_cycle(n) == (n in (3, 5))


def test_stci_comparison_values():
    # n=6: rank 4 exceeds height 3
    assert pd_cycle(6).value == 4 and cycle_height(6) == 3


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_height_is_cover_size(n):
    assert cycle_height(n) == min_vertex_cover_size(build_from_string(f"cycle:{n}"))


@pytest.mark.parametrize("n", range(3, 8))
def test_pd_cycle_matches_homology(n):
    assert pd_cycle(n).value == projective_dimension(build_from_string(f"cycle:{n}"), 2)


@pytest.mark.parametrize("n", range(2, 8))
def test_pd_line_matches_homology(n):
    assert pd_line(n).value == projective_dimension(build_from_string(f"line:{n}"), 2)


@pytest.mark.parametrize("m,n", [(3, 3), (3, 4), (3, 5), (4, 4), (4, 5), (3, 6)])
def test_pd_bicyclic_matches_homology(m, n):
    got = projective_dimension(build_from_string(f"bicyclic:{m},{n}"), 2)
    assert pd_bicyclic_vertex(m, n).value == got


@pytest.mark.parametrize("m,k,n", [(3, 0, 3), (3, 1, 3), (3, 2, 3), (4, 0, 3),
                                   (3, 0, 5), (4, 1, 4)])
def test_pd_dumbbell_matches_homology(m, k, n):
    got = projective_dimension(build_from_string(f"dumbbell:{m},{k},{n}"), 2)
    assert pd_dumbbell(m, k, n).value == got


def test_pd_for_spec_dispatch():
    assert pd_for_spec(parse_spec("cycle:6")).value == 4
    assert pd_for_spec(parse_spec("line:4")).value == 2
    assert pd_for_spec(parse_spec("dumbbell:3,0,3")).value == 4
    assert pd_for_spec(parse_spec("union:cycle:3+line:2")) is None
