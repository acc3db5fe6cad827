import pytest

from meanderknots.classify import (census_meander_knots, census_meander_links, census_meanders,
                                   census_multicomponent, lookup_name)
from meanderknots.diagram import close_open_meander, from_dt_code
from meanderknots.errors import DomainError
from meanderknots.meander import OpenMeander, count_open_meanders


@pytest.mark.parametrize("n,count", [(1, 1), (3, 1), (5, 2), (7, 5), (9, 15)])
def test_knot_counts(n, count):
    assert census_meander_knots(n).type_count == count


def test_knot_count_11_resolves_collisions():
    row = census_meander_knots(11)
    assert row.type_count == 50
    assert row.resolved_count == 52
    assert row.collisions


@pytest.mark.parametrize("n,count", [(2, 1), (4, 1), (6, 2), (8, 3), (10, 8)])
def test_link_counts(n, count):
    assert census_meander_links(n).type_count == count


def test_seven_crossing_names():
    names = {r.name for r in census_meander_knots(7).representatives}
    assert names == {"7_1", "7_2", "7_3", "7_4", "7_5"}


def test_six_crossing_links():
    assert len(census_meander_links(6).representatives) == 2


def test_symmetry_reduction_keeps_counts():
    for n in (5, 7):
        a = census_meander_knots(n, reduce_symmetry=False).type_count
        assert a == census_meander_knots(n).type_count


def test_census_meanders_halves():
    n = 7
    assert len(census_meanders(n, False)) == count_open_meanders(n)
    assert len(census_meanders(n)) < count_open_meanders(n)


def test_jobs_do_not_change_results():
    assert census_meander_knots(9, jobs=2) == census_meander_knots(9, jobs=1)


@pytest.mark.parametrize("n,c,count", [(6, 3, 1), (8, 3, 2)])
def test_multicomponent_small(n, c, count):
    assert census_multicomponent(n, c).type_count == count


def test_parity_domain():
    with pytest.raises(DomainError):
        census_meander_knots(4)
    with pytest.raises(DomainError):
        census_meander_links(5)
    with pytest.raises(DomainError):
        census_multicomponent(6, 2)


def test_lookup_name():
    assert lookup_name(close_open_meander(OpenMeander(3, (1, 2, 3)))) == "3_1"
    assert lookup_name(from_dt_code("{4,8,10,2,6}")) in ("5_2", "5_1")


@pytest.mark.slow
def test_knot_count_13():
    row = census_meander_knots(13)
    assert row.resolved_count == 233


@pytest.mark.slow
@pytest.mark.parametrize("n,count", [(12, 17), (14, 56)])
def test_link_counts_large(n, count):
    assert census_meander_links(n).resolved_count == count
