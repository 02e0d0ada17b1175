import itertools

import pytest

import perrin_repdigits.search as search
from perrin_repdigits.repdigits import ConcatPattern
from perrin_repdigits.search import SolutionRecord, brute_search, excluded_repdigits, verify_candidate

INDEX_FIXTURE = {8: 10, 9: 12, 10: 17, 12: 29, 13: 39, 14: 51, 15: 68, 16: 90, 17: 119, 20: 277, 23: 644}


def two_runs(s):
    runs = [k for k, _ in itertools.groupby(s)]
    return len(runs) == 2 and runs[0] != "0"


def test_low_range(cache):
    found = brute_search(0, 500, cache)
    assert {r.n: r.value for r in found} == INDEX_FIXTURE
    assert [r.n for r in found] == sorted(r.n for r in found)


def test_empty_ranges(cache):
    assert brute_search(0, 7, cache) == []
    assert brute_search(455, 4600) == []


def test_verify_candidate():
    rec = verify_candidate(23)
    assert rec == SolutionRecord(23, 644, ConcatPattern(6, 4, 1, 2))
    assert rec.as_dict() == {"n": 23, "value": "644", "d1": 6, "d2": 4, "ell": 1, "m": 2}
    assert verify_candidate(11) is None
    assert verify_candidate(1) is None


def test_record_must_match_value():
    with pytest.raises(ValueError):
        SolutionRecord(23, 645, ConcatPattern(6, 4, 1, 2))


def test_bad_range():
    with pytest.raises(ValueError):
        brute_search(10, 5)


def test_string_oracle_to_2000(cache):
    hits = {r.n for r in brute_search(0, 2000, cache)}
    oracle = {n for n in range(2001) if two_runs(str(cache[n]))}
    assert hits == oracle


def test_excluded_repdigits(cache):
    assert excluded_repdigits(0, 2000, cache) == [(11, 22)]


def test_one_term_per_index(monkeypatch, cache):
    calls = []
    real = search.term

    def counting(c, n):
        calls.append(n)
        return real(c, n)

    monkeypatch.setattr(search, "term", counting)
    brute_search(0, 300, cache)
    assert sorted(calls) == list(range(301))
