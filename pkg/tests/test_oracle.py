"""Brute-force enumeration: path validity, feature extraction, guard."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzkin_autocount import (
    RestrictionSpec,
    count_restricted,
    enumerate_motzkin,
    features,
    list_restricted,
    oracle_sequence,
    parse_stepset,
)
from motzkin_autocount.oracle import (
    DEFAULT_GUARD,
    OracleGuardError,
    admits,
    is_motzkin,
    oracle_guard,
)

ODD = parse_stepset("{2*r+1}")
MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]


def spec(A="{}", B="{}", C="{}", D="{}", E="{}"):
    return RestrictionSpec(*(parse_stepset(s) for s in (A, B, C, D, E)))


def test_is_motzkin():
    assert is_motzkin("")
    assert is_motzkin("UFDFF")
    assert not is_motzkin("DU")      # dips below the axis
    assert not is_motzkin("UUD")     # ends above the axis
    assert not is_motzkin("UdD")


def test_enumeration_counts_match_motzkin_numbers():
    for n, m in enumerate(MOTZKIN):
        if n <= 10:
            assert len(enumerate_motzkin(n)) == m


def test_enumeration_is_lexicographic_u_d_f():
    assert enumerate_motzkin(0) == ("",)
    assert enumerate_motzkin(1) == ("F",)
    assert enumerate_motzkin(2) == ("UD", "FF")
    rank = {"U": 0, "D": 1, "F": 2}
    paths = enumerate_motzkin(6)
    keys = [[rank[c] for c in p] for p in paths]
    assert keys == sorted(keys)
    assert len(set(paths)) == len(paths)


def test_features_reads_peaks_across_flats():
    ft = features("UDUFDF")
    assert ft.peaks == (1, 1)
    assert ft.valleys == (0,)
    assert ft.up_runs == (1, 1)
    assert ft.down_runs == (1, 1)
    assert ft.flat_runs == (1, 1)
    assert not ft.is_flat_only


def test_features_interrupted_descent_is_no_peak():
    # the U at height 2 is followed by F then U, so only the top is a peak
    ft = features("UUFUDDD")
    assert ft.peaks == (3,)
    assert ft.valleys == ()
    assert ft.up_runs == (2, 1)
    assert ft.down_runs == (3,)
    assert ft.flat_runs == (1,)


def test_features_flat_only():
    for p in ("", "F", "FFFF"):
        ft = features(p)
        assert ft.is_flat_only
        assert ft.peaks == ()
        assert ft.valleys == ()


def test_flat_only_paths_carry_a_height_zero_peak():
    banned = spec(A="{0}")
    assert not admits(banned, "")
    assert not admits(banned, "FFF")
    assert admits(banned, "UD")
    assert count_restricted(0, banned) == 0
    assert count_restricted(0, spec(A="{1}")) == 1


def test_single_flat_step_is_a_run_of_length_one():
    assert list_restricted(1, spec(E="{1}")) == []


def test_pinned_run_length_golden():
    got = list_restricted(7, spec(C="{1}", D="{1}", E="{1}"))
    assert got == ["UUDDFFF", "UUFFFDD", "FFFUUDD", "FFFFFFF"]


def test_pinned_odd_height_golden():
    got = list_restricted(5, spec(A="{2*r+1}", B="{2*r+1}"))
    assert got == ["UUDDF", "UUDFD", "UUFDD", "UFUDD", "FUUDD", "FFFFF"]


def test_height_one_peak_ban_leaves_only_the_flat_path():
    # UFD and UD both top out at height 1, so length 3 keeps just FFF
    assert list_restricted(3, spec(A="{1}")) == ["FFF"]
    assert count_restricted(3, spec(A="{1}")) == 1


def test_count_agrees_with_list():
    s = spec(B="{0}", E="{2}")
    for n in range(9):
        assert count_restricted(n, s) == len(list_restricted(n, s))


def test_oracle_sequence_prefix():
    assert oracle_sequence(spec(), 10) == MOTZKIN


def test_guard_default_and_override(monkeypatch):
    monkeypatch.delenv("MOTZKIN_ORACLE_GUARD", raising=False)
    assert oracle_guard() == DEFAULT_GUARD
    with pytest.raises(OracleGuardError):
        count_restricted(DEFAULT_GUARD + 1, spec())
    monkeypatch.setenv("MOTZKIN_ORACLE_GUARD", "5")
    assert oracle_guard() == 5
    with pytest.raises(OracleGuardError):
        list_restricted(6, spec())
    assert count_restricted(5, spec()) == MOTZKIN[5]


@settings(max_examples=40)
@given(st.integers(0, 8), st.data())
def test_admitted_paths_avoid_every_forbidden_feature(n, data):
    small = st.frozensets(st.integers(0, 4), max_size=2)
    run = st.frozensets(st.integers(1, 4), max_size=2)
    s = RestrictionSpec(*(
        parse_stepset("{" + ",".join(map(str, sorted(data.draw(strat)))) + "}")
        for strat in (small, small, run, run, run)
    ))
    for p in list_restricted(n, s):
        ft = features(p)
        assert not any(h in s.peaks for h in ft.peaks)
        assert not any(h in s.valleys for h in ft.valleys)
        assert not any(r in s.up_runs for r in ft.up_runs)
        assert not any(r in s.down_runs for r in ft.down_runs)
        assert not any(r in s.flat_runs for r in ft.flat_runs)
        if ft.is_flat_only:
            assert 0 not in s.peaks
