"""Symbolic grammar expansion, reading arbitration, and equation solving."""

import pytest

from motzkin_autocount import (
    EMPTY,
    PVState,
    RestrictionSpec,
    Series,
    fab,
    fcde,
    oracle_sequence,
    parse_stepset,
    poly_text,
    reference_series,
    sequence,
)
from motzkin_autocount.algebra import content, poly_series_eval, series_vanishes
from motzkin_autocount import symbolic
from motzkin_autocount.symbolic import (
    BASE,
    ROOT,
    RunState,
    SystemBuildError,
    audit_system,
    build_peak_valley_system,
    build_run_system,
    iterate_series,
    state_series,
)

ONE = parse_stepset("{1}")
TWO = parse_stepset("{2}")
ODD = parse_stepset("{2*r+1}")
EVEN_POS = parse_stepset("{2*r+2}")


def run_spec(C, D, E):
    return RestrictionSpec(up_runs=C, down_runs=D, flat_runs=E)


# peak/valley systems ---------------------------------------------------------


def test_unrestricted_system_is_the_motzkin_equation():
    system = build_peak_valley_system(EMPTY, EMPTY)
    assert system.size() == 1
    assert system.ring == (ROOT, BASE)
    # (1-x)P - 1 - x^2 P^2, keyed by (P-degree, x-degree)
    assert system.polys[0].terms == {
        (1, 0): 1, (1, 1): -1, (0, 0): -1, (2, 2): -1,
    }
    assert system.case_of == {ROOT: "first_return"}
    assert audit_system(system) == []


def test_odd_height_system_is_a_three_state_cycle():
    system = build_peak_valley_system(ODD, ODD)
    assert system.size() == 3
    even = parse_stepset("{2*r}")
    cases = {
        str(system.case_of[name]): state
        for state, name in system.var_of.items()
    }
    assert cases["first_return"] == PVState(ODD, ODD)
    assert cases["flat_carve"] == PVState(even, even)
    assert cases["single_arch"] == PVState(EVEN_POS, even)
    assert audit_system(system) == []


def test_fab_unrestricted_collapses_to_motzkin():
    assert poly_text(fab(EMPTY, EMPTY)) == "x^2*P^2 + (x-1)*P + 1"


def test_pv_systems_do_not_iterate():
    system = build_peak_valley_system(ODD, EMPTY)
    with pytest.raises(SystemBuildError):
        iterate_series(system, 6)


# run-length systems ----------------------------------------------------------


def test_run_system_shape_for_all_ones():
    system = build_run_system(ONE, ONE, ONE)
    assert system.size() == 35
    kinds = {}
    for rule in system.case_of.values():
        kinds[rule[0]] = kinds.get(rule[0], 0) + 1
    assert kinds == {"split": 5, "fork": 14, "step": 16}
    assert audit_system(system) == []
    assert iterate_series(system, 11) == sequence(run_spec(ONE, ONE, ONE), 11)


def test_fcde_unrestricted_collapses_to_motzkin():
    assert poly_text(fcde(EMPTY, EMPTY, EMPTY)) == "x^2*P^2 + (x-1)*P + 1"


def test_root_state_counts_exactly_the_restricted_paths():
    sets = (TWO, ONE, EMPTY)
    root = RunState("h", *sets, sets[2])
    got = state_series(sets, root, 8)
    assert got == oracle_sequence(run_spec(*sets), 8)


def test_legal_flag_combinations_and_rule_dispatch():
    """Start and end flags never conflict, and each state matches exactly
    one grammar case, which determines its generated rule."""
    systems = [
        build_run_system(ONE, ONE, ONE),
        build_run_system(TWO, EMPTY, ONE, merge_inactive_slots=False),
        build_run_system(ODD, EMPTY, EVEN_POS),
    ]
    seen_cases = set()
    for system in systems:
        for state, name in system.var_of.items():
            assert not (state.start_up and state.start_flat)
            assert not (state.end_down and state.end_flat)
            cases = {
                "lead_flat": state.start_flat,
                "trail_flat": state.end_flat and not state.start_flat,
                "arch": state.start_up and state.end_down,
                "open": not any((state.start_up, state.end_down,
                                 state.start_flat, state.end_flat)),
                "down_end": (state.end_down and not state.start_up
                             and not state.start_flat and not state.end_flat),
                "up_start": (state.start_up and not state.end_down
                             and not state.start_flat and not state.end_flat),
            }
            active = [k for k, v in cases.items() if v]
            assert len(active) == 1, (state, active)
            seen_cases.add(active[0])
            rule = system.case_of[name]
            if state.kind == "h":
                assert rule[0] == "split"
                continue
            if active[0] in ("lead_flat", "trail_flat"):
                assert rule[0] == "step" and rule[3] == 1
            elif active[0] == "arch":
                assert rule[0] == "step" and rule[3] == 2
            elif active[0] == "open":
                assert rule[0] == "fork" and rule[4] == 1
            else:
                assert rule[0] == "fork" and rule[4] == 0
    assert {"lead_flat", "arch", "open"} <= seen_cases


def test_state_cap_is_enforced(monkeypatch):
    monkeypatch.setattr(symbolic, "STATE_CAP", 5)
    with pytest.raises(SystemBuildError):
        build_run_system(ONE, ONE, ONE)


# reading arbitration ---------------------------------------------------------
#
# Each keyword reading has one validated value; the alternative produces a
# system whose equations fail as counting identities.  The audits below pin
# both sides so a silent regression in either direction is caught.


def test_arch_flat_slots_must_reset():
    sets = (TWO, EMPTY, ONE)
    ref = oracle_sequence(run_spec(*sets), 10)
    assert ref == [1, 0, 2, 1, 5, 4, 15, 16, 55, 68, 222]

    good = build_run_system(*sets, arch_flat_slots="reset",
                            merge_inactive_slots=False)
    assert good.size() == 38
    assert iterate_series(good, 10) == ref
    assert audit_system(good) == []

    bad = build_run_system(*sets, arch_flat_slots="carry",
                           merge_inactive_slots=False)
    assert bad.size() == 53
    got = iterate_series(bad, 10)
    assert got[:9] == ref[:9]
    assert got[9] == 72 and ref[9] == 68
    assert audit_system(bad) == ["v21", "v34", "v46"]


def test_trailing_strip_must_carry_the_start_slot():
    sets = (ONE, ONE, ONE)
    ref = oracle_sequence(run_spec(*sets), 10)

    good = build_run_system(*sets, strip_end_start_slot="carry",
                            merge_inactive_slots=False)
    assert good.size() == 39
    assert iterate_series(good, 10) == ref
    assert audit_system(good) == []

    bad = build_run_system(*sets, strip_end_start_slot="reset",
                           merge_inactive_slots=False)
    got = iterate_series(bad, 10)
    assert got[2] != ref[2]
    assert set(audit_system(bad)) >= {"v7", "v11"}


def test_trailing_strip_must_reset_the_end_slot():
    sets = (ONE, ONE, ONE)
    ref = oracle_sequence(run_spec(*sets), 10)

    good = build_run_system(*sets, strip_end_end_slot="reset",
                            merge_inactive_slots=False)
    assert iterate_series(good, 10) == ref

    bad = build_run_system(*sets, strip_end_end_slot="carry",
                           merge_inactive_slots=False)
    got = iterate_series(bad, 10)
    assert got[:8] == ref[:8]
    assert got[8] != ref[8]
    assert audit_system(bad) == ["v35"]


def test_merging_inactive_slots_changes_nothing_but_the_state_count():
    sets = (TWO, EMPTY, ONE)
    merged = build_run_system(*sets)
    unmerged = build_run_system(*sets, merge_inactive_slots=False)
    assert merged.size() == 31
    assert merged.size() < unmerged.size()
    assert iterate_series(merged, 12) == iterate_series(unmerged, 12)
    assert audit_system(merged) == []


# solving ---------------------------------------------------------------------


def test_solved_equations_vanish_on_reference_series(fab_goldens, fcde_goldens):
    for name, (F, _, _, literals) in {**fab_goldens, **fcde_goldens}.items():
        if name in fab_goldens:
            spec = RestrictionSpec(
                peaks=parse_stepset(literals[0]),
                valleys=parse_stepset(literals[1]),
            )
        else:
            spec = RestrictionSpec(
                up_runs=parse_stepset(literals[0]),
                down_runs=parse_stepset(literals[1]),
                flat_runs=parse_stepset(literals[2]),
            )
        series = Series.from_values(reference_series(spec, 24))
        assert series_vanishes(F, series), name


def test_solve_output_is_primitive_with_positive_lead(fcde_goldens):
    for F, _, _, _ in fcde_goldens.values():
        assert F.ring == ("P", "x")
        _, lead_coeff = F.lt()
        assert lead_coeff > 0
        assert content(F) == 1


def test_iterate_series_matches_dp_on_mixed_examples():
    for sets in [(ONE, EMPTY, EMPTY), (EMPTY, ONE, ONE), (ODD, EMPTY, EVEN_POS)]:
        system = build_run_system(*sets)
        assert iterate_series(system, 12) == sequence(run_spec(*sets), 12)


# reference series routing ------------------------------------------------------


def test_reference_series_handles_height_zero_peaks():
    spec = RestrictionSpec(peaks=parse_stepset("{0}"))
    assert reference_series(spec, 10) == oracle_sequence(spec, 10)
    spec2 = RestrictionSpec(peaks=parse_stepset("{0,1}"))
    assert reference_series(spec2, 10) == oracle_sequence(spec2, 10)


def test_reference_series_handles_height_zero_valleys():
    spec = RestrictionSpec(valleys=parse_stepset("{0}"))
    assert reference_series(spec, 10) == oracle_sequence(spec, 10)
    spec2 = RestrictionSpec(peaks=parse_stepset("{2}"), valleys=parse_stepset("{2*r}"))
    assert reference_series(spec2, 10) == oracle_sequence(spec2, 10)


def test_reference_series_plain_case_is_the_dp():
    spec = run_spec(ONE, EMPTY, ONE)
    assert reference_series(spec, 12) == sequence(spec, 12)


def test_solve_system_rejects_nothing_but_failed_certificates(fcde_goldens):
    # the solver's certificate is internal; this pins the public contract
    # that every returned polynomial annihilates its own counting series
    F, _, _, _ = fcde_goldens["all_odd"]
    spec = run_spec(ODD, ODD, ODD)
    s = Series.from_values(sequence(spec, 30))
    assert poly_series_eval(F, s).is_zero()
