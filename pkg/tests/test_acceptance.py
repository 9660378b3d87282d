"""Acceptance criteria, one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
PASS/FAIL lines.  Tolerances and runtime budgets are pinned here and are
not calibrated anywhere else.
"""

import copy
import time
from fractions import Fraction as F
from functools import lru_cache


def _verdict(criterion, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {tag} {detail}".rstrip())
    assert ok, f"{criterion} failed: {detail}"


@lru_cache(maxsize=None)
def _flow_reports():
    from hekdv.verify_tables import verify_flow_table
    t0 = time.perf_counter()
    reports = {f: verify_flow_table(f) for f in ("I", "II", "T1", "T3")}
    return reports, time.perf_counter() - t0


@lru_cache(maxsize=None)
def _integral_reports():
    from hekdv.verify_tables import verify_first_integrals, verify_hamiltonian_form
    t0 = time.perf_counter()
    out = (verify_first_integrals(), verify_hamiltonian_form())
    return out, time.perf_counter() - t0


@lru_cache(maxsize=None)
def _hierarchy_reports():
    from hekdv.verify_hierarchy import verify_dkdv_equations, verify_seconddif
    t0 = time.perf_counter()
    out = (verify_seconddif(), verify_dkdv_equations())
    return out, time.perf_counter() - t0


def test_criterion_1_polynomial_tables():
    reports, elapsed = _flow_reports()
    zero_residuals = sum(
        1 for f in ("I", "II") for lbl, v in reports[f].residuals
        if lbl.startswith(f"{f}:") and v == "0")
    ok = (reports["I"].passed and reports["II"].passed
          and zero_residuals == 8 and elapsed < 10.0)
    _verdict("1 (systems I and II certified)", ok,
             f"8 generator residuals zero, {elapsed:.2f}s")


def test_criterion_2_first_integrals_and_hamiltonian():
    (integrals, hamiltonian), elapsed = _integral_reports()
    ok = (integrals.passed and len(integrals.residuals) == 8
          and hamiltonian.passed and elapsed < 30.0)
    _verdict("2 (first integrals and involution)", ok,
             f"8 derivative residuals + Hamiltonian form, {elapsed:.2f}s")


def test_criterion_3_rational_tables():
    reports, _ = _flow_reports()
    zero_residuals = sum(
        1 for f in ("T1", "T3") for lbl, v in reports[f].residuals
        if lbl.startswith(f"{f}:") and v == "0")
    ok = reports["T1"].passed and reports["T3"].passed and zero_residuals == 8
    _verdict("3 (rational systems certified)", ok, "8 residuals zero")


def test_criterion_4_deformed_hierarchy():
    (seconddif, equations), elapsed = _hierarchy_reports()
    eq_residuals = [v for lbl, v in equations.residuals if "residual" in lbl]
    ok = (seconddif.passed and equations.passed
          and len(eq_residuals) == 4 and elapsed < 300.0)
    _verdict("4 (second-derivative identity and hierarchy)", ok,
             f"5 identities exact, {elapsed:.2f}s")


def test_criterion_5_kdv_reduction():
    from hekdv.verify_hierarchy import verify_kdv_reduction
    report = verify_kdv_reduction()
    rows = dict(report.residuals)
    ok = (report.passed
          and rows["u''' - 3(u^2)' - 4 udot"] == "0"
          and rows["v''' - 3(uv)' + 2 vdot"] == "0"
          and rows["nonzero residual with y12 symbolic"] == "0")
    _verdict("5 (classical reduction with negative control)", ok)


def test_criterion_6_transfer_suite():
    from hekdv.verify_hierarchy import verify_psi_intertwine
    report = verify_psi_intertwine()
    ok = report.passed and len(report.residuals) == 14
    _verdict("6 (transfer-map suite)", ok, "14 exact identities")


def test_criterion_7_rational_limit():
    from hekdv.ratlimit import suite_rational
    t0 = time.perf_counter()
    reports = suite_rational()
    elapsed = time.perf_counter() - t0
    by_id = {r.check_id: r for r in reports}
    ok = (by_id["sec-8-UV"].passed and by_id["thm-8.1"].passed
          and by_id["sec-8-DE"].passed and elapsed < 5.0)
    _verdict("7 (rational-limit closed forms)", ok, f"{elapsed:.2f}s")


def test_criterion_8_appendix():
    from hekdv.phiring import suite_appendix
    reports = {r.check_id: r for r in suite_appendix()}
    ratc_rows = sum(1 for lbl, v in reports["thm-A.1"].residuals
                    if lbl.startswith("d/d") and v == "0")
    ok = (reports["app-F-forms"].passed and reports["thm-A.1"].passed
          and ratc_rows == 8 and reports["ex-A.1"].passed
          and reports["ex-A.3"].passed)
    _verdict("8 (corrected closed forms, flow equations, both examples)", ok)


def test_criterion_9_numerics():
    from hekdv.curve import CurveParams, in_Bg
    from hekdv.sim import commute_experiment, curve_ordinate, integrate, seed_state
    params = CurveParams.numeric(3, [0, 0, 0, 0, 1, 1])
    assert in_Bg(params)
    p1 = (F(1), F(1))
    p2 = (F(2), curve_ordinate(params, F(2)))
    s0 = seed_state(params, p1, p2)

    t0 = time.perf_counter()
    traj = integrate("I", s0, 1.0, rel_tol=1e-12, abs_tol=1e-14, params=params)
    per_traj = time.perf_counter() - t0
    d12, d14 = traj.relative_drift()

    rep = commute_experiment(params, s0, 0.1, 0.1, flows=("T1", "T3"))

    drift = {}
    for rt in (1e-8, 1e-12):
        tr = integrate("I", s0, 1.0, rel_tol=rt, abs_tol=rt * 1e-2,
                       params=params)
        drift[rt] = max(tr.relative_drift())

    ok = (d12 <= 1e-9 and d14 <= 1e-9
          and rep["discrepancy"] <= 1e-8
          and drift[1e-12] < drift[1e-8]
          and per_traj < 10.0)
    _verdict("9 (drift, commutativity, tolerance sweep)", ok,
             f"drift {max(d12, d14):.2e}, commute {rep['discrepancy']:.2e}, "
             f"{per_traj:.2f}s per trajectory")


def test_criterion_10_mutation_controls():
    from hekdv.poly import MPoly, variables
    from hekdv.ratfun import RatFn
    from hekdv.ratlimit import verify_uv_closed_form
    from hekdv.tables import PoissonStructure, first_integrals, flow_table
    from hekdv.phiring import PhiRingElem, printed_forms, verify_appendix_forms
    from hekdv.verify_hierarchy import (DEFAULT_EQ_COEFFS,
                                        verify_dkdv_equations,
                                        verify_psi_intertwine)
    from hekdv.verify_tables import (verify_first_integrals,
                                     verify_flow_table,
                                     verify_hamiltonian_form)
    failures = {}

    mutated_table = flow_table("I").mutated("u5", 2 * MPoly.var("u2", 4))
    failures["tables"] = not verify_flow_table("I", table=mutated_table).passed

    h12, _ = first_integrals()
    failures["integrals"] = not verify_first_integrals(
        h12=h12 + RatFn(MPoly.var("u2"))).passed

    bad_bracket = PoissonStructure("I", {("u2", "u7"): F(1, 2),
                                         ("u4", "u5"): F(-1)})
    failures["hamiltonian"] = not verify_hamiltonian_form(
        bracket_I=bad_bracket).passed

    coeffs = copy.deepcopy(DEFAULT_EQ_COEFFS)
    coeffs["first"]["y12_v_udot"] = 32
    failures["hierarchy"] = not verify_dkdv_equations(coeffs).passed

    a, b, c, d = variables("a", "b", "c", "d")
    bad_images = {"a": (a, MPoly.const(1)), "b": (b, MPoly.const(1)),
                  "c": (a * c + d, a ** 2 - b),
                  "d": (a * d - b * c, a ** 2 - b)}
    failures["transfer"] = not verify_psi_intertwine(
        trans2_images=bad_images).passed

    x, t = variables("x", "t")
    bad_U = RatFn(5 * x * (x ** 3 + 6 * t), (x ** 3 - 3 * t) ** 2)
    failures["rational"] = not verify_uv_closed_form(expected_U=bad_U).passed

    N, K = printed_forms()
    N = dict(N)
    N[4] = N[4] + PhiRingElem.const(1)
    failures["appendix"] = not verify_appendix_forms(printed=(N, K)).passed

    ok = all(failures.values())
    _verdict("10 (mutation controls)", ok,
             f"{sum(failures.values())}/7 suites reject their mutation")
