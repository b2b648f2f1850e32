"""Acceptance gate: one test per criterion, each printed as a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the table; the
CLI equivalent is ``qcomplex acceptance``.
"""

from qcomplex import acceptance


def _run(fn):
    result = fn()
    print(result.line(), result.details)
    assert result.passed, result.details
    return result


def test_criterion_01_tented_spectral_formula():
    result = _run(acceptance.criterion_1_tented_formula)
    assert result.details["max_abs_error"] <= 1e-8


def test_criterion_02_facet_maximum():
    _run(acceptance.criterion_2_facet_maximum)


def test_criterion_03_universal_spectral_bound():
    result = _run(acceptance.criterion_3_spectral_bound)
    assert all(v["violations"] == 0 for v in result.details.values())


def test_criterion_04_beta0_extremal_unique_tent():
    _run(acceptance.criterion_4_beta0_extremal)


def test_criterion_05_asymptotic_law():
    result = _run(acceptance.criterion_5_asymptotic_law)
    for t in (1, 2):
        gs = result.details[f"t={t}"]["g"]
        assert all(0.7 <= g <= 1.3 for g in gs)


def test_criterion_06_hodge_crosscheck():
    result = _run(acceptance.criterion_6_hodge_crosscheck)
    assert result.details["mismatches"] == 0
    assert result.details["complexes"] == 200


def test_criterion_07_operator_identities():
    result = _run(acceptance.criterion_7_operator_identities)
    assert result.details["quadratic_rel"] <= 1e-10
    assert result.details["transfer_residual"] <= 1e-7
    assert result.details["second_order_scaled"] <= 1e-6
    assert result.details["chain_product"] == 0


def test_criterion_08_euler_and_telescoping():
    _run(acceptance.criterion_8_euler_identity)


def test_criterion_09_basic_holes():
    _run(acceptance.criterion_9_basic_holes)


def test_criterion_10_perron_profile():
    result = _run(acceptance.criterion_10_perron_profile)
    assert result.details["n100_missing_apex_faces"] <= 0.20
    assert result.details["n100_apex_edges"] <= 0.02
    assert result.details["decreasing"]


def test_registry_covers_all_ten_criteria():
    # run_all wires the same functions exercised above; avoid re-running
    assert len(acceptance.CRITERIA) == 10
    names = [fn.__name__ for fn in acceptance.CRITERIA]
    assert len(set(names)) == 10
