"""Property suite for the measure catalogue: null-invariance, symmetry,
sign couplings, independence fixpoints and range checks, plus spot
agreement with the high-precision oracle on random tables."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

import _reference as ref
from _strategies import independent_tables, tables
from rulemine import measures as ms
from rulemine.measures import MeasureId
from rulemine.transactions import ContingencyTable

NULL_INVARIANT = (ms.cosine, ms.confidence, ms.jaccard)
NULL_VARIANT = (ms.lift, ms.phi_correlation, ms.conviction, ms.piatetsky_shapiro)


@given(tables, st.integers(1, 300))
def test_null_invariant_measures_are_bit_identical(ct, extra):
    grown = ContingencyTable(ct.n11, ct.n10, ct.n01, ct.n00 + extra)
    for fn in NULL_INVARIANT:
        assert fn(grown) == fn(ct), fn.__name__
        assert fn(grown.swapped()) == fn(ct.swapped()), fn.__name__


def test_null_variant_measures_move_on_a_witness_table():
    base = ContingencyTable(36, 6, 14, 4)
    grown = ContingencyTable(36, 6, 14, 4 + 30)
    for fn in NULL_VARIANT:
        assert fn(grown) != fn(base), fn.__name__


@given(tables)
def test_symmetric_catalogue_forms_are_swap_invariant(ct):
    for measure in MeasureId:
        assert ms.evaluate_extended(measure, ct) == ms.evaluate_extended(measure, ct.swapped()), measure


def test_directed_measures_depend_on_direction_on_a_witness_table():
    ct = ContingencyTable(36, 6, 14, 4)
    for fn in (ms.confidence, ms.conviction, ms.added_value, ms.certainty_factor):
        assert fn(ct) != fn(ct.swapped()), fn.__name__


@given(tables)
def test_lift_and_added_value_share_their_sign_exactly(ct):
    lift = ms.lift(ct)
    av = ms.added_value(ct)
    if lift.is_defined and av.is_defined:
        assert (av.value > 0) == (lift.value > 1)
        assert (av.value == 0) == (lift.value == 1)
        assert (av.value < 0) == (lift.value < 1)


def test_sign_coupling_hits_all_three_cases():
    positive = ContingencyTable(5, 1, 1, 5)
    negative = ContingencyTable(1, 5, 5, 1)
    balanced = ContingencyTable(2, 2, 2, 2)
    assert ms.lift(positive).value > 1 and ms.added_value(positive).value > 0
    assert ms.lift(negative).value < 1 and ms.added_value(negative).value < 0
    assert ms.lift(balanced).value == 1 and ms.added_value(balanced).value == 0


@given(independent_tables)
def test_independence_fixpoints_are_exact(ct):
    assert ms.lift(ct).value == 1.0
    assert ms.added_value(ct).value == 0.0
    assert ms.phi_correlation(ct).value == 0.0
    assert ms.piatetsky_shapiro(ct).value == 0.0
    assert ms.conviction(ct).value == 1.0


@given(tables)
def test_defined_values_stay_in_range(ct):
    for fn in (ms.confidence, ms.cosine, ms.support, ms.jaccard, ms.laplace):
        value = fn(ct)
        if value.is_defined:
            assert 0.0 <= value.value <= 1.0, fn.__name__
    for fn in (ms.phi_correlation, ms.yules_q, ms.yules_y, ms.added_value):
        value = fn(ct)
        if value.is_defined:
            assert -1.0 <= value.value <= 1.0, fn.__name__
    for fn in (ms.lift, ms.conviction, ms.odds_ratio):
        value = fn(ct)
        if value.is_defined:
            assert value.value >= 0.0, fn.__name__


@given(tables)
def test_yule_coefficients_follow_the_odds_ratio(ct):
    alpha = ms.odds_ratio(ct)
    q = ms.yules_q(ct)
    y = ms.yules_y(ct)
    if alpha.is_defined:
        assert q.is_defined and y.is_defined
        assert math.isclose(q.value, (alpha.value - 1) / (alpha.value + 1), rel_tol=1e-12, abs_tol=1e-12)
        root = math.sqrt(alpha.value)
        assert math.isclose(y.value, (root - 1) / (root + 1), rel_tol=1e-12, abs_tol=1e-12)
    if alpha.is_positive_infinity:
        assert q.value == 1.0
        assert y.value == 1.0


@given(tables)
def test_contingency_probabilities_lie_in_unit_interval(ct):
    assert 0.0 <= ct.p_xy <= 1.0
    assert 0.0 <= ct.p_x <= 1.0
    assert 0.0 <= ct.p_y <= 1.0
    assert ct.n11 + ct.n10 + ct.n01 + ct.n00 == ct.n


@settings(max_examples=300)
@given(st.tuples(st.integers(0, 5000), st.integers(0, 5000), st.integers(0, 5000), st.integers(0, 5000)).filter(lambda t: sum(t) > 0))
def test_catalogue_agrees_with_high_precision_oracle(cells):
    table = ContingencyTable(*cells)
    for token, oracle in ref.MEASURE_ORACLES.items():
        mine = ms.evaluate_directed(MeasureId(token), table)
        kind, value = oracle(cells)
        assert ref.kind_of(mine) == kind, (token, cells)
        if kind == ref.DEFINED:
            assert abs(mine.value - float(value)) < 1e-9, (token, cells)
