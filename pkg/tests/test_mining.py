from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _reference import brute_force_frequent, naive_support_count
from _strategies import matrix_databases
from rulemine.errors import (
    EmptyItemset,
    InternalInvariantViolation,
    InvalidConfig,
    NonDisjointItemsets,
)
from rulemine.mining import (
    AssociationRule,
    MiningConfig,
    apriori,
    candidate_join_prune,
    generate_rules,
    to_fraction,
)
from rulemine.transactions import Itemset, load_basket, load_matrix


class TestThresholds:
    def test_decimal_strings_parse_exactly(self):
        cfg = MiningConfig("0.5", "0.7")
        assert cfg.min_support == Fraction(1, 2)
        assert cfg.min_confidence == Fraction(7, 10)

    def test_floats_mean_their_decimal_literal(self):
        assert to_fraction(0.1) == Fraction(1, 10)
        assert to_fraction(0.8333) == Fraction(8333, 10000)

    @pytest.mark.parametrize("bad", ["1.1", "-0.2", 2, "nope"])
    def test_out_of_range_or_unparseable_rejected(self, bad):
        with pytest.raises(InvalidConfig):
            MiningConfig(bad, "0.5")

    def test_max_itemset_size_must_be_positive(self):
        with pytest.raises(InvalidConfig):
            MiningConfig("0.5", "0.5", max_itemset_size=0)


class TestAssociationRule:
    def test_sides_must_be_disjoint(self):
        with pytest.raises(NonDisjointItemsets):
            AssociationRule(Itemset([0, 1]), Itemset([1]))

    def test_sides_must_be_non_empty(self):
        with pytest.raises(EmptyItemset):
            AssociationRule(Itemset([0]), Itemset())


class TestCandidateJoinPrune:
    def test_textbook_join(self):
        level = {Itemset([0, 1]), Itemset([0, 2]), Itemset([1, 2])}
        assert candidate_join_prune(level) == {Itemset([0, 1, 2])}

    def test_prune_drops_candidate_with_infrequent_subset(self):
        level = {Itemset([0, 1]), Itemset([0, 2])}
        assert candidate_join_prune(level) == set()

    def test_singletons_join_to_pairs(self):
        assert candidate_join_prune({Itemset([0]), Itemset([2])}) == {Itemset([0, 2])}

    def test_mixed_sizes_rejected(self):
        with pytest.raises(InternalInvariantViolation):
            candidate_join_prune({Itemset([0]), Itemset([0, 1])})

    def test_empty_input_yields_nothing(self):
        assert candidate_join_prune(set()) == set()


class TestApriori:
    def test_fixture_at_half_support(self, attendance):
        found = apriori(attendance, MiningConfig("0.5", "0.5"))
        by_tokens = {tuple(sorted(attendance.tokens_of(f.itemset))): f for f in found}
        assert set(by_tokens) == {("Hindi",), ("Mix",), ("Hindi", "Mix")}
        assert by_tokens[("Hindi",)].count == 42
        assert by_tokens[("Mix",)].count == 50
        assert by_tokens[("Hindi", "Mix")].count == 36
        assert by_tokens[("Hindi",)].support == pytest.approx(0.70)
        assert by_tokens[("Mix",)].support == pytest.approx(50 / 60)
        assert by_tokens[("Hindi", "Mix")].support == pytest.approx(0.60)

    def test_zero_support_with_size_cap_lists_every_item(self, attendance):
        found = apriori(attendance, MiningConfig("0", "0", max_itemset_size=1))
        assert [attendance.tokens_of(f.itemset) for f in found] == [
            ("Hindi",),
            ("English",),
            ("Mix",),
            ("None",),
        ]

    def test_zero_support_enumerates_the_powerset(self):
        # item c never occurs; with threshold 0 it still qualifies
        db = load_matrix("a,b,c\n1,1,0\n1,0,0\n")
        found = apriori(db, MiningConfig("0", "0"))
        assert len(found) == 7
        counts = {f.itemset: f.count for f in found}
        assert counts[Itemset([2])] == 0
        assert counts[Itemset([0, 1, 2])] == 0

    def test_unanimous_item_at_full_support(self):
        db = load_basket("A,B\nA\n")
        found = apriori(db, MiningConfig("1", "0"))
        assert [db.tokens_of(f.itemset) for f in found] == [("A",)]

    def test_boundary_count_is_included_exactly(self):
        db = load_basket("A\nB\n")
        assert len(apriori(db, MiningConfig("0.5", "0"))) == 2
        assert len(apriori(db, MiningConfig("0.51", "0"))) == 0

    def test_output_sorted_by_size_then_ids(self, attendance):
        found = apriori(attendance, MiningConfig("0.1", "0.5"))
        keys = [(len(f.itemset), f.itemset.items) for f in found]
        assert keys == sorted(keys)

    def test_empty_database_yields_nothing(self):
        db = load_matrix("a,b\n")
        assert apriori(db, MiningConfig("0", "0")) == []

    def test_downward_closure(self, attendance):
        found = apriori(attendance, MiningConfig("0.15", "0.5"))
        emitted = {f.itemset for f in found}
        for itemset in emitted:
            for drop in itemset:
                smaller = Itemset(i for i in itemset if i != drop)
                if len(smaller):
                    assert smaller in emitted


class TestGenerateRules:
    @staticmethod
    def _tokens(db, rule):
        return (
            tuple(sorted(db.tokens_of(rule.antecedent))),
            tuple(sorted(db.tokens_of(rule.consequent))),
        )

    def test_fixture_rules_at_point_seven_confidence(self, attendance):
        cfg = MiningConfig("0.5", "0.7")
        frequent = apriori(attendance, cfg)
        rules = generate_rules(frequent, cfg, attendance)
        assert [self._tokens(attendance, r) for r in rules] == [
            (("Hindi",), ("Mix",)),
            (("Mix",), ("Hindi",)),
        ]

    def test_higher_threshold_keeps_only_the_strong_direction(self, attendance):
        cfg = MiningConfig("0.5", "0.75")
        rules = generate_rules(apriori(attendance, cfg), cfg, attendance)
        assert [self._tokens(attendance, r) for r in rules] == [(("Hindi",), ("Mix",))]

    def test_zero_confidence_emits_both_orientations(self, attendance):
        cfg = MiningConfig("0.5", "0")
        rules = generate_rules(apriori(attendance, cfg), cfg, attendance)
        assert [self._tokens(attendance, r) for r in rules] == [
            (("Hindi",), ("Mix",)),
            (("Mix",), ("Hindi",)),
        ]

    def test_every_split_of_a_size_k_itemset_is_examined(self):
        db = load_basket("a,b,c\n")
        cfg = MiningConfig("1", "0")
        rules = generate_rules(apriori(db, cfg), cfg, db)
        # 2^3 - 2 splits for the triple plus 2 each for the three pairs
        assert len(rules) == 6 + 3 * 2
        triple_rules = [r for r in rules if len(r.antecedent) + len(r.consequent) == 3]
        assert len(triple_rules) == 6

    def test_rule_order_is_antecedent_then_consequent(self):
        db = load_basket("a,b,c\n")
        cfg = MiningConfig("1", "0")
        rules = generate_rules(apriori(db, cfg), cfg, db)
        keys = [(r.antecedent.items, r.consequent.items) for r in rules]
        assert keys == sorted(keys)


@given(
    matrix_databases(max_items=6, max_rows=24),
    st.sampled_from([Fraction(i, 10) for i in range(11)]),
)
def test_apriori_matches_brute_force(db, min_support):
    cfg = MiningConfig(min_support, "0.5")
    mined = {f.itemset.items: f.count for f in apriori(db, cfg)}
    assert mined == brute_force_frequent(db, min_support)


@given(
    matrix_databases(max_items=5, max_rows=20),
    st.sampled_from(["0.1", "0.3", "0.6"]),
    st.sampled_from(["0", "0.4", "0.8", "1"]),
)
def test_generated_rules_recheck_by_direct_counting(db, min_support, min_confidence):
    cfg = MiningConfig(min_support, min_confidence)
    frequent = apriori(db, cfg)
    rows = [set(t) for t in db.transactions]
    for rule in generate_rules(frequent, cfg, db):
        assert rule.antecedent.isdisjoint(rule.consequent)
        whole = rule.antecedent.union(rule.consequent)
        whole_count = naive_support_count(rows, whole)
        base_count = naive_support_count(rows, rule.antecedent)
        assert Fraction(whole_count, db.n) >= cfg.min_support
        assert base_count > 0
        assert Fraction(whole_count, base_count) >= cfg.min_confidence
