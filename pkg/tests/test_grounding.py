import json

import pytest

from symground.atoms import AtomKind, AtomStore
from symground.grounding import (
    ComprehensionError, Fact, Grounding, GroundingRule, Unexpressible, assertions, bundle_names,
    comprehend, express, express_relation, ground, load_bundle, load_grounding_rules, split_clauses,
)
from symground.qualitative import ALLEN, RCC8, read_network
from symground.sexpr import SexprError

RULE = """
(ground po-verb
  (vars $x $y)
  (logic (EvaluationLink (PredicateNode "overlaps") (ListLink (VariableNode "$x") (VariableNode "$y")))
         (InheritanceLink (SatisfyingSetLink (PredicateNode "overlaps")) (ConceptNode "partially")))
  (relation rcc8 PO $x $y)
  (stv 1 1))
"""


class TestRules:
    def test_load_and_check(self):
        (rule,) = load_grounding_rules(RULE)
        assert rule.relation == "PO" and rule.args == ("$x", "$y") and len(rule.logic) == 2
        assert rule.problems() == []

    def test_variable_mismatch_reported(self):
        (rule,) = load_grounding_rules(RULE.replace("(relation rcc8 PO $x $y)", "(relation rcc8 PO $x $z)")
                                       .replace("(vars $x $y)", "(vars $x $z)"))
        assert rule.problems()

    def test_relation_sets(self):
        (rule,) = load_grounding_rules(RULE.replace("PO $x", "(PO EQ) $x"))
        assert rule.relation is None and rule.relations == ("PO", "EQ")

    def test_equivalence_form(self):
        (rule,) = load_grounding_rules(RULE)
        store = AtomStore()
        lam = rule.to_atoms(store)
        assert store[lam].kind == AtomKind.LambdaLink
        assert "EquivalenceLink" in store.text(lam) and "RCC_Partial_Overlap" in store.text(lam)

    def test_needs_relation(self):
        with pytest.raises(SexprError):
            load_grounding_rules('(ground r (vars $x) (logic (ConceptNode "a")))')


class TestBundles:
    def test_shipped_bundles(self):
        assert bundle_names() == ["basic-movement", "extended-rcc-allen", "minimal-rcc", "perception-action"]

    def test_include_merges_grammars_and_rules(self, perception_action, extended, movement):
        assert set(extended.dictionary.entries) <= set(perception_action.dictionary.entries)
        assert {r.name for r in movement.grounding} <= {r.name for r in perception_action.grounding}
        assert perception_action.perception

    def test_unknown_bundle(self):
        with pytest.raises(FileNotFoundError):
            load_bundle("no-such-bundle")

    def test_bundle_from_directory(self, tmp_path):
        (tmp_path / "bundle.json").write_text(json.dumps({"name": "tiny", "include": []}))
        b = load_bundle(tmp_path)
        assert b.name == "tiny" and not b.grounding

    def test_bundles_are_cached(self, minimal):
        assert load_bundle("minimal-rcc") is minimal

    def test_phrases(self, minimal):
        assert minimal.phrases()[("rcc8", "EQ")] == ["equal"]


class TestComprehension:
    def test_split(self):
        assert split_clauses("A is B, and C is D") == (["A is B", "C is D"], "and")
        assert split_clauses("A is B") == (["A is B"], "and")
        with pytest.raises(ComprehensionError):
            split_clauses("A, and B, or C")

    def test_no_parse(self, minimal):
        with pytest.raises(ComprehensionError):
            comprehend("Region is equal", minimal)

    def test_unknown_word(self, minimal):
        with pytest.raises(ComprehensionError):
            comprehend("Region 4 is purple", minimal)

    def test_or_with_elided_subject(self, extended):
        c = comprehend("An eye is usually vertically related to a nose with a gap between, "
                       "or horizontally related to a nose with a gap between", extended)
        assert c.connective == "or"
        assert any(c.store[i].kind == AtomKind.OrLink for i in assertions(c.store))


class TestGrounding:
    def test_po(self, extended):
        g = ground(comprehend("Jack partially overlaps Jill", extended).store, extended)
        assert g.relations() == {("rcc8", "Jack", "Jill"): RCC8.bit("PO")}

    def test_facts_are_oriented_naturally(self, minimal):
        g = ground(comprehend("Region 10 is a tangential proper part of Region 2", minimal).store, minimal)
        assert g.relations() == {("rcc8", "region-2", "region-10"): RCC8.bit("TPPi")}

    def test_negation_is_the_complement(self, minimal):
        g = ground(comprehend("Region 7 is not equal to Region 6", minimal).store, minimal)
        assert g.relations()[("rcc8", "region-6", "region-7")] == RCC8.full & ~RCC8.bit("EQ")

    def test_conjunction(self, minimal):
        g = ground(comprehend("Region 3 is equal to Region 7, and Region 7 is externally connected with Region 9",
                              minimal).store, minimal)
        assert g.text() == "rcc8 region-3 region-7 {EQ}\nrcc8 region-7 region-9 {EC}\n"

    def test_or_within_one_algebra_is_a_union(self, extended):
        g = ground(comprehend("Jill is during Jack, or right before Jack", extended).store, extended)
        assert g.relations() == {("allen", "Jack", "Jill"): ALLEN.rset(["contains", "met-by"])}

    def test_or_across_algebras_stays_unmatched(self, extended):
        c = comprehend("An eye is usually vertically related to a nose with a gap between, "
                       "or horizontally related to a nose with a gap between", extended)
        g = ground(c.store, extended)
        assert not g.facts and any(u.startswith("(OrLink") for u in g.unmatched)

    def test_relations_intersect(self):
        g = Grounding([Fact("rcc8", "a", "b", RCC8.rset(["DC", "EC"])), Fact("rcc8", "a", "b", RCC8.rset(["EC", "PO"]))])
        assert g.relations() == {("rcc8", "a", "b"): RCC8.bit("EC")}
        assert g.network("rcc8").get("a", "b") == RCC8.bit("EC")


class TestExpression:
    def test_converse_by_swapping(self, minimal):
        trees = express_relation("rcc8", "NTPPi", "region-1", "region-2", minimal)
        store = AtomStore()
        store.add(trees[0])
        assert '(ConceptNode "region-2") (ConceptNode "region-1")' in store.text(store.roots()[0])

    def test_complement_becomes_not(self, minimal):
        store = express([Fact("rcc8", "region-1", "region-2", RCC8.full & ~RCC8.bit("EQ"))], minimal)
        assert [store[i].kind for i in store.roots()] == [AtomKind.NotLink]

    def test_other_sets_are_unexpressible(self, minimal):
        with pytest.raises(Unexpressible):
            express([Fact("rcc8", "a", "b", RCC8.rset(["DC", "EC"]))], minimal)

    def test_missing_phrase(self, minimal):
        with pytest.raises(Unexpressible):
            express_relation("allen", "before", "a", "b", minimal)

    @pytest.mark.parametrize("rel", RCC8.relations)
    def test_express_then_ground_is_identity(self, minimal, rel):
        net = read_network(f"region-1 region-2 {{{rel}}}", "rcc8")
        g = ground(express(net, minimal), minimal)
        assert g.relations() == {("rcc8", "region-1", "region-2"): RCC8.bit(rel)}


def test_data_root_from_environment(monkeypatch, tmp_path):
    from symground.grounding import DATA_ENV, data_root

    (tmp_path / "bundles").mkdir()
    monkeypatch.setenv(DATA_ENV, str(tmp_path))
    assert data_root() == tmp_path and bundle_names() == []
