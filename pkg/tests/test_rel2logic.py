import pytest

from symground.atoms import AtomKind, TruthValue
from symground.grounding import comprehend
from symground.rel2logic import RuleBase, apply, load_rules, validate_rule
from symground.sexpr import SexprError

from conftest import data_text

GOOD = """
(rule svo
  (vars $v $s $o)
  (g (_subj $v $s) (_obj $v $o))
  (a (EvaluationLink (PredicateNode $v) (ListLink (ConceptNode $s) (ConceptNode $o))))
  (map (_subj $v $s) ())
  (map (_obj $v $o) ()))
"""


def one(text):
    (rule,) = load_rules(text)
    return rule


class TestValidation:
    def test_good_rule(self):
        assert validate_rule(one(GOOD)) == []

    def test_variable_lists_must_agree(self):
        bad = GOOD.replace("(vars $v $s $o)", "(vars $v $s $o $extra)")
        assert any("differ" in p for p in validate_rule(one(bad)))

    def test_each_edge_needs_exactly_one_hyperedge(self):
        bad = GOOD.replace("  (map (_obj $v $o) ()))", "  )")
        assert any("maps to 0" in p for p in validate_rule(one(bad)))

    def test_hyperedge_must_contain_the_edge_variables(self):
        bad = GOOD.replace("(map (_obj $v $o) ())", "(map (_obj $v $o) (1))")
        assert any("does not contain" in p for p in validate_rule(one(bad)))

    def test_edge_cannot_map_to_a_node(self):
        bad = GOOD.replace("(map (_obj $v $o) ())", "(map (_obj $v $o) (0))")
        assert any("not a hyperlink" in p for p in validate_rule(one(bad)))

    def test_constant_content_words_rejected(self):
        bad = GOOD.replace("(ConceptNode $o)", '(ConceptNode $o) (ConceptNode "snake")')
        assert any("neither a word slot" in p for p in validate_rule(one(bad)))

    def test_shipped_rules_are_valid(self):
        for name in ("core.rules", "qualifiers.rules"):
            for rule in load_rules(data_text("rules", name)):
                assert validate_rule(rule) == []


class TestLoading:
    def test_qualifiers(self):
        rb = load_rules(data_text("rules", "qualifiers.rules"))
        assert rb.qualifiers == {"often": 0.7, "usually": 0.8, "occasionally": 0.3}
        assert len(rb) == 0

    def test_unknown_part(self):
        with pytest.raises(SexprError):
            load_rules("(rule r (vars) (frob))")

    def test_merge_keeps_both(self):
        merged = load_rules(GOOD).merged(load_rules("(qualifier often 0.7)"))
        assert len(merged) == 1 and merged.qualifiers == {"often": 0.7}


class TestApplication:
    def test_instances_and_scaffolding(self, extended):
        c = comprehend("Jack partially overlaps Jill", extended)
        res = c.applied[0]
        assert [a.rule for a in res.applications] == ["svo", "sv", "advmod"]
        names = {res.store[i].name for i in res.store if res.store[i].name}
        assert {"Jack@1", "Jill@1", "overlaps@1", "partially@1"} <= names

    def test_specific_entity_only_for_gendered_names(self, extended):
        store = comprehend("Jack partially overlaps Jill", extended).store
        sen = {store[i].name for i in store.of_kind(AtomKind.SpecificEntityNode)}
        assert sen == {"Jill@1"}

    def test_qualifier_sets_truth_value(self, extended):
        store = comprehend("An eye is occasionally horizontally related to an eye with a gap between", extended).store
        tvs = {store.tv(i) for i in store.roots() if store[i].kind == AtomKind.EvaluationLink
               and store[store[i].targets[0]].kind == AtomKind.PredicateNode}
        assert TruthValue(0.3, 1.0) in tvs
        assert not any("occasionally" in (store[i].name or "") for i in store)

    def test_negation_wraps_in_not(self, minimal):
        store = comprehend("Region 7 is not equal to Region 6", minimal).store
        assert any(store[i].kind == AtomKind.NotLink for i in store.roots())

    def test_empty_rulebase_still_scaffolds(self, cat_dict):
        from symground.linkgrammar import parse
        from symground.relex import extract

        dep = extract(parse("the cat chased a snake", cat_dict).top, cat_dict)
        res = apply(RuleBase(), dep)
        assert res.core == [] and len(res.store.roots()) > 0
