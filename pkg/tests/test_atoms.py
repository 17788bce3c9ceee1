from hypothesis import given, settings, strategies as st
import pytest

from symground.atoms import (
    AtomKind, AtomPattern, AtomStore, TruthValue, from_text, link, match, node,
    normalize_instances, structure, substitute, to_text,
)
from symground.sexpr import SexprError

NAMES = st.sampled_from(["a", "b", "cat", "x y", 'quote"d'])
LEAF = st.builds(node, st.sampled_from([AtomKind.ConceptNode, AtomKind.PredicateNode]), NAMES)
TREES = st.recursive(
    LEAF,
    lambda kids: st.builds(lambda k, cs: link(k, *cs),
                           st.sampled_from([AtomKind.ListLink, AtomKind.AndLink, AtomKind.EvaluationLink]),
                           st.lists(kids, min_size=1, max_size=3)),
    max_leaves=8,
)
TVS = st.builds(TruthValue, st.sampled_from([0.0, 0.3, 0.7, 1.0]), st.sampled_from([0.5, 1.0, 4.0]))


def jack_overlaps_jill() -> AtomStore:
    s = AtomStore()
    s.add(link("EvaluationLink", node("PredicateNode", "overlaps"),
               link("ListLink", node("ConceptNode", "Jack"), node("ConceptNode", "Jill"))))
    return s


class TestTruthValue:
    def test_defaults(self):
        assert TruthValue() == TruthValue(1.0, 1.0)

    @pytest.mark.parametrize("s, n", [(-0.1, 1), (1.5, 1), (0.5, -1)])
    def test_rejects_out_of_range(self, s, n):
        with pytest.raises(ValueError):
            TruthValue(s, n)

    @given(st.floats(0, 1), st.floats(0, 0.99))
    def test_confidence_round_trip(self, s, c):
        assert TruthValue.from_confidence(s, c).confidence == pytest.approx(c)


class TestStore:
    def test_interning_deduplicates(self):
        s = jack_overlaps_jill()
        n = len(s)
        s.add(node("ConceptNode", "Jack"))
        assert len(s) == n
        assert len(s.roots()) == 1

    def test_higher_count_wins_on_reinsert(self):
        s = AtomStore()
        i = s.add(node("ConceptNode", "a"), TruthValue(0.2, 5))
        s.add(node("ConceptNode", "a"), TruthValue(0.9, 1))
        assert s.tv(i) == TruthValue(0.2, 5)

    def test_bad_targets_rejected(self):
        with pytest.raises(ValueError):
            AtomStore().intern(AtomKind.ListLink, [7])

    def test_fresh_names_count_per_base(self):
        s = AtomStore()
        assert [s.fresh_name("cat"), s.fresh_name("cat"), s.fresh_name("dog")] == ["cat@1", "cat@2", "dog@1"]

    def test_copy_and_update(self):
        s = jack_overlaps_jill()
        assert s.copy() == s
        t = AtomStore()
        t.update(s)
        assert t == s


class TestText:
    @settings(max_examples=60)
    @given(st.lists(st.tuples(TREES, TVS), min_size=1, max_size=4))
    def test_round_trip(self, items):
        s = AtomStore()
        for tree, tv in items:
            s.add(tree, tv)
        assert from_text(to_text(s)) == from_text(to_text(from_text(to_text(s))))
        assert to_text(from_text(to_text(s))) == to_text(s)

    def test_unknown_kind_reports_position(self):
        with pytest.raises(SexprError) as err:
            from_text('(ConceptNode "a")\n(FooLink (ConceptNode "b"))')
        assert err.value.line == 2

    def test_node_needs_quoted_name(self):
        with pytest.raises(SexprError):
            from_text("(ConceptNode a)")


class TestMatching:
    def test_variable_binding_and_substitution(self):
        s = jack_overlaps_jill()
        pat = AtomPattern.of(link("EvaluationLink", node("PredicateNode", "overlaps"),
                                  link("ListLink", node("VariableNode", "$x"), node("VariableNode", "$y"))))
        (b,) = match(pat, s)
        assert (s[b["$x"]].name, s[b["$y"]].name) == ("Jack", "Jill")
        swapped = AtomPattern(pat.tree, ("$y", "$x"))
        new = substitute(swapped, {"$y": b["$x"], "$x": b["$y"]}, s)
        assert '(ConceptNode "Jill") (ConceptNode "Jack")' in s.text(new)
        assert len(s.roots()) == 2

    def test_undeclared_variable_rejected(self):
        with pytest.raises(ValueError):
            AtomPattern(node("VariableNode", "$x"), ())


class TestNormalization:
    def _store(self):
        s = AtomStore()
        s.add(link("InheritanceLink", node("ConceptNode", "cat@1"), node("ConceptNode", "cat")))
        s.add(link("NotLink", link("EvaluationLink", node("PredicateNode", "sleeps"),
                                   link("ListLink", node("ConceptNode", "cat@1")))), TruthValue(1, 1))
        return s

    def test_general_copy_added_and_instances_kept(self):
        s = normalize_instances(self._store())
        texts = {s.text(i) for i in s.roots()}
        assert any("cat@1" in t and t.startswith("(NotLink") for t in texts)
        assert any('"cat")' in t and t.startswith("(NotLink") for t in texts)

    def test_nested_link_is_not_promoted(self):
        s = normalize_instances(self._store())
        assert not any(s.text(i).startswith("(EvaluationLink") for i in s.roots())

    def test_idempotent(self):
        s = normalize_instances(self._store())
        before = structure(s)
        assert structure(normalize_instances(s)) == before
