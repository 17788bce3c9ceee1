from hypothesis import given, strategies as st
import pytest

from symground.action_grammar import (
    AnimationType, TraceError, action_holds, check_hierarchy, check_no_cross, load_links, load_trace,
    parse_action_label, recheck_movement, trace_to_atoms, validate_movement,
)
from symground.linkgrammar import load_dictionary

from conftest import data_text


@pytest.fixture(scope="module")
def kick_grammar():
    return load_dictionary(data_text("grammars", "kick.dict"))


class TestTraces:
    def test_load_with_types_and_parents(self):
        trace = load_trace(data_text("traces", "kick.trace"))
        assert [i.id for i in trace.instances] == ["kick", "back", "fwd"]
        assert trace.get("fwd").parent == "kick"
        assert trace.types["kick"].actuators == frozenset({"leg", "lower-leg"})

    def test_unknown_parent(self):
        with pytest.raises(TraceError):
            load_trace("a move [0,2] parent=b")

    def test_parent_cycle(self):
        with pytest.raises(TraceError):
            load_trace("a move [0,2] parent=b\nb move [0,2] parent=a")

    def test_bad_interval(self):
        with pytest.raises(TraceError, match="line 1"):
            load_trace("a move [3,1]")

    def test_type_needs_actuators(self):
        with pytest.raises(TraceError):
            AnimationType("x", frozenset())

    def test_parameter_box(self):
        t = AnimationType("kick", frozenset({"leg"}), ((0.0, 1.0),))
        assert t.recognizes((0.5,)) and not t.recognizes((2.0,)) and not t.recognizes(())


class TestLabels:
    def test_parse(self):
        assert parse_action_label("kick-lower-leg-forward_a") == ("kick-lower-leg-forward", "a")
        assert parse_action_label("smile_during") == ("smile", "during")
        with pytest.raises(TraceError):
            parse_action_label("smile_sideways")

    def test_allen_sign_marks_first_argument(self):
        trace = load_trace("s smile [2,6]\nl look [0,10]")
        s, l = trace.get("s"), trace.get("l")
        assert action_holds(s, "look_during", "+", l)
        assert action_holds(l, "smile_during", "-", s)


class TestValidation:
    def test_kick_meets(self, kick_grammar):
        trace = load_trace(data_text("traces", "kick.trace"))
        linkage = validate_movement(kick_grammar, trace)
        assert linkage and recheck_movement(trace, linkage)

    def test_gap_breaks_meets(self, kick_grammar):
        assert not validate_movement(kick_grammar, load_trace(data_text("traces", "kick-gapped.trace")))

    def test_out_of_box_parameters(self, kick_grammar):
        text = data_text("traces", "kick.trace").replace("[4,9] 0.7", "[4,9] 7.0")
        result = validate_movement(kick_grammar, load_trace(text))
        assert not result and "outside the legal box" in str(result)

    @given(st.integers(-50, 50))
    def test_time_shift_invariance(self, kick_grammar, k):
        trace = load_trace(data_text("traces", "kick.trace")).shifted(k)
        assert bool(validate_movement(kick_grammar, trace))


class TestHierarchy:
    def test_kick_is_well_nested(self):
        assert check_hierarchy(load_trace(data_text("traces", "kick.trace"))).ok

    def test_child_outside_parent(self):
        text = data_text("traces", "kick.trace").replace("fwd kick-lower-leg-forward [4,9]", "fwd kick-lower-leg-forward [4,12]")
        report = check_hierarchy(load_trace(text))
        assert any("not contained" in v for v in report.violations)

    def test_extra_actuator(self):
        text = "type p arm\ntype c arm,leg\np p [0,9]\nc c [1,2] parent=p"
        assert any("actuators" in v for v in check_hierarchy(load_trace(text)).violations)


class TestNoCross:
    def test_piano_links(self):
        trace = load_trace(data_text("traces", "piano.trace"))
        assert check_no_cross(trace, load_links(data_text("traces", "piano.links")))
        assert not check_no_cross(trace, load_links(data_text("traces", "piano-shoulders.links")))

    def test_grammar_linkage_is_planar(self):
        grammar = load_dictionary(data_text("grammars", "piano.dict"))
        trace = load_trace(data_text("traces", "piano.trace"))
        linkage = validate_movement(grammar, trace)
        assert linkage and check_no_cross(trace, linkage)

    def test_bad_links_line(self):
        with pytest.raises(TraceError):
            load_links("a b c")


def test_trace_atoms_cover_every_pair():
    store = trace_to_atoms(load_trace(data_text("traces", "smile-at-bob.trace")))
    texts = [store.text(i) for i in store.roots()]
    assert len(texts) == 3
    assert any('(PredicateNode "during") (ListLink (ConceptNode "grin") (ConceptNode "look"))' in t
               for t in texts) or any('"contains") (ListLink (ConceptNode "look") (ConceptNode "grin"))' in t
                                      for t in texts)
