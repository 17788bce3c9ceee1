import pytest

from symground.grounding import comprehend
from symground.linkgrammar import parse
from symground.relex import DepRelation, extract


def deps(sentence, d):
    return extract(parse(sentence, d).top, d)


def test_active_sentence(cat_dict):
    g = deps("the cat chased a snake", cat_dict)
    assert g.relation_triples() == {("_subj", "chase", "cat"), ("_obj", "chase", "snake")}
    assert g.attr("tense", 2) == "past"
    assert g.attr("definite-FLAG", 1) == "T"
    assert g.attr("definite-FLAG", 4) is None


def test_passive_maps_to_the_same_relations(passive_dict):
    active = deps("the cat chased a snake", passive_dict)
    passive = deps("a snake was chased by the cat", passive_dict)
    assert active.relation_triples() == passive.relation_triples()
    assert ("tense", "chase", "past") in passive.attribute_triples()


def test_report_layout(cat_dict):
    text = deps("the cat chased a snake", cat_dict).report()
    assert text.startswith("Dependency relations:")
    assert "    _obj(chase, snake)" in text and "Attributes:" in text


def test_relation_names_are_checked():
    with pytest.raises(ValueError):
        DepRelation("_iobj", 0, 1)
    with pytest.raises(ValueError):
        DepRelation("_subj", 2, 2)


@pytest.mark.parametrize("sentence, expected", [
    ("Jill is during Jack", {("_subj", "during", "Jill"), ("_obj", "during", "Jack")}),
    ("An eye is occasionally horizontally related to an eye with a gap between",
     {("_subj", "horizontally_related/with_a_gap_between", "eye"),
      ("_obj", "horizontally_related/with_a_gap_between", "eye"),
      ("_advmod", "horizontally_related/with_a_gap_between", "occasionally")}),
])
def test_frames_in_extended_bundle(extended, sentence, expected):
    assert comprehend(sentence, extended).deps[0].relation_triples() == expected


def test_light_verb_takes_its_preposition_as_predicate(movement):
    c = comprehend("Smiling is done during looking at Bob", movement)
    assert c.deps[0].relation_triples() == {("_subj", "during", "smiling"), ("_obj", "during", "looking_at_Bob")}


def test_negation_and_numbers(minimal):
    dep = comprehend("Region 7 is not equal to Region 6", minimal).deps[0]
    assert dep.relation_triples() == {("_subj", "equal", "region-7"), ("_obj", "equal", "region-6")}
    assert ("NEGATIVE-FLAG", "equal", "T") in dep.attribute_triples()


def test_gender_only_on_marked_names(extended):
    attrs = comprehend("Jack partially overlaps Jill", extended).deps[0].attribute_triples()
    assert ("gender", "Jill", "female") in attrs
    assert not any(a[0] == "gender" and a[1] == "Jack" for a in attrs)
