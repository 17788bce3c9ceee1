from hypothesis import given, settings, strategies as st
import pytest

from symground.atoms import AtomKind
from symground.image_grammar import (
    ImageLabel, SceneError, classify_pair, load_scene, recheck, scene_to_atoms, validate_scene,
)
from symground.linkgrammar import load_dictionary

from conftest import data_text


@pytest.fixture(scope="module")
def face():
    return load_dictionary(data_text("grammars", "face.dict")), load_scene(data_text("scenes", "face.scene"))


class TestLabels:
    def test_parse(self):
        assert ImageLabel.parse("eye-nose_v_G") == ImageLabel("eye-nose", "v", "G")
        assert str(ImageLabel.parse("pattern-7_h_EC")) == "pattern-7_h_EC"

    @pytest.mark.parametrize("bad", ["eye", "eye_q_G", "eye_h_Z"])
    def test_rejects(self, bad):
        with pytest.raises(SceneError):
            ImageLabel.parse(bad)


class TestScenes:
    def test_load(self, face):
        _, scene = face
        assert [e.id for e in scene.entities] == ["left-eye", "right-eye", "nose"]
        assert scene.axes == ("h", "v")

    def test_degenerate_extent(self):
        with pytest.raises(SceneError):
            load_scene("a eye h:[2,2] v:[0,1]")

    def test_bad_line(self):
        with pytest.raises(SceneError, match="line 2"):
            load_scene("a eye h:[0,1] v:[0,1]\nb eye h[0,1]")

    def test_v_axis_grows_upward(self, face):
        _, scene = face
        eye, nose = scene.entities[0], scene.entities[2]
        assert classify_pair(nose, eye, "v") == "G+"


class TestValidation:
    def test_face_validates_and_rechecks(self, face):
        grammar, scene = face
        linkage = validate_scene(grammar, scene)
        assert linkage and recheck(grammar, scene, linkage)
        assert len(linkage.links) == 5

    def test_eye_entry_has_two_disjuncts(self, face):
        grammar, _ = face
        assert len(grammar.disjuncts("eye")) == 2

    def test_missing_nose_names_the_connector(self, face):
        grammar, scene = face
        result = validate_scene(grammar, scene.without("nose"))
        assert not result
        assert "unsatisfied connector" in str(result) and "eye-nose_v_G-" in str(result)

    def test_nose_above_eyes_fails(self, face):
        grammar, _ = face
        upside = load_scene("l eye h:[0,2] v:[0,2]\nr eye h:[6,8] v:[0,2]\nn nose h:[3,5] v:[5,7]")
        assert not validate_scene(grammar, upside)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(-20, 20), st.integers(-20, 20))
    def test_translation_invariance(self, face, dh, dv):
        grammar, scene = face
        assert bool(validate_scene(grammar, scene.translated(h=dh, v=dv)))

    def test_rcc_connector_on_patterns(self):
        grammar = load_dictionary(data_text("grammars", "patterns.dict"))
        scene = load_scene(data_text("scenes", "patterns.scene"))
        assert validate_scene(grammar, scene)
        apart = load_scene("p2 pattern-2 h:[0,1] v:[0,4]\np7 pattern-7 h:[2,4] v:[0,2]")
        assert not validate_scene(grammar, apart)


class TestAtoms:
    def test_one_fact_per_axis_and_pair_plus_symmetric_overlap(self, face):
        _, scene = face
        store = scene_to_atoms(scene)
        evals = [i for i in store.roots() if store[i].kind == AtomKind.EvaluationLink]
        # the eyes share a v extent, so that overlap is stated in both orders
        assert len(evals) == 7
        assert sum('"overlap_v"' in store.text(i) for i in evals) == 2
        assert any('"gap_v") (ListLink (ConceptNode "nose") (ConceptNode "left-eye"))' in store.text(i)
                   for i in evals)

    def test_adjacency_fact(self):
        store = scene_to_atoms(load_scene(data_text("scenes", "patterns.scene")))
        assert any('"adjacent"' in store.text(i) for i in store.roots())
