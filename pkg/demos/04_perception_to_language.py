"""Scenes and movements checked against grammars, then described in English.

Run: python3 demos/04_perception_to_language.py
"""

from symground import load_bundle
from symground.action_grammar import check_no_cross, load_links, load_trace, validate_movement
from symground.chain import chain
from symground.grounding import data_root
from symground.image_grammar import load_scene, validate_scene
from symground.linkgrammar import load_dictionary


def read(*parts: str) -> str:
    return data_root().joinpath(*parts).read_text()


def main() -> None:
    face = load_dictionary(read("grammars", "face.dict"))
    scene = load_scene(read("scenes", "face.scene"))
    print("Two eyes above a nose satisfy the face grammar:", bool(validate_scene(face, scene)))
    print("Without the nose:\n ", validate_scene(face, scene.without("nose")))

    kick = load_dictionary(read("grammars", "kick.dict"))
    print("\nLeg back, then kick, with no pause:", bool(validate_movement(kick, load_trace(read("traces", "kick.trace")))))
    print("With a pause in between:", bool(validate_movement(kick, load_trace(read("traces", "kick-gapped.trace")))))

    piano = load_trace(read("traces", "piano.trace"))
    print("\nPiano links cross once the shoulders coordinate directly:",
          not check_no_cross(piano, load_links(read("traces", "piano-shoulders.links"))))

    print("\nDescribing the scene:")
    for s in chain(scene, load_bundle("extended-rcc-allen")).stated:
        print(f"  {s.fact}  ->  {s.top}")
    print("\nDescribing 'smile at Bob':")
    for s in chain(load_trace(read("traces", "smile-at-bob.trace")), load_bundle("perception-action")).stated:
        print(f"  {s.fact}  ->  {s.top}")


if __name__ == "__main__":
    main()
