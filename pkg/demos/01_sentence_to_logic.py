"""From a sentence to linkage, dependencies and logical atoms.

Run: python3 demos/01_sentence_to_logic.py
"""

from symground import comprehend, load_bundle, parse, to_text
from symground.grounding import data_root
from symground.linkgrammar import load_dictionary, render
from symground.relex import extract


def main() -> None:
    d = load_dictionary((data_root() / "dictionaries" / "cat-snake.dict").read_text())
    sentence = "the cat chased a snake"
    linkage = parse(sentence, d).top
    print(f"A four-word dictionary links {sentence!r} like this:\n")
    print(render(linkage))
    print("\nReading subjects, objects and attributes off the links:\n")
    print(extract(linkage, d).report())

    bundle = load_bundle("extended-rcc-allen")
    active = comprehend("Jack partially overlaps Jill", bundle)
    passive = comprehend("Jill is partially overlapped by Jack", bundle)
    print("Active and passive voice arrive at the same atoms:",
          sorted(map(active.store.text, active.store)) == sorted(map(passive.store.text, passive.store)))
    print("\nThe atoms for 'Jack partially overlaps Jill':\n")
    print(to_text(active.store))


if __name__ == "__main__":
    main()
