"""Relations to English and back in a tiny RCC vocabulary.

Run: python3 demos/03_minimal_rcc_english.py
"""

from symground import RCC8, comprehend, express, generate, ground, load_bundle
from symground.grounding import Fact


def main() -> None:
    b = load_bundle("minimal-rcc")
    print("Each relation, said in English and read back:\n")
    for rel in RCC8.relations:
        store = express([Fact("rcc8", "region-3", "region-8", RCC8.bit(rel))], b)
        text = generate(store, b, limit=1)[0].text
        back = ground(comprehend(text, b).store, b).text().strip()
        print(f"  {rel:6s} {text:55s} -> {back}")

    not_equal = Fact("rcc8", "region-6", "region-7", RCC8.full & ~RCC8.bit("EQ"))
    print("\nEverything except EQ comes out as a negation:", generate(express([not_equal], b), b)[0].text)

    two = "Region 3 is equal to Region 7, and Region 7 is externally connected with Region 9"
    print(f"\n{two!r} grounds to:")
    print(ground(comprehend(two, b).store, b).text(), end="")


if __name__ == "__main__":
    main()
