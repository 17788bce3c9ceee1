"""Composition tables checked by brute force, then used for propagation.

Run: python3 demos/02_qualitative_reasoning.py
"""

from symground import ALLEN, RCC8, path_consistency
from symground.qualitative import allen_table_from_oracle, rcc8_table_from_oracle, read_network


def main() -> None:
    allen = allen_table_from_oracle(12)
    agree = sum(ALLEN.rset(v) == ALLEN.compose(*k) for k, v in allen.items())
    print(f"Allen: {agree}/169 table entries re-derived from integer intervals 0..12")
    rcc = rcc8_table_from_oracle(5)
    agree = sum(RCC8.rset(v) == RCC8.compose(*k) for k, v in rcc.items())
    print(f"RCC-8: {agree}/64 table entries re-derived from boxes on a 5x5 grid")

    net = read_network("kitchen house {NTPP}\nhouse garden {EC}\n")
    closed = path_consistency(net)
    print("\nA kitchen inside a house that touches the garden:")
    print(closed.to_text(), end="")

    loop = read_network("breakfast lunch {before}\nlunch dinner {before}\ndinner breakfast {before}\n")
    print("\nBreakfast before lunch before dinner before breakfast is",
          "consistent" if path_consistency(loop) else "inconsistent")


if __name__ == "__main__":
    main()
