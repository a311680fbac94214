"""The sign-vector crystal and its tensor powers: components, top words,
and the census that matches the table count shape by shape.

Run:  python demos/03_spin_crystal.py
"""

from spincactus import SpinCrystal, diagram_of_weight, enumerate_tables
from spincactus.crystal import crystal_dot, word_label


def main():
    c = SpinCrystal(2)
    print("Rank-2 crystal on sign vectors, lowering edges:")
    print(crystal_dot(c, 1))

    big_n = 3
    comps = c.components(big_n)
    print(f"The cube of the basic crystal has {sum(x.size for x in comps)} words")
    print(f"in {len(comps)} components:")
    for comp in comps:
        print(
            f"  top {word_label(c, comp.hw_word):>8s}  weight {comp.weight}  "
            f"size {comp.size}"
        )
    print()

    print("Component count per weight equals the table count of its shape:")
    for wt, count in c.hw_census(big_n).items():
        tables = enumerate_tables(diagram_of_weight(wt, big_n))
        print(f"  {wt}: {count} tops, {len(tables)} tables")
        assert count == len(tables)
    print()

    print("Each top word reads off its table right to left:")
    w = c.highest_weight_words(big_n)[0]
    t = c.word_to_table(w)
    print(f"  word {word_label(c, w)} -> steps {[s.to_json() for s in t.steps]}")
    assert c.table_to_word(t) == w


if __name__ == "__main__":
    main()
