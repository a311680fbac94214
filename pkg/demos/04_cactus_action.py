"""The segment-reversal group acting on cell tables through the crystal
commutor, with orbits and the induced action on interlacing patterns.

Run:  python demos/04_cactus_action.py
"""

from spincactus import (
    SpinCrystal,
    Weight,
    XiCache,
    act_on_table,
    diagram_of_weight,
    enumerate_delta,
    enumerate_tables,
    j_map,
    orbit,
    parse_cactus_word,
    word_to_permutation,
    y_map,
)


def main():
    n, big_n = 2, 4
    crystal = SpinCrystal(n)
    cache = XiCache(crystal)
    gens = [(p, q) for p in range(1, big_n + 1) for q in range(p + 1, big_n + 1)]

    print(f"Generators s(p,q) at N={big_n} and their segment reversals:")
    for gen in gens:
        print(f"  s{gen} -> permutation {word_to_permutation([gen], big_n)}")
    print()

    lam = Weight((2, 0))
    tables = enumerate_tables(diagram_of_weight(lam, big_n))
    print(f"Shape of weight {lam}: {len(tables)} tables. Action of s(1,4):")
    for t in tables:
        image = act_on_table(cache, [(1, 4)], t)
        print(f"  {t.to_json()['steps2']} -> {image.to_json()['steps2']}")
    print()

    print("Orbits under the full generator set, shape by shape:")
    for lam in enumerate_delta(n, big_n):
        tables = enumerate_tables(diagram_of_weight(lam, big_n))
        seen = set()
        sizes = []
        for t in tables:
            if t in seen:
                continue
            orb = orbit(cache, t, gens)
            seen |= set(orb)
            sizes.append(len(orb))
        print(f"  {lam}: {len(tables)} tables split into orbits {sorted(sizes)}")
    print()

    word = parse_cactus_word("s(1,3) s(2,4)")
    pair = None
    for lam in enumerate_delta(n, big_n):
        for t in enumerate_tables(diagram_of_weight(lam, big_n)):
            moved = act_on_table(cache, word, t)
            if moved != t:
                pair = (t, moved)
                break
        if pair:
            break
    t, moved = pair
    print('The word "s(1,3) s(2,4)" moves a table, hence its pattern:')
    print("  before:", j_map(y_map(t)).to_json())
    print("  after: ", j_map(y_map(moved)).to_json())


if __name__ == "__main__":
    main()
