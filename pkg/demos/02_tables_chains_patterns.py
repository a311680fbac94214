"""The three equivalent indexing sets and the bijections between them:
regular cell tables, chains of short Young diagrams, and interlacing
patterns for the nested orthogonal family.

Run:  python demos/02_tables_chains_patterns.py
"""

from spincactus import (
    Weight,
    branch_syd,
    count_sssyt,
    diagram_of_weight,
    enumerate_gtp,
    enumerate_sssyt,
    enumerate_tables,
    f_map,
    j_inverse,
    j_map,
    table_from_steps,
    y_inverse,
    y_map,
)

WORKED_STEPS = [
    (1, 1, 1, -1),
    (1, 1, 1, 1),
    (1, -1, -1, -1),
    (1, 1, 1, 1),
    (1, -1, -1, -1),
    (-1, 1, 1, -1),
    (-1, -1, -1, 1),
]


def main():
    t = table_from_steps([Weight(s) for s in WORKED_STEPS])
    print("A length-7 table, as the sign steps of its growth:")
    for k, mu in enumerate(t.steps, 1):
        print(f"  step {k}: {mu}")
    print("Final shape:", t.shape().to_json())
    print()

    chain = y_map(t)
    print("The same object as a growing chain of partitions:")
    for k, v in enumerate(chain.chain, 1):
        print(f"  size {k}: {v.rows}")
    assert y_inverse(chain) == t
    print()

    pattern = j_map(chain)
    print("And as an interlacing pattern (top rank down to 3, plus z):")
    print("  rows:", [b.to_json() for b in pattern.betas], " z =", pattern.z)
    assert j_inverse(pattern, chain.shape) == chain
    print()

    nu = f_map(diagram_of_weight(Weight((2, 2, 2, 0)), 4))
    print(f"Shape {nu.rows}: one-step restriction gives", len(branch_syd(nu)), "summands:")
    print("  ", [v.rows for v in branch_syd(nu)])
    print()

    shape = diagram_of_weight(Weight((2, 2, 2, 0)), 4)
    n_tables = len(enumerate_tables(shape))
    n_chains = len(enumerate_sssyt(nu))
    n_patterns = len(enumerate_gtp(nu))
    print(
        f"Counting all three models for this shape: {n_tables} tables, "
        f"{n_chains} chains, {n_patterns} patterns (dp count {count_sssyt(nu)})"
    )


if __name__ == "__main__":
    main()
