"""Cell diagrams: the two-sided row shapes that index dominant half-integer
weights occurring in spinor tensor powers.

Run:  python demos/01_weights_and_cell_diagrams.py
"""

from spincactus import (
    Weight,
    delta_membership,
    diagram_of_weight,
    enumerate_delta,
    spinor_weights,
    weight_of_diagram,
)


def picture(d):
    width = max(max(d.l), max(d.r)) + 1
    lines = []
    for li, ri in zip(d.l, d.r):
        lines.append(" " * (width - li) + "[]" * li + "|" + "[]" * ri)
    return "\n".join(lines)


def main():
    print("All sign-vector weights at rank 3 (doubled coordinates):")
    print(" ", [w.to_json() for w in spinor_weights(3)])
    print()

    lam = Weight((3, 1, 1, -1))  # (3/2, 1/2, 1/2, -1/2)
    print(f"Weight {lam} is a member at tensor power 7:", delta_membership(lam, 7))
    d = diagram_of_weight(lam, 7)
    print(f"Its diagram has l={d.l}, r={d.r}:")
    print(picture(d))
    print("Rows to the right of the axis count +1/2 steps per coordinate;")
    print("recovering the weight:", weight_of_diagram(d))
    print()

    print("Every member weight at n=2, N=3, in canonical order:")
    for w in enumerate_delta(2, 3):
        print("  ", w, "->", diagram_of_weight(w, 3).to_json())


if __name__ == "__main__":
    main()
