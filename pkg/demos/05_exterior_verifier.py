"""Exact verification of the explicit top vectors in the exterior algebra:
annihilation by all positive operators of both commuting actions, the
two-sided weight, and the group-element signs.

Run:  python demos/05_exterior_verifier.py
"""

from spincactus import ExteriorAlgebra, Weight, enumerate_delta, kappa
from spincactus.youngt import f_map
from spincactus.celldiag import diagram_of_weight


def main():
    n, big_n = 2, 4
    alg = ExteriorAlgebra(n, big_n)
    print(f"Checking every member weight at n={n}, N={big_n}:")
    for lam in enumerate_delta(n, big_n):
        vec = alg.xi_lambda(lam)
        singular = alg.check_singular(vec)
        report = alg.weight_of_vector(vec)
        print(
            f"  {str(lam):>14s}: singular={singular.all_zero}  "
            f"row-weight={report.left.to_json()}  column-weight={report.right}"
        )
        assert singular.all_zero and report.right == lam
        assert report.left == kappa(lam, big_n)
    print()

    lam = Weight((2, -2))
    vec = alg.xi_lambda(lam)
    swapped = alg.gd_swap(vec)
    sign = "+1" if swapped == vec else "-1"
    print(f"Swapping the two middle rows acts on the {lam} vector by {sign}")

    odd = ExteriorAlgebra(2, 3)
    lam3 = Weight((1, 1))
    v3 = odd.xi_lambda(lam3)
    nu = f_map(diagram_of_weight(lam3, 3))
    flipped = odd.neg_id(v3)
    sign3 = "+1" if flipped == v3 else "-1"
    print(
        f"Negating every vector acts on the {lam3} vector by {sign3} "
        f"(its partition {nu.rows} has {nu.size()} cells)"
    )


if __name__ == "__main__":
    main()
