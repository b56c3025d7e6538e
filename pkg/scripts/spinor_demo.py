"""Build the spinor module for the flip on dim 2m and print the generator actions."""

import argparse

from bce import fixtures as fx
from bce.braid import BraidOperator, OperatorBank
from bce.clifford import CliffordAlgebra, ScalarProduct
from bce.exactlin import format_scalar
from bce.exterior import ExteriorAlgebra
from bce.spinor import Splitting, build_spinor, verify_spinor_theorem, volume_elements


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("-m", type=int, default=1)
    a = p.parse_args()
    n = 2 * a.m
    cl = CliffordAlgebra(ExteriorAlgebra(OperatorBank(BraidOperator(fx.flip(n), n), n + 1)), ScalarProduct(fx.hyperbolic_form(n)))
    s = Splitting.from_indices(range(a.m), range(a.m, n))
    sm = build_spinor(cl, s)
    v = verify_spinor_theorem(sm)
    print(f"dim cl = {cl.exterior.total_dim}, dim S = {sm.dim}, theorem {'holds' if v.passed else 'FAILS'}")
    print(f"image rank {v.details['image_rank']}, kernel rank {v.details['kernel_rank']}")
    for g, mat in sorted(sm.action.items()):
        print(f"e{g}:")
        for row in mat.to_rows():
            print("  " + " ".join(f"{format_scalar(x):>4}" for x in row))
    for omega in volume_elements(cl, s):
        print("volume element components:", {d: {k: format_scalar(c) for k, c in vec.items()} for d, vec in omega.components.items()})


if __name__ == "__main__":
    main()
