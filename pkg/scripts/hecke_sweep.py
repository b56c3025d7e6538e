"""How the Hecke parameter changes the exterior dimensions and the quadratic check."""

import argparse

from bce import fixtures as fx
from bce.braid import BraidOperator, OperatorBank
from bce.clifford import CliffordAlgebra, ScalarProduct
from bce.exactlin import parse_scalar
from bce.exterior import ExteriorAlgebra


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--cap", type=int, default=4)
    p.add_argument("qs", nargs="*", default=["1", "2", "-1/2", "1+i", "3"])
    a = p.parse_args()
    for text in a.qs:
        q = parse_scalar(text)
        try:
            b = BraidOperator(fx.hecke(a.dim, q), a.dim)
        except ValueError as exc:
            print(f"q={text:6s} rejected: {exc}")
            continue
        ext = ExteriorAlgebra(OperatorBank(b, a.cap))
        _, v = CliffordAlgebra(ext, ScalarProduct(fx.zero_form(a.dim))).quadratic_generators()
        print(f"q={text:6s} dims={ext.dims} quadratic={'ok' if v.passed else 'FAIL'} applicable={v.details['applicable']}")


if __name__ == "__main__":
    main()
