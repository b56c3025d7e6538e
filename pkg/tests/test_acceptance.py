"""The nine acceptance criteria, each at its stated tolerance (exact equality)."""

import subprocess
import sys
import time
from math import comb
from pathlib import Path

import pytest

from bce import fixtures as fx
from bce.braid import BraidOperator, OperatorBank, check_word_independence, verify_decompositions
from bce.clifford import CliffordAlgebra, ScalarProduct
from bce.exactlin import ONE, ExactMatrix, rank, rref_rows, solve
from bce.exterior import ExteriorAlgebra, check_pairing_descent, check_leibniz, check_transpose
from bce.spinor import (
    Splitting,
    build_spinor,
    cartan_map,
    left_ideal_basis,
    regular_representation,
    universal_embedding,
    verify_spinor_theorem,
    volume_elements,
)
from bce.tensor import GradedElement
from conftest import ACCEPTANCE_LINES, braid, clifford, dual_exterior, exterior
from test_clifford import classical_product

ROOT = Path(__file__).resolve().parents[1]


def report(number, title, ok, note=""):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({note})" if note else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_braid_toolkit():
    start = time.perf_counter()
    ok = True
    for name in ("flip2", "flip3", "flip4", "negflip2", "hecke2"):
        bank = OperatorBank(braid(name), 6)
        ok &= verify_decompositions(bank, 6).passed
        ok &= check_word_independence(braid(name), 4).passed
    elapsed = time.perf_counter() - start
    report(1, "shuffle decompositions n+k<=6 and word independence through S_4", ok and elapsed <= 60, f"{elapsed:.1f} s")


def test_criterion_2_classical_recovery():
    ok = True
    for n_dim in (2, 3, 4):
        ext = ExteriorAlgebra(OperatorBank(BraidOperator(fx.flip(n_dim), n_dim), n_dim + 1))
        ok &= ext.dims == [comb(n_dim, k) for k in range(n_dim + 2)]
    cl = clifford("flip2")
    e0, e1 = cl.generator(0), cl.generator(1)
    ok &= cl.circ(e0, e1) + cl.circ(e1, e0) == cl.one()
    ok &= cl.exterior.total_dim == 4
    # the tensor-algebra side: the same anticommutator through lambda_F and the quotient
    x = GradedElement(2, cl.cap, {1: {0: ONE}})
    y = GradedElement(2, cl.cap, {1: {1: ONE}})
    ok &= cl.quotient(cl.tensor_circ(x, y) + cl.tensor_circ(y, x)) == cl.one()
    # full multiplication table against word straightening
    monos = [(), (0,), (1,), (0, 1)]
    images = {m: cl.one() for m in monos}
    for m in monos:
        for a in m:
            images[m] = cl.circ(images[m], cl.generator(a))
    basis = ExactMatrix(4, 4, {j: images[m].to_global() for j, m in enumerate(monos)})
    ok &= rank(basis) == 4
    for s in monos:
        for t in monos:
            coords = solve(basis, cl.circ(images[s], images[t]).to_global())
            ok &= {monos[j]: c for j, c in coords.items()} == classical_product(cl.form, 2, s, t)
    report(2, "classical dimensions and the classical Clifford algebra on dim 2", ok)


def test_criterion_3_exterior_laws():
    ok = True
    for name in ("flip2", "flip3", "flip4", "hecke2", "hecke3"):
        ext, dual = exterior(name), dual_exterior(name)
        for check in (check_leibniz, check_pairing_descent, check_transpose):
            ok &= check(ext, dual).passed
    report(3, "braided Leibniz, descent of the pairing, transpose", ok)


def test_criterion_4_associativity():
    ok = True
    for name in ("flip2", "flip4", "hecke2"):
        cl = clifford(name)
        ok &= cl.check_associativity(4).passed and cl.check_unit().passed
    report(4, "associativity and unit on basis triples of total degree <= 4", ok)


def test_criterion_5_quotient_homomorphism_and_ideal():
    ok = True
    for name in ("flip2", "flip4", "hecke2"):
        cl = clifford(name)
        ok &= cl.check_quotient_homomorphism().passed
        ok &= cl.check_ideal_correspondence().passed
    report(5, "the quotient map is a homomorphism and ker A = lambda(J_F)", ok)


def test_criterion_6_quadratic_generators():
    ok = True
    for name in ("flip2", "flip3", "flip4", "hecke2", "hecke3"):
        _, v = clifford(name, 4).quadratic_generators()
        ok &= v.passed and v.details["applicable"]
        ok &= v.details["tensor_ideal_is_J_F"] and v.details["circ_ideal_is_ker_A"]
    report(6, "quadratic generators produce J_F (and ker A on the Clifford side)", ok)


def test_criterion_7_spinor_theorem():
    start = time.perf_counter()
    ok = True
    for m in (1, 2):
        n_dim = 2 * m
        ext = ExteriorAlgebra(OperatorBank(BraidOperator(fx.flip(n_dim), n_dim), n_dim + 1))
        cl = CliffordAlgebra(ext, ScalarProduct(fx.hyperbolic_form(n_dim)))
        s = Splitting.from_indices(range(m), range(m, 2 * m))
        mu, mv = cartan_map(cl, s)
        ok &= mv.passed and mu.nrows == mu.ncols == 2 ** (2 * m) == cl.exterior.total_dim
        sm = build_spinor(cl, s)
        v = verify_spinor_theorem(sm)
        ok &= v.passed and v.details["kernel_rank"] == 0 and v.details["image_rank"] == (2**m) ** 2
    elapsed = time.perf_counter() - start
    report(7, "faithful irreducible spinor module and bijective Cartan map", ok and elapsed <= 30, f"{elapsed:.1f} s")


def test_criterion_8_universal_property_and_volume():
    ok = True
    for name, m in (("flip2", 1), ("flip4", 2)):
        cl = clifford(name)
        s = Splitting.from_indices(range(m), range(m, 2 * m))
        sm = build_spinor(cl, s)
        ident = universal_embedding(sm, sm.representation, sm.unit())
        ok &= ident.verdict.passed and ident.matrix == ExactMatrix.identity(sm.dim)
        vols = volume_elements(cl, s)
        ok &= len(vols) >= 1
        reg = regular_representation(cl)
        for omega in vols:
            emb = universal_embedding(sm, reg, omega.to_global())
            ideal = left_ideal_basis(cl, omega)
            image = [emb.matrix.column(j) for j in range(sm.dim)]
            ok &= emb.verdict.passed and len(ideal) == sm.dim and rref_rows(image) == rref_rows(ideal)
    report(8, "universal embedding of S and the volume-element left ideal", ok)


def test_criterion_9_determinism(tmp_path):
    ok = True
    bad = []
    for cfg in sorted((ROOT / "fixtures").glob("*.json")):
        outs = []
        for k in range(2):
            out = tmp_path / f"{cfg.stem}-{k}.json"
            proc = subprocess.run([sys.executable, "-m", "bce.cli", "all", "--config", str(cfg), "--report", str(out)])
            ok &= proc.returncode == 0
            outs.append(out.read_bytes())
        if outs[0] != outs[1]:
            ok = False
            bad.append(cfg.name)
    report(9, "byte-identical reports from `bce all` on every shipped fixture", ok, ", ".join(bad))
