"""Named braidings and forms used as presets and test fixtures."""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from gmpy2 import mpq

from .exactlin import ONE, ExactMatrix, to_scalar

__all__ = ["flip", "neg_flip", "hecke", "hecke_split", "evaluation_form", "hyperbolic_form", "zero_form", "standard_splitting", "FIXTURES", "expand_fixture"]


def flip(n_dim: int) -> ExactMatrix:
    """tau(e_a (x) e_b) = e_b (x) e_a."""
    cols = {a * n_dim + b: {b * n_dim + a: ONE} for a in range(n_dim) for b in range(n_dim)}
    return ExactMatrix(n_dim**2, n_dim**2, cols)


def neg_flip(n_dim: int) -> ExactMatrix:
    return flip(n_dim).scale(-ONE)


def hecke(n_dim: int, q) -> ExactMatrix:
    """Standard GL_q(N) R-matrix divided by q, so (s - 1)(s + q^-2) = 0.

    s(e_i (x) e_i) = e_i (x) e_i,
    s(e_i (x) e_j) = q^-1 e_j (x) e_i                                  (i < j),
    s(e_i (x) e_j) = q^-1 e_j (x) e_i + (1 - q^-2) e_i (x) e_j         (i > j).
    The eigenvalue-1 space is the kernel of A_2, which gives the quantum-plane
    exterior dimensions.
    """
    q = to_scalar(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    qi = ONE / q
    cols: Dict[int, Dict[int, object]] = {}
    for i in range(n_dim):
        for j in range(n_dim):
            src = i * n_dim + j
            if i == j:
                cols[src] = {src: ONE}
            elif i < j:
                cols[src] = {j * n_dim + i: qi}
            else:
                col = {j * n_dim + i: qi}
                c = ONE - qi * qi
                if c != 0:
                    col[src] = c
                cols[src] = col
    return ExactMatrix(n_dim**2, n_dim**2, cols)


def hecke_split(q) -> ExactMatrix:
    """Hecke braiding on W = V (+) V*, dim V = 2, basis (e0, e1, f0, f1).

    V(x)V carries :func:`hecke`, V*(x)V* its transpose under the reversed pairing,
    and the mixed blocks are the unique pair of mutually inverse maps making the
    evaluation form F(f_i (x) e_j) = delta_ij satisfy
    (F(x)id)(id(x)s) = (id(x)F)(s(x)id).  W1 = V and W2 = V* then split W as
    required for spinors.
    """
    q = to_scalar(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    qi = ONE / q
    d = ONE - qi * qi
    e0, e1, f0, f1 = range(4)

    def t(a, b):
        return a * 4 + b

    entries = {
        t(e0, e0): {t(e0, e0): ONE},
        t(e0, e1): {t(e1, e0): qi},
        t(e1, e0): {t(e0, e1): qi, t(e1, e0): d},
        t(e1, e1): {t(e1, e1): ONE},
        t(f0, f0): {t(f0, f0): ONE},
        t(f0, f1): {t(f0, f1): d, t(f1, f0): qi},
        t(f1, f0): {t(f0, f1): qi},
        t(f1, f1): {t(f1, f1): ONE},
        # V* (x) V -> V (x) V*
        t(f0, e0): {t(e0, f0): ONE},
        t(f0, e1): {t(e1, f0): qi},
        t(f1, e0): {t(e0, f1): qi},
        t(f1, e1): {t(e1, f1): ONE, t(e0, f0): d},
        # V (x) V* -> V* (x) V, inverse of the block above
        t(e0, f0): {t(f0, e0): ONE},
        t(e0, f1): {t(f1, e0): q},
        t(e1, f0): {t(f0, e1): q},
        t(e1, f1): {t(f1, e1): ONE, t(f0, e0): -d},
    }
    cols = {j: {i: x for i, x in col.items() if x != 0} for j, col in entries.items()}
    return ExactMatrix(16, 16, cols)


def evaluation_form() -> ExactMatrix:
    """F(f_i (x) e_j) = delta_ij on the basis (e0, e1, f0, f1); zero elsewhere."""
    return hyperbolic_form(4)


def zero_form(n_dim: int) -> ExactMatrix:
    return ExactMatrix.zeros(n_dim, n_dim)


def hyperbolic_form(n_dim: int) -> ExactMatrix:
    """F(e_{m+i} (x) e_i) = 1 for i < m = N/2, all other entries zero.

    Pairs W2 = span(e_{m..N-1}) nondegenerately against W1 = span(e_0..e_{m-1}).
    """
    if n_dim % 2:
        raise ValueError("hyperbolic form needs even dimension")
    m = n_dim // 2
    return ExactMatrix(n_dim, n_dim, {i: {m + i: ONE} for i in range(m)})


def standard_splitting(n_dim: int) -> Tuple[List[int], List[int]]:
    m = n_dim // 2
    return list(range(m)), list(range(m, n_dim))


FIXTURES = ("flip", "neg-flip", "hecke-q", "hecke-split")


def expand_fixture(name: str, n_dim: int, params: Optional[Dict[str, object]] = None) -> ExactMatrix:
    params = params or {}
    if name == "flip":
        return flip(n_dim)
    if name == "neg-flip":
        return neg_flip(n_dim)
    if name == "hecke-q":
        if "q" not in params:
            raise ValueError("hecke-q fixture needs parameter q")
        return hecke(n_dim, to_scalar(params["q"]) if not isinstance(params["q"], mpq) else params["q"])
    if name == "hecke-split":
        if n_dim != 4:
            raise ValueError("hecke-split fixture lives in dimension 4")
        if "q" not in params:
            raise ValueError("hecke-split fixture needs parameter q")
        return hecke_split(params["q"])
    raise ValueError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
