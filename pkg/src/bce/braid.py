"""Braid operators and the permutation sums built from them.

Conventions: a permutation is given in one-line notation ``images`` on {1..n}
and acts on legs, moving the leg at position x to position ``images[x-1]``.
Products compose as functions, ``(p*q)(x) = p(q(x))``, and the twist of a
reduced word ``[i_1, ..., i_k]`` is ``sigma_{i_1} ... sigma_{i_k}`` where
``sigma_i`` acts on legs (i, i+1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .exactlin import ONE, ExactMatrix, Vector, inverse, vec_axpy
from .tensor import CapExceededError, LegOperator, apply_at_leg, digits
from .verdict import Verdict

__all__ = [
    "Permutation",
    "BraidOperator",
    "OperatorBank",
    "check_braid_equation",
    "reduced_word",
    "all_reduced_words",
    "shuffles",
    "sigma_pi",
    "antisymmetrizer",
    "shuffle_operators",
    "verify_decompositions",
    "check_word_independence",
    "naive_antisymmetrizer",
    "dual_braiding",
    "mixed_braiding",
    "mixed_braiding_inverse",
    "reversal",
    "pairing_transpose",
]


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        """The adjacent transposition s_i = (i i+1) in S_n."""
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(tuple(im))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[other.images[x] - 1] for x in range(other.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def length(self) -> int:
        im = self.images
        return sum(1 for a, b in itertools.combinations(range(self.n), 2) if im[a] > im[b])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    @classmethod
    def from_word(cls, n: int, word: Sequence[int]) -> "Permutation":
        p = cls.identity(n)
        for i in word:
            p = p * cls.simple(n, i)
        return p


def reduced_word(p: Permutation) -> List[int]:
    """Canonical reduced word by bubble sort: the largest misplaced value moves right first."""
    w = list(p.images)
    sorting: List[int] = []
    for value in range(p.n, 0, -1):
        pos = w.index(value)
        while pos < value - 1:
            # right multiplication by s_{pos+1} swaps positions pos+1, pos+2
            w[pos], w[pos + 1] = w[pos + 1], w[pos]
            sorting.append(pos + 1)
            pos += 1
    # p * s_{j_1} ... s_{j_m} = id  =>  p = s_{j_m} ... s_{j_1}
    return sorting[::-1]


def all_reduced_words(p: Permutation) -> List[List[int]]:
    """Every reduced word of p (exponential; intended for small n)."""
    if p.length() == 0:
        return [[]]
    out = []
    im = p.images
    for i in range(1, p.n):
        if im[i - 1] > im[i]:  # right descent: p = (p s_i) s_i with shorter p s_i
            shorter = p * Permutation.simple(p.n, i)
            out.extend(w + [i] for w in all_reduced_words(shorter))
    return out


def shuffles(n: int, k: int) -> Iterator[Permutation]:
    """(n, k)-shuffles: permutations increasing on {1..n} and on {n+1..n+k}."""
    total = n + k
    for first in itertools.combinations(range(1, total + 1), n):
        rest = [x for x in range(1, total + 1) if x not in first]
        yield Permutation(tuple(first) + tuple(rest))


def _as_cols(m) -> Dict[int, Vector]:
    return m.cols if isinstance(m, ExactMatrix) else m


def _apply_word(op_cols, n_dim: int, degree: int, word: Sequence[int], v: Vector) -> Vector:
    # sigma_{i_1} ... sigma_{i_k} v: the rightmost letter acts first
    for i in reversed(word):
        v = apply_at_leg(op_cols, n_dim, degree, i, v)
    return v


def _leg_matrix(n_dim: int, degree: int, fn) -> ExactMatrix:
    size = n_dim**degree
    return ExactMatrix(size, size, {j: fn({j: ONE}) for j in range(size)})


def check_braid_equation(m: ExactMatrix, n_dim: int) -> Verdict:
    """(s(x)id)(id(x)s)(s(x)id) == (id(x)s)(s(x)id)(id(x)s) exactly, and s invertible."""
    if m.shape != (n_dim * n_dim, n_dim * n_dim):
        raise ValueError(f"braid matrix must be {n_dim**2}x{n_dim**2}, got {m.shape}")
    try:
        inverse(m)
    except ZeroDivisionError:
        return Verdict("braid_equation", False, witness={"reason": "not invertible"})
    cols = m.cols
    for j in range(n_dim**3):
        v = {j: ONE}
        lhs = _apply_word(cols, n_dim, 3, [1, 2, 1], v)
        rhs = _apply_word(cols, n_dim, 3, [2, 1, 2], v)
        if lhs != rhs:
            return Verdict(
                "braid_equation",
                False,
                witness={"basis_vector": list(digits(j, n_dim, 3)), "lhs": lhs, "rhs": rhs},
            )
    return Verdict("braid_equation", True)


class BraidOperator:
    """An invertible solution of the braid equation on W (x) W."""

    def __init__(self, matrix: ExactMatrix, dim_w: int, *, check: bool = True):
        if matrix.shape != (dim_w * dim_w, dim_w * dim_w):
            raise ValueError(f"braid matrix must be {dim_w**2}x{dim_w**2}, got {matrix.shape}")
        self.dim_w = dim_w
        self.matrix = matrix
        self.inverse = inverse(matrix)
        if check:
            verdict = check_braid_equation(matrix, dim_w)
            if not verdict.passed:
                raise ValueError(f"not a braid operator: {verdict.witness}")

    def as_leg_operator(self) -> LegOperator:
        return LegOperator(self.dim_w, 2, 2, self.matrix)

    def inverse_braiding(self) -> "BraidOperator":
        return BraidOperator(self.inverse, self.dim_w, check=False)

    def __eq__(self, other):
        if not isinstance(other, BraidOperator):
            return NotImplemented
        return self.dim_w == other.dim_w and self.matrix == other.matrix

    __hash__ = None  # type: ignore[assignment]


def sigma_pi(b: BraidOperator, p: Permutation, word: Optional[Sequence[int]] = None) -> LegOperator:
    """The sigma-twist of p along ``word`` (default: the canonical reduced word)."""
    word = reduced_word(p) if word is None else list(word)
    n = p.n
    if n == 0:
        return LegOperator.identity(b.dim_w, 0)
    m = _leg_matrix(b.dim_w, n, lambda v: _apply_word(b.matrix.cols, b.dim_w, n, word, v))
    return LegOperator(b.dim_w, n, n, m)


def antisymmetrizer(b: BraidOperator, n: int, cap: Optional[int] = None) -> LegOperator:
    """A_n = sum over S_n of sign(p) sigma_p.

    S_n is walked along a spanning tree of left multiplications by adjacent
    transpositions (each length-increasing), so every new term costs a single
    twist applied to the parent's operator.
    """
    if cap is not None and n > cap:
        raise CapExceededError(f"A_{n} requested above cap {cap}")
    N = b.dim_w
    size = N**n
    if n <= 1:
        return LegOperator.identity(N, n)
    cols_s = b.matrix.cols
    total: Dict[int, Vector] = {j: {j: ONE} for j in range(size)}
    # node: (one-line images 0-based, position-of-value table, columns of sigma_p, sign)
    stack = [(tuple(range(n)), {j: {j: ONE} for j in range(size)}, 1)]
    while stack:
        perm, cols, sgn = stack.pop()
        pos = [0] * n
        for x, y in enumerate(perm):
            pos[y] = x
        for i in range(n - 1):
            if pos[i] > pos[i + 1]:
                continue  # s_i p would be shorter
            # child s_i p swaps values i, i+1; parent rule: smallest left descent of child is i
            cpos = list(pos)
            cpos[i], cpos[i + 1] = cpos[i + 1], cpos[i]
            first_desc = next(j for j in range(n - 1) if cpos[j] > cpos[j + 1])
            if first_desc != i:
                continue
            child = tuple(i + 1 if y == i else i if y == i + 1 else y for y in perm)
            # values are positions after the move: s_i on the leg images means twist at legs (i+1, i+2)
            ccols = {j: apply_at_leg(cols_s, N, n, i + 1, c) for j, c in cols.items()}
            ccols = {j: c for j, c in ccols.items() if c}
            csgn = -sgn
            for j, c in ccols.items():
                tot = total.get(j)
                if tot is None:
                    tot = total[j] = {}
                vec_axpy(tot, c, csgn)
            stack.append((child, ccols, csgn))
    return LegOperator(N, n, n, ExactMatrix(size, size, total))


def _shuffle_sum(b: BraidOperator, n: int, k: int, invert: bool) -> LegOperator:
    N = b.dim_w
    total = n + k
    size = N**total
    acc: Dict[int, Vector] = {}
    for p in shuffles(n, k):
        word = reduced_word(p)
        if invert:
            word = word[::-1]  # reduced word of p^{-1}
        sgn = -ONE if len(word) % 2 else ONE
        for j in range(size):
            v = _apply_word(b.matrix.cols, N, total, word, {j: ONE})
            vec_axpy(acc.setdefault(j, {}), v, sgn)
    return LegOperator(N, total, total, ExactMatrix(size, size, acc))


def shuffle_operators(b: BraidOperator, n: int, k: int, cap: Optional[int] = None) -> Tuple[LegOperator, LegOperator]:
    """(A_nk, B_nk): signed sums of sigma_{p^{-1}} resp. sigma_p over (n, k)-shuffles."""
    if cap is not None and n + k > cap:
        raise CapExceededError(f"shuffle operators of degree {n + k} above cap {cap}")
    return _shuffle_sum(b, n, k, invert=True), _shuffle_sum(b, n, k, invert=False)


def dual_braiding(b: BraidOperator) -> BraidOperator:
    """sigma* on W*(x)W*, transposed to sigma under the order-reversing pairing.

    With <f_c (x) f_d, e_a (x) e_b> = delta_{c,b} delta_{d,a}, the transpose of an
    operator T is R T^t R with R the leg reversal, so
    sigma*[(c,d),(a,b)] = sigma[(b,a),(d,c)].
    """
    return BraidOperator(pairing_transpose(b.matrix, b.dim_w, 2), b.dim_w, check=False)


def reversal(n_dim: int, degree: int) -> ExactMatrix:
    size = n_dim**degree
    cols = {}
    for j in range(size):
        ds = digits(j, n_dim, degree)
        r = 0
        for d in reversed(ds):
            r = r * n_dim + d
        cols[j] = {r: ONE}
    return ExactMatrix(size, size, cols)


def pairing_transpose(m: ExactMatrix, n_dim: int, degree: int, target_degree: Optional[int] = None) -> ExactMatrix:
    """Transpose of ``m`` (W^{(x)degree} -> W^{(x)target}) under the order-reversing pairing."""
    target_degree = degree if target_degree is None else target_degree
    rs = reversal(n_dim, degree)
    rt = reversal(n_dim, target_degree)
    return rs @ m.transpose() @ rt


def _mixed_word(n: int, k: int) -> List[int]:
    # leg x -> x + k for x <= n, leg n + j -> j
    p = Permutation(tuple(range(k + 1, k + n + 1)) + tuple(range(1, k + 1)))
    return reduced_word(p)


def mixed_braiding(b: BraidOperator, n: int, k: int, cap: Optional[int] = None) -> LegOperator:
    """Iterated twist W^{(x)n} (x) W^{(x)k} -> W^{(x)k} (x) W^{(x)n}."""
    if cap is not None and n + k > cap:
        raise CapExceededError(f"mixed braiding of degree {n + k} above cap {cap}")
    word = _mixed_word(n, k)
    N = b.dim_w
    m = _leg_matrix(N, n + k, lambda v: _apply_word(b.matrix.cols, N, n + k, word, v))
    return LegOperator(N, n + k, n + k, m)


def mixed_braiding_inverse(b: BraidOperator, n: int, k: int, cap: Optional[int] = None) -> LegOperator:
    """Inverse of :func:`mixed_braiding` (n, k): W^{(x)k} (x) W^{(x)n} -> W^{(x)n} (x) W^{(x)k}."""
    if cap is not None and n + k > cap:
        raise CapExceededError(f"mixed braiding of degree {n + k} above cap {cap}")
    word = _mixed_word(n, k)
    N = b.dim_w
    inv_cols = b.inverse.cols

    def apply(v):
        for i in word:  # inverse: reversed order, inverse letters
            v = apply_at_leg(inv_cols, N, n + k, i, v)
        return v

    return LegOperator(N, n + k, n + k, _leg_matrix(N, n + k, apply))


class OperatorBank:
    """Lazily populated A_n and (A_nk, B_nk) for one braiding, up to ``cap``."""

    def __init__(self, braiding: BraidOperator, cap: int = 6):
        self.braiding = braiding
        self.cap = cap
        self._antisym: Dict[int, LegOperator] = {}
        self._shuffles: Dict[Tuple[int, int], Tuple[LegOperator, LegOperator]] = {}
        self._mixed: Dict[Tuple[int, int], LegOperator] = {}
        self._mixed_inv: Dict[Tuple[int, int], LegOperator] = {}

    @property
    def dim_w(self) -> int:
        return self.braiding.dim_w

    def antisym(self, n: int) -> LegOperator:
        if n not in self._antisym:
            self._antisym[n] = antisymmetrizer(self.braiding, n, self.cap)
        return self._antisym[n]

    def shuffle(self, n: int, k: int) -> Tuple[LegOperator, LegOperator]:
        if (n, k) not in self._shuffles:
            self._shuffles[(n, k)] = shuffle_operators(self.braiding, n, k, self.cap)
        return self._shuffles[(n, k)]

    def A(self, n: int, k: int) -> LegOperator:
        return self.shuffle(n, k)[0]

    def B(self, n: int, k: int) -> LegOperator:
        return self.shuffle(n, k)[1]

    def mixed(self, n: int, k: int) -> LegOperator:
        if (n, k) not in self._mixed:
            self._mixed[(n, k)] = mixed_braiding(self.braiding, n, k, self.cap)
        return self._mixed[(n, k)]

    def mixed_inverse(self, n: int, k: int) -> LegOperator:
        if (n, k) not in self._mixed_inv:
            self._mixed_inv[(n, k)] = mixed_braiding_inverse(self.braiding, n, k, self.cap)
        return self._mixed_inv[(n, k)]

    @cached_property
    def dual(self) -> "OperatorBank":
        return OperatorBank(dual_braiding(self.braiding), self.cap)

    def populate(self) -> "OperatorBank":
        for n in range(self.cap + 1):
            self.antisym(n)
        for total in range(self.cap + 1):
            for n in range(total + 1):
                self.shuffle(n, total - n)
        return self


def verify_decompositions(bank: OperatorBank, max_total: Optional[int] = None) -> Verdict:
    """A_{n+k} == (A_n (x) A_k) A_nk == B_nk (A_n (x) A_k) for all n + k <= max_total."""
    top = bank.cap if max_total is None else max_total
    checked = 0
    for total in range(top + 1):
        a_total = bank.antisym(total).matrix
        for n in range(total + 1):
            k = total - n
            a_nk, b_nk = bank.shuffle(n, k)
            outer = bank.antisym(n).matrix.kron(bank.antisym(k).matrix)
            if outer @ a_nk.matrix != a_total:
                return Verdict("decompositions", False, witness={"identity": "A=(An x Ak)Ank", "n": n, "k": k})
            if b_nk.matrix @ outer != a_total:
                return Verdict("decompositions", False, witness={"identity": "A=Bnk(An x Ak)", "n": n, "k": k})
            checked += 1
    return Verdict("decompositions", True, details={"pairs_checked": checked, "max_total": top})


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def check_word_independence(b: BraidOperator, max_n: int = 4) -> Verdict:
    """sigma_pi is the same along every reduced word of pi, for all pi in S_n, n <= max_n."""
    checked = 0
    for n in range(2, max_n + 1):
        for p in all_permutations(n):
            words = all_reduced_words(p)
            ref = sigma_pi(b, p, words[0]).matrix
            for w in words[1:]:
                if sigma_pi(b, p, w).matrix != ref:
                    return Verdict("word_independence", False, witness={"permutation": list(p.images), "words": [words[0], w]})
                checked += 1
    return Verdict("word_independence", True, details={"word_pairs": checked, "max_n": max_n})


def naive_antisymmetrizer(b: BraidOperator, n: int) -> ExactMatrix:
    """Oracle: sum over S_n of sign * sigma_pi, each built from scratch along its canonical word."""
    N = b.dim_w
    out = ExactMatrix.zeros(N**n, N**n)
    for p in all_permutations(n):
        term = sigma_pi(b, p).matrix if n else ExactMatrix.identity(1)
        out = out + (term if p.sign() > 0 else term.scale(-ONE))
    return out


def shuffle_count(n: int, k: int) -> int:
    return comb(n + k, n)
