"""Tensor powers W^{(x)n} over a fixed basis of W and operators between them.

A basis tensor e_{i_1} (x) ... (x) e_{i_n} is the integer sum_k i_k N^{n-k}
(leg 1 most significant), so W^{(x)n} has basis 0 .. N^n - 1 in
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple

from .exactlin import ONE, ExactMatrix, Vector, vec_axpy

__all__ = [
    "TensorSpace",
    "LegOperator",
    "GradedElement",
    "split_index",
    "join_index",
    "digits",
    "undigits",
    "apply_at_leg",
    "embed_at_leg",
    "compose",
    "tensor_op",
    "tensor_vectors",
    "split_vector",
    "leg_permutation",
    "CapExceededError",
]


class CapExceededError(ArithmeticError):
    """An honest result would need a degree above the configured cap."""


def digits(index: int, n_dim: int, degree: int) -> Tuple[int, ...]:
    out = []
    for _ in range(degree):
        index, r = divmod(index, n_dim)
        out.append(r)
    return tuple(reversed(out))


def undigits(ds, n_dim: int) -> int:
    index = 0
    for d in ds:
        index = index * n_dim + d
    return index


def split_index(index: int, n_dim: int, right_degree: int) -> Tuple[int, int]:
    """W^{(x)(n+k)} index -> (W^{(x)n} index, W^{(x)k} index)."""
    return divmod(index, n_dim**right_degree)


def join_index(left: int, right: int, n_dim: int, right_degree: int) -> int:
    return left * n_dim**right_degree + right


@dataclass(frozen=True)
class TensorSpace:
    dim_w: int
    degree: int

    @property
    def size(self) -> int:
        return self.dim_w**self.degree

    def basis(self) -> Iterator[Tuple[int, ...]]:
        for i in range(self.size):
            yield digits(i, self.dim_w, self.degree)

    def index(self, multi_index) -> int:
        if len(multi_index) != self.degree or any(not 0 <= d < self.dim_w for d in multi_index):
            raise IndexError(f"{multi_index} is not a multi-index of W^{self.degree}")
        return undigits(multi_index, self.dim_w)


@dataclass(frozen=True)
class LegOperator:
    """Linear map W^{(x)source_degree} -> W^{(x)target_degree}."""

    dim_w: int
    source_degree: int
    target_degree: int
    matrix: ExactMatrix = field(compare=True)

    def __post_init__(self):
        expect = (self.dim_w**self.target_degree, self.dim_w**self.source_degree)
        if self.matrix.shape != expect:
            raise ValueError(f"matrix shape {self.matrix.shape} does not match degrees, expected {expect}")

    @classmethod
    def identity(cls, dim_w: int, degree: int) -> "LegOperator":
        return cls(dim_w, degree, degree, ExactMatrix.identity(dim_w**degree))

    def apply(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def __matmul__(self, other: "LegOperator") -> "LegOperator":
        return compose(self, other)


def apply_at_leg(op_cols: Dict[int, Vector], n_dim: int, degree: int, position: int, v: Vector) -> Vector:
    """Apply a W(x)W operator (given by its columns) on legs (position, position+1).

    ``position`` is 1-based.  This is the hot loop of every permutation sum, so it
    works on raw column dicts instead of building id (x) op (x) id.
    """
    low = n_dim ** (degree - position - 1)
    block = low * n_dim * n_dim
    out: Vector = {}
    for idx, x in v.items():
        hi, rest = divmod(idx, block)
        mid, lo = divmod(rest, low)
        col = op_cols.get(mid)
        if not col:
            continue
        base = hi * block + lo
        for m2, y in col.items():
            k = base + m2 * low
            z = out.get(k)
            z = x * y if z is None else z + x * y
            if z == 0:
                del out[k]
            else:
                out[k] = z
    return out


def embed_at_leg(op: LegOperator, position: int, total_degree: int) -> LegOperator:
    """id^{(x)(position-1)} (x) op (x) id^{(x)(total-position-1)} for an operator on W(x)W."""
    if op.source_degree != 2 or op.target_degree != 2:
        raise ValueError("embed_at_leg expects an operator on W (x) W")
    if not 1 <= position <= total_degree - 1:
        raise ValueError(f"position {position} out of range for degree {total_degree}")
    n = op.dim_w
    size = n**total_degree
    cols = {j: apply_at_leg(op.matrix.cols, n, total_degree, position, {j: ONE}) for j in range(size)}
    return LegOperator(n, total_degree, total_degree, ExactMatrix(size, size, cols))


def compose(a: LegOperator, b: LegOperator) -> LegOperator:
    """a after b."""
    if a.source_degree != b.target_degree or a.dim_w != b.dim_w:
        raise ValueError(f"cannot compose degree {a.source_degree} source with degree {b.target_degree} target")
    return LegOperator(a.dim_w, b.source_degree, a.target_degree, a.matrix @ b.matrix)


def tensor_op(a: LegOperator, b: LegOperator) -> LegOperator:
    if a.dim_w != b.dim_w:
        raise ValueError("operators on different spaces")
    return LegOperator(
        a.dim_w, a.source_degree + b.source_degree, a.target_degree + b.target_degree, a.matrix.kron(b.matrix)
    )


def tensor_vectors(x: Vector, y: Vector, n_dim: int, right_degree: int) -> Vector:
    shift = n_dim**right_degree
    return {i * shift + j: a * b for i, a in x.items() for j, b in y.items()}


def split_vector(v: Vector, n_dim: int, right_degree: int) -> Dict[int, Vector]:
    """Group a W^{(x)(n+k)} vector by its left multi-index: {left: right-part}."""
    shift = n_dim**right_degree
    out: Dict[int, Vector] = {}
    for idx, x in v.items():
        left, right = divmod(idx, shift)
        out.setdefault(left, {})[right] = x
    return out


def leg_permutation(n_dim: int, images: Tuple[int, ...]) -> ExactMatrix:
    """Matrix sending the leg at position x to position images[x] (both 1-based)."""
    degree = len(images)
    size = n_dim**degree
    cols = {}
    for j in range(size):
        src = digits(j, n_dim, degree)
        dst = [0] * degree
        for x, d in enumerate(src):
            dst[images[x] - 1] = d
        cols[j] = {undigits(dst, n_dim): ONE}
    return ExactMatrix(size, size, cols)


class GradedElement:
    """Finite sum of homogeneous tensors, degrees 0..cap; absent degrees are zero."""

    __slots__ = ("dim_w", "cap", "components")

    def __init__(self, dim_w: int, cap: int, components: Dict[int, Vector] | None = None):
        self.dim_w = dim_w
        self.cap = cap
        self.components: Dict[int, Vector] = {}
        for d, v in (components or {}).items():
            if d > cap:
                raise CapExceededError(f"degree {d} exceeds cap {cap}")
            v = {k: x for k, x in v.items() if x != 0}
            if v:
                self.components[d] = v

    @classmethod
    def basis_tensor(cls, dim_w: int, cap: int, multi_index) -> "GradedElement":
        return cls(dim_w, cap, {len(multi_index): {undigits(multi_index, dim_w): ONE}})

    @classmethod
    def one(cls, dim_w: int, cap: int) -> "GradedElement":
        return cls(dim_w, cap, {0: {0: ONE}})

    def degree(self) -> int:
        return max(self.components, default=-1)

    def __add__(self, other: "GradedElement") -> "GradedElement":
        comps = {d: dict(v) for d, v in self.components.items()}
        for d, v in other.components.items():
            comps[d] = vec_axpy(comps.get(d, {}), v)
        return GradedElement(self.dim_w, max(self.cap, other.cap), comps)

    def scale(self, c) -> "GradedElement":
        return GradedElement(self.dim_w, self.cap, {d: {k: c * x for k, x in v.items()} for d, v in self.components.items()} if c != 0 else {})

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + other.scale(-ONE)

    def tensor(self, other: "GradedElement") -> "GradedElement":
        comps: Dict[int, Vector] = {}
        for p, x in self.components.items():
            for q, y in other.components.items():
                if p + q > self.cap:
                    raise CapExceededError(f"tensor product reaches degree {p + q} above cap {self.cap}")
                vec_axpy(comps.setdefault(p + q, {}), tensor_vectors(x, y, self.dim_w, q))
        return GradedElement(self.dim_w, self.cap, comps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.dim_w == other.dim_w and self.components == other.components

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"GradedElement(dim_w={self.dim_w}, degrees={sorted(self.components)})"
