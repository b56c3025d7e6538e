"""Exact arithmetic over the Gaussian rationals Q(i) and sparse exact linear algebra.

Scalars are carried as ``gmpy2.mpq`` whenever the imaginary part vanishes and as
:class:`GaussianRational` otherwise; both expose ``.real`` / ``.imag``.  Every
arithmetic result is normalised back to ``mpq`` when its imaginary part is zero,
so the real fixtures never pay for complex bookkeeping.

Vectors are sparse ``dict[int, Scalar]`` without stored zeros.  Matrices are
column-oriented sparse maps (:class:`ExactMatrix`).
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from gmpy2 import mpq

__all__ = [
    "GaussianRational",
    "Scalar",
    "to_scalar",
    "parse_scalar",
    "format_scalar",
    "ScalarSyntaxError",
    "ExactMatrix",
    "Vector",
    "vec_add",
    "vec_axpy",
    "vec_scale",
    "vec_sub",
    "rref_rows",
    "rank",
    "nullspace_basis",
    "solve",
    "column_space_basis",
    "pivot_columns",
    "inverse",
]

ZERO = mpq(0)
ONE = mpq(1)


class GaussianRational:
    """a + b*i with a, b rational and b != 0 (use :func:`to_scalar` to build)."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = mpq(re)
        self.im = mpq(im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def conjugate(self):
        return _mk(self.re, -self.im)

    def __add__(self, o):
        if isinstance(o, GaussianRational):
            return _mk(self.re + o.re, self.im + o.im)
        return _mk(self.re + o, self.im)

    __radd__ = __add__

    def __sub__(self, o):
        if isinstance(o, GaussianRational):
            return _mk(self.re - o.re, self.im - o.im)
        return _mk(self.re - o, self.im)

    def __rsub__(self, o):
        return _mk(o - self.re, -self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, o):
        if isinstance(o, GaussianRational):
            return _mk(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
        return _mk(self.re * o, self.im * o)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, GaussianRational):
            d = o.re * o.re + o.im * o.im
            return _mk((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)
        return _mk(self.re / o, self.im / o)

    def __rtruediv__(self, o):
        d = self.re * self.re + self.im * self.im
        return _mk(o * self.re / d, -o * self.im / d)

    def __eq__(self, o):
        if isinstance(o, GaussianRational):
            return self.re == o.re and self.im == o.im
        try:
            return False if self.im != 0 else self.re == o
        except TypeError:
            return NotImplemented

    def __ne__(self, o):
        r = self.__eq__(o)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)})"


Scalar = Union[mpq, GaussianRational]
Vector = Dict[int, Scalar]


def _mk(re, im):
    if im == 0:
        return re
    return GaussianRational(re, im)


def to_scalar(x, im=0) -> Scalar:
    """Coerce ints, strings, Fractions, mpq or GaussianRational to a canonical scalar."""
    if isinstance(x, GaussianRational):
        return x if im == 0 else x + to_scalar(im) * GaussianRational(0, 1)
    if isinstance(x, str):
        s = parse_scalar(x)
        return s if im == 0 else s + to_scalar(im) * GaussianRational(0, 1)
    if isinstance(x, complex):
        raise TypeError("floating-point complex numbers are not exact scalars")
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars")
    if isinstance(im, str):
        im = parse_scalar(im)
    return _mk(mpq(x), mpq(im))


class ScalarSyntaxError(ValueError):
    pass


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^(?P<re>{_RAT})?(?:(?P<im>[+-]|{_RAT})?\*?i)?$")


def _parse_rat(text: str) -> mpq:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ScalarSyntaxError(f"zero denominator in {text!r}")
        return mpq(int(num), int(den))
    return mpq(int(text))


def parse_scalar(text: str) -> Scalar:
    """Parse ``a/b`` or ``a/b+c/d*i`` (whitespace ignored, denominators optional).

    >>> format_scalar(parse_scalar(" 3/6 - 1/2*i "))
    '1/2-1/2*i'
    """
    if not isinstance(text, str):
        raise ScalarSyntaxError(f"scalar must be given as a string, got {text!r}")
    s = "".join(text.split())
    if not s:
        raise ScalarSyntaxError("empty scalar")
    m = _SCALAR_RE.match(s)
    if m is None or (m.group("re") is None and not s.endswith("i")):
        raise ScalarSyntaxError(f"malformed scalar {text!r}")
    re_txt, im_txt = m.group("re"), m.group("im")
    has_im = s.endswith("i")
    if has_im and re_txt is not None and im_txt is None:
        # "3*i" or "3i": the lone rational is the imaginary part
        re_txt, im_txt = None, re_txt
    re_val = _parse_rat(re_txt) if re_txt is not None else ZERO
    if not has_im:
        return re_val
    if im_txt in (None, "+"):
        im_val = ONE
    elif im_txt == "-":
        im_val = -ONE
    else:
        im_val = _parse_rat(im_txt)
    return _mk(re_val, im_val)


def _fmt_rat(q) -> str:
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical text: ``3``, ``-1/2``, ``1/2+3/4*i``, ``0-1*i``."""
    im = x.imag
    if im == 0:
        return _fmt_rat(x.real)
    sign = "-" if im < 0 else "+"
    return f"{_fmt_rat(x.real)}{sign}{_fmt_rat(abs(mpq(im)))}*i"


# -- sparse vectors ---------------------------------------------------------


def vec_axpy(acc: Vector, v: Vector, c=ONE) -> Vector:
    """acc += c*v in place; returns acc."""
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y == 0:
            acc.pop(k, None)
        else:
            acc[k] = y
    return acc


def vec_add(a: Vector, b: Vector) -> Vector:
    return vec_axpy(dict(a), b)


def vec_sub(a: Vector, b: Vector) -> Vector:
    return vec_axpy(dict(a), b, -ONE)


def vec_scale(v: Vector, c) -> Vector:
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items()}


# -- matrices ---------------------------------------------------------------


class ExactMatrix:
    """Sparse exact matrix stored by columns: ``cols[j] = {i: value}``.

    Instances are treated as immutable once built.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[Dict[int, Vector]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = {j: c for j, c in (cols or {}).items() if c}

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {j: {j: ONE} for j in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls(nrows, ncols, {})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols: Dict[int, Vector] = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                x = to_scalar(x)
                if x != 0:
                    cols.setdefault(j, {})[i] = x
        return cls(nrows, ncols, cols)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Vector]) -> "ExactMatrix":
        return cls(nrows, len(columns), {j: dict(c) for j, c in enumerate(columns)})

    def entry(self, i: int, j: int) -> Scalar:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols} matrix")
        return self.cols.get(j, {}).get(i, ZERO)

    def column(self, j: int) -> Vector:
        if not 0 <= j < self.ncols:
            raise IndexError(f"column {j} outside {self.ncols}-column matrix")
        return self.cols.get(j, {})

    def to_rows(self) -> List[List[Scalar]]:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for j, c in self.cols.items():
            for i, x in c.items():
                out[i][j] = x
        return out

    def sparse_rows(self) -> List[Vector]:
        rows: List[Vector] = [{} for _ in range(self.nrows)]
        for j in sorted(self.cols):
            for i, x in self.cols[j].items():
                rows[i][j] = x
        return rows

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        cols = self.cols
        for j, x in v.items():
            c = cols.get(j)
            if c:
                vec_axpy(out, c, x)
        return out

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        return ExactMatrix(self.nrows, other.ncols, {j: self.apply(c) for j, c in other.cols.items()})

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, c in other.cols.items():
            cols[j] = vec_axpy(cols.get(j, {}), c)
        return ExactMatrix(self.nrows, self.ncols, cols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-ONE)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix(self.nrows, self.ncols, {j: vec_scale(v, c) for j, v in self.cols.items()})

    def transpose(self) -> "ExactMatrix":
        cols: Dict[int, Vector] = {}
        for j, c in self.cols.items():
            for i, x in c.items():
                cols.setdefault(i, {})[j] = x
        return ExactMatrix(self.ncols, self.nrows, cols)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product, first factor most significant."""
        cols: Dict[int, Vector] = {}
        orows, ocols = other.nrows, other.ncols
        for j1, c1 in self.cols.items():
            for j2, c2 in other.cols.items():
                cols[j1 * ocols + j2] = {
                    i1 * orows + i2: x1 * x2 for i1, x1 in c1.items() for i2, x2 in c2.items()
                }
        return ExactMatrix(self.nrows * orows, self.ncols * ocols, cols)

    def is_zero(self) -> bool:
        return not self.cols

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


# -- elimination ------------------------------------------------------------


def rref_rows(rows: Iterable[Vector]) -> List[Tuple[int, Vector]]:
    """Reduced row echelon form of the span of ``rows``.

    Returns ``(pivot_column, row)`` pairs sorted by pivot, each row normalised to 1
    at its pivot and zero at every other pivot.  The RREF is unique, so the result
    does not depend on the order in which rows are fed in.
    """
    basis: Dict[int, Vector] = {}
    for row in rows:
        r = {k: v for k, v in row.items() if v != 0}
        for p in [p for p in r if p in basis]:
            c = r.get(p)
            if c is not None:
                vec_axpy(r, basis[p], -c)
        if not r:
            continue
        p = min(r)
        inv = ONE / r[p]
        r = {k: x * inv for k, x in r.items()}
        for q, other in basis.items():
            c = other.get(p)
            if c is not None:
                vec_axpy(other, r, -c)
        basis[p] = r
    return sorted(basis.items())


def rank(m: ExactMatrix) -> int:
    # column rank via the (usually smaller) stored columns
    return len(rref_rows(m.cols.values()))


def pivot_columns(m: ExactMatrix) -> List[int]:
    """Columns of ``m`` that carry pivots of its RREF (a maximal independent set)."""
    return [p for p, _ in rref_rows(m.sparse_rows())]


def column_space_basis(m: ExactMatrix) -> List[Tuple[int, Vector]]:
    """Canonical echelon basis of the column space as ``(pivot_row, vector)`` pairs."""
    return rref_rows(m.cols[j] for j in sorted(m.cols))


def nullspace_basis(m: ExactMatrix) -> List[Vector]:
    """Kernel basis in reduced echelon convention, one vector per free column."""
    reduced = rref_rows(m.sparse_rows())
    pivots = {p for p, _ in reduced}
    out = []
    for f in range(m.ncols):
        if f in pivots:
            continue
        v: Vector = {f: ONE}
        for p, row in reduced:
            c = row.get(f)
            if c is not None:
                v[p] = -c
        out.append(v)
    return out


def solve(m: ExactMatrix, b: Vector) -> Optional[Vector]:
    """An exact solution of ``m x = b`` (free variables set to zero) or ``None``."""
    if any(not 0 <= i < m.nrows for i in b):
        raise ValueError(f"right-hand side does not fit a {m.nrows}-row matrix")
    rows = m.sparse_rows()
    aug = m.ncols
    for i, x in b.items():
        rows[i][aug] = x
    x: Vector = {}
    for p, row in rref_rows(rows):
        if p == aug:
            return None
        c = row.get(aug)
        if c is not None:
            x[p] = c
    return x


def inverse(m: ExactMatrix) -> ExactMatrix:
    if m.nrows != m.ncols:
        raise ValueError("only square matrices are invertible")
    n = m.ncols
    rows = m.sparse_rows()
    for i in range(n):
        rows[i][n + i] = ONE
    reduced = rref_rows(rows)
    if len(reduced) < n or reduced[n - 1][0] >= n:
        raise ZeroDivisionError("matrix is singular")
    cols: Dict[int, Vector] = {}
    for p, row in reduced:
        for k, x in row.items():
            if k >= n:
                cols.setdefault(k - n, {})[p] = x
    return ExactMatrix(n, n, cols)
