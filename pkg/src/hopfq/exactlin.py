"""Exact dense linear algebra over Q and F_p.

Morphisms are matrices acting on column vectors: ``f: V -> W`` is stored as a
``dim W x dim V`` array whose column ``j`` is the image of basis vector ``j``.
Tensor products use row-major index pairing, so basis vector ``(i, j)`` of
``V (x) W`` has index ``i * dim W + j``.

A matrix over Q is kept as an integer numerator array with one common
positive denominator, normalised so the gcd of all numerators and the
denominator is 1.  Over F_p the numerators are residues in ``[0, p)`` and the
denominator is 1.  Numerators sit in int64 arrays while entries are small and
fall back to Python integers otherwise.  Elimination goes through FLINT.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import prod

import flint
import numpy as np


class LinAlgError(ValueError):
    pass


class FieldMismatch(LinAlgError):
    pass


class ShapeMismatch(LinAlgError):
    pass


class Singular(LinAlgError):
    pass


class NonSquare(LinAlgError):
    pass


class FactorizationFailed(LinAlgError):
    """A target does not factor through the given injection."""


_SAFE = 2**62
_FLOAT_EXACT = 2**53


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Q when ``p`` is None, otherwise the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"characteristic must be prime, got {self.p!r}")

    @classmethod
    def rationals(cls):
        return cls(None)

    @classmethod
    def prime(cls, p):
        return cls(p)

    @classmethod
    def parse(cls, text):
        """Accepts ``Q`` or ``Fp:<p>`` (also ``F<p>``)."""
        t = text.strip()
        if t in ("Q", "QQ", "rationals"):
            return cls(None)
        for prefix in ("Fp:", "GF:", "F"):
            if t.startswith(prefix):
                try:
                    return cls(int(t[len(prefix):]))
                except ValueError:
                    break
        raise ValueError(f"unrecognised field {text!r}")

    @property
    def is_rational(self):
        return self.p is None

    def __str__(self):
        return "Q" if self.p is None else f"Fp:{self.p}"

    # scalars

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def __call__(self, x):
        """Coerce an int, Fraction, FLINT scalar or scalar string into this field."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if isinstance(x, flint.fmpq):
            x = Fraction(int(x.p), int(x.q))
        elif isinstance(x, (flint.fmpz, flint.nmod, np.integer)):
            x = int(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def parse_scalar(self, s):
        s = s.strip()
        if self.p is None:
            if "/" in s:
                a, b = s.split("/")
                return Fraction(int(a), int(b))
            return Fraction(int(s))
        v = int(s)
        if not 0 <= v < self.p:
            raise ValueError(f"residue {s!r} not reduced mod {self.p}")
        return v

    def format_scalar(self, x):
        if self.p is None:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(int(x) % self.p)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def reduce(self, arr):
        if self.p is None:
            return arr
        return arr % self.p

    def elements(self):
        """All field elements (F_p only)."""
        if self.p is None:
            raise ValueError("Q is infinite")
        return range(self.p)


QQ = FieldSpec()


# -- integer array helpers --------------------------------------------------


def _maxabs(a):
    if a.size == 0:
        return 0
    if a.dtype == object:
        return int(max(a.max(), -a.min()))
    return int(np.abs(a).max())


def _shrink(a):
    """int64 version of an integer array when the entries allow it."""
    if a.dtype == object:
        if _maxabs(a) < _SAFE:
            return a.astype(np.int64)
        return a
    if a.dtype != np.int64:
        return a.astype(np.int64)
    return a


def _wide(a):
    return a if a.dtype == object else a.astype(object)


def _gcd_all(a):
    if a.size == 0:
        return 0
    if a.dtype == object:
        return reduce(math.gcd, (int(x) for x in a.flat), 0)
    return int(np.gcd.reduce(np.abs(a).ravel()))


def _matmul_int(a, b):
    inner = a.shape[1]
    if a.shape[0] == 0 or b.shape[1] == 0 or inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if a.dtype != object and b.dtype != object:
        bound = _maxabs(a) * _maxabs(b) * inner
        if bound < _FLOAT_EXACT:
            # every partial sum is an integer below 2^53, so BLAS is exact
            return (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        if bound < _SAFE:
            return a @ b
    za = flint.fmpz_mat(a.shape[0], inner, [int(x) for x in a.flat])
    zb = flint.fmpz_mat(inner, b.shape[1], [int(x) for x in b.flat])
    out = np.array([int(x) for x in (za * zb).entries()], dtype=object)
    return _shrink(out.reshape(a.shape[0], b.shape[1]))


def _times(a, c):
    """Integer array times an integer scalar."""
    c = int(c)
    if c == 1:
        return a
    if a.dtype != object and _maxabs(a) * abs(c) < _SAFE:
        return a * c
    return _wide(a) * c


class Morphism:
    """Immutable exact matrix between based finite-dimensional spaces."""

    __slots__ = ("field", "num", "den", "_data", "_nz")

    def __init__(self, field, rows):
        """Build from a nested sequence or 2-d array of scalars."""
        arr = np.asarray(rows, dtype=object)
        if arr.ndim != 2:
            raise ShapeMismatch(f"expected a 2-d array, got shape {arr.shape}")
        m = _from_scalars(field, arr)
        self.field, self.num, self.den = m.field, m.num, m.den
        self._data = None
        self._nz = None

    @classmethod
    def _raw(cls, field, arr):
        """Wrap an object array of field scalars."""
        return _from_scalars(field, np.asarray(arr, dtype=object))

    @classmethod
    def _from_int(cls, field, num, den=1):
        """Wrap an integer numerator array and a denominator, normalising."""
        num = np.asarray(num)
        if num.dtype != object and num.dtype != np.int64:
            num = num.astype(np.int64)
        den = int(den)
        if field.p is not None:
            if den != 1:
                num = _times(num, pow(den, -1, field.p))
            num = _shrink(num % field.p)
            den = 1
        else:
            if den < 0:
                num, den = -num, -den
            if den != 1:
                g = math.gcd(_gcd_all(num), den)
                if g > 1:
                    num = num // g
                    den //= g
            num = _shrink(num)
        if not num.flags.owndata:
            num = num.copy()
        num.flags.writeable = False
        m = cls.__new__(cls)
        m.field = field
        m.num = num
        m.den = den
        m._data = None
        m._nz = None
        return m

    @property
    def rows(self):
        return self.num.shape[0]

    @property
    def cols(self):
        return self.num.shape[1]

    @property
    def shape(self):
        return self.num.shape

    @property
    def data(self):
        """Object array of field scalars: Fraction over Q, int over F_p."""
        if self._data is None:
            if self.field.p is None:
                d = self.den
                vals = [Fraction(int(x), d) for x in self.num.flat]
            else:
                vals = [int(x) for x in self.num.flat]
            arr = np.empty(len(vals), dtype=object)
            arr[:] = vals
            arr = arr.reshape(self.shape)
            arr.flags.writeable = False
            self._data = arr
        return self._data

    def __repr__(self):
        return f"Morphism({self.field}, {self.rows}x{self.cols}, {self.to_strings()})"

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.den == other.den
            and bool(np.array_equal(self.num, other.num))
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.den, tuple(int(x) for x in self.num.flat)))

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _combine(self, other, sign):
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        L = math.lcm(self.den, other.den)
        a = _times(self.num, L // self.den)
        b = _times(other.num, L // other.den)
        if a.dtype == object or b.dtype == object or _maxabs(a) + _maxabs(b) >= _SAFE:
            a, b = _wide(a), _wide(b)
        return Morphism._from_int(self.field, a + b if sign > 0 else a - b, L)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Morphism._from_int(self.field, -self.num, self.den)

    def scale(self, c):
        c = self.field(c)
        if self.field.p is None:
            return Morphism._from_int(self.field, _times(self.num, c.numerator), self.den * c.denominator)
        return Morphism._from_int(self.field, _times(self.num, c), 1)

    def __matmul__(self, other):
        return compose(self, other)

    def __mul__(self, other):
        if isinstance(other, Morphism):
            return kron(self, other)
        return NotImplemented

    @property
    def T(self):
        return Morphism._from_int(self.field, self.num.T.copy(), self.den)

    def entry(self, i, j):
        if self.field.p is None:
            return Fraction(int(self.num[i, j]), self.den)
        return int(self.num[i, j])

    def column(self, j):
        return self.data[:, j]

    def nonzero(self):
        """(row indices, col indices) of the nonzero entries, cached."""
        if self._nz is None:
            self._nz = np.nonzero(self.num)
        return self._nz

    def is_zero(self):
        return not np.any(self.num)

    def differing_columns(self, other):
        """Indices of the source basis vectors on which two morphisms differ."""
        if self.rows == 0:
            return np.zeros(0, dtype=int)
        if self.den == other.den:
            bad = self.num != other.num
        else:
            bad = _wide(self.num) * other.den != _wide(other.num) * self.den
        return np.nonzero(np.any(bad, axis=0))[0]

    def first_difference(self, other):
        """Index (i, j) of the first differing entry, or None."""
        diff = np.argwhere(self.data != other.data)
        return None if len(diff) == 0 else tuple(int(x) for x in diff[0])

    def to_strings(self):
        return [[self.field.format_scalar(x) for x in row] for row in self.data]

    def to_flint(self):
        """FLINT matrix of the numerators; over Q the denominator is dropped."""
        r, c = self.shape
        flat = [int(x) for x in self.num.flat]
        if self.field.p is None:
            return flint.fmpq_mat(flint.fmpz_mat(r, c, flat))
        return flint.nmod_mat(r, c, flat, self.field.p)


def _from_scalars(field, arr):
    vals = [field(x) for x in arr.flat]
    if field.p is None:
        den = reduce(math.lcm, (v.denominator for v in vals), 1)
        ints = [v.numerator * (den // v.denominator) for v in vals]
    else:
        den = 1
        ints = vals
    num = np.empty(len(ints), dtype=object)
    num[:] = ints
    return Morphism._from_int(field, num.reshape(arr.shape), den)


def _from_flint(field, m, scale=1):
    """Morphism from a FLINT matrix, multiplied by the integer ``scale``."""
    r, c = m.nrows(), m.ncols()
    if field.p is None:
        z, d = m.numer_denom()
        num = np.array([int(x) for x in z.entries()] or [], dtype=object).reshape(r, c)
        return Morphism._from_int(field, _times(_shrink(num), scale), int(d))
    num = np.array([int(x) for x in m.entries()], dtype=np.int64).reshape(r, c)
    return Morphism._from_int(field, num, 1)


def zeros(field, rows, cols):
    return Morphism._from_int(field, np.zeros((rows, cols), dtype=np.int64), 1)


def identity(field, n):
    return Morphism._from_int(field, np.eye(n, dtype=np.int64), 1)


def from_rows(field, rows):
    return Morphism(field, rows)


def from_int_array(field, num, den=1):
    return Morphism._from_int(field, np.array(num), den)


def column_vector(field, values):
    return Morphism(field, [[x] for x in values])


def row_vector(field, values):
    return Morphism(field, [list(values)])


def basis_vector(field, n, i):
    a = np.zeros((n, 1), dtype=np.int64)
    a[i, 0] = 1
    return Morphism._from_int(field, a, 1)


# -- composition and tensor products ------------------------------------------


def compose(*ms):
    """``compose(f, g, h) = f o g o h``.

    Evaluated right to left, so the rightmost factor should have the smallest
    source.  Factors may be Morphism, Kron or LegPermutation.
    """
    x = materialize(ms[-1])
    for m in reversed(ms[:-1]):
        x = apply(m, x)
    return x


def materialize(m):
    if isinstance(m, Morphism):
        return m
    return m.to_morphism()


def apply(m, x):
    """``m o x`` for a concrete ``x``."""
    if isinstance(m, Morphism):
        return _compose2(m, x)
    return m.apply(x)


def _compose2(a, b):
    a._check_field(b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot compose {a.shape} after {b.shape}")
    return Morphism._from_int(a.field, _matmul_int(a.num, b.num), a.den * b.den)


def kron(*ms):
    """Tensor product of morphisms with row-major index pairing."""
    return reduce(_kron2, [materialize(m) for m in ms])


def _kron2(a, b):
    a._check_field(b)
    if a.num.dtype != object and b.num.dtype != object and _maxabs(a.num) * _maxabs(b.num) < _SAFE:
        num = np.kron(a.num, b.num)
    else:
        num = np.kron(_wide(a.num), _wide(b.num))
    return Morphism._from_int(a.field, num, a.den * b.den)


class Kron:
    """Unevaluated tensor product ``f_1 (x) ... (x) f_k``.

    Integer factors stand for identities of that dimension.
    """

    def __init__(self, field, *factors):
        self.field = field
        self.factors = [identity(field, g) if isinstance(g, int) else materialize(g) for g in factors]

    @property
    def rows(self):
        return prod(g.rows for g in self.factors)

    @property
    def cols(self):
        return prod(g.cols for g in self.factors)

    def to_morphism(self):
        return kron(*self.factors)

    def apply(self, x):
        dims = [g.cols for g in self.factors]
        if prod(dims) != x.rows:
            raise ShapeMismatch(f"tensor of inputs {dims} vs {x.rows} rows")
        ncols = x.cols
        t = x.num.reshape(dims + [ncols])
        den = x.den
        for k, g in enumerate(self.factors):
            if _is_identity(g):
                continue
            moved = np.moveaxis(t, k, 0)
            rest = moved.shape[1:]
            res = _matmul_int(g.num, np.ascontiguousarray(moved).reshape(dims[k], -1))
            den *= g.den
            dims[k] = g.rows
            t = np.moveaxis(res.reshape((g.rows,) + rest), 0, k)
        arr = np.ascontiguousarray(t).reshape(prod(dims), ncols)
        return Morphism._from_int(x.field, arr, den)


def tensor_apply(factors, x):
    """``(f_1 (x) ... (x) f_k) o x`` without forming the tensor product."""
    return Kron(x.field, *factors).apply(x)


def _is_identity(g):
    if g.rows != g.cols or g.den != 1:
        return False
    return bool(np.array_equal(g.num, np.eye(g.rows, dtype=np.int64)))


class LegPermutation:
    """Reorders tensor legs: output leg ``k`` is input leg ``order[k]``.

    ``dims`` are the input leg dimensions.
    """

    def __init__(self, field, dims, order):
        self.field = field
        self.dims = list(dims)
        self.order = list(order)
        total = prod(self.dims)
        # src[t] is the input index landing at output position t
        self.src = np.arange(total).reshape(self.dims).transpose(self.order).ravel()

    @property
    def rows(self):
        return len(self.src)

    cols = rows

    def inverse(self):
        inv = [0] * len(self.order)
        for k, o in enumerate(self.order):
            inv[o] = k
        return LegPermutation(self.field, [self.dims[o] for o in self.order], inv)

    def to_morphism(self):
        total = len(self.src)
        a = np.zeros((total, total), dtype=np.int64)
        a[np.arange(total), self.src] = 1
        return Morphism._from_int(self.field, a, 1)

    def apply(self, x):
        if x.rows != len(self.src):
            raise ShapeMismatch(f"permutation of size {len(self.src)} vs {x.rows} rows")
        return Morphism._from_int(x.field, x.num[self.src], x.den)

    def after(self, x):
        """``x o self``, a column reindexing of ``x``."""
        if x.cols != len(self.src):
            raise ShapeMismatch(f"permutation of size {len(self.src)} vs {x.cols} columns")
        out = np.empty_like(x.num)
        out[:, self.src] = x.num
        return Morphism._from_int(x.field, out, x.den)


def permutation(field, perm_images, n=None):
    """Matrix sending basis vector ``j`` to ``perm_images[j]``."""
    n = len(perm_images) if n is None else n
    a = np.zeros((n, len(perm_images)), dtype=np.int64)
    for j, i in enumerate(perm_images):
        a[i, j] = 1
    return Morphism._from_int(field, a, 1)


def leg_permutation(field, dims, order):
    return LegPermutation(field, dims, order).to_morphism()


def symmetry(field, m, n):
    """``c_{V,W}: V (x) W -> W (x) V`` with ``dim V = m``, ``dim W = n``."""
    return LegPermutation(field, [m, n], [1, 0])


def _stack(ms, axis):
    for m in ms[1:]:
        ms[0]._check_field(m)
    L = reduce(math.lcm, (m.den for m in ms), 1)
    parts = [_times(m.num, L // m.den) for m in ms]
    if any(p.dtype == object for p in parts):
        parts = [_wide(p) for p in parts]
    return Morphism._from_int(ms[0].field, np.concatenate(parts, axis=axis), L)


def hstack(ms, field=None, rows=None):
    ms = list(ms)
    if not ms:
        return zeros(field, rows, 0)
    return _stack(ms, 1)


def vstack(ms):
    return _stack(list(ms), 0)


# -- elimination ----------------------------------------------------------------


def rref(a):
    """Reduced row echelon form with pivot entries 1.

    Returns ``(R, pivots)``, ``R`` a Morphism of the same shape.
    """
    if a.rows == 0 or a.cols == 0:
        return zeros(a.field, *a.shape), []
    r_mat, rk = a.to_flint().rref()
    R = _from_flint(a.field, r_mat)
    pivots = []
    for i in range(rk):
        nz = np.nonzero(R.num[i])[0]
        pivots.append(int(nz[0]))
    return R, pivots


def rank(a):
    if a.rows == 0 or a.cols == 0:
        return 0
    return a.to_flint().rank()


def kernel_basis(a):
    """Injection whose columns are the RREF basis of ``ker a``.

    The vector for free column ``j`` has a 1 in position ``j`` and zeros in
    the other free positions; vectors are ordered by free column.
    """
    n = a.cols
    R, pivots = rref(a)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    num = np.zeros((n, len(free)), dtype=object)
    for k, j in enumerate(free):
        num[j, k] = R.den
        for r, pc in enumerate(pivots):
            v = R.num[r, j]
            if v:
                num[pc, k] = -int(v)
    return Morphism._from_int(a.field, num, R.den)


def inverse(a):
    if a.rows != a.cols:
        raise NonSquare(f"cannot invert a {a.rows}x{a.cols} morphism")
    n = a.rows
    if n == 0:
        return zeros(a.field, 0, 0)
    m = a.to_flint()
    rk = m.rank()
    if rk < n:
        raise Singular(f"rank {rk} < {n}")
    return _from_flint(a.field, m.inv(), a.den)


def is_invertible(a):
    return a.rows == a.cols and rank(a) == a.rows


def determinant(a):
    if a.rows != a.cols:
        raise NonSquare("determinant of a non-square morphism")
    f = a.field
    if a.rows == 0:
        return f.one
    d = a.to_flint().det()
    if f.p is None:
        return Fraction(int(d.p), int(d.q)) / Fraction(a.den) ** a.rows
    return int(d)


def factor_through(inj, target):
    """Unique ``x`` with ``inj o x = target``, for injective ``inj``.

    Raises FactorizationFailed when ``inj`` is not injective or the target
    leaves its image.
    """
    inj._check_field(target)
    if inj.rows != target.rows:
        raise ShapeMismatch(f"injection {inj.shape} vs target {target.shape}")
    k = inj.cols
    # bring both blocks to one denominator; scaling rows leaves x unchanged
    left = _times(inj.num, target.den)
    right = _times(target.num, inj.den)
    if left.dtype == object or right.dtype == object:
        left, right = _wide(left), _wide(right)
    aug = Morphism._from_int(inj.field, np.concatenate([left, right], axis=1), 1)
    R, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise FactorizationFailed("map is not injective")
    if len(pivots) > k:
        raise FactorizationFailed("target is not in the image of the injection")
    return Morphism._from_int(inj.field, R.num[:k, k:], R.den)


def factors_through(inj, target):
    try:
        factor_through(inj, target)
    except FactorizationFailed:
        return False
    return True


def solve_linear_space(shape, constraints, field=None):
    """Basis of the matrices ``X`` of ``shape`` with ``L vec(X) = R vec(X)``.

    ``vec`` stacks the entries of ``X`` row by row.  Solutions come back as
    Morphisms of ``shape`` in RREF kernel order.
    """
    rows, cols = shape
    n = rows * cols
    blocks = []
    for lhs, rhs in constraints:
        if lhs.cols != n or rhs.cols != n or lhs.rows != rhs.rows:
            raise ShapeMismatch(f"constraint {lhs.shape}/{rhs.shape} vs {n} unknowns")
        blocks.append(lhs - rhs)
        field = lhs.field
    if field is None:
        raise ValueError("field required when there are no constraints")
    k = kernel_basis(vstack(blocks)) if blocks else identity(field, n)
    return [Morphism._from_int(field, k.num[:, j].reshape(rows, cols), k.den) for j in range(k.cols)]


def left_mult_operator(a, x_cols):
    """Matrix of ``X -> a o X`` on row-major ``vec(X)``, ``X`` with ``x_cols`` columns."""
    return kron(a, identity(a.field, x_cols))


def right_mult_operator(b, x_rows):
    """Matrix of ``X -> X o b`` on row-major ``vec(X)``, ``X`` with ``x_rows`` rows."""
    return kron(identity(b.field, x_rows), b.T)


def linear_combination(field, coeffs, ms):
    out = zeros(field, *ms[0].shape)
    for c, m in zip(coeffs, ms):
        if c:
            out = out + m.scale(c)
    return out


def left_inverse(inj):
    """Some ``L`` with ``L o inj = id``, supported on independent rows of ``inj``."""
    k = inj.cols
    _, rows = rref(inj.T)
    if len(rows) < k:
        raise FactorizationFailed("map is not injective")
    block = Morphism._from_int(inj.field, inj.num[rows], inj.den)
    binv = inverse(block)
    out = np.zeros((k, inj.rows), dtype=object)
    out[:, rows] = _wide(binv.num)
    return Morphism._from_int(inj.field, out, binv.den)


def factor_through_kron(factors, target):
    """Unique ``x`` with ``(f_1 (x) ... (x) f_k) o x = target`` for injective ``f_i``.

    Integer factors stand for identities.  A left inverse is applied leg-wise,
    so the tensor product is never formed; the result is checked against the
    target.
    """
    f = target.field
    lefts = [g if isinstance(g, int) else left_inverse(g) for g in factors]
    x = Kron(f, *lefts).apply(target)
    if Kron(f, *factors).apply(x) != target:
        raise FactorizationFailed("target is not in the image of the injection")
    return x


def factor_through_tensor(left_dim, inj, target):
    """Unique ``x`` with ``(id_{left_dim} (x) inj) o x = target``."""
    return factor_through_kron([left_dim, inj], target)


def operator_matrix(fn, field, shape):
    """Matrix of a linear map on ``shape`` matrices, in row-major ``vec`` coordinates."""
    rows, cols = shape
    out = []
    for r in range(rows):
        for c in range(cols):
            e = np.zeros((rows, cols), dtype=np.int64)
            e[r, c] = 1
            img = fn(Morphism._from_int(field, e, 1))
            out.append(Morphism._from_int(field, img.num.reshape(-1, 1), img.den))
    return hstack(out, field, 0)
