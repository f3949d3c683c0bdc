"""Exact dense linear algebra over the rationals and prime fields.

Matrices are 2-D numpy arrays of ``dtype=object`` whose entries are field
elements: ``gmpy2.mpq`` for the rationals and :class:`ModP` for GF(p).
Nothing here ever touches floating point.  Functions that have to create new
entries (identity vectors, zero blocks) take the field explicitly; when it is
omitted it is inferred from the entries.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from numbers import Integral

import numpy as np
from gmpy2 import mpq

from .errors import DimensionMismatch, HalgError

__all__ = [
    "Field", "Rationals", "PrimeField", "ModP", "QQ", "GF",
    "rref", "rank", "kernel_basis", "nullspace", "solve_linear", "kronecker", "matmul",
    "Subspace", "EchelonBuilder", "field_of",
]


class ModP:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _val(self, other):
        t = type(other)
        if t is ModP and other.p == self.p:
            return other.v
        if t is int:
            return other
        if isinstance(other, ModP):
            if other.p != self.p:
                raise HalgError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, Integral):
            return int(other)
        return None

    def __add__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._val(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __pow__(self, k):
        if k < 0:
            return ModP(pow(pow(self.v, -1, self.p), -k, self.p), self.p)
        return ModP(pow(self.v, k, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if type(other) is ModP and other.p == self.p:
            return self.v == other.v
        o = self._val(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __ne__(self, other):
        if type(other) is ModP and other.p == self.p:
            return self.v != other.v
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """Base class for the two supported exact fields."""

    kind = ""
    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def zeros(self, rows, cols):
        return np.full((rows, cols), self.zero, dtype=object)

    def zero_vector(self, n):
        return np.full(n, self.zero, dtype=object)

    def identity(self, n):
        m = self.zeros(n, n)
        for i in range(n):
            m[i, i] = self.one
        return m

    def unit_vector(self, n, i):
        v = self.zero_vector(n)
        v[i] = self.one
        return v

    def matrix(self, rows, cols=None):
        """Convert a nested sequence (or array) to an object matrix over this field."""
        a = np.array(rows, dtype=object)
        if a.ndim == 1 and a.size == 0 and cols is not None:
            a = a.reshape(0, cols)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got shape {a.shape}")
        out = np.empty(a.shape, dtype=object)
        for idx, x in np.ndenumerate(a):
            out[idx] = self(x)
        return out

    def vector(self, entries):
        a = np.array(entries, dtype=object).reshape(-1)
        return np.array([self(x) for x in a] or [], dtype=object)

    def is_invertible_integer(self, m):
        return self.characteristic == 0 or m % self.characteristic != 0

    def random_element(self, rng, bound=3):
        return self(rng.randint(-bound, bound))

    def format(self, x):
        return str(x)


class Rationals(Field):
    kind = "rational"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, bool):
            return mpq(int(x))
        if isinstance(x, type(mpq(0))):
            return x
        if isinstance(x, Integral):
            return mpq(int(x))
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        if isinstance(x, float):
            raise TypeError(f"floating-point value {x!r} rejected; exact input only")
        if isinstance(x, str):
            s = x.strip()
            if not s or any(ch in s for ch in ".eE"):
                raise ValueError(f"not an exact rational: {x!r}")
            return mpq(s)
        if isinstance(x, (list, tuple)) and len(x) == 2:
            num, den = x
            if not (isinstance(num, Integral) and isinstance(den, Integral)) or isinstance(num, bool):
                raise ValueError(f"rational pair must hold integers: {x!r}")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            return mpq(int(num), int(den))
        if isinstance(x, ModP):
            raise ValueError("prime-field element used over the rationals")
        raise ValueError(f"cannot convert {x!r} to an exact rational")

    def format(self, x):
        q = self(x)
        if q.denominator == 1:
            return str(q.numerator)
        return f"{q.numerator}/{q.denominator}"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def to_json(self):
        return {"kind": "rational"}


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if not isinstance(p, Integral) or not _is_prime(int(p)):
            raise ValueError(f"GF(p) needs a prime p, got {p!r}")
        self.p = int(p)
        self.characteristic = self.p

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError(f"element of GF({x.p}) used in GF({self.p})")
            return x
        if isinstance(x, Integral):
            return ModP(int(x), self.p)
        q = QQ(x)
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return ModP(int(q.numerator) * pow(int(q.denominator), -1, self.p), self.p)

    def random_element(self, rng, bound=None):
        return ModP(rng.randrange(self.p), self.p)

    def format(self, x):
        return str(self(x).v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def to_json(self):
        return {"kind": "prime", "p": self.p}


QQ = Rationals()


@functools.lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_of(m):
    """Infer the field from the entries of an array (rationals if undecidable)."""
    for x in np.asarray(m, dtype=object).flat:
        if isinstance(x, ModP):
            return GF(x.p)
        return QQ
    return QQ


def _as_field_matrix(m, field):
    a = np.asarray(m, dtype=object)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {a.shape}")
    if field is None:
        field = field_of(a)
        a = field.matrix(a) if a.size else a.copy()
    else:
        a = a.copy()
    return a, field


def rref(m, field=None):
    """Reduced row echelon form.

    Returns ``(R, pivots, rank)`` where ``R`` has the shape of ``m``, leading
    entries equal to one and zero rows at the bottom.
    """
    a, field = _as_field_matrix(m, field)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c].astype(bool))
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r, c:] = a[r, c:] * (1 / a[r, c])
        others = np.flatnonzero(a[:, c].astype(bool))
        others = others[others != r]
        if others.size:
            support = c + np.flatnonzero(a[r, c:].astype(bool))
            a[np.ix_(others, support)] -= np.multiply.outer(a[others, c], a[r, support])
        pivots.append(c)
        r += 1
    return a, pivots, r


def rank(m, field=None):
    return rref(m, field)[2]


def nullspace(m, field=None):
    """Right null space as the columns of a ``cols x k`` matrix."""
    a, field = _as_field_matrix(m, field)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return field.identity(cols)
    r, pivots, rk = rref(a, field)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = field.zeros(cols, len(free))
    for k, f in enumerate(free):
        out[f, k] = field.one
        for i, p in enumerate(pivots):
            out[p, k] = -r[i, f]
    return out


def kernel_basis(m, field=None):
    """Basis of the right null space, as a list of 1-D vectors."""
    ns = nullspace(m, field)
    return [ns[:, k].copy() for k in range(ns.shape[1])]


def solve_linear(a, b, field=None):
    """Solve ``a @ x = b`` exactly.

    ``b`` may be a vector or a matrix.  Returns ``None`` when the system is
    inconsistent, otherwise ``(x, kernel)`` with ``x`` one particular solution
    (free variables set to zero) and ``kernel`` the list returned by
    :func:`kernel_basis` for ``a``.
    """
    a, field = _as_field_matrix(a, field)
    b_arr = np.asarray(b, dtype=object)
    vector_rhs = b_arr.ndim == 1
    if vector_rhs:
        b_arr = b_arr.reshape(-1, 1)
    if b_arr.shape[0] != a.shape[0]:
        raise DimensionMismatch(f"a has {a.shape[0]} rows, b has {b_arr.shape[0]}")
    n = a.shape[1]
    if a.shape[0] == 0:
        x = field.zeros(n, b_arr.shape[1])
        return (x[:, 0] if vector_rhs else x), kernel_basis(a, field)
    aug = np.hstack([a, b_arr])
    r, pivots, rk = rref(aug, field)
    if any(p >= n for p in pivots):
        return None
    x = field.zeros(n, b_arr.shape[1])
    for i, p in enumerate(pivots):
        x[p, :] = r[i, n:]
    kern = kernel_basis(a, field)
    return (x[:, 0] if vector_rhs else x), kern


def matmul(a, b):
    """``a @ b`` for exact matrices, skipping the zero entries of ``a``.

    Action matrices are mostly zero, where this beats the dense object
    product by roughly the inverse density of ``a``.
    """
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.ndim != 2 or a.size == 0 or b.size == 0:
        return a @ b
    rows, cols = np.nonzero(a.astype(bool))
    if 4 * len(rows) > a.size:
        return a @ b
    zero = a.flat[0] - a.flat[0]
    out = np.empty((a.shape[0],) + b.shape[1:], dtype=object)
    out.fill(zero)
    for i, k in zip(rows.tolist(), cols.tolist()):
        out[i] = out[i] + a[i, k] * b[k]
    return out


def kronecker(a, b):
    """Kronecker product with ``(a (x) b)[i*rb + k, j*cb + l] = a[i, j] * b[k, l]``."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.multiply.outer(a, b)  # (ra, ca, rb, cb)
    return out.transpose(0, 2, 1, 3).reshape(ra * rb, ca * cb)


class Subspace:
    """A subspace of ``field**n`` held in canonical (RREF) form.

    Two subspaces are equal exactly when their canonical bases are equal.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, vectors, ambient_dim, field):
        self.field = field
        self.ambient_dim = ambient_dim
        vs = np.asarray(vectors, dtype=object)
        if vs.size == 0:
            self.basis = field.zeros(0, ambient_dim)
            self.pivots = ()
            return
        vs = vs.reshape(-1, ambient_dim)
        r, pivots, rk = rref(vs, field)
        self.basis = r[:rk]
        self.pivots = tuple(pivots)

    @classmethod
    def from_columns(cls, m, field):
        m = np.asarray(m, dtype=object)
        return cls(m.T, m.shape[0], field)

    @classmethod
    def _raw(cls, basis, pivots, ambient_dim, field):
        s = cls.__new__(cls)
        s.field, s.ambient_dim, s.basis, s.pivots = field, ambient_dim, basis, tuple(pivots)
        return s

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, v):
        """Reduce a vector (or the columns of a matrix) modulo this subspace."""
        v = np.asarray(v, dtype=object)
        if not self.pivots:
            return v.copy()
        return v - self.basis.T @ v[list(self.pivots)]

    def __contains__(self, v):
        return not np.any(self.reduce(v) != 0)

    def contains_all(self, cols):
        return not np.any(self.reduce(cols) != 0)

    def coordinates(self, v):
        """Coordinates of ``v`` (assumed inside) in the canonical basis."""
        return np.asarray(v, dtype=object)[list(self.pivots)]

    def join(self, vectors):
        vs = np.asarray(vectors, dtype=object).reshape(-1, self.ambient_dim)
        return Subspace(np.vstack([self.basis, vs]), self.ambient_dim, self.field)

    def complement_indices(self):
        """Standard coordinates not among the pivots (a basis of a complement)."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]

    def extend_from(self, candidates):
        """Greedily pick columns of ``candidates`` independent modulo ``self``.

        Returns ``(indices, new_subspace)``.
        """
        cur = self
        chosen = []
        cands = np.asarray(candidates, dtype=object)
        for j in range(cands.shape[1]):
            col = cands[:, j]
            red = cur.reduce(col)
            if np.any(red != 0):
                chosen.append(j)
                cur = cur.join(red)
        return chosen, cur

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and bool(np.all(self.basis == other.basis)))

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class EchelonBuilder:
    """Incrementally grown span, for closure-style loops.

    ``add`` reduces a vector against the rows collected so far and keeps it
    if something survives.  Rows are normalized at their pivot but not fully
    reduced, so use :meth:`subspace` for canonical comparisons.
    """

    def __init__(self, ambient_dim, field):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        v = np.array(v, dtype=object)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != 0:
                v = v - c * row
        return v

    def add(self, v):
        v = self.reduce(v)
        nz = np.flatnonzero(v != 0)
        if nz.size == 0:
            return None
        p = int(nz[0])
        v = v * (1 / v[p])
        self.rows.append(v)
        self.pivots.append(p)
        return v

    def __contains__(self, v):
        return not np.any(self.reduce(v) != 0)

    def subspace(self):
        if not self.rows:
            return Subspace(self.field.zeros(0, self.ambient_dim), self.ambient_dim, self.field)
        return Subspace(np.vstack(self.rows), self.ambient_dim, self.field)
