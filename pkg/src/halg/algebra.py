"""Finite-dimensional algebras given by structure constants.

An :class:`Algebra` stores a sparse multiplication table on a fixed basis:
``table[i][j]`` is a tuple of ``(k, c)`` pairs meaning
``b_i * b_j = sum c * b_k``.  Elements are 1-D object arrays of coordinates.

Besides the constructors (structure constants, path algebras, matrix
extensions ``M_n(A)``, skew group algebras ``A G``) this module computes the
Jacobson radical, a complete set of primitive orthogonal idempotents and the
Gabriel quiver.

Path composition is right-to-left: ``p * q`` means "first ``q``, then
``p``", so a left module over a path algebra is a representation in which
arrows act forwards.
"""
from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np
import sympy

from .errors import (
    CyclicQuiver, DimensionCapExceeded, DimensionMismatch, LiftingFailed, NonSplit,
    NotAGroup, NotAHomomorphism, NotAssociative, NotInvertible, NotMultiplicative,
    NotUnital, OrderNotInvertible, UnitNotFixed, UnsupportedField,
)
from .exactlin import EchelonBuilder, Subspace, nullspace, rank, solve_linear

DEFAULT_SEED = 0
SPLIT_RETRIES = 32


def max_dim():
    return int(os.environ.get("HALG_MAX_DIM", "512"))


@dataclass(frozen=True)
class Extension:
    """How an algebra was built from a smaller one.

    ``embedding`` is the ``dim(ext) x dim(base)`` matrix of the unital
    inclusion of the base algebra; restriction of modules goes through it.
    """

    kind: str  # "skew" or "matrix"
    base: "Algebra"
    embedding: np.ndarray = dc_field(repr=False)
    action: "GroupAction | None" = None
    n: int | None = None


class Algebra:
    """Associative unital algebra of finite dimension over an exact field."""

    def __init__(self, field, labels, table, unit, *, validate=True, extension=None, name=None):
        n = len(labels)
        if n > max_dim():
            raise DimensionCapExceeded(f"algebra dimension {n} exceeds HALG_MAX_DIM={max_dim()}")
        if len(table) != n or any(len(row) != n for row in table):
            raise DimensionMismatch("multiplication table must be n x n")
        self.field = field
        self.labels = tuple(str(s) for s in labels)
        self.dim = n
        self.table = tuple(tuple(tuple(entry) for entry in row) for row in table)
        self.unit = np.array([field(x) for x in unit], dtype=object)
        if self.unit.shape != (n,):
            raise DimensionMismatch("unit must have length n")
        self.extension = extension
        self.name = name
        self.quiver = None  # set by path_algebra
        self._op = None
        self._cache = {}
        if validate:
            self.validate()

    # -- arithmetic -------------------------------------------------------
    def basis_vector(self, i):
        return self.field.unit_vector(self.dim, i)

    def zero(self):
        return self.field.zero_vector(self.dim)

    def mul(self, x, y):
        out = self.zero()
        xs = [(i, x[i]) for i in np.flatnonzero(x.astype(bool))]
        ys = [(j, y[j]) for j in np.flatnonzero(y.astype(bool))]
        for i, xi in xs:
            row = self.table[i]
            for j, yj in ys:
                entry = row[j]
                if entry:
                    c = xi * yj
                    for k, ck in entry:
                        out[k] += c * ck
        return out

    def product(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out

    def power(self, x, k):
        out = self.unit.copy()
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def basis_product(self, i, j):
        out = self.zero()
        for k, c in self.table[i][j]:
            out[k] += c
        return out

    def left_mul_by_basis(self, i, x):
        """``b_i * x`` without the dense double loop."""
        out = self.zero()
        row = self.table[i]
        for j in np.flatnonzero(x.astype(bool)):
            xj = x[j]
            for k, c in row[j]:
                out[k] += xj * c
        return out

    def right_mul_by_basis(self, x, j):
        out = self.zero()
        for i in np.flatnonzero(x.astype(bool)):
            xi = x[i]
            for k, c in self.table[i][j]:
                out[k] += xi * c
        return out

    @cached_property
    def left_matrices(self):
        """Matrices of left multiplication by each basis element."""
        mats = []
        for i in range(self.dim):
            m = self.field.zeros(self.dim, self.dim)
            for j in range(self.dim):
                for k, c in self.table[i][j]:
                    m[k, j] += c
            mats.append(m)
        return tuple(mats)

    @cached_property
    def right_matrices(self):
        """Matrices of right multiplication ``x -> x * b_j``."""
        mats = []
        for j in range(self.dim):
            m = self.field.zeros(self.dim, self.dim)
            for i in range(self.dim):
                for k, c in self.table[i][j]:
                    m[k, i] += c
            mats.append(m)
        return tuple(mats)

    def left_matrix(self, x):
        out = self.field.zeros(self.dim, self.dim)
        for i in np.flatnonzero(x.astype(bool)):
            out = out + x[i] * self.left_matrices[i]
        return out

    # -- validation -------------------------------------------------------
    def validate(self):
        n = self.dim
        tab = self.table
        for i in range(n):
            if not np.all(self.mul(self.unit, self.basis_vector(i)) == self.basis_vector(i)) or \
                    not np.all(self.mul(self.basis_vector(i), self.unit) == self.basis_vector(i)):
                raise NotUnital(i)
        for i in range(n):
            for j in range(n):
                ij = tab[i][j]
                for k in range(n):
                    left = {}
                    for m, c in ij:
                        for t, d in tab[m][k]:
                            left[t] = left.get(t, 0) + c * d
                    right = {}
                    for m, c in tab[j][k]:
                        for t, d in tab[i][m]:
                            right[t] = right.get(t, 0) + c * d
                    keys = set(left) | set(right)
                    if any(left.get(t, 0) != right.get(t, 0) for t in keys):
                        raise NotAssociative(i, j, k)

    def same_table(self, other):
        if self.dim != other.dim or self.field != other.field:
            return False
        return all(_entry_dict(self.table[i][j]) == _entry_dict(other.table[i][j])
                   for i in range(self.dim) for j in range(self.dim)) and \
            bool(np.all(self.unit == other.unit))

    # -- derived algebras -------------------------------------------------
    def opposite(self):
        if self._op is None:
            n = self.dim
            table = [[self.table[j][i] for j in range(n)] for i in range(n)]
            op = Algebra(self.field, self.labels, table, self.unit, validate=False,
                         name=f"{self.name}^op" if self.name else None)
            op._op = self
            self._op = op
        return self._op

    @cached_property
    def radical(self):
        return jacobson_radical(self)

    @cached_property
    def decomposition(self):
        op = self._op
        if op is not None and "decomposition" in op.__dict__:
            return op.__dict__["decomposition"]
        return _decompose(self, DEFAULT_SEED)

    @cached_property
    def generators(self):
        return _greedy_generators(self)

    def is_commutative(self):
        return all(_entry_dict(self.table[i][j]) == _entry_dict(self.table[j][i])
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<Algebra{tag} dim={self.dim} over {self.field!r}>"


def _entry_dict(entry):
    d = {}
    for k, c in entry:
        d[k] = d.get(k, 0) + c
    return {k: c for k, c in d.items() if c != 0}


def _sparse(vec):
    return tuple((int(k), vec[k]) for k in np.flatnonzero(vec != 0))


# ---------------------------------------------------------------------------
# constructors

def from_structure_constants(field, labels, mul, unit, name=None):
    """Build and validate an algebra.

    ``mul[i][j]`` is the product ``b_i * b_j``, either a dense coordinate
    vector or a mapping ``{k: coeff}``.
    """
    n = len(labels)
    if len(mul) != n:
        raise DimensionMismatch(f"mul has {len(mul)} rows for {n} basis elements")
    table = []
    for i, row in enumerate(mul):
        if len(row) != n:
            raise DimensionMismatch(f"mul row {i} has length {len(row)}")
        trow = []
        for entry in row:
            if isinstance(entry, dict):
                items = [(int(k), field(c)) for k, c in sorted(entry.items())]
                trow.append(tuple((k, c) for k, c in items if c != 0))
            else:
                vec = np.array([field(c) for c in entry], dtype=object)
                if vec.shape != (n,):
                    raise DimensionMismatch("product vector of wrong length")
                trow.append(_sparse(vec))
        table.append(trow)
    if isinstance(unit, dict):
        u = field.zero_vector(n)
        for k, c in unit.items():
            u[int(k)] = field(c)
        unit = u
    return Algebra(field, labels, table, unit, name=name)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # of (name, source, target)

    def __post_init__(self):
        vs = tuple(str(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arrows", tuple((str(a), str(s), str(t)) for a, s, t in self.arrows))
        if len(set(vs)) != len(vs):
            raise ValueError("vertex labels must be distinct")
        names = [a for a, _, _ in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be distinct")
        for a, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow {a} has an endpoint outside the vertex set")

    def is_acyclic(self):
        indeg = {v: 0 for v in self.vertices}
        for _, _, t in self.arrows:
            indeg[t] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for _, s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        return seen == len(self.vertices)

    def paths(self):
        """All paths as ``(source, target, arrows-in-traversal-order)``, by length."""
        if not self.is_acyclic():
            raise CyclicQuiver("path algebra of a quiver with oriented cycles is infinite-dimensional")
        out = [(v, v, ()) for v in self.vertices]
        frontier = [p for p in out]
        while frontier:
            nxt = []
            for s, t, arrs in frontier:
                for a, s2, t2 in self.arrows:
                    if s2 == t:
                        nxt.append((s, t2, arrs + (a,)))
            out.extend(nxt)
            frontier = nxt
        return out

    def reversed(self):
        return Quiver(self.vertices, tuple((a, t, s) for a, s, t in self.arrows))


def path_algebra(field, quiver):
    paths = quiver.paths()
    index = {p: i for i, p in enumerate(paths)}
    n = len(paths)
    labels = []
    for s, t, arrs in paths:
        labels.append(f"e_{s}" if not arrs else "*".join(reversed(arrs)))
    one = field.one
    table = []
    for p in paths:
        row = []
        for q in paths:
            # p * q: first q, then p
            if q[1] != p[0]:
                row.append(())
            else:
                r = (q[0], p[1], q[2] + p[2])
                row.append(((index[r], one),))
        table.append(row)
    unit = [one if not arrs else field.zero for _, _, arrs in paths]
    a = Algebra(field, labels, table, unit, name="kQ")
    a.quiver = quiver
    a.paths = tuple(paths)
    return a


def matrix_algebra(a, n):
    """``M_n(a)`` with basis ``(position, b)`` ordered position-major."""
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    d = a.dim
    F = a.field
    labels = []
    for r in range(n):
        for c in range(n):
            for lab in a.labels:
                labels.append(lab if n == 1 else f"E[{r + 1},{c + 1}]{lab}")
    N = n * n * d

    def idx(r, c, b):
        return (r * n + c) * d + b

    table = [[() for _ in range(N)] for _ in range(N)]
    for r in range(n):
        for c in range(n):
            for c2 in range(n):
                for i in range(d):
                    for j in range(d):
                        entry = a.table[i][j]
                        if entry:
                            table[idx(r, c, i)][idx(c, c2, j)] = tuple((idx(r, c2, k), v) for k, v in entry)
    unit = F.zero_vector(N)
    emb = F.zeros(N, d)
    for r in range(n):
        for b in range(d):
            unit[idx(r, r, b)] = a.unit[b]
            emb[idx(r, r, b), b] = F.one
    ext = Extension("matrix", a, emb, None, n)
    return Algebra(F, labels, table, unit, extension=ext,
                   name=f"M{n}({a.name})" if a.name else f"M{n}")


def skew_group_algebra(a, g):
    """``a G`` with basis ``(sigma, b)`` ordered group-major.

    The basis element ``(sigma, b)`` is ``b * sigma`` and
    ``(x sigma)(y tau) = (x sigma(y)) (sigma tau)``.
    """
    if g.algebra is not a and not g.algebra.same_table(a):
        raise ValueError("group action is defined on a different algebra")
    d = a.dim
    m = g.order
    F = a.field
    labels = [f"{lab}#{s}" for s in g.labels for lab in a.labels]
    N = m * d
    table = []
    images = [np.asarray(im.matrix) for im in g.images]
    for s in range(m):
        for i in range(d):
            row = []
            for t in range(m):
                st = g.mul_table[s][t]
                for j in range(d):
                    prod = a.mul(a.basis_vector(i), images[s][:, j])
                    row.append(tuple((st * d + int(k), prod[k]) for k in np.flatnonzero(prod != 0)))
            table.append(row)
    unit = F.zero_vector(N)
    unit[g.identity * d:(g.identity + 1) * d] = a.unit
    emb = F.zeros(N, d)
    for b in range(d):
        emb[g.identity * d + b, b] = F.one
    ext = Extension("skew", a, emb, g, None)
    return Algebra(F, labels, table, unit, extension=ext,
                   name=f"{a.name}G" if a.name else "skew")


# ---------------------------------------------------------------------------
# automorphisms and group actions

class AlgebraAutomorphism:
    """Automorphism given by the matrix whose column ``j`` is the image of ``b_j``."""

    def __init__(self, algebra, matrix, validate=True):
        self.algebra = algebra
        self.matrix = algebra.field.matrix(matrix) if not _is_field_matrix(matrix, algebra.field) \
            else np.array(matrix, dtype=object)
        if self.matrix.shape != (algebra.dim, algebra.dim):
            raise DimensionMismatch("automorphism matrix must be n x n")
        if validate:
            self.validate()

    def validate(self):
        a = self.algebra
        m = self.matrix
        if rank(m, a.field) != a.dim:
            raise NotInvertible("automorphism matrix is singular")
        if not np.all(m @ a.unit == a.unit):
            raise UnitNotFixed("sigma(1) != 1")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = m @ a.basis_product(i, j)
                rhs = a.mul(m[:, i], m[:, j])
                if not np.all(lhs == rhs):
                    raise NotMultiplicative(i, j)

    def __call__(self, x):
        return self.matrix @ x

    def inverse(self):
        sol = solve_linear(self.matrix, self.algebra.field.identity(self.algebra.dim), self.algebra.field)
        return AlgebraAutomorphism(self.algebra, sol[0], validate=False)

    def compose(self, other):
        """``self o other``."""
        return AlgebraAutomorphism(self.algebra, self.matrix @ other.matrix, validate=False)

    def __eq__(self, other):
        return isinstance(other, AlgebraAutomorphism) and bool(np.all(self.matrix == other.matrix))

    def __hash__(self):
        return hash(tuple(str(x) for x in self.matrix.flat))


def _is_field_matrix(m, field):
    arr = np.asarray(m, dtype=object)
    try:
        return arr.ndim == 2 and all(field(x) is x for x in arr.flat)
    except (ValueError, ZeroDivisionError, TypeError):
        return False


def automorphism_from_matrix(a, m):
    return AlgebraAutomorphism(a, m)


class GroupAction:
    """A finite group, given by its multiplication table, acting on an algebra."""

    def __init__(self, algebra, labels, mul_table, images, identity=None):
        self.algebra = algebra
        self.labels = tuple(str(s) for s in labels)
        m = len(self.labels)
        self.order = m
        self.mul_table = tuple(tuple(int(x) for x in row) for row in mul_table)
        self.identity = _check_group(self.mul_table, m, identity)
        self.inverses = tuple(self.mul_table[s].index(self.identity) for s in range(m))
        if len(images) != m:
            raise NotAGroup("need one automorphism per group element")
        self.images = tuple(im if isinstance(im, AlgebraAutomorphism) else AlgebraAutomorphism(algebra, im)
                            for im in images)
        ident = algebra.field.identity(algebra.dim)
        if not np.all(self.images[self.identity].matrix == ident):
            raise NotAHomomorphism(self.labels[self.identity], self.labels[self.identity])
        for s in range(m):
            for t in range(m):
                st = self.mul_table[s][t]
                if not np.all(self.images[st].matrix == self.images[s].matrix @ self.images[t].matrix):
                    raise NotAHomomorphism(self.labels[s], self.labels[t])
        if not algebra.field.is_invertible_integer(m):
            raise OrderNotInvertible(f"|G| = {m} is zero in the base field")

    @cached_property
    def skew(self):
        """The skew group algebra, built once so modules over it share one object."""
        return skew_group_algebra(self.algebra, self)

    def inverse(self, s):
        return self.inverses[s]

    def image(self, s):
        return self.images[s]

    def inverse_image(self, s):
        return self.images[self.inverses[s]]

    def __repr__(self):
        return f"<GroupAction |G|={self.order} on {self.algebra!r}>"


def _check_group(table, m, identity):
    if len(table) != m or any(len(r) != m for r in table):
        raise NotAGroup("multiplication table must be |G| x |G|")
    if any(not (0 <= x < m) for r in table for x in r):
        raise NotAGroup("multiplication table entry out of range")
    ids = [e for e in range(m) if all(table[e][s] == s and table[s][e] == s for s in range(m))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    if identity is not None and int(identity) != e:
        raise NotAGroup(f"claimed identity {identity} is not the identity")
    for s in range(m):
        if sorted(table[s]) != list(range(m)) or sorted(table[t][s] for t in range(m)) != list(range(m)):
            raise NotAGroup("multiplication table is not a latin square")
    for s in range(m):
        for t in range(m):
            for u in range(m):
                if table[table[s][t]][u] != table[s][table[t][u]]:
                    raise NotAGroup("multiplication is not associative")
    return e


def group_action(a, labels, mul_table, images, identity=None):
    return GroupAction(a, labels, mul_table, images, identity)


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def permutation_group_table(perms):
    """Labels and multiplication table of the group generated by ``perms``.

    Permutations are tuples of images; products compose right-to-left.
    """
    n = len(perms[0])
    ident = tuple(range(n))
    elems = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in perms:
                q = tuple(g[p[i]] for i in range(n))
                if q not in elems:
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    pos = {p: i for i, p in enumerate(elems)}
    table = [[pos[tuple(p[q[i]] for i in range(n))] for q in elems] for p in elems]
    return elems, table


def quiver_automorphism_matrix(a, vertex_map, arrow_map, arrow_scale=None):
    """Matrix of the automorphism of a path algebra induced by a quiver symmetry.

    ``arrow_scale`` optionally multiplies the image of each arrow by a scalar.
    """
    q = a.quiver
    paths = a.paths
    index = {p: i for i, p in enumerate(paths)}
    F = a.field
    m = F.zeros(a.dim, a.dim)
    arrow_ends = {name: (s, t) for name, s, t in q.arrows}
    for j, (s, t, arrs) in enumerate(paths):
        img = (vertex_map[s], vertex_map[t], tuple(arrow_map[x] for x in arrs))
        for x in arrs:
            src, tgt = arrow_ends[x]
            if arrow_ends[arrow_map[x]] != (vertex_map[src], vertex_map[tgt]):
                raise NotMultiplicative(j, j)
        coeff = F.one
        if arrow_scale:
            for x in arrs:
                coeff = coeff * F(arrow_scale.get(x, 1))
        m[index[img], j] = coeff
    return m


# ---------------------------------------------------------------------------
# radical, semisimple quotient, idempotents

def jacobson_radical(a):
    """Radical via the trace form: ``{x : tr(L_{x y}) = 0 for all y}``."""
    F = a.field
    n = a.dim
    if F.characteristic and F.characteristic <= n:
        return _radical_small_characteristic(a)
    tr = F.zero_vector(n)
    for i in range(n):
        s = F.zero
        for m in range(n):
            for k, c in a.table[i][m]:
                if k == m:
                    s = s + c
        tr[i] = s
    gram = F.zeros(n, n)
    for i in range(n):
        for j in range(n):
            s = F.zero
            for k, c in a.table[i][j]:
                s = s + c * tr[k]
            gram[i, j] = s
    ns = nullspace(gram, F)
    rad = Subspace.from_columns(ns, F)
    return rad


def _radical_small_characteristic(a):
    """Radical over ``GF(p)`` with ``p <= dim``.

    Iterated trace conditions on the regular representation: starting from
    ``I = a``, keep the ``x`` in ``I`` with ``g_i(x y) = 0`` for all basis
    ``y``, where ``g_i(z) = tr(lift(L_z)^(p^i)) / p^i mod p``, for
    ``i = 0 .. floor(log_p dim)``.  Each ``g_i`` is linear on the previous
    stage, so every stage is a nullspace computation.  The trace of the
    ``p^i``-th power modulo ``p^(i+1)`` only depends on the matrix modulo
    ``p``, so all lifts are computed in machine integers.
    """
    F = a.field
    p, n = F.characteristic, a.dim
    steps = 0
    while p ** (steps + 1) <= n:
        steps += 1
    exact_float = n * (p ** (steps + 1)) ** 2 < 2 ** 52
    dtype = np.float64 if exact_float else np.int64
    lefts = np.array([[[int(v.v) for v in row] for row in m] for m in a.left_matrices], dtype=dtype)
    cur = F.identity(n)
    for i in range(steps + 1):
        q = p ** (i + 1)
        cols = []
        for k in range(cur.shape[1]):
            u = np.array([int(v.v) for v in cur[:, k]], dtype=dtype)
            lu = np.tensordot(u, lefts, axes=1) % q
            traces = _trace_powers_mod(np.matmul(lu, lefts) % q, p ** i, q)
            if any(t % (p ** i) for t in traces):
                raise LiftingFailed("trace of lifted power not divisible as expected")
            cols.append([F(t // p ** i) for t in traces])
        if not cols:
            break
        g = F.matrix(np.array(cols, dtype=object).T)
        cur = cur @ nullspace(g, F)
    return Subspace.from_columns(cur, F) if cur.shape[1] else Subspace(F.zeros(0, n), n, F)


def _trace_powers_mod(stack, e, q):
    """Traces of ``m^e mod q`` for a stack of matrices (entries in ``[0, q)``)."""
    out = None
    base = stack
    while e:
        if e & 1:
            out = base if out is None else np.matmul(out, base) % q
        e >>= 1
        if e:
            base = np.matmul(base, base) % q
    return [int(t) % q for t in np.trace(out, axis1=1, axis2=2)]


def radical_powers(a):
    """Canonical bases of ``rad, rad^2, ...`` down to zero (zero space excluded)."""
    key = "radical_powers"
    if key in a._cache:
        return a._cache[key]
    rad = a.radical
    powers = []
    cur = rad
    while cur.dim:
        powers.append(cur)
        eb = EchelonBuilder(a.dim, a.field)
        for x in cur.basis:
            for r in rad.basis:
                eb.add(a.mul(x, r))
        nxt = eb.subspace()
        if nxt.dim >= cur.dim:
            raise LiftingFailed("radical candidate is not nilpotent")
        cur = nxt
    a._cache[key] = tuple(powers)
    return a._cache[key]


def nilpotency_index(a):
    """Least ``N`` with ``rad^N = 0``."""
    return len(radical_powers(a)) + 1 if a.radical.dim else 1


class _Quotient:
    """The semisimple quotient ``a / rad`` on the complement coordinates."""

    def __init__(self, a):
        self.a = a
        self.rad = a.radical
        self.coords = self.rad.complement_indices()
        self.dim = len(self.coords)
        F = a.field
        table = []
        for p in self.coords:
            row = []
            for q in self.coords:
                v = self.project(a.basis_product(p, q))
                row.append(_sparse(v))
            table.append(row)
        self.alg = Algebra(F, [a.labels[c] for c in self.coords], table, self.project(a.unit),
                           validate=False)
        # the trace form of a semisimple split quotient is nondegenerate
        if self.dim and jacobson_radical(self.alg).dim != 0:
            raise UnsupportedField("quotient by the trace-form radical is not semisimple")

    def project(self, x):
        return self.rad.reduce(x)[self.coords]

    def lift(self, y):
        x = self.a.zero()
        x[self.coords] = y
        return x


def _minimal_polynomial(alg, y, e):
    """Coefficients (low to high, monic) of the minimal polynomial of ``y`` in ``e alg e``."""
    F = alg.field
    powers = [e]
    while True:
        nxt = alg.mul(powers[-1], y)
        mat = np.column_stack(powers)
        sol = solve_linear(mat, nxt, F)
        if sol is not None:
            c = sol[0]
            return [-x for x in c] + [F.one], powers
        powers.append(nxt)


def _factor(coeffs, F):
    """Irreducible monic factors with multiplicity; coefficients low to high."""
    t = sympy.Symbol("t")
    high = list(reversed(coeffs))
    if F.characteristic:
        poly = sympy.Poly([int(c) for c in high], t, modulus=F.characteristic)
    else:
        poly = sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in high], t,
                          domain=sympy.QQ)
    _, facs = poly.factor_list()
    out = []
    for f, mult in facs:
        cs = f.all_coeffs()
        if F.characteristic:
            vals = [F(int(c)) for c in cs]
        else:
            vals = [F((int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))) for c in cs]
        lead = vals[0]
        vals = [v / lead for v in vals]
        out.append((list(reversed(vals)), mult))
    return out


def _corner(alg, e):
    eb = EchelonBuilder(alg.dim, alg.field)
    for i in range(alg.dim):
        x = alg.mul(alg.mul(e, alg.basis_vector(i)), e)
        eb.add(x)
    return eb


def _proper_idempotent(alg, e, corner_basis, rng):
    """An idempotent ``f`` in ``e alg e`` with ``f != 0, e``, or ``None``."""
    F = alg.field
    cands = []
    for i in range(alg.dim):
        cands.append(alg.mul(alg.mul(e, alg.basis_vector(i)), e))
    for _ in range(SPLIT_RETRIES):
        y = F.zero_vector(alg.dim)
        for v in corner_basis:
            y = y + F.random_element(rng) * v
        cands.append(y)
    for y in cands:
        if not np.any(y != 0) or np.all(y == e):
            continue
        if np.all(alg.mul(y, y) == y):
            return y
        coeffs, powers = _minimal_polynomial(alg, y, e)
        if len(coeffs) <= 2:
            continue
        facs = _factor(coeffs, F)
        if sum(mult for _, mult in facs) < 2:
            continue
        f = facs[0][0]
        z = F.zero_vector(alg.dim)
        for c, p in zip(f, powers):
            z = z + c * p
        # z is a zero divisor of the corner; z a z = z gives the idempotent a z
        cols = [alg.mul(alg.mul(z, v), z) for v in corner_basis]
        sol = solve_linear(np.column_stack(cols), z, F)
        if sol is None:
            raise NonSplit("corner algebra is not semisimple")
        av = F.zero_vector(alg.dim)
        for c, v in zip(sol[0], corner_basis):
            av = av + c * v
        g = alg.mul(av, z)
        if np.any(g != 0) and not np.all(g == e) and np.all(alg.mul(g, g) == g):
            return g
    return None


def _split(alg, e, rng):
    corner = _corner(alg, e)
    if corner.dim == 1:
        return [e]
    f = _proper_idempotent(alg, e, corner.rows, rng)
    if f is None:
        raise NonSplit(f"found no proper idempotent in a corner of dimension {corner.dim}")
    return _split(alg, f, rng) + _split(alg, e - f, rng)


@dataclass(frozen=True)
class Decomposition:
    """Primitive idempotents of an algebra grouped into iso-classes of simples."""

    idempotents: tuple          # lifted, pairwise orthogonal, sum to 1
    class_of: tuple             # idempotent index -> class index
    representatives: tuple      # class index -> idempotent index
    class_labels: tuple
    seed: int

    @property
    def n_classes(self):
        return len(self.representatives)

    def rep(self, c):
        return self.idempotents[self.representatives[c]]


def primitive_idempotents(a, seed=DEFAULT_SEED):
    """Complete family of primitive orthogonal idempotents summing to one."""
    if seed == DEFAULT_SEED:
        return list(a.decomposition.idempotents)
    return list(_decompose(a, seed).idempotents)


def _decompose(a, seed):
    rng = random.Random(seed)
    quo = _Quotient(a)
    S = quo.alg
    F = a.field
    if S.dim == 0:
        raise NonSplit("zero algebra")
    bar = _split(S, S.unit, rng)
    # lift along the radical filtration
    N = nilpotency_index(a)
    steps = max(1, math.ceil(math.log2(N))) + 1
    lifted = []
    acc = a.zero()
    for eb in bar[:-1]:
        c = a.unit - acc
        x = a.product(c, quo.lift(eb), c)
        for _ in range(steps):
            x2 = a.mul(x, x)
            if np.all(x2 == x):
                break
            x = 3 * x2 - 2 * a.mul(x2, x)
        else:
            if not np.all(a.mul(x, x) == x):
                raise LiftingFailed("idempotent lifting did not converge")
        lifted.append(x)
        acc = acc + x
    lifted.append(a.unit - acc)
    # iso-classes: e ~ f iff e S f != 0 in the semisimple quotient
    k = len(bar)
    class_of = [-1] * k
    reps = []
    for i in range(k):
        if class_of[i] >= 0:
            continue
        class_of[i] = len(reps)
        reps.append(i)
        for j in range(i + 1, k):
            if class_of[j] < 0:
                same = any(np.any(S.product(bar[i], S.basis_vector(b), bar[j]) != 0) for b in range(S.dim))
                if same:
                    class_of[j] = class_of[i]
    labels = []
    for c, r in enumerate(reps):
        e = lifted[r]
        nz = np.flatnonzero(e != 0)
        if len(nz) == 1 and e[nz[0]] == F.one:
            labels.append(a.labels[nz[0]].removeprefix("e_"))
        else:
            labels.append(f"S{c}")
    if len(set(labels)) != len(labels):
        labels = [f"S{c}" for c in range(len(reps))]
    return Decomposition(tuple(lifted), tuple(class_of), tuple(reps), tuple(labels), seed)


def _greedy_generators(a):
    """Basis indices generating ``a`` as a unital algebra."""
    span = EchelonBuilder(a.dim, a.field)
    span.add(a.unit)
    words = [a.unit]
    gens = []
    for b in range(a.dim):
        if a.basis_vector(b) in span:
            continue
        gens.append(b)
        # close the span under left multiplication by all generators
        frontier = list(words)
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    v = a.left_mul_by_basis(g, w)
                    if span.add(v) is not None:
                        nxt.append(v)
            words.extend(nxt)
            frontier = nxt
    return tuple(gens)


# ---------------------------------------------------------------------------
# Gabriel quiver

@dataclass(frozen=True)
class GabrielQuiver:
    quiver: Quiver
    arrow_counts: dict = dc_field(hash=False)   # (source label, target label) -> count
    simple_dims: dict = dc_field(hash=False)    # vertex label -> dim of the simple

    @property
    def n_arrows(self):
        return sum(self.arrow_counts.values())


def gabriel_quiver(a):
    """Vertices are simple classes; ``i -> j`` arrows count ``dim e_j (rad/rad^2) e_i``."""
    dec = a.decomposition
    powers = radical_powers(a)
    rad = powers[0].basis if powers else a.field.zeros(0, a.dim)
    rad2 = powers[1].basis if len(powers) > 1 else a.field.zeros(0, a.dim)
    labels = dec.class_labels
    arrows = []
    counts = {}
    for ci in range(dec.n_classes):
        ei = dec.rep(ci)
        for cj in range(dec.n_classes):
            ej = dec.rep(cj)
            d1 = _sandwich_dim(a, ej, rad, ei)
            d2 = _sandwich_dim(a, ej, rad2, ei)
            cnt = d1 - d2
            if cnt:
                counts[(labels[ci], labels[cj])] = cnt
                for k in range(cnt):
                    arrows.append((f"{labels[ci]}->{labels[cj]}" + (f"#{k}" if cnt > 1 else ""),
                                   labels[ci], labels[cj]))
    simple_dims = {}
    for c in range(dec.n_classes):
        simple_dims[labels[c]] = sum(1 for x in dec.class_of if x == c)
    return GabrielQuiver(Quiver(labels, tuple(arrows)), counts, simple_dims)


def _sandwich_dim(a, left, rows, right):
    eb = EchelonBuilder(a.dim, a.field)
    for r in rows:
        eb.add(a.product(left, r, right))
    return eb.dim
