"""Left modules, Hom spaces and minimal resolutions.

A :class:`Module` over an algebra ``A`` stores one action matrix per basis
element of ``A``.  Indecomposable projectives are the left ideals
``A e`` for representative primitive idempotents ``e``; indecomposable
injectives are obtained by vector-space duality, ``D(e A)``.  Injective
envelopes and coresolutions are computed as duals of projective covers and
resolutions over the opposite algebra, so there is a single resolution engine.

All modules built here by constructions that preserve the module axioms
(submodules, quotients, sums, duals, twists, induction, restriction) skip
re-validation; modules coming from user data are validated.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import AlgebraMismatch, DimensionMismatch, InvalidModule, NotASkewAlgebra
from .exactlin import EchelonBuilder, Subspace, kronecker, matmul, nullspace, rank, solve_linear

ISO_TRIALS = 64


class Module:
    """Finite-dimensional left module given by action matrices."""

    def __init__(self, algebra, action, validate=True, kind=None, summands=None):
        self.algebra = algebra
        F = algebra.field
        action = [np.asarray(x, dtype=object) for x in action]
        if len(action) != algebra.dim:
            raise DimensionMismatch(f"need {algebra.dim} action matrices, got {len(action)}")
        d = action[0].shape[0] if action else 0
        for x in action:
            if x.shape != (d, d):
                raise DimensionMismatch("action matrices must all be d x d")
        self.action = tuple(action)
        self.dim = d
        self.kind = kind  # "projective" / "injective" for resolution terms
        self.summands = tuple(summands) if summands is not None else None
        self._cache = {}
        if validate:
            self.validate()

    @property
    def field(self):
        return self.algebra.field

    def act(self, x):
        """Matrix by which the algebra element ``x`` acts."""
        out = self.field.zeros(self.dim, self.dim)
        for i in np.flatnonzero(x.astype(bool)):
            out = out + x[i] * self.action[i]
        return out

    def validate(self, exhaustive=False):
        """Check the module axioms.

        By default only products ``g * b`` with ``g`` in the algebra's
        generating set are checked, which is equivalent once the unit acts
        as the identity.
        """
        a = self.algebra
        if not np.all(self.act(a.unit) == self.field.identity(self.dim)):
            raise InvalidModule("unit does not act as the identity")
        left = range(a.dim) if exhaustive else a.generators
        for i in left:
            for j in range(a.dim):
                lhs = self.action[i] @ self.action[j]
                rhs = self.act(a.basis_product(i, j))
                if not np.all(lhs == rhs):
                    raise InvalidModule(f"action of b{i} b{j} is not the product of the actions")

    def same_action(self, other):
        return self.algebra is other.algebra and self.dim == other.dim and \
            all(bool(np.all(x == y)) for x, y in zip(self.action, other.action))

    def orbit_matrix(self, v):
        """``d x n`` matrix whose column ``j`` is ``b_j . v``."""
        if not self.action:
            return self.field.zeros(self.dim, 0)
        return np.column_stack([matmul(x, v) for x in self.action])

    def __repr__(self):
        return f"<Module dim={self.dim} over {self.algebra!r}>"


@dataclass(frozen=True)
class ModuleMap:
    source: Module
    target: Module
    matrix: np.ndarray = dc_field(repr=False)

    def is_homomorphism(self):
        return all(bool(np.all(self.matrix @ s == t @ self.matrix))
                   for s, t in zip(self.source.action, self.target.action))

    def compose(self, other):
        """``self o other``."""
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)


def _check_same(m, n):
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("modules live over different algebras")


# ---------------------------------------------------------------------------
# basic constructions

def regular_module(a):
    key = "regular"
    if key not in a._cache:
        a._cache[key] = Module(a, a.left_matrices, validate=False)
    return a._cache[key]


def zero_module(a):
    return Module(a, [a.field.zeros(0, 0) for _ in range(a.dim)], validate=False)


def direct_sum(mods, algebra=None):
    mods = list(mods)
    if not mods:
        if algebra is None:
            raise ValueError("empty direct sum needs an algebra")
        return zero_module(algebra)
    a = mods[0].algebra
    for m in mods[1:]:
        _check_same(mods[0], m)
    d = sum(m.dim for m in mods)
    action = []
    for i in range(a.dim):
        x = a.field.zeros(d, d)
        off = 0
        for m in mods:
            x[off:off + m.dim, off:off + m.dim] = m.action[i]
            off += m.dim
        action.append(x)
    summands = None
    if all(m.summands is not None for m in mods):
        summands = sum((m.summands for m in mods), ())
    kinds = {m.kind for m in mods}
    return Module(a, action, validate=False, kind=kinds.pop() if len(kinds) == 1 else None,
                  summands=summands)


def submodule(m, columns):
    """Submodule spanned by the columns (assumed invariant).

    Returns ``(module, inclusion)`` with ``inclusion`` the ``d x k`` matrix of
    the canonical basis.
    """
    F = m.field
    cols = np.asarray(columns, dtype=object).reshape(m.dim, -1)
    sub = Subspace.from_columns(cols, F)
    inc = sub.basis.T.copy() if sub.dim else F.zeros(m.dim, 0)
    piv = list(sub.pivots)
    action = [matmul(x[piv, :], inc) if sub.dim else F.zeros(0, 0) for x in m.action]
    return Module(m.algebra, action, validate=False), inc


def quotient(m, sub):
    """Quotient by an invariant :class:`Subspace`; returns ``(module, projection)``."""
    F = m.field
    keep = sub.complement_indices()
    proj = sub.reduce(F.identity(m.dim))[keep, :]
    lift = F.zeros(m.dim, len(keep))
    for k, q in enumerate(keep):
        lift[q, k] = F.one
    action = [matmul(proj, x)[:, keep] for x in m.action]
    return Module(m.algebra, action, validate=False), proj


def dual(m):
    """``D m = Hom_k(m, k)`` as a left module over the opposite algebra."""
    kind = {"projective": "injective", "injective": "projective"}.get(m.kind)
    return Module(m.algebra.opposite(), [x.T.copy() for x in m.action], validate=False,
                  kind=kind, summands=m.summands)


def radical_submodule(m):
    """``rad(A) . m`` as a subspace of ``m``."""
    if "rad" not in m._cache:
        a = m.algebra
        F = m.field
        rows = a.radical.basis
        if m.dim == 0 or not len(rows):
            sub = Subspace(F.zeros(0, m.dim), m.dim, F)
        else:
            sub = Subspace.from_columns(np.hstack([m.act(r) for r in rows]), F)
        m._cache["rad"] = sub
    return m._cache["rad"]


def socle_subspace(m):
    if "soc" not in m._cache:
        a = m.algebra
        F = m.field
        rows = a.radical.basis
        if m.dim == 0:
            sub = Subspace(F.zeros(0, 0), 0, F)
        elif not len(rows):
            sub = Subspace(F.identity(m.dim), m.dim, F)
        else:
            sub = Subspace.from_columns(nullspace(np.vstack([m.act(r) for r in rows]), F), F)
        m._cache["soc"] = sub
    return m._cache["soc"]


def top(m):
    return quotient(m, radical_submodule(m))[0]


def socle(m):
    return submodule(m, socle_subspace(m).basis.T)[0]


def top_multiplicities(m):
    """Multiplicity of each simple class in ``m / rad m``."""
    dec = m.algebra.decomposition
    rad = radical_submodule(m)
    out = []
    for c in range(dec.n_classes):
        e = m.act(dec.rep(c))
        whole = rank(e, m.field)
        inside = Subspace.from_columns(e @ rad.basis.T, m.field).dim if rad.dim else 0
        out.append(whole - inside)
    return tuple(out)


def socle_multiplicities(m):
    dec = m.algebra.decomposition
    soc = socle_subspace(m)
    out = []
    for c in range(dec.n_classes):
        if soc.dim == 0:
            out.append(0)
            continue
        out.append(rank(m.act(dec.rep(c)) @ soc.basis.T, m.field))
    return tuple(out)


# ---------------------------------------------------------------------------
# indecomposable projectives, injectives, simples

@dataclass(frozen=True)
class _Ideal:
    """Left ideal ``A e`` with its canonical basis (rows are algebra elements)."""

    module: Module
    rows: np.ndarray
    generator: np.ndarray   # coordinates of e in the canonical basis


def _ideals(a):
    if "ideals" not in a._cache:
        dec = a.decomposition
        reg = regular_module(a)
        out = []
        for c in range(dec.n_classes):
            e = dec.rep(c)
            cols = np.column_stack([a.mul(a.basis_vector(j), e) for j in range(a.dim)])
            sub = Subspace.from_columns(cols, a.field)
            mod, inc = submodule(reg, cols)
            mod.kind = "projective"
            mod.summands = (c,)
            out.append(_Ideal(mod, sub.basis, sub.coordinates(e)))
        a._cache["ideals"] = tuple(out)
    return a._cache["ideals"]


def indecomposable_projectives(a):
    return [ideal.module for ideal in _ideals(a)]


def indecomposable_injectives(a):
    if "injectives" not in a._cache:
        op = a.opposite()
        a._cache["injectives"] = tuple(dual(p) for p in indecomposable_projectives(op))
    return list(a._cache["injectives"])


def indecomposable_projectives_injectives(a):
    return indecomposable_projectives(a), indecomposable_injectives(a)


def simples(a):
    """One simple module per iso-class, in class order (``top(A e)``)."""
    if "simples" not in a._cache:
        a._cache["simples"] = tuple(top(p) for p in indecomposable_projectives(a))
    return list(a._cache["simples"])


def projective_sum(a, classes):
    ps = indecomposable_projectives(a)
    if not classes:
        m = zero_module(a)
        m.kind, m.summands = "projective", ()
        return m
    return direct_sum([ps[c] for c in classes])


# ---------------------------------------------------------------------------
# covers, envelopes, resolutions

def projective_cover(m):
    """Minimal projective epimorphism onto ``m``; returns ``(P, matrix)``."""
    a = m.algebra
    F = m.field
    dec = a.decomposition
    ideals = _ideals(a)
    rad = radical_submodule(m)
    classes = []
    blocks = []
    for c in range(dec.n_classes):
        e = m.act(dec.rep(c))
        erad = Subspace.from_columns(e @ rad.basis.T, F) if rad.dim else Subspace(F.zeros(0, m.dim), m.dim, F)
        chosen, _ = erad.extend_from(e)
        for j in chosen:
            v = e[:, j]
            classes.append(c)
            blocks.append(m.orbit_matrix(v) @ ideals[c].rows.T)
    P = projective_sum(a, classes)
    mat = np.hstack(blocks) if blocks else F.zeros(m.dim, 0)
    return P, mat


def injective_envelope(m):
    """Minimal injective monomorphism out of ``m``; returns ``(I, matrix)``."""
    P, eps = projective_cover(dual(m))
    return dual(P), eps.T.copy()


@dataclass(frozen=True)
class HomDim:
    """A projective/injective dimension observed up to a cutoff."""

    value: int
    finite: bool

    @classmethod
    def exact(cls, d):
        return cls(d, True)

    @classmethod
    def at_least(cls, d):
        return cls(d, False)

    def __str__(self):
        return f"Finite({self.value})" if self.finite else f"AtLeast({self.value})"

    def to_json(self):
        return {"finite": self.finite, "value": self.value}


@dataclass
class Resolution:
    """Minimal resolution truncated at ``cutoff``.

    Projective: ``maps[0]`` is the augmentation ``P_0 -> M`` and ``maps[i]``
    is ``P_i -> P_{i-1}``.  Injective: ``maps[0]`` is ``M -> I^0`` and
    ``maps[i]`` is ``I^{i-1} -> I^i``.  Every matrix acts on column vectors.
    """

    direction: str
    base: Module
    terms: list
    maps: list
    terminated: bool
    cutoff: int

    @property
    def multiplicities(self):
        n = self.base.algebra.decomposition.n_classes
        return [tuple(t.summands.count(c) for c in range(n)) for t in self.terms]

    @property
    def length(self):
        return len(self.terms) - 1

    def dimension(self):
        if self.terminated:
            return HomDim.exact(self.length)
        return HomDim.at_least(self.cutoff + 1)

    def truncated(self, cutoff):
        if cutoff >= self.length and self.terminated:
            return Resolution(self.direction, self.base, self.terms, self.maps, True, cutoff)
        if cutoff > self.cutoff:
            raise ValueError("cannot extend a truncated resolution")
        k = cutoff + 1
        return Resolution(self.direction, self.base, self.terms[:k], self.maps[:k], False, cutoff)

    def is_exact(self):
        """Rank check of exactness at the base and at every inner term."""
        F = self.base.field
        seq = self.maps
        if self.direction == "projective":
            if rank(seq[0], F) != self.base.dim:
                return False
            for i in range(1, len(seq)):
                if seq[i].size and np.any(seq[i - 1] @ seq[i] != 0):
                    return False
                ker = self.terms[i - 1].dim - rank(seq[i - 1], F)
                if rank(seq[i], F) != ker:
                    return False
            if self.terminated:
                return rank(seq[-1], F) == self.terms[-1].dim
            return True
        if rank(seq[0], F) != self.base.dim:
            return False
        for i in range(1, len(seq)):
            if seq[i].size and np.any(seq[i] @ seq[i - 1] != 0):
                return False
            ker = self.terms[i - 1].dim - rank(seq[i], F)
            if rank(seq[i - 1], F) != ker:
                return False
        if self.terminated:
            return rank(seq[-1], F) == self.terms[-1].dim
        return True

    def to_json(self):
        dec = self.base.algebra.decomposition
        return {
            "direction": self.direction,
            "cutoff": self.cutoff,
            "terminated": self.terminated,
            "dimension": self.dimension().to_json(),
            "classes": list(dec.class_labels),
            "terms": [{"dim": t.dim, "multiplicities": list(mu)}
                      for t, mu in zip(self.terms, self.multiplicities)],
        }


def _projective_resolution(m, cutoff):
    F = m.field
    terms, maps = [], []
    cur, inc = m, F.identity(m.dim)
    terminated = False
    for _ in range(cutoff + 1):
        P, eps = projective_cover(cur)
        terms.append(P)
        maps.append(inc @ eps)
        ker = nullspace(eps, F) if P.dim else F.zeros(0, 0)
        if ker.shape[1] == 0:
            terminated = True
            break
        cur, inc = submodule(P, ker)
    return Resolution("projective", m, terms, maps, terminated, cutoff)


def minimal_resolution(m, direction="projective", cutoff=10):
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    if direction not in ("projective", "injective"):
        raise ValueError(f"unknown direction {direction!r}")
    cached = m._cache.get(("res", direction))
    if cached is not None and (cached.terminated or cached.cutoff >= cutoff):
        return cached.truncated(cutoff)
    if direction == "projective":
        res = _projective_resolution(m, cutoff)
    else:
        pres = minimal_resolution(dual(m), "projective", cutoff)
        terms = [dual(p) for p in pres.terms]
        maps = [x.T.copy() for x in pres.maps]
        res = Resolution("injective", m, terms, maps, pres.terminated, cutoff)
    m._cache[("res", direction)] = res
    return res


def homological_dimension(m, direction="projective", cutoff=10):
    return minimal_resolution(m, direction, cutoff).dimension()


def projective_dimension(m, cutoff=10):
    return homological_dimension(m, "projective", cutoff)


def injective_dimension(m, cutoff=10):
    return homological_dimension(m, "injective", cutoff)


def is_projective(m):
    return homological_dimension(m, "projective", 0) == HomDim.exact(0)


def is_injective(m):
    return homological_dimension(m, "injective", 0) == HomDim.exact(0)


# ---------------------------------------------------------------------------
# Hom and Ext

KRON_LIMIT = 400


def hom_space(m, n):
    """Basis of ``Hom_A(m, n)`` as ``n.dim x m.dim`` matrices."""
    _check_same(m, n)
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return []
    if dm * dn <= KRON_LIMIT:
        return _hom_space_kron(m, n)
    return _hom_space_presented(m, n)


def _hom_space_kron(m, n):
    F = m.field
    dm, dn = m.dim, n.dim
    a = m.algebra
    eqs = []
    In, Im = F.identity(dn), F.identity(dm)
    for g in a.generators:
        # row-major vec: vec(X B) = (I (x) B^T) vec X, vec(C X) = (C (x) I) vec X
        eqs.append(kronecker(In, m.action[g].T) - kronecker(n.action[g], Im))
    ns = nullspace(np.vstack(eqs), F) if eqs else F.identity(dn * dm)
    return [ns[:, k].reshape(dn, dm) for k in range(ns.shape[1])]


def module_generators(m):
    """Vectors generating ``m``, chosen among coordinates spanning a complement of ``rad m``.

    Returns ``(gens, phi)`` where ``phi = [b . v_j]`` is the ``d x (r * dim A)``
    matrix of the surjection ``A^r -> m``.
    """
    if "gens" not in m._cache:
        F = m.field
        span = EchelonBuilder(m.dim, F)
        gens, blocks = [], []
        for k in radical_submodule(m).complement_indices():
            v = F.zero_vector(m.dim)
            v[k] = F.one
            if v in span:
                continue
            orbit = m.orbit_matrix(v)
            gens.append(v)
            blocks.append(orbit)
            for col in orbit.T:
                span.add(col)
            if span.dim == m.dim:
                break
        m._cache["gens"] = (gens, np.hstack(blocks))
    return m._cache["gens"]


def _relation_generators(a, r, phi):
    """Generators of ``ker(A^r -> m)`` as a left submodule of the free module."""
    F = a.field
    d = a.dim
    ker = nullspace(phi, F)
    left = a.left_matrices
    span = EchelonBuilder(r * d, F)
    out = []
    for k in ker.T:
        if k in span:
            continue
        out.append(k)
        blocks = k.reshape(r, d)
        for b in range(d):
            span.add(np.concatenate([matmul(left[b], blk) for blk in blocks]))
        if span.dim == ker.shape[1]:
            break
    return out


def _hom_space_presented(m, n):
    """Homs as images of generators subject to the relations of ``m``.

    Unknowns are the images ``w_j`` of the generators (``r * dim n`` of them)
    instead of the ``dim m * dim n`` entries of the matrix.
    """
    F = m.field
    a = m.algebra
    d, dn = a.dim, n.dim
    gens, phi = module_generators(m)
    r = len(gens)
    rels = _relation_generators(a, r, phi)
    if rels:
        eqs = np.vstack([np.hstack([n.act(blk) for blk in k.reshape(r, d)]) for k in rels])
        sols = nullspace(eqs, F)
    else:
        sols = F.identity(r * dn)
    if sols.shape[1] == 0:
        return []
    # express each basis vector of m through the generators: phi @ coeffs = I
    coeffs, _ = solve_linear(phi, F.identity(m.dim), F)
    out = []
    for s in sols.T:
        x = F.zeros(dn, m.dim)
        for j in range(r):
            x = x + matmul(n.orbit_matrix(s[j * dn:(j + 1) * dn]), coeffs[j * d:(j + 1) * d, :])
        out.append(x)
    return out


def hom_dim(m, n):
    return len(hom_space(m, n))


def _idempotent_images(n, c):
    key = ("eN", c)
    if key not in n._cache:
        e = n.act(n.algebra.decomposition.rep(c))
        n._cache[key] = Subspace.from_columns(e, n.field).basis.T.copy() if n.dim else n.field.zeros(0, 0)
    return n._cache[key]


def _block_offsets(a, summands):
    ps = indecomposable_projectives(a)
    offs = [0]
    for c in summands:
        offs.append(offs[-1] + ps[c].dim)
    return offs


def _hom_from_projective_dim(p, n):
    return sum(_idempotent_images(n, c).shape[1] for c in p.summands)


def _induced_rank(res, k, n):
    """Rank of ``Hom(P_k, n) -> Hom(P_{k+1}, n)`` for a projective resolution."""
    if k < 0 or k + 1 >= len(res.terms):
        return 0
    a = n.algebra
    F = n.field
    ideals = _ideals(a)
    src, tgt = res.terms[k], res.terms[k + 1]
    if tgt.dim == 0 or src.dim == 0:
        return 0
    d = res.maps[k + 1]
    src_off = _block_offsets(a, src.summands)
    tgt_off = _block_offsets(a, tgt.summands)
    rows = []
    for s, cs in enumerate(tgt.summands):
        g = F.zero_vector(tgt.dim)
        g[tgt_off[s]:tgt_off[s + 1]] = ideals[cs].generator
        img = d @ g
        blocks = []
        for l, cl in enumerate(src.summands):
            z = img[src_off[l]:src_off[l + 1]]
            y = ideals[cl].rows.T @ z
            blocks.append(n.act(y) @ _idempotent_images(n, cl))
        rows.append(np.hstack(blocks))
    return rank(np.vstack(rows), F)


def ext_dim(m, n, i):
    """``dim Ext^i(m, n)`` from the minimal projective resolution of ``m``."""
    _check_same(m, n)
    if i < 0:
        raise ValueError("degree must be non-negative")
    res = minimal_resolution(m, "projective", i + 1)
    if i >= len(res.terms):
        return 0
    return _hom_from_projective_dim(res.terms[i], n) - _induced_rank(res, i, n) - _induced_rank(res, i - 1, n)


def ext_dim_via_injective(m, n, i):
    """``dim Ext^i(m, n)`` from the minimal injective coresolution of ``n``.

    Independent of :func:`ext_dim`: it uses the generic Hom solver and the
    other resolution.
    """
    _check_same(m, n)
    if i < 0:
        raise ValueError("degree must be non-negative")
    res = minimal_resolution(n, "injective", i + 1)
    if i >= len(res.terms):
        return 0
    F = m.field
    homs = [hom_space(m, t) for t in res.terms[:i + 2]]

    def induced(k):
        if k < 0 or k + 1 >= len(res.terms) or not homs[k] or res.terms[k + 1].dim == 0:
            return 0
        d = res.maps[k + 1]
        return rank(np.column_stack([(d @ h).reshape(-1) for h in homs[k]]), F)

    return len(homs[i]) - induced(i) - induced(i - 1)


# ---------------------------------------------------------------------------
# isomorphism, splittings

@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    kind: str                   # "certified", "invariant-mismatch" or "probabilistic"
    reason: str = ""
    certificate: np.ndarray | None = dc_field(default=None, repr=False)
    seed: int | None = None

    def __bool__(self):
        return self.isomorphic


def is_isomorphic(m, n, seed=0, trials=ISO_TRIALS):
    _check_same(m, n)
    F = m.field
    if m.dim != n.dim:
        return IsoResult(False, "invariant-mismatch", "dimension")
    if m.dim == 0:
        return IsoResult(True, "certified", certificate=F.zeros(0, 0))
    if top_multiplicities(m) != top_multiplicities(n):
        return IsoResult(False, "invariant-mismatch", "top multiplicities")
    if socle_multiplicities(m) != socle_multiplicities(n):
        return IsoResult(False, "invariant-mismatch", "socle multiplicities")
    hmn = hom_space(m, n)
    dims = (len(hmn), hom_dim(n, m), hom_dim(m, m), hom_dim(n, n))
    if len(set(dims)) != 1:
        return IsoResult(False, "invariant-mismatch", f"Hom dimensions {dims}")
    rng = random.Random(seed)
    cands = list(hmn)
    for _ in range(trials):
        x = F.zeros(n.dim, m.dim)
        for h in hmn:
            x = x + F.random_element(rng) * h
        cands.append(x)
    for x in cands:
        if rank(x, F) == m.dim:
            return IsoResult(True, "certified", certificate=x, seed=seed)
    return IsoResult(False, "probabilistic", f"no invertible map in {trials} random trials", seed=seed)


def verify_iso_certificate(m, n, x):
    F = m.field
    return x.shape == (n.dim, m.dim) and rank(x, F) == m.dim == n.dim and \
        ModuleMap(m, n, x).is_homomorphism()


def find_retraction(f, m, n):
    """``r : n -> m`` with ``r f = id_m`` for a monomorphism ``f : m -> n``, or ``None``."""
    F = m.field
    homs = hom_space(n, m)
    target = F.identity(m.dim).reshape(-1)
    if not homs:
        return None if m.dim else F.zeros(0, n.dim)
    cols = np.column_stack([(h @ f).reshape(-1) for h in homs])
    sol = solve_linear(cols, target, F)
    if sol is None:
        return None
    return sum((c * h for c, h in zip(sol[0], homs)), F.zeros(m.dim, n.dim))


def find_section(p, m, n):
    """``s : n -> m`` with ``p s = id_n`` for an epimorphism ``p : m -> n``, or ``None``."""
    F = m.field
    homs = hom_space(n, m)
    target = F.identity(n.dim).reshape(-1)
    if not homs:
        return None if n.dim else F.zeros(m.dim, 0)
    cols = np.column_stack([(p @ h).reshape(-1) for h in homs])
    sol = solve_linear(cols, target, F)
    if sol is None:
        return None
    return sum((c * h for c, h in zip(sol[0], homs)), F.zeros(m.dim, n.dim))


def summand_multiplicities(m, indecomposables):
    """Multiplicities of indecomposable projectives (via the top) or injectives (via the socle)."""
    tops = top_multiplicities(m)
    socs = socle_multiplicities(m)
    out = []
    for x in indecomposables:
        if x.kind == "projective":
            out.append(tops[x.summands[0]])
        elif x.kind == "injective":
            out.append(socs[x.summands[0]])
        else:
            raise ValueError("expected indecomposable projectives or injectives")
    return tuple(out)


# ---------------------------------------------------------------------------
# twists, induction, restriction

def twist(m, sigma):
    """``^sigma m``: same space, ``lambda . x = sigma^{-1}(lambda) x``."""
    inv = sigma.inverse().matrix
    action = [m.act(inv[:, b]) for b in range(m.algebra.dim)]
    return Module(m.algebra, action, validate=False)


def induce(m, g):
    """``F m`` over the skew group algebra; basis ``(sigma, v)`` group-major."""
    a = m.algebra
    if g.algebra is not a:
        raise AlgebraMismatch("group acts on a different algebra")
    gamma = g.skew
    F = a.field
    d, k = m.dim, g.order
    n = a.dim
    # acts[s][b] = action of sigma_s^{-1}(b) on m
    acts = []
    for s in range(k):
        inv = g.inverse_image(s).matrix
        acts.append([m.act(inv[:, b]) for b in range(n)])
    action = []
    for t in range(k):
        for b in range(n):
            x = F.zeros(k * d, k * d)
            for s in range(k):
                r = g.mul_table[t][s]
                x[r * d:(r + 1) * d, s * d:(s + 1) * d] = acts[r][b]
            action.append(x)
    return Module(gamma, action, validate=False)


def restrict(n):
    """Restriction along the embedding of the base algebra."""
    ext = n.algebra.extension
    if ext is None:
        raise NotASkewAlgebra("algebra carries no base-algebra embedding")
    emb = ext.embedding
    return Module(ext.base, [n.act(emb[:, b]) for b in range(ext.base.dim)], validate=False)


def induction_unit(m, g):
    """Natural map ``m -> H F m``, ``v -> 1 (x) v``."""
    F = m.field
    x = F.zeros(g.order * m.dim, m.dim)
    e = g.identity
    x[e * m.dim:(e + 1) * m.dim, :] = F.identity(m.dim)
    return x


def induction_counit(n):
    """Natural map ``F H n -> n``, ``sigma (x) v -> sigma . v``."""
    ext = n.algebra.extension
    g = ext.action
    base = ext.base
    blocks = []
    for s in range(g.order):
        elem = n.field.zero_vector(n.algebra.dim)
        elem[s * base.dim:(s + 1) * base.dim] = base.unit
        blocks.append(n.act(elem))
    return np.hstack(blocks)


def kills_radical(m):
    """``rad(A) . m == 0``, i.e. ``m`` is semisimple."""
    return radical_submodule(m).dim == 0
