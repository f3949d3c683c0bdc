"""Condition checkers for homological conjectures and transfer verifiers.

Checkers never prove or refute a conjecture.  They walk resolutions up to a
cutoff and return a three-valued verdict: ``holds`` (definitive),
``violated`` at a concrete index (definitive, with a witness that can be
re-verified through an independent route) or ``inconclusive`` up to the
cutoff.  Probes that find a combination a conjecture forbids mark the
verdict as a *candidate*; such a result is almost certainly a bug.

Verifiers compare an algebra with an extension (matrix algebra or skew
group algebra) and return a :class:`TransferReport` whose claims can be
re-checked from the stored certificates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import GroupAction, matrix_algebra
from .errors import CounterexampleCandidate
from .modules import (
    HomDim, direct_sum, ext_dim, ext_dim_via_injective, find_retraction, find_section,
    hom_dim, indecomposable_injectives, indecomposable_projectives, induce,
    induction_counit, induction_unit, injective_dimension, is_isomorphic, is_projective,
    kills_radical, minimal_resolution, projective_dimension, regular_module, restrict,
    simples, top_multiplicities, twist, verify_iso_certificate,
)

HOLDS, VIOLATED, INCONCLUSIVE = "holds", "violated", "inconclusive"
DEFAULT_CUTOFF = 10


def matrix_json(x, F):
    return [[F.format(v) for v in row] for row in x]


def describe(a):
    out = {"name": a.name or "algebra", "dim": a.dim, "field": a.field.to_json()}
    if a.extension is not None:
        out["extension"] = {"kind": a.extension.kind, "base": a.extension.base.name or "algebra"}
    return out


@dataclass
class ConditionVerdict:
    claim: str
    kind: str
    cutoff: int
    seed: int = 0
    index: int | None = None
    evidence: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    candidate: bool = False
    _recheck: Callable[[], bool] | None = field(default=None, repr=False, compare=False)

    def recheck(self):
        """Re-verify the stored witness by an independent computation."""
        return True if self._recheck is None else bool(self._recheck())

    def to_report(self):
        ev = dict(self.evidence)
        ev.update(self.flags)
        if self.index is not None:
            ev["index"] = self.index
        if self.candidate:
            ev["counterexample_candidate"] = True
        return {"claim": self.claim, "verdict": self.kind, "cutoff": self.cutoff,
                "seed": self.seed, "evidence": ev, "certificates": []}


@dataclass
class TransferReport:
    claim: str
    base: dict
    extension: dict
    claims: dict
    cutoff: int
    seed: int = 0
    evidence: dict = field(default_factory=dict)
    certificates: list = field(default_factory=list)
    _checks: list = field(default_factory=list, repr=False, compare=False)

    @property
    def verdict(self):
        vals = list(self.claims.values())
        if any(v is False for v in vals):
            return VIOLATED
        if any(v is None for v in vals):
            return INCONCLUSIVE
        return HOLDS

    def recheck(self):
        """Re-verify every certificate without rerunning the pipeline."""
        return all(chk() for chk in self._checks)

    def to_report(self):
        ev = {"base": self.base, "extension": self.extension,
              "claims": {k: v for k, v in self.claims.items()}}
        ev.update(self.evidence)
        return {"claim": self.claim, "verdict": self.verdict, "cutoff": self.cutoff,
                "seed": self.seed, "evidence": ev, "certificates": self.certificates}


# ---------------------------------------------------------------------------
# condition checkers

def _id_pair(a, cutoff):
    left = injective_dimension(regular_module(a), cutoff)
    right = injective_dimension(regular_module(a.opposite()), cutoff)
    return left, right


def gsc_check(a, cutoff=DEFAULT_CUTOFF):
    """Compare the injective dimensions of ``A`` as a left and a right module."""
    left, right = _id_pair(a, cutoff)
    ev = {"id_left": left.to_json(), "id_right": right.to_json()}
    if not (left.finite and right.finite):
        return ConditionVerdict("gsc", INCONCLUSIVE, cutoff, evidence=ev)
    if left == right:
        return ConditionVerdict("gsc", HOLDS, cutoff, evidence=ev)
    return ConditionVerdict("gsc", VIOLATED, cutoff, index=min(left.value, right.value), evidence=ev,
                            _recheck=lambda: _id_pair(a, cutoff) == (left, right))


def _injective_projectivity(a):
    return [is_projective(i) for i in indecomposable_injectives(a)]


def _iso_to_some_projective(m):
    return any(is_isomorphic(m, p) for p in indecomposable_projectives(m.algebra))


def nakayama_condition(a, cutoff=DEFAULT_CUTOFF):
    """Walk the injective coresolution of ``A`` looking for a non-projective term."""
    res = minimal_resolution(regular_module(a), "injective", cutoff)
    proj = _injective_projectivity(a)
    labels = a.decomposition.class_labels
    ev = {"resolution": res.to_json(), "projective_injectives": [labels[c] for c, p in enumerate(proj) if p]}
    flags = {"self_injective": res.dimension() == HomDim.exact(0)}
    for i, mult in enumerate(res.multiplicities):
        bad = [c for c, k in enumerate(mult) if k and not proj[c]]
        if bad:
            ev["witness"] = {"term": i, "class": labels[bad[0]]}
            inj = indecomposable_injectives(a)[bad[0]]
            return ConditionVerdict("nc-condition", VIOLATED, cutoff, index=i, evidence=ev, flags=flags,
                                    _recheck=lambda: not _iso_to_some_projective(inj))
    kind = HOLDS if res.terminated else INCONCLUSIVE
    return ConditionVerdict("nc-condition", kind, cutoff, evidence=ev, flags=flags)


def auslander_condition(a, cutoff=DEFAULT_CUTOFF):
    """Check ``pd I^i <= i`` along the injective coresolution of ``A``."""
    res = minimal_resolution(regular_module(a), "injective", cutoff)
    inj = indecomposable_injectives(a)
    pds = [projective_dimension(i, cutoff) for i in inj]
    left, right = _id_pair(a, cutoff)
    labels = a.decomposition.class_labels
    flags = {"gorenstein": left.finite and right.finite}
    ev = {"resolution": res.to_json(), "pd_injectives": {labels[c]: d.to_json() for c, d in enumerate(pds)}}
    term_pds = []
    for i, mult in enumerate(res.multiplicities):
        used = [pds[c] for c, k in enumerate(mult) if k]
        worst = max(used, key=lambda d: (not d.finite, d.value)) if used else HomDim.exact(0)
        term_pds.append(worst.to_json())
        if not worst.finite or worst.value > i:
            ev["pd_terms"] = term_pds
            c = next(c for c, k in enumerate(mult) if k and pds[c] == worst)
            ev["witness"] = {"term": i, "class": labels[c], "pd": worst.to_json()}
            return ConditionVerdict("agc-condition", VIOLATED, cutoff, index=i, evidence=ev, flags=flags,
                                    _recheck=lambda: _pd_exceeds(inj[c], i, cutoff))
    ev["pd_terms"] = term_pds
    kind = HOLDS if res.terminated else INCONCLUSIVE
    return ConditionVerdict("agc-condition", kind, cutoff, evidence=ev, flags=flags)


def _pd_exceeds(m, i, cutoff):
    """``pd m > i`` via ``Ext^{i+1}(m, S) != 0`` for some simple ``S`` (or no termination)."""
    for s in simples(m.algebra):
        if ext_dim_via_injective(m, s, i + 1):
            return True
    return False


def snc_probe(m, cutoff=DEFAULT_CUTOFF):
    """Least ``i <= cutoff`` with ``Ext^i(m, A) != 0``."""
    if m.dim == 0:
        raise ValueError("probe needs a nonzero module")
    reg = regular_module(m.algebra)
    table = []
    for i in range(cutoff + 1):
        d = ext_dim(m, reg, i)
        table.append(d)
        if d:
            return ConditionVerdict("snc-probe", HOLDS, cutoff, index=i, evidence={"ext_dims": table},
                                    _recheck=lambda: ext_dim_via_injective(m, reg, i) == d)
    return ConditionVerdict("snc-probe", INCONCLUSIVE, cutoff, evidence={"ext_dims": table}, candidate=True)


def gnc_probe(a, cutoff=DEFAULT_CUTOFF):
    """Run :func:`snc_probe` on every simple module."""
    labels = a.decomposition.class_labels
    per = [snc_probe(s, cutoff) for s in simples(a)]
    ev = {"simples": {labels[c]: ({"witness": v.index} if v.kind == HOLDS else {"witness": None})
                      | {"ext_dims": v.evidence["ext_dims"]} for c, v in enumerate(per)}}
    ok = all(v.kind == HOLDS for v in per)
    out = ConditionVerdict("gnc-probe", HOLDS if ok else INCONCLUSIVE, cutoff, evidence=ev,
                           candidate=not ok, _recheck=lambda: all(v.recheck() for v in per))
    out.per_simple = per
    return out


def arc_probe(m, cutoff=DEFAULT_CUTOFF):
    """Does ``Ext^{1..cutoff}(m, m + A)`` vanish, and is ``m`` projective?"""
    target = direct_sum([m, regular_module(m.algebra)])
    table = []
    first = None
    for i in range(1, cutoff + 1):
        d = ext_dim(m, target, i)
        table.append(d)
        if d:
            first = i
            break
    proj = is_projective(m)
    vanishing = first is None
    ev = {"ext_dims_from_1": table, "vanishing": vanishing, "projective": proj}
    if vanishing and not proj:
        return ConditionVerdict("arc-probe", INCONCLUSIVE, cutoff, evidence=ev, candidate=True)
    recheck = None
    if first is not None:
        recheck = lambda: ext_dim_via_injective(m, target, first) == table[-1]
    return ConditionVerdict("arc-probe", HOLDS, cutoff, index=first, evidence=ev, _recheck=recheck)


def findim_probe(a, modules, cutoff=DEFAULT_CUTOFF):
    """Largest finite projective dimension among ``modules``.

    This is only a lower bound for the finitistic dimension of ``a``.
    """
    pds = [projective_dimension(m, cutoff) for m in modules]
    return max((d.value for d in pds if d.finite), default=0)


def findim_report(a, modules, cutoff=DEFAULT_CUTOFF):
    pds = [projective_dimension(m, cutoff) for m in modules]
    bound = max((d.value for d in pds if d.finite), default=0)
    return ConditionVerdict("findim-lower-bound", HOLDS, cutoff,
                            evidence={"lower_bound": bound, "pds": [d.to_json() for d in pds]})


# ---------------------------------------------------------------------------
# transfer verifiers

def _extension_algebra(a, extension):
    if isinstance(extension, GroupAction):
        if extension.algebra is not a:
            raise ValueError("group acts on a different algebra")
        return extension.skew
    if isinstance(extension, int) and extension >= 1:
        return matrix_algebra(a, extension)
    raise ValueError("extension must be a matrix size n >= 1 or a GroupAction")


def verify_injective_dimension_transfer(a, extension, cutoff=DEFAULT_CUTOFF):
    """Compare one-sided self-injective dimensions of ``a`` and an extension."""
    gamma = _extension_algebra(a, extension)
    la = _id_pair(a, cutoff)
    ga = _id_pair(gamma, cutoff)
    claims = {
        "left_id_equal": la[0] == ga[0],
        "right_id_equal": la[1] == ga[1],
        "self_injective_equivalent": (la[0] == HomDim.exact(0)) == (ga[0] == HomDim.exact(0)),
        "gorenstein_equivalent": (la[0].finite and la[1].finite) == (ga[0].finite and ga[1].finite),
    }
    if all(claims.values()) and not all(d.finite for d in la + ga):
        claims["all_dimensions_finite"] = None
    ev = {"id_base": {"left": la[0].to_json(), "right": la[1].to_json()},
          "id_extension": {"left": ga[0].to_json(), "right": ga[1].to_json()}}
    rep = TransferReport("lemma3.1", describe(a), describe(gamma), claims, cutoff, evidence=ev)
    rep._checks.append(lambda: (_id_pair(a, cutoff), _id_pair(gamma, cutoff)) == (la, ga))
    rep.values = {"base": la, "extension": ga}
    return rep


def verify_induction_restriction(m, action, seed=0, cutoff=DEFAULT_CUTOFF):
    """Restriction of induction versus the sum of twists, and the two splittings."""
    g = action
    F = m.field
    hfm = restrict(induce(m, g))
    twists = [twist(m, g.image(s)) for s in range(g.order)]
    target = direct_sum(twists)
    iso = is_isomorphic(hfm, target, seed)
    eta = induction_unit(m, g)
    r = find_retraction(eta, m, hfm)
    n = induce(m, g)
    eps = induction_counit(n)
    fhn = induce(restrict(n), g)
    sec = find_section(eps, fhn, n)
    claims = {
        "restriction_of_induction_iso": True if iso.isomorphic else (False if iso.kind == "invariant-mismatch" else None),
        "unit_split_mono": r is not None,
        "counit_split_epi": sec is not None,
    }
    dec = m.algebra.decomposition
    ev = {"dim": m.dim, "group_order": g.order,
          "twist_tops": {g.labels[s]: list(top_multiplicities(t)) for s, t in enumerate(twists)},
          "iso_kind": iso.kind, "classes": list(dec.class_labels)}
    certs = []
    if iso.isomorphic:
        certs.append({"kind": "iso", "map": "HFM -> sum of twists", "matrix": matrix_json(iso.certificate, F)})
    if r is not None:
        certs.append({"kind": "retraction", "map": "HFM -> M", "matrix": matrix_json(r, F)})
    if sec is not None:
        certs.append({"kind": "section", "map": "FM -> FHFM", "matrix": matrix_json(sec, F)})
    rep = TransferReport("prop2.7", describe(m.algebra), describe(g.skew), claims, cutoff, seed, ev, certs)
    if iso.isomorphic:
        rep._checks.append(lambda: verify_iso_certificate(hfm, target, iso.certificate))
    if r is not None:
        rep._checks.append(lambda: _is_identity(r @ eta, F) and _is_hom(hfm, m, r))
    if sec is not None:
        rep._checks.append(lambda: _is_identity(eps @ sec, F) and _is_hom(n, fhn, sec))
    return rep


def _is_identity(x, F):
    return x.shape[0] == x.shape[1] and (x == F.identity(x.shape[0])).all()


def _is_hom(src, dst, x):
    return all((x @ src.action[g] == dst.action[g] @ x).all() for g in src.algebra.generators)


def g_stability(n, action, seed=0):
    """Per group element, an iso ``^sigma n -> n`` (or the failed test)."""
    return [is_isomorphic(twist(n, action.image(s)), n, seed) for s in range(action.order)]


def verify_ext_transfer(m, n, action, i_max=5, seed=0):
    """Ext over the base versus Ext between induced modules."""
    g = action
    F = m.field
    stab = g_stability(n, g, seed)
    stable = all(r.isomorphic for r in stab)
    fm, fn = induce(m, g), induce(n, g)
    twists = [twist(n, g.image(s)) for s in range(g.order)]
    base = [ext_dim(m, n, i) for i in range(i_max + 1)]
    ext = [ext_dim(fm, fn, i) for i in range(i_max + 1)]
    summed = [sum(ext_dim(m, t, i) for t in twists) for i in range(i_max + 1)]
    claims = {"induced_equals_sum_over_twists": summed == ext}
    ev = {"group_order": g.order, "ext_base": base, "ext_induced": ext, "ext_sum_over_twists": summed,
          "g_stable": stable}
    if stable:
        claims["vanishing_transfers"] = all(e == 0 for b, e in zip(base, ext) if b == 0)
        claims["dimension_identity"] = all(e == g.order * b for b, e in zip(base, ext))
    else:
        moved = [g.labels[s] for s, r in enumerate(stab) if not r.isomorphic]
        ev["hypothesis"] = {"error": "NotGStable", "moved_by": moved}
        claims["g_stable"] = None
    certs = [{"kind": "iso", "map": f"twist by {g.labels[s]} -> N", "matrix": matrix_json(r.certificate, F)}
             for s, r in enumerate(stab) if r.isomorphic]
    rep = TransferReport("prop3.5", describe(m.algebra), describe(g.skew), claims, i_max, seed, ev, certs)
    for s, r in enumerate(stab):
        if r.isomorphic:
            rep._checks.append(lambda t=twists[s], x=r.certificate: verify_iso_certificate(t, n, x))
    rep._checks.append(lambda: [ext_dim_via_injective(fm, fn, i) for i in range(i_max + 1)] == ext)
    return rep


def regular_g_stability_certificate(action, s):
    """Explicit iso ``A -> ^sigma A``: the matrix of ``sigma^{-1}``."""
    return action.inverse_image(s).matrix


def verify_simple_induction(a, action, cutoff=DEFAULT_CUTOFF, seed=0):
    """Induced simples are semisimple; witness transfer from the skew algebra."""
    g = action
    F = a.field
    gamma = g.skew
    gsimples = simples(gamma)
    glabels = gamma.decomposition.class_labels
    labels = a.decomposition.class_labels
    reg = regular_module(a)
    freg = induce(reg, g)
    per = {}
    semisimple_ok = count_ok = True
    for c, s in enumerate(simples(a)):
        fs = induce(s, g)
        ss = kills_radical(fs)
        mult = top_multiplicities(fs)
        total = sum(k * gsimples[d].dim for d, k in enumerate(mult))
        semisimple_ok &= ss
        count_ok &= ss and total == fs.dim
        per[labels[c]] = {"dim": fs.dim, "semisimple": ss,
                          "decomposition": {glabels[d]: k for d, k in enumerate(mult) if k}}
    gnc_base = gnc_probe(a, cutoff)
    gnc_ext = gnc_probe(gamma, cutoff)
    identity_ok = True
    for c, s in enumerate(simples(a)):
        v = gnc_base.per_simple[c]
        top = v.index if v.index is not None else cutoff
        fs = induce(s, g)
        lhs = [ext_dim(fs, freg, i) for i in range(top + 1)]
        rhs = [g.order * d for d in v.evidence["ext_dims"][:top + 1]]
        per[labels[c]]["ext_induced"] = lhs
        identity_ok &= lhs == rhs
    transfer = (gnc_base.kind == HOLDS) if gnc_ext.kind == HOLDS else True
    stable = []
    for s in range(g.order):
        x = regular_g_stability_certificate(g, s)
        stable.append(verify_iso_certificate(reg, twist(reg, g.image(s)), x))
    claims = {"induced_simples_semisimple": semisimple_ok, "multiplicity_count": count_ok,
              "dimension_identity_up_to_witness": identity_ok, "witness_transfer": transfer,
              "regular_module_g_stable": all(stable)}
    ev = {"simples": per, "group_order": g.order,
          "gnc_extension": gnc_ext.kind, "gnc_base": gnc_base.kind,
          "note": "regular module is G-stable for every action; certificate is sigma^-1"}
    certs = [{"kind": "iso", "map": f"A -> twist of A by {g.labels[s]}",
              "matrix": matrix_json(regular_g_stability_certificate(g, s), F)} for s in range(g.order)]
    rep = TransferReport("thm3.6", describe(a), describe(gamma), claims, cutoff, seed, ev, certs)
    rep._checks.append(lambda: all(verify_iso_certificate(reg, twist(reg, g.image(s)),
                                                          regular_g_stability_certificate(g, s))
                                   for s in range(g.order)))
    rep._checks.append(lambda: gnc_base.recheck() and gnc_ext.recheck())
    return rep


def default_adjunction_modules(a, gamma):
    base = simples(a) + indecomposable_projectives(a) + indecomposable_injectives(a) + [regular_module(a)]
    ext = simples(gamma) + indecomposable_projectives(gamma) + indecomposable_injectives(gamma)
    return base, ext


def verify_adjunction(action, base_modules=None, ext_modules=None):
    """Hom dimension counts for induction/restriction on both sides."""
    g = action
    a, gamma = g.algebra, g.skew
    dm, dn = default_adjunction_modules(a, gamma)
    ms = dm if base_modules is None else base_modules
    ns = dn if ext_modules is None else ext_modules
    rows = []
    left_ok = right_ok = True
    induced = [induce(m, g) for m in ms]
    restricted = [restrict(n) for n in ns]
    for i, (m, fm) in enumerate(zip(ms, induced)):
        for j, (n, hn) in enumerate(zip(ns, restricted)):
            l1, l2 = hom_dim(fm, n), hom_dim(m, hn)
            r1, r2 = hom_dim(n, fm), hom_dim(hn, m)
            left_ok &= l1 == l2
            right_ok &= r1 == r2
            rows.append([i, j, l1, l2, r1, r2])
    claims = {"induction_left_adjoint": left_ok, "induction_right_adjoint": right_ok}
    ev = {"pairs": len(rows), "table_columns": ["M", "N", "Hom(FM,N)", "Hom(M,HN)", "Hom(N,FM)", "Hom(HN,M)"],
          "table": rows}
    return TransferReport("lemma2.4", describe(a), describe(gamma), claims, 0, 0, ev)


# ---------------------------------------------------------------------------
# corpus sanity

def corpus_sanity(a, cutoff=DEFAULT_CUTOFF, witness_bound=2):
    """Run every checker on ``a``; raise on anything a known implication forbids.

    Returns the verdicts when all is well.
    """
    nc = nakayama_condition(a, cutoff)
    agc = auslander_condition(a, cutoff)
    gsc = gsc_check(a, cutoff)
    gnc = gnc_probe(a, cutoff)
    name = a.name or "algebra"
    if (nc.kind == HOLDS) != nc.flags["self_injective"]:
        raise CounterexampleCandidate(f"nc-condition on {name}", nc.to_report())
    if agc.kind == HOLDS and not agc.flags["gorenstein"]:
        raise CounterexampleCandidate(f"agc-condition on {name}", agc.to_report())
    if gsc.kind == VIOLATED:
        raise CounterexampleCandidate(f"gsc on {name}", gsc.to_report())
    for v in gnc.per_simple:
        if v.index is None or v.index > witness_bound:
            raise CounterexampleCandidate(f"gnc-probe on {name}", gnc.to_report())
    return {"nc": nc, "agc": agc, "gsc": gsc, "gnc": gnc}
