"""Built-in example algebras and group actions.

Everything here is constructed in memory, so the acceptance suite and the
CLI need no fixture files.  Entries are cached: asking twice for the same
name returns the same objects.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass

from .algebra import (
    GroupAction, Quiver, cyclic_table, from_structure_constants, matrix_algebra,
    path_algebra, permutation_group_table, quiver_automorphism_matrix,
)
from .exactlin import GF, QQ


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    algebra: object
    action: GroupAction | None = None
    description: str = ""


def dual_numbers(field=QQ):
    """``k[x]/(x^2)`` on the basis ``1, x``."""
    one, zero = field.one, field.zero
    mul = [[[one, zero], [zero, one]],
           [[zero, one], [zero, zero]]]
    return from_structure_constants(field, ["1", "x"], mul, [one, zero], name="k[x]/(x^2)")


def scaling_action(a, root, order):
    """Cyclic group acting on ``k[x]/(x^2)`` by ``x -> root^k x``."""
    F = a.field
    images = []
    for k in range(order):
        images.append(F.matrix([[1, 0], [0, F(root) ** k]]))
    return GroupAction(a, [f"g{k}" for k in range(order)], cyclic_table(order), images)


def a2_quiver():
    return Quiver(["1", "2"], [("alpha", "1", "2")])


def a2(field=QQ):
    a = path_algebra(field, a2_quiver())
    a.name = "A2"
    return a


def a2_sign_action(a):
    F = a.field
    flip = quiver_automorphism_matrix(a, {"1": "1", "2": "2"}, {"alpha": "alpha"}, {"alpha": -1})
    return GroupAction(a, ["1", "s"], cyclic_table(2), [F.identity(a.dim), flip])


def swap_quiver():
    """Vertex ``1`` with arrows to ``2`` and ``2'``."""
    return Quiver(["1", "2", "2'"], [("alpha", "1", "2"), ("beta", "1", "2'")])


def swap_algebra(field=QQ):
    a = path_algebra(field, swap_quiver())
    a.name = "kQ"
    return a


def swap_action(a):
    """``Z/2`` exchanging ``2 <-> 2'`` and ``alpha <-> beta``, fixing ``1``."""
    F = a.field
    sw = quiver_automorphism_matrix(a, {"1": "1", "2": "2'", "2'": "2"}, {"alpha": "beta", "beta": "alpha"})
    return GroupAction(a, ["1", "s"], cyclic_table(2), [F.identity(a.dim), sw])


def star_quiver(k=3):
    """Source ``0`` with one arrow to each of ``1..k``."""
    return Quiver([str(i) for i in range(k + 1)], [(f"a{i}", "0", str(i)) for i in range(1, k + 1)])


def star_algebra(k=3, field=QQ):
    a = path_algebra(field, star_quiver(k))
    a.name = f"star{k}"
    return a


def star_permutation_action(a, generators):
    """Group generated by permutations of the leaves ``1..k``."""
    k = len(a.quiver.vertices) - 1
    perms = [tuple(p) for p in generators]
    elems, table = permutation_group_table(perms)
    F = a.field
    images = []
    for p in elems:
        vmap = {"0": "0"}
        amap = {}
        for i in range(1, k + 1):
            vmap[str(i)] = str(p[i - 1] + 1)
            amap[f"a{i}"] = f"a{p[i - 1] + 1}"
        images.append(quiver_automorphism_matrix(a, vmap, amap))
    labels = ["".join(str(x + 1) for x in p) for p in elems]
    return GroupAction(a, labels, table, images)


def _entry(name):
    if name == "swap-quiver":
        a = swap_algebra()
        return CorpusEntry(name, a, swap_action(a), "1 -> 2, 1 -> 2' with Z/2 swapping the targets")
    if name == "dual-numbers":
        a = dual_numbers()
        return CorpusEntry(name, a, scaling_action(a, -1, 2), "k[x]/(x^2) over Q with x -> -x")
    if name == "dual-numbers-gf7":
        a = dual_numbers(GF(7))
        return CorpusEntry(name, a, scaling_action(a, 2, 3), "k[x]/(x^2) over GF(7) with x -> 2x (order 3)")
    if name == "a2":
        a = a2()
        return CorpusEntry(name, a, a2_sign_action(a), "1 -> 2 with alpha -> -alpha")
    if name == "star3":
        a = star_algebra(3)
        return CorpusEntry(name, a, star_permutation_action(a, [(1, 0, 2), (1, 2, 0)]),
                           "three-leaf star with S3 permuting the leaves")
    if name == "star3-z3":
        # over Q the group algebra of Z/3 does not split, so use GF(7)
        a = star_algebra(3, GF(7))
        return CorpusEntry(name, a, star_permutation_action(a, [(1, 2, 0)]),
                           "three-leaf star over GF(7) with Z/3 rotating the leaves")
    m = re.fullmatch(r"(.+)-skew", name)
    if m:
        base = corpus(m.group(1))
        if base.action is None:
            raise KeyError(name)
        return CorpusEntry(name, base.action.skew, None, f"skew group algebra of {base.name}")
    m = re.fullmatch(r"m(\d+)-(.+)", name)
    if m:
        base = corpus(m.group(2))
        n = int(m.group(1))
        return CorpusEntry(name, matrix_algebra(base.algebra, n), None, f"M{n} over {base.name}")
    raise KeyError(name)


BASE_NAMES = ("swap-quiver", "dual-numbers", "a2", "dual-numbers-gf7", "star3", "star3-z3")
ALIASES = {"example2.8": "swap-quiver"}


def canonical_name(name):
    for alias, target in ALIASES.items():
        if name == alias or name.endswith("-" + alias) or name.startswith(alias + "-"):
            return name.replace(alias, target)
    return name


def corpus(name):
    """Look up a built-in instance by name (raises ``KeyError``)."""
    return _cached(canonical_name(name))


@functools.lru_cache(maxsize=None)
def _cached(name):
    return _entry(name)


def corpus_names():
    names = list(BASE_NAMES)
    names += [f"{b}-skew" for b in BASE_NAMES]
    names += [f"m{n}-{b}" for n in (2, 3) for b in ("dual-numbers", "a2", "swap-quiver")]
    names += list(ALIASES)
    names += [f"{k}-skew" for k in ALIASES]
    return names
