"""
Resolutions, dimensions and Ext tables
======================================

Minimal projective resolutions and injective coresolutions for a few small
algebras, and the condition checkers that read them.
"""

from halg import QQ, Quiver, ext_dim, injective_dimension, path_algebra, projective_dimension
from halg.conjectures import auslander_condition, gnc_probe, nakayama_condition
from halg.corpus import dual_numbers
from halg.modules import minimal_resolution, regular_module, simples

a2 = path_algebra(QQ, Quiver(["1", "2"], [("alpha", "1", "2")]))
s1, s2 = simples(a2)
print(projective_dimension(s1), projective_dimension(s2))
print(injective_dimension(s1), injective_dimension(s2))

###############################################################################
# Ext between simples of A2: one extension from S1 to S2, nothing else.

print([[ext_dim(x, y, 1) for y in (s1, s2)] for x in (s1, s2)])

###############################################################################
# The dual numbers k[x]/(x^2) have a periodic resolution of the simple module,
# so the projective dimension is only bounded below at any cutoff.

k = dual_numbers()
(s,) = simples(k)
res = minimal_resolution(s, cutoff=6)
print(res.multiplicities, res.dimension())
print([ext_dim(s, s, i) for i in range(5)])

###############################################################################
# The checkers walk the injective coresolution of the regular module.

for alg in (a2, k):
    nc = nakayama_condition(alg)
    agc = auslander_condition(alg)
    print(alg.name, nc.kind, nc.flags, agc.kind, agc.flags)

res = minimal_resolution(regular_module(a2), "injective")
print(res.multiplicities)

# least i with Ext^i(S, A) nonzero, per simple
print({lab: v.index for lab, v in zip(a2.decomposition.class_labels, gnc_probe(a2).per_simple)})
