"""
A skew group algebra and its Gabriel quiver
===========================================

We build the path algebra of a three-vertex quiver with two arrows leaving
vertex 1, let Z/2 act by swapping the two arrows, and look at the basic
structure of the skew group algebra.
"""

import numpy as np

from halg import QQ, Quiver, GroupAction, cyclic_table, gabriel_quiver, path_algebra
from halg.algebra import quiver_automorphism_matrix
from halg.modules import indecomposable_projectives, simples

# the quiver 2 <- 1 -> 2'
q = Quiver(["1", "2", "2'"], [("alpha", "1", "2"), ("beta", "1", "2'")])
lam = path_algebra(QQ, q)
print(lam.labels)

# paths compose right to left, so alpha * e_1 = alpha
i = {lab: k for k, lab in enumerate(lam.labels)}
print(lam.mul(lam.basis_vector(i["alpha"]), lam.basis_vector(i["e_1"])))

# the swap, written as a 5 x 5 matrix on the path basis
sigma = quiver_automorphism_matrix(lam, {"1": "1", "2": "2'", "2'": "2"},
                                   {"alpha": "beta", "beta": "alpha"})
g = GroupAction(lam, ["1", "s"], cyclic_table(2), [QQ.identity(lam.dim), sigma])
gamma = g.skew
print(gamma.dim, gamma.radical.dim)

###############################################################################
# The radical of the skew algebra is spanned by the arrows tensored with the
# group, and the semisimple quotient has three blocks.

gq = gabriel_quiver(gamma)
for (src, tgt), count in sorted(gq.arrow_counts.items()):
    print(f"{src} -> {tgt}  x{count}")
print(gq.simple_dims)

###############################################################################
# The two sources of the Gabriel quiver have one-dimensional simples.  The sink
# has a two-dimensional simple since the group swaps 2 and 2'.

print([s.dim for s in simples(gamma)])
print([p.dim for p in indecomposable_projectives(gamma)])

# idempotents sum to one
idem = gamma.decomposition.idempotents
print(np.all(sum(idem[1:], idem[0].copy()) == gamma.unit))
