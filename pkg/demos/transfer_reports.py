"""
Induction, restriction and JSON reports
=======================================

Induce modules along a group action, compare with sums of twists, and write
the same deterministic reports the command line produces.
"""

import sys

from halg import induce, is_isomorphic, restrict, simples, twist
from halg.conjectures import verify_ext_transfer, verify_induction_restriction, verify_injective_dimension_transfer
from halg.corpus import corpus
from halg.io import emit_report
from halg.modules import direct_sum, regular_module

entry = corpus("swap-quiver")
lam, g = entry.algebra, entry.action
s = dict(zip(lam.decomposition.class_labels, simples(lam)))

# restricting F(S2) gives S2 plus its twist, which is S2'
hf = restrict(induce(s["2"], g))
print(hf.dim, bool(is_isomorphic(hf, direct_sum([s["2"], s["2'"]]))))
print(bool(is_isomorphic(twist(s["2"], g.image(1)), s["2'"])))

###############################################################################
# The verifiers return reports carrying explicit matrices; ``recheck`` verifies
# them again without redoing the search.

rep = verify_induction_restriction(s["2"], g, seed=0)
print(rep.verdict, rep.claims, rep.recheck())
emit_report(rep.to_report(), stream=sys.stdout)

###############################################################################
# Ext dimensions multiply by the group order when the target is the regular
# module, which every action fixes up to isomorphism.

rep = verify_ext_transfer(s["1"], regular_module(lam), g, i_max=3)
print(rep.evidence["ext_base"], rep.evidence["ext_induced"])

# a target moved by the group is reported, not silently used
rep = verify_ext_transfer(s["1"], s["2"], g, i_max=3)
print(rep.verdict, rep.evidence["hypothesis"])

for ext in (2, 3, g):
    rep = verify_injective_dimension_transfer(lam, ext)
    print(rep.verdict, rep.evidence["id_base"], rep.evidence["id_extension"])
