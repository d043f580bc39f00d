"""Verify orthogonal blocking, then break it on purpose.

A design blocks orthogonally for a model when every model column has equal
sums in each block. The expanded order-of-addition designs keep this
property; swapping one run across blocks destroys it.
"""

from oamix.catalog import aggarwal_a_oofa, czitrom_d_oofa
from oamix.core import BlockedDesign, ModelSpec, Run
from oamix.evaluate import check_orthogonal_blocking
from oamix.modelmat import default_interaction_subset


def show(report, label):
    print(label, "->", "PASS" if report.passed else "FAIL")
    for c in report.conditions:
        mark = "ok " if c.ok else "BAD"
        sums = ", ".join(f"{s:.4f}" for s in c.block_sums)
        print(f"  {mark} {c.condition:18} {c.term:8} sums [{sums}]")
    print()


scheffe = ModelSpec("scheffe_quadratic", include_pwo=True,
                    interaction_terms=default_interaction_subset(3),
                    include_block=True)
kmodel = ModelSpec("k_quadratic", include_pwo=True,
                   interaction_terms=default_interaction_subset(3),
                   include_block=True)

show(check_orthogonal_blocking(czitrom_d_oofa(), scheffe),
     "czitrom-d-oofa / scheffe quadratic")
show(check_orthogonal_blocking(aggarwal_a_oofa(), kmodel),
     "aggarwal-a-oofa / k-model")

# swap the first run of each block; component and pwo sums now disagree
d = czitrom_d_oofa()
runs = list(d.runs)
a, b = runs[0], runs[12]
runs[0] = Run(b.values, b.pwo, 1)
runs[12] = Run(a.values, a.pwo, 2)
broken = BlockedDesign(m=3, kind="proportion", runs=tuple(runs),
                       n_blocks=2, as_printed=True)
report = check_orthogonal_blocking(broken, scheffe)
print("after swapping runs 1 and 13 -> PASS" if report.passed
      else "after swapping runs 1 and 13 -> FAIL, violated:")
for c in report.failed():
    print(f"  {c.condition} on {c.term}: sums {c.block_sums}")
