"""Design criteria for the three main catalog designs.

Prints n, p, the D and A criteria, max and average prediction variance and
G-efficiency. Average prediction variance over the design's own rows is
always p/n (hat matrix trace), a useful sanity check.
"""

from oamix.catalog import (aggarwal_a_oofa, component_amount_projection_design,
                           czitrom_d_oofa)
from oamix.core import ModelSpec
from oamix.evaluate import criteria_report
from oamix.modelmat import build_model_matrix, default_interaction_subset

cases = [
    ("czitrom-d-oofa", czitrom_d_oofa(), "scheffe_quadratic"),
    ("aggarwal-a-oofa", aggarwal_a_oofa(), "k_quadratic"),
    ("ca-projection-100mg", component_amount_projection_design(100.0),
     "component_amount_quadratic"),
]

print(f"{'design':20} {'n':>3} {'p':>3} {'d_crit':>9} {'a_crit':>9} "
      f"{'max_pv':>7} {'avg_pv':>7} {'G%':>6}")
for name, design, family in cases:
    spec = ModelSpec(family, include_pwo=True,
                     interaction_terms=default_interaction_subset(3),
                     include_block=True)
    rep = criteria_report(build_model_matrix(design, spec))
    print(f"{name:20} {rep.n:3} {rep.p:3} {rep.d_criterion:9.4g} "
          f"{rep.a_criterion:9.4g} {rep.max_pv:7.3f} {rep.avg_pv:7.3f} "
          f"{rep.g_efficiency:6.1f}")

print()
for note in rep.notes:
    print("note:", note)
