"""Per-term standard errors, collinearity R2 and power.

Uses the coded model matrix (components rescaled to [-1, 1]), the basis the
published per-coefficient tables for these designs are stated in. Power is
for a two-sided t-test on one coefficient of size two standard deviations
at alpha 0.05.
"""

from oamix.catalog import component_amount_projection_design, czitrom_d_oofa
from oamix.core import ModelSpec
from oamix.evaluate import power_table, term_r_squared
from oamix.modelmat import coded_model_matrix, default_interaction_subset

cases = [
    ("czitrom-d-oofa", czitrom_d_oofa(), "scheffe_quadratic"),
    ("ca-projection-100mg", component_amount_projection_design(100.0),
     "component_amount_quadratic"),
]

for name, design, family in cases:
    spec = ModelSpec(family, include_pwo=True,
                     interaction_terms=default_interaction_subset(3),
                     include_block=True)
    X = coded_model_matrix(design, spec)
    powers = power_table(X)
    r2 = term_r_squared(X)
    print(f"{name}  (n={X.n}, p={X.p})")
    print(f"  {'term':8} {'se':>6} {'R2':>7} {'power':>6}")
    for term in X.columns:
        row = powers[term]
        r2_txt = f"{r2[term]:7.4f}" if r2[term] == r2[term] else "      -"
        print(f"  {term:8} {row.se:6.3f} {r2_txt} {row.power:6.3f}")
    print()
