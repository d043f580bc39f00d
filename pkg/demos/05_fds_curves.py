"""Fraction-of-design-space curves for two designs.

Each curve sorts the prediction variances of seeded random design-space
points (uniform simplex proportions, a random catalog amount level for
amount designs, a random addition order, a random block) against the
cumulative fraction of space. Flat and low is good.
"""

from pathlib import Path

from oamix.catalog import component_amount_projection_design, czitrom_d_oofa
from oamix.core import ModelSpec
from oamix.evaluate import fds_curve
from oamix.modelmat import default_interaction_subset
from oamix.serialize import write_fds_outputs

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

cases = [
    ("czitrom-d-oofa", czitrom_d_oofa(), "scheffe_quadratic"),
    ("ca-projection-100mg", component_amount_projection_design(100.0),
     "component_amount_quadratic"),
]

for name, design, family in cases:
    spec = ModelSpec(family, include_pwo=True,
                     interaction_terms=default_interaction_subset(3),
                     include_block=True)
    curve = fds_curve(design, spec, n_samples=10_000, seed=42)
    csv_path, svg_path = write_fds_outputs(curve, str(OUT / f"fds_{name}"))
    print(f"{name:20} median={curve.median():.4f} "
          f"max={curve.maximum():.4f}  wrote {Path(csv_path).name}, "
          f"{Path(svg_path).name}")

# shell equivalent:
#   oamix fds -i design.csv --model ca-q --samples 10000 --seed 42 -o fds_ca
