"""Built-in blocked designs and the order-of-addition expansion.

The catalog ships two classic three-component mixture designs in two
orthogonal blocks (the Czitrom D-optimal and Aggarwal A-optimal blocked
designs), their order-of-addition expansions, and a 36-run order-of-addition
component-amount design obtained by projecting a simplex lattice onto three
components at four total-amount levels.

Values are stored exactly as conventionally printed (0.168/0.832,
0.239/0.761, centroid split 0.333/0.333/0.334, lattice levels 0.24/0.76)
rather than re-derived from closed forms, so matrices built from them match
published analyses digit for digit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BlockedDesign, Run
from .errors import AlreadyExpanded, InvalidAmount, SpecError
from .pwo import enumerate_orderings

# rows: (x1, x2, x3, block)
_CZITROM_BASE = (
    (0.168, 0.832, 0, 1),
    (0.832, 0, 0.168, 1),
    (0, 0.168, 0.832, 1),
    (0.333, 0.333, 0.334, 1),
    (0.168, 0, 0.832, 2),
    (0.832, 0.168, 0, 2),
    (0, 0.832, 0.168, 2),
    (0.333, 0.333, 0.334, 2),
)

_AGGARWAL_BASE = (
    (0.239, 0.761, 0, 1),
    (0.761, 0, 0.239, 1),
    (0, 0.239, 0.761, 1),
    (0.333, 0.333, 0.334, 1),
    (0.239, 0, 0.761, 2),
    (0.761, 0.239, 0, 2),
    (0, 0.761, 0.239, 2),
    (0.333, 0.333, 0.334, 2),
)

# rows: (x1, x2, x3, z12, z13, z23, block)
_CZITROM_OOFA = (
    (0.168, 0.832, 0, 1, 0, 0, 1),
    (0.168, 0.832, 0, -1, 0, 0, 1),
    (0.832, 0, 0.168, 0, -1, 0, 1),
    (0.832, 0, 0.168, 0, 1, 0, 1),
    (0, 0.168, 0.832, 0, 0, 1, 1),
    (0, 0.168, 0.832, 0, 0, -1, 1),
    (0.333, 0.333, 0.334, 1, 1, 1, 1),
    (0.333, 0.333, 0.334, 1, 1, -1, 1),
    (0.333, 0.333, 0.334, 1, -1, -1, 1),
    (0.333, 0.333, 0.334, -1, 1, 1, 1),
    (0.333, 0.333, 0.334, -1, -1, 1, 1),
    (0.333, 0.333, 0.334, -1, -1, -1, 1),
    (0.168, 0, 0.832, 0, 1, 0, 2),
    (0.168, 0, 0.832, 0, -1, 0, 2),
    (0.832, 0.168, 0, -1, 0, 0, 2),
    (0.832, 0.168, 0, 1, 0, 0, 2),
    (0, 0.832, 0.168, 0, 0, -1, 2),
    (0, 0.832, 0.168, 0, 0, 1, 2),
    (0.333, 0.333, 0.334, 1, 1, 1, 2),
    (0.333, 0.333, 0.334, 1, 1, -1, 2),
    (0.333, 0.333, 0.334, 1, -1, -1, 2),
    (0.333, 0.333, 0.334, -1, 1, 1, 2),
    (0.333, 0.333, 0.334, -1, -1, 1, 2),
    (0.333, 0.333, 0.334, -1, -1, -1, 2),
)

_AGGARWAL_OOFA = (
    (0.239, 0.761, 0, 1, 0, 0, 1),
    (0.239, 0.761, 0, -1, 0, 0, 1),
    (0.761, 0, 0.239, 0, -1, 0, 1),
    (0.761, 0, 0.239, 0, 1, 0, 1),
    (0, 0.239, 0.761, 0, 0, 1, 1),
    (0, 0.239, 0.761, 0, 0, -1, 1),
    (0.333, 0.333, 0.334, 1, 1, 1, 1),
    (0.333, 0.333, 0.334, 1, 1, -1, 1),
    (0.333, 0.333, 0.334, 1, -1, -1, 1),
    (0.333, 0.333, 0.334, -1, 1, 1, 1),
    (0.333, 0.333, 0.334, -1, -1, 1, 1),
    (0.333, 0.333, 0.334, -1, -1, -1, 1),
    (0.239, 0, 0.761, 0, 1, 0, 2),
    (0.239, 0, 0.761, 0, -1, 0, 2),
    (0.761, 0.239, 0, -1, 0, 0, 2),
    (0.761, 0.239, 0, 1, 0, 0, 2),
    (0, 0.761, 0.239, 0, 0, -1, 2),
    (0, 0.761, 0.239, 0, 0, 1, 2),
    (0.333, 0.333, 0.334, 1, 1, 1, 2),
    (0.333, 0.333, 0.334, 1, 1, -1, 2),
    (0.333, 0.333, 0.334, 1, -1, -1, 2),
    (0.333, 0.333, 0.334, -1, 1, 1, 2),
    (0.333, 0.333, 0.334, -1, -1, 1, 2),
    (0.333, 0.333, 0.334, -1, -1, -1, 2),
)

# rows: (a1, a2, a3, z12, z13, z23, block) at unit total-amount scale
_CA_PROJECTION_UNIT = (
    (0, 0, 0.24, 0, 0, 0, 1),
    (0, 0.76, 0, 0, 0, 0, 1),
    (0.24, 0, 0.76, 0, 1, 0, 1),
    (0.24, 0, 0.76, 0, -1, 0, 1),
    (0.76, 0.24, 0, -1, 0, 0, 1),
    (0.76, 0.24, 0, 1, 0, 0, 1),
    (0, 0, 0.24, 0, 0, 0, 1),
    (0, 0.24, 0.76, 0, 0, 1, 1),
    (0, 0.24, 0.76, 0, 0, -1, 1),
    (0.24, 0.76, 0, 1, 0, 0, 1),
    (0.24, 0.76, 0, -1, 0, 0, 1),
    (0.76, 0, 0, 0, 0, 0, 1),
    (0.25, 0.25, 0.25, 1, 1, 1, 1),
    (0.25, 0.25, 0.25, 1, 1, -1, 1),
    (0.25, 0.25, 0.25, 1, -1, -1, 1),
    (0.25, 0.25, 0.25, -1, 1, 1, 1),
    (0.25, 0.25, 0.25, -1, -1, 1, 1),
    (0.25, 0.25, 0.25, -1, -1, -1, 1),
    (0, 0.24, 0, 0, 0, 0, 2),
    (0, 0, 0.76, 0, 0, 0, 2),
    (0.24, 0.76, 0, 1, 0, 0, 2),
    (0.24, 0.76, 0, -1, 0, 0, 2),
    (0.76, 0, 0.24, 0, -1, 0, 2),
    (0.76, 0, 0.24, 0, 1, 0, 2),
    (0, 0.76, 0.24, 0, 0, -1, 2),
    (0, 0.76, 0.24, 0, 0, 1, 2),
    (0, 0, 0.76, 0, 0, 0, 2),
    (0.24, 0, 0, 0, 0, 0, 2),
    (0.76, 0.24, 0, -1, 0, 0, 2),
    (0.76, 0.24, 0, 1, 0, 0, 2),
    (0.25, 0.25, 0.25, 1, 1, 1, 2),
    (0.25, 0.25, 0.25, 1, 1, -1, 2),
    (0.25, 0.25, 0.25, 1, -1, -1, 2),
    (0.25, 0.25, 0.25, -1, 1, 1, 2),
    (0.25, 0.25, 0.25, -1, -1, 1, 2),
    (0.25, 0.25, 0.25, -1, -1, -1, 2),
)


def _proportion_design(rows, with_pwo: bool) -> BlockedDesign:
    runs = []
    for row in rows:
        if with_pwo:
            x1, x2, x3, z12, z13, z23, blk = row
            runs.append(Run((x1, x2, x3), (z12, z13, z23), blk))
        else:
            x1, x2, x3, blk = row
            runs.append(Run((x1, x2, x3), (0, 0, 0), blk))
    return BlockedDesign(m=3, kind="proportion", runs=tuple(runs),
                         n_blocks=2, as_printed=True)


def czitrom_d_optimal() -> BlockedDesign:
    """Czitrom's D-optimal three-component design in two orthogonal blocks.

    Eight proportion runs, four per block: three edge blends per block plus
    one centroid replicate each. Carries no ordering information (all z = 0).
    """
    return _proportion_design(_CZITROM_BASE, with_pwo=False)


def aggarwal_a_optimal() -> BlockedDesign:
    """Aggarwal's A-optimal counterpart of czitrom_d_optimal.

    Same block structure with edge support points 0.239/0.761.
    """
    return _proportion_design(_AGGARWAL_BASE, with_pwo=False)


def czitrom_d_oofa() -> BlockedDesign:
    """Order-of-addition expansion of the Czitrom design, 24 runs as
    conventionally tabulated (12 per block)."""
    return _proportion_design(_CZITROM_OOFA, with_pwo=True)


def aggarwal_a_oofa() -> BlockedDesign:
    """Order-of-addition expansion of the Aggarwal design, 24 runs."""
    return _proportion_design(_AGGARWAL_OOFA, with_pwo=True)


@dataclass(frozen=True)
class ExpansionPolicy:
    """How many orderings each run contributes under oofa_expand.

    Single-support runs admit exactly one (trivial, all-zero) ordering
    whichever option is chosen; the field exists to make that explicit.
    Two-support and full-support runs always take all orderings.
    """

    vertex_orders: str = "all"
    edge_orders: str = "all"
    interior_orders: str = "all"

    def __post_init__(self):
        if self.vertex_orders not in ("all", "none"):
            raise SpecError(f"vertex_orders: {self.vertex_orders!r}")
        if self.edge_orders != "all":
            raise SpecError(f"edge_orders: {self.edge_orders!r}")
        if self.interior_orders != "all":
            raise SpecError(f"interior_orders: {self.interior_orders!r}")


def oofa_expand(base: BlockedDesign,
                policy: ExpansionPolicy = ExpansionPolicy()) -> BlockedDesign:
    """Replace each run of an unordered design by one run per addition order.

    Runs stay in their blocks; base run order is kept, and each run's
    orderings appear in enumerate_orderings order. A run with s positive
    components contributes s! runs.
    """
    for idx, run in enumerate(base.runs):
        if any(z != 0 for z in run.pwo):
            raise AlreadyExpanded(
                f"run {idx + 1} already carries an ordering {run.pwo}")
    runs = []
    for run in base.runs:
        for vec in enumerate_orderings(run.values):
            runs.append(Run(run.values, vec, run.block, run.amount))
    return BlockedDesign(m=base.m, kind=base.kind, runs=tuple(runs),
                         n_blocks=base.n_blocks, as_printed=base.as_printed)


def component_amount_projection_design(a_max: float) -> BlockedDesign:
    """Order-of-addition component-amount design, 36 runs in two blocks.

    A three-component projection of a simplex lattice with total amount
    varying over four levels {0.24, 0.75, 0.76, 1.0} x a_max. Component
    amounts are the unit-scale lattice values times a_max; each run's total
    is the row sum.
    """
    if not a_max > 0:
        raise InvalidAmount(f"a_max must be positive, got {a_max}")
    runs = []
    for a1, a2, a3, z12, z13, z23, blk in _CA_PROJECTION_UNIT:
        vals = (a1 * a_max, a2 * a_max, a3 * a_max)
        runs.append(Run(vals, (z12, z13, z23), blk, amount=sum(vals)))
    return BlockedDesign(m=3, kind="amount", runs=tuple(runs),
                         n_blocks=2, as_printed=True)


CATALOG = {
    "czitrom-d": czitrom_d_optimal,
    "aggarwal-a": aggarwal_a_optimal,
    "czitrom-d-oofa": czitrom_d_oofa,
    "aggarwal-a-oofa": aggarwal_a_oofa,
    "ca-projection": component_amount_projection_design,
}
