"""Design-quality mathematics.

Covers orthogonal-blocking verification, the D/A/G optimality summary,
prediction variance, fraction-of-design-space curves, per-coefficient
standard errors and power, and per-term collinearity R-squared.

Conventions, also carried in every report's notes field: prediction
variance is the unscaled v'(X'X)^{-1}v in units of sigma^2; G-efficiency is
100*p/(n*max_pv); d_criterion is det(X'X)^(1/p)/n with the raw determinant
reported alongside; power_2sd is the probability that a two-sided t-test at
the given level detects a single coefficient of size effect_sd*sigma.
Externally published D-efficiency scalars or power percentages computed
under other (often unstated, software-specific) conventions will differ;
they are deliberately not matched.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np
from scipy import stats

from .core import BlockedDesign, ModelMatrix, ModelSpec
from .errors import (InsufficientDF, NothingToCheck, SingularMatrix)
from .linalg import lu_det_inv, xtx
from .modelmat import build_model_matrix, model_row
from .pwo import pwo_from_run

_MASK64 = (1 << 64) - 1

CONVENTION_NOTES = (
    "prediction variance is unscaled v'(X'X)^-1 v (units of sigma^2); "
    "g_efficiency = 100*p/(n*max_pv) over the evaluated points",
    "d_criterion = det(X'X)^(1/p)/n, det_xtx raw; externally reported "
    "D-efficiency scalars under other normalizations are not comparable "
    "and are not reproduced",
    "power_2sd = two-sided noncentral-t power for one coefficient of size "
    "effect_sd*sigma at level alpha; published power columns based on "
    "other effect-size conventions are not comparable and are not "
    "reproduced",
)


def named_inverse(X: ModelMatrix) -> tuple[float, np.ndarray]:
    """det and inverse of X'X; singularity reports offending column names."""
    M = xtx(X.data)
    try:
        return lu_det_inv(M)
    except SingularMatrix as e:
        names = tuple(X.columns[i] for i in e.offending
                      if i < len(X.columns))
        raise SingularMatrix(e.args[0], offending=e.offending,
                             names=names) from None


class ConditionCheck(NamedTuple):
    condition: str
    term: str
    block_sums: tuple[float, ...]
    discrepancy: float
    tol: float
    ok: bool


@dataclass(frozen=True)
class BlockingReport:
    conditions: tuple[ConditionCheck, ...]
    passed: bool
    tol: float

    def failed(self) -> tuple[ConditionCheck, ...]:
        return tuple(c for c in self.conditions if not c.ok)


def _condition_name(term: str) -> str:
    if term == "1":
        return "intercept_sum"
    if "*z" in term:
        return "interaction_sum"
    if term.startswith("z"):
        return "pwo_sum"
    if "^2" in term:
        return "square_sum"
    if "*A" in term:
        return "amount_product_sum"
    if "*" in term:
        return "cross_product_sum"
    return "component_sum"


# integer-valued columns must balance exactly; mixture sums only to
# printed rounding
_EXACT_CONDITIONS = {"pwo_sum", "interaction_sum"}


def check_orthogonal_blocking(design: BlockedDesign, spec: ModelSpec,
                              tol: float = 5e-3) -> BlockingReport:
    """Verify equal per-block sums for every non-block model column.

    Orthogonal blocking holds exactly when each model term sums to the same
    value in every block. Ordering and interaction columns are integer
    valued and must balance exactly; component polynomial sums are compared
    at the given tolerance.
    """
    if design.n_blocks < 2:
        raise NothingToCheck(
            f"blocking needs at least 2 blocks, design has {design.n_blocks}")
    X = build_model_matrix(design, spec)
    blocks = [design.block_indices(b) for b in range(1, design.n_blocks + 1)]
    records = []
    for j, term in enumerate(X.columns):
        if term == "blk":
            continue
        col = X.data[:, j]
        sums = tuple(float(col[list(idx)].sum()) for idx in blocks)
        disc = max(sums) - min(sums)
        cond = _condition_name(term)
        use_tol = 0.0 if cond in _EXACT_CONDITIONS else tol
        records.append(ConditionCheck(cond, term, sums, disc, use_tol,
                                      disc <= use_tol))
    return BlockingReport(conditions=tuple(records),
                          passed=all(r.ok for r in records), tol=tol)


def prediction_variance(info_inv: np.ndarray, row: Sequence[float]) -> float:
    """row' (X'X)^-1 row, the unscaled prediction variance at one point."""
    v = np.asarray(row, dtype=float)
    M = np.asarray(info_inv, dtype=float)
    if v.ndim != 1 or M.shape != (v.size, v.size):
        raise ValueError(
            f"dimension mismatch: row {v.shape} vs inverse {M.shape}")
    return float(v @ M @ v)


class ColumnStats(NamedTuple):
    name: str
    se: float
    r_squared: float
    power_2sd: float


@dataclass(frozen=True)
class EvalReport:
    n: int
    p: int
    det_xtx: float
    d_criterion: float
    a_criterion: float
    max_pv: float
    avg_pv: float
    g_efficiency: float
    columns: tuple[ColumnStats, ...]
    notes: tuple[str, ...] = CONVENTION_NOTES


def _point_variances(X_data: np.ndarray, inv: np.ndarray) -> np.ndarray:
    return np.einsum("ij,jk,ik->i", X_data, inv, X_data)


def _column_r2(X: ModelMatrix, inv: np.ndarray) -> list[float]:
    centered = "1" in X.columns
    out = []
    for j, name in enumerate(X.columns):
        rss = 1.0 / inv[j, j]
        col = X.data[:, j]
        if centered and name != "1":
            t = col - col.mean()
        else:
            t = col
        tss = float(t @ t)
        out.append(1.0 - rss / tss if tss > 1e-300 else math.nan)
    return out


def _power(se: float, df: int, sigma: float, alpha: float,
           effect_sd: float) -> float:
    tcrit = stats.t.ppf(1.0 - alpha / 2.0, df)
    ncp = effect_sd * sigma / se
    hi = stats.nct.sf(tcrit, df, ncp)
    lo = stats.nct.cdf(-tcrit, df, ncp)
    if not np.isfinite(lo):
        # far lower tail under a large noncentrality; negligible mass
        lo = 0.0
    return float(hi + lo)


def criteria_report(X: ModelMatrix,
                    eval_points: Optional[np.ndarray] = None) -> EvalReport:
    """Full optimality and per-coefficient summary of a model matrix.

    max_pv and avg_pv are taken over the design's own rows unless an
    explicit point set (rows in the same column basis) is supplied.
    """
    det_m, inv = named_inverse(X)
    n, p = X.n, X.p
    pts = X.data if eval_points is None else np.asarray(eval_points, float)
    pv = _point_variances(pts, inv)
    max_pv = float(pv.max())
    avg_pv = float(pv.mean())
    g_eff = 100.0 * p / (n * max_pv)
    ses = np.sqrt(np.diag(inv))
    r2 = _column_r2(X, inv)
    df = n - p
    cols = []
    for j, name in enumerate(X.columns):
        power = _power(float(ses[j]), df, 1.0, 0.05, 2.0) if df > 0 else math.nan
        cols.append(ColumnStats(name, float(ses[j]), r2[j], power))
    return EvalReport(
        n=n, p=p, det_xtx=float(det_m),
        d_criterion=float(det_m) ** (1.0 / p) / n,
        a_criterion=float(np.trace(inv)),
        max_pv=max_pv, avg_pv=avg_pv, g_efficiency=g_eff,
        columns=tuple(cols))


@dataclass(frozen=True)
class FDSCurve:
    fractions: tuple[float, ...]
    variances: tuple[float, ...]
    n_samples: int
    seed: int

    def median(self) -> float:
        return float(np.median(self.variances))

    def maximum(self) -> float:
        return self.variances[-1]


def _needs_amount(design: BlockedDesign, spec: ModelSpec) -> bool:
    return design.kind == "amount" or spec.family.startswith("mixture_amount")


def fds_curve(design: BlockedDesign, spec: ModelSpec, n_samples: int,
              seed: int = 0) -> FDSCurve:
    """Fraction-of-design-space curve from uniform design-space sampling.

    Each sample draws a uniform simplex direction (normalized unit
    exponentials), a total amount uniform over the design's amount levels
    when the model uses one, an addition order uniform over the full
    support, and a fair +/-1 block; its prediction variance comes from the
    design's information matrix. Sample s uses an independent substream
    seeded by seed XOR s, so partitioned or partial runs agree with full
    runs sample for sample. Variances are sorted ascending against
    fractions (i - 0.5)/n_samples.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    X = build_model_matrix(design, spec)
    _, inv = named_inverse(X)
    m = design.m
    perms = list(itertools.permutations(range(1, m + 1)))
    levels = design.amount_levels()
    use_amount = _needs_amount(design, spec)

    pvs = np.empty(n_samples)
    for s in range(n_samples):
        rng = np.random.default_rng((seed ^ s) & _MASK64)
        e = rng.standard_exponential(m)
        x = e / e.sum()
        amount = None
        if use_amount:
            amount = levels[int(rng.integers(len(levels)))]
        if design.kind == "amount":
            values = tuple(x * amount)
        else:
            values = tuple(x)
        order = perms[int(rng.integers(len(perms)))]
        z = pwo_from_run(values, order)
        block = 1 + int(rng.integers(2))
        row = model_row(spec, m, design.kind, values, z, block, amount)
        pvs[s] = prediction_variance(inv, row)

    pvs.sort()
    fracs = tuple((i - 0.5) / n_samples for i in range(1, n_samples + 1))
    return FDSCurve(fractions=fracs, variances=tuple(float(v) for v in pvs),
                    n_samples=n_samples, seed=seed)


class PowerRow(NamedTuple):
    se: float
    power: float


def power_table(X: ModelMatrix, sigma: float = 1.0, alpha: float = 0.05,
                effect_sd: float = 2.0) -> dict[str, PowerRow]:
    """Per-coefficient standard error and detection power.

    se_j = sigma*sqrt((X'X)^-1_jj); power is the two-sided noncentral-t
    probability of detecting a coefficient of effect_sd*sigma at the given
    level with n - p error degrees of freedom.
    """
    n, p = X.n, X.p
    if n <= p:
        raise InsufficientDF(f"n={n} <= p={p}: no residual degrees of freedom")
    _, inv = named_inverse(X)
    df = n - p
    out: dict[str, PowerRow] = {}
    for j, name in enumerate(X.columns):
        se = sigma * math.sqrt(inv[j, j])
        out[name] = PowerRow(se=se, power=_power(se, df, sigma, alpha,
                                                 effect_sd))
    return out


def term_r_squared(X: ModelMatrix) -> dict[str, float]:
    """Collinearity R^2 of each column regressed on all the others.

    Uses R2_j = 1 - RSS_j/TSS_j with RSS_j = 1/(X'X)^-1_jj; TSS is about
    the column mean when an intercept column is present, about zero
    otherwise.
    """
    if X.p < 2:
        raise ValueError("need at least 2 columns")
    _, inv = named_inverse(X)
    return dict(zip(X.columns, _column_r2(X, inv)))
