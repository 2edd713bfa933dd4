"""
Growth Analysis
Compute-count bounds, the LM window witness and log-log growth fits of benchmark results
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy import stats

from .report import SimReport
from ..compgraph.bmcg import PROXY, Bmcg, bmcg_from_mcg
from ..compgraph.mcg import Mcg
from ..utils.config import Config

logger = logging.getLogger(__name__)

SUPER_POLYNOMIAL_RATIO = 1.5


def s_bounds(n: int) -> Tuple[int, int]:
    """Lower and upper bound on FQDP compute count for an n-node MCG.

    Both recurrences are evaluated and checked against their closed
    forms 2^(n-1) and 2^n - 1.

    Raises:
        ValueError: n < 1
        ArithmeticError: a recurrence disagrees with its closed form
    """
    if n < 1:
        raise ValueError(f"node count must be positive, got {n}")

    lower: List[int] = []
    upper: List[int] = []
    for i in range(1, n + 1):
        lower.append(1 + sum(lower))
        upper.append(i + sum(upper[:i - 1]))

    if lower[-1] != 2 ** (n - 1) or upper[-1] != 2 ** n - 1:
        raise ArithmeticError(f"bounds for N={n} disagree with the closed forms: "
                              f"{lower[-1]} vs {2 ** (n - 1)}, {upper[-1]} vs {2 ** n - 1}")
    return lower[-1], upper[-1]


def live_intermediates(bmcg: Bmcg) -> int:
    """Peak number of values held at once while evaluating any proxy tree.

    Register-allocation count: an original dependency needs one slot; a
    node whose children need r_1 >= r_2 >= ... needs max(r_i + i - 1).
    """
    need: Dict[str, int] = {}

    def slots(label: str) -> int:
        if label in need:
            return need[label]
        children = sorted((slots(d) if bmcg.kinds[d] == PROXY else 1 for d in bmcg.deps[label]),
                          reverse=True)
        need[label] = max((r + i for i, r in enumerate(children)), default=0)
        return need[label]

    return max((slots(label) for label in bmcg.order if bmcg.kinds[label] != PROXY), default=0)


def lm_window_witness(sizes: Iterable[int], c: int) -> Optional[int]:
    """First MCG size whose BMCG needs more live intermediates than a width-c window.

    Returns:
        The witnessing N, or None if every size fits
    """
    for n in sizes:
        live = live_intermediates(bmcg_from_mcg(Mcg.of_size(n), c))
        logger.debug(f"N={n}, C={c}: {live} live intermediates")
        if live > c:
            return n
    return None


@dataclass
class GrowthFit:
    """Least squares line through log N against log cost"""

    variant: str
    points: List[Tuple[int, float]]
    slope: float
    intercept: float
    residual: float
    super_polynomial: bool
    local_slopes: List[float] = field(default_factory=list)

    def __repr__(self):
        return (f"<GrowthFit(variant={self.variant}, slope={self.slope:.3f}, "
                f"residual={self.residual:.3f}, super_polynomial={self.super_polynomial})>")


def fit_points(variant: str, points: Sequence[Tuple[int, float]]) -> GrowthFit:
    """Fit a power law to (N, cost) points.

    The growth counts as super-polynomial when the last local slope
    exceeds the first one by more than half.

    Raises:
        ValueError: fewer than Config.MIN_FIT_POINTS usable points
    """
    usable = sorted((n, cost) for n, cost in points if n > 0 and cost > 0)
    if len({n for n, _ in usable}) < Config.MIN_FIT_POINTS:
        raise ValueError(f"{variant}: need at least {Config.MIN_FIT_POINTS} sizes to fit, got {len(usable)}")

    x = np.log([n for n, _ in usable])
    y = np.log([cost for _, cost in usable])
    fit = stats.linregress(x, y)
    residual = float(np.sqrt(np.mean((y - (fit.slope * x + fit.intercept)) ** 2)))

    local = [float((y[i + 1] - y[i]) / (x[i + 1] - x[i])) for i in range(len(x) - 1) if x[i + 1] != x[i]]
    super_polynomial = bool(local and local[0] > 0 and local[-1] > SUPER_POLYNOMIAL_RATIO * local[0])

    logger.info(f"{variant}: slope {fit.slope:.3f}, rms residual {residual:.3f}")
    return GrowthFit(variant, list(usable), float(fit.slope), float(fit.intercept),
                     residual, super_polynomial, local)


def growth_fit(reports: Iterable[SimReport], weighted: bool = False) -> GrowthFit:
    """Fit the reports of a single variant; raw op counts unless `weighted`"""
    reports = list(reports)
    variants = {r.variant for r in reports}
    if len(variants) != 1:
        raise ValueError(f"growth fit needs the reports of one variant, got {sorted(variants)}")
    points = [(r.n, r.weighted_cost if weighted else r.raw_ops) for r in reports]
    return fit_points(variants.pop(), points)


def rqdp_ratio_band(reports: Iterable[SimReport]) -> float:
    """Spread max/min of weighted cost over N^2 log2 N across the RQDP reports"""
    ratios = [r.weighted_cost / (r.n ** 2 * math.log2(r.n)) for r in reports
              if r.variant == "rqdp" and r.n >= 2]
    if not ratios:
        raise ValueError("no RQDP reports with N >= 2")
    return max(ratios) / min(ratios)


def plot_growth(fits: Sequence[GrowthFit], path) -> str:
    """Save a log-log plot of every fit's points and fitted line"""
    fig, ax = plt.subplots(figsize=(7, 5))
    for fit in fits:
        ns = np.array([n for n, _ in fit.points], dtype=float)
        costs = np.array([c for _, c in fit.points], dtype=float)
        ax.loglog(ns, costs, "o", label=f"{fit.variant} (slope {fit.slope:.2f})")
        ax.loglog(ns, np.exp(fit.intercept) * ns ** fit.slope, "--", linewidth=1)
    ax.set_xlabel("N")
    ax.set_ylabel("operations")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    logger.info(f"Growth plot saved to {path}")
    return str(path)
