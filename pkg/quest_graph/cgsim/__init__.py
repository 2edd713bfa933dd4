"""
Computation Graph Simulation Module
Quest graph, RQDP and FQDP evaluation of computation graphs and growth analysis
"""

from .report import CSV_FIELDS, OpCounter, SimReport
from .simulate import (
    bmcg_agent,
    bmcg_quest_graph,
    compute_counts,
    dependency_first_selector,
    sim_fqdp,
    sim_questgraph,
    sim_rqdp,
)
from .analysis import (
    GrowthFit,
    fit_points,
    growth_fit,
    live_intermediates,
    lm_window_witness,
    plot_growth,
    rqdp_ratio_band,
    s_bounds,
)

__all__ = [
    'CSV_FIELDS',
    'OpCounter',
    'SimReport',
    'bmcg_agent',
    'bmcg_quest_graph',
    'compute_counts',
    'dependency_first_selector',
    'sim_fqdp',
    'sim_questgraph',
    'sim_rqdp',
    'GrowthFit',
    'fit_points',
    'growth_fit',
    'live_intermediates',
    'lm_window_witness',
    'plot_growth',
    'rqdp_ratio_band',
    's_bounds',
]
