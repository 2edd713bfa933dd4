"""
Constructions Module
Machine simulations on quest graphs and quest trees, checked against direct runs
"""

from .conformance import ACCEPT, REJECT, BUDGET, ILLEGAL, ConformanceResult
from .tm_questgraph import (
    TapeFrame,
    tape_frame,
    build_tm_tape_graph,
    tm_questgraph_agent,
    read_tape,
    direction_triple,
    simulate_tm_on_questgraph,
)
from .dpda_fqdp import (
    DPDA_CONFIG,
    END_SYMBOL,
    fqdp_dpda_agent,
    fqdp_accepts,
    simulate_dpda_on_fqdp,
    FqdpDerivation,
    dpda_from_fqdp,
)
from .cfl_nfqdp import (
    CFL_CONFIG,
    catalan,
    ParseGraph,
    build_parse_graph,
    nfqdp_cfl_agent,
    simulate_cfl_on_nfqdp,
)
from .tm_rqdp import (
    TM_RQDP_CONFIG,
    tape_tau,
    rqdp_tm_agent,
    rqdp_tm_initializer,
    read_reference_tape,
    simulate_tm_on_rqdp,
)
from .fibonacci import FibonacciRun, fibonacci_agent, fibonacci_tau, fibonacci_rqdp
from .lm_fsm import lm_from_fsm, lm_accepts, fsm_from_lm, simulate_fsm_on_lm, simulate_lm_on_fsm
from .scripted import (
    multi_hop_agent,
    multi_hop_rollout,
    multi_hop_script,
    grill_carrot_script,
    grill_carrot_rollout,
)

__all__ = [
    'ACCEPT',
    'REJECT',
    'BUDGET',
    'ILLEGAL',
    'ConformanceResult',
    'TapeFrame',
    'tape_frame',
    'build_tm_tape_graph',
    'tm_questgraph_agent',
    'read_tape',
    'direction_triple',
    'simulate_tm_on_questgraph',
    'DPDA_CONFIG',
    'END_SYMBOL',
    'fqdp_dpda_agent',
    'fqdp_accepts',
    'simulate_dpda_on_fqdp',
    'FqdpDerivation',
    'dpda_from_fqdp',
    'CFL_CONFIG',
    'catalan',
    'ParseGraph',
    'build_parse_graph',
    'nfqdp_cfl_agent',
    'simulate_cfl_on_nfqdp',
    'TM_RQDP_CONFIG',
    'tape_tau',
    'rqdp_tm_agent',
    'rqdp_tm_initializer',
    'read_reference_tape',
    'simulate_tm_on_rqdp',
    'FibonacciRun',
    'fibonacci_agent',
    'fibonacci_tau',
    'fibonacci_rqdp',
    'lm_from_fsm',
    'lm_accepts',
    'fsm_from_lm',
    'simulate_fsm_on_lm',
    'simulate_lm_on_fsm',
    'multi_hop_agent',
    'multi_hop_rollout',
    'multi_hop_script',
    'grill_carrot_script',
    'grill_carrot_rollout',
]
