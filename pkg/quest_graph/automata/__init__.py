"""
Automata Module
Classical machine definitions and their direct runs, used as oracles
"""

from .turing import LEFT, RIGHT, TuringMachine, TmStatus, TmResult, tm_run
from .pushdown import (
    PUSH,
    POP,
    KEEP,
    FINAL_STATE,
    EMPTY_STACK,
    EITHER,
    PdaTransition,
    Dpda,
    DpdaStatus,
    DpdaResult,
    validate_dpda,
    dpda_run,
)
from .finite import Fsm, FsmResult, fsm_run, LmTable, LmRun, lm_run
from .cyk import CnfGrammar, cyk_table, cyk_member

__all__ = [
    'LEFT',
    'RIGHT',
    'TuringMachine',
    'TmStatus',
    'TmResult',
    'tm_run',
    'PUSH',
    'POP',
    'KEEP',
    'FINAL_STATE',
    'EMPTY_STACK',
    'EITHER',
    'PdaTransition',
    'Dpda',
    'DpdaStatus',
    'DpdaResult',
    'validate_dpda',
    'dpda_run',
    'Fsm',
    'FsmResult',
    'fsm_run',
    'LmTable',
    'LmRun',
    'lm_run',
    'CnfGrammar',
    'cyk_table',
    'cyk_member',
]
