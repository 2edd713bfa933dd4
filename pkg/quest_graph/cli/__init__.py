"""
CLI Module
Command line front end, machine files and DOT trace export
"""

from .commands import main, build_parser, cmd_run, cmd_bench, cmd_graph, bench_one
from .machine_files import MachineFile, load_machine, parse_machine, dump_machine, save_machine, parse_input
from .dot_export import export_trace_dot, write_trace_dot, right_move_labeler

__all__ = [
    'main',
    'build_parser',
    'cmd_run',
    'cmd_bench',
    'cmd_graph',
    'bench_one',
    'MachineFile',
    'load_machine',
    'parse_machine',
    'dump_machine',
    'save_machine',
    'parse_input',
    'export_trace_dot',
    'write_trace_dot',
    'right_move_labeler',
]
