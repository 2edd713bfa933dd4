"""
Reference Module
Reference assignment, the reference graph and retrieval
"""

from .refgraph import (
    TauFn,
    RefEntry,
    RefWrite,
    ReferenceGraph,
    assign_reference,
    record_response,
    retrieve,
)

__all__ = [
    'TauFn',
    'RefEntry',
    'RefWrite',
    'ReferenceGraph',
    'assign_reference',
    'record_response',
    'retrieve',
]
