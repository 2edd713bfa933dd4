"""
Input Providers
Sources of external information for discover-input actions
"""

from typing import Any, Sequence

from ..core.types import END


class InputTape:
    """Cursor over an input string; reading past the end yields END"""

    def __init__(self, symbols: Sequence[Any]):
        self.symbols = list(symbols)
        self.position = 0
        self.end_reads = 0

    def __call__(self, goal: Any) -> Any:
        if self.position < len(self.symbols):
            symbol = self.symbols[self.position]
            self.position += 1
            return symbol
        self.end_reads += 1
        return END

    @property
    def exhausted(self) -> bool:
        """True once every symbol was consumed and END was read"""
        return self.end_reads > 0

    def __repr__(self):
        return f"<InputTape(position={self.position}/{len(self.symbols)}, end_reads={self.end_reads})>"
