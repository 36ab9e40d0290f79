"""Exception hierarchy for entrovol.

All library errors derive from EntrovolError so the CLI can distinguish
user/data problems (exit code 1) from genuine bugs (traceback).
"""

from __future__ import annotations


class EntrovolError(Exception):
    """Base class for all entrovol errors."""


# --- ingestion ---------------------------------------------------------------

class MalformedRow(EntrovolError):
    def __init__(self, line_number: int, detail: str = ""):
        self.line_number = line_number
        msg = f"malformed row at line {line_number}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DuplicateDate(EntrovolError):
    def __init__(self, date):
        self.date = date
        super().__init__(f"duplicate date {date}")


class EmptySeries(EntrovolError):
    pass


class EmptySlice(EntrovolError):
    pass


class ParseError(EntrovolError):
    pass


class DuplicateSymbol(EntrovolError):
    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"duplicate symbol {symbol!r}")


class TemplateError(EntrovolError):
    pass


class NetworkError(EntrovolError):
    pass


class HttpStatusError(EntrovolError):
    def __init__(self, code: int, url: str = ""):
        self.code = code
        self.url = url
        super().__init__(f"HTTP status {code}" + (f" for {url}" if url else ""))


# --- measures ----------------------------------------------------------------

class TooShort(EntrovolError):
    pass


class EmptyInput(EntrovolError):
    pass


class NonPositiveInput(EntrovolError):
    pass


# --- event study -------------------------------------------------------------

class InsufficientData(EntrovolError):
    def __init__(self, side: str, detail: str = ""):
        self.side = side
        msg = f"insufficient data on the {side} side"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class MissingIndexData(EntrovolError):
    pass


class NoWindows(EntrovolError):
    pass


# --- synth / report ----------------------------------------------------------

class InvalidSpec(EntrovolError):
    pass


class EmptyScan(EntrovolError):
    pass
