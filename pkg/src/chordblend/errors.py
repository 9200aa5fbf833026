"""Exception types shared across the workbench.

Every domain error carries a stable machine-readable ``code`` so the HTTP
service and the CLI can map failures to payloads / exit codes uniformly.
"""


class ChordBlendError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class ChordParseError(ChordBlendError, ValueError):
    """A chord string (or corpus entry) could not be parsed."""

    code = "parse_error"

    def __init__(self, message: str, symbol: str | None = None,
                 position: tuple[int, int] | None = None):
        self.base_message = message
        if symbol is not None:
            message = f"{message}: {symbol!r}"
        if position is not None:
            message = f"{message} (sequence {position[0]}, item {position[1]})"
        super().__init__(message)
        self.symbol = symbol
        self.position = position


class SchemaError(ChordBlendError, ValueError):
    """A JSON document violates its schema; ``path`` is a JSON pointer."""

    code = "schema_error"

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class EmptyCorpusError(ChordBlendError):
    code = "empty_corpus"


class SelfTransitionError(ChordBlendError, ValueError):
    code = "self_transition"


class UnknownIndexError(ChordBlendError, IndexError):
    code = "unknown_index"


class NoArgumentsError(ChordBlendError, ValueError):
    code = "no_arguments"


class NoTransitionsError(ChordBlendError):
    code = "no_transitions"


class EmptyPoolError(ChordBlendError):
    code = "empty_pool"


class InvalidBridgeMassError(ChordBlendError, ValueError):
    code = "invalid_bridge_mass"


class DeadStartError(ChordBlendError):
    code = "dead_start"


class UnknownIdiomError(ChordBlendError, KeyError):
    code = "unknown_idiom"


class DuplicateIdiomError(ChordBlendError):
    code = "duplicate_idiom"
