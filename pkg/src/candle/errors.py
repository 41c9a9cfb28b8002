"""Exception hierarchy shared by every stage."""


class CandleError(Exception):
    """Base class for engine errors."""


class ConfigError(CandleError):
    """Invalid configuration file, value out of range, unknown key."""


class CatalogError(CandleError):
    """Catalog file failed to parse or violates an invariant."""

    def __init__(self, message, *, path=None, line=None, field=None):
        detail = message
        where = ", ".join(
            f"{k}={v}" for k, v in (("path", path), ("line", line), ("field", field)) if v is not None
        )
        if where:
            detail = f"{message} ({where})"
        super().__init__(detail)
        self.path = path
        self.line = line
        self.field = field


class StageError(CandleError):
    """A pipeline stage could not complete (missing checkpoint, internal bug)."""


class ProviderError(CandleError):
    """A model provider failed after exhausting its retry policy."""
