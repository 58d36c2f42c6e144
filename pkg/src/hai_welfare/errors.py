class DomainError(ValueError):
    """An argument lies outside the domain of a model formula."""


class ConfigError(ValueError):
    """A configuration value is missing, unknown, or out of range."""
