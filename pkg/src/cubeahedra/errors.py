"""Exception types raised across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""


class CapacityError(ValueError):
    """Node count exceeds what the bit-mask representation supports."""


class ContractError(ValueError):
    """An operation was called with arguments violating its precondition."""


class FanIntegrityError(RuntimeError):
    """A constructed fan failed one of its structural checks."""
