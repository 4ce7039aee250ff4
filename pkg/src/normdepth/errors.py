class NormDepthError(ValueError):
    """Precondition violation or malformed input."""


class CapExceeded(NormDepthError):
    """A computation would exceed a configured size cap."""

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} = {value} exceeds the cap of {cap}")
        self.what = what
        self.value = value
        self.cap = cap
