"""Exception types shared across the package."""


class FieldError(ValueError):
    """Invalid field parameters or defining polynomial."""


class CapExceeded(RuntimeError):
    """An enumeration grew past its configured cap.

    ``partial`` is the number of items produced before giving up.
    """

    def __init__(self, what: str, cap: int, partial: int | None = None):
        self.what = what
        self.cap = cap
        self.partial = partial
        msg = f"{what} exceeds cap {cap}"
        if partial is not None:
            msg += f" (reached {partial})"
        super().__init__(msg)
