from __future__ import annotations


class OctolineError(Exception):
    pass


class DomainError(OctolineError, ValueError):
    pass


class SingularPointError(DomainError):
    pass


class PreconditionError(OctolineError, ValueError):
    pass


class ChiralityError(OctolineError, TypeError):
    pass


class PayloadError(OctolineError, ValueError):
    def __init__(self, message: str, location: str = "") -> None:
        super().__init__(f"{message} @ {location}" if location else message)
        self.location = location
