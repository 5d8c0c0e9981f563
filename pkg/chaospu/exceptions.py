# -*- coding: utf-8 -*-
from chaoslib.exceptions import ActivityFailed, ChaosException

__all__ = ["PUCohomologyError", "InvalidInput", "ResourceLimitExceeded",
           "InternalInconsistency", "IntegralityViolation",
           "VerificationFailed"]


class PUCohomologyError(ChaosException):
    pass


class InvalidInput(PUCohomologyError):
    pass


class ResourceLimitExceeded(PUCohomologyError):
    pass


class InternalInconsistency(PUCohomologyError):
    """
    Raised when an identity that holds by construction fails. Seeing this
    means there is a bug, not a bad input.
    """
    pass


class IntegralityViolation(InternalInconsistency):
    def __init__(self, message: str, term=None):
        super().__init__(message)
        self.term = term


class VerificationFailed(ActivityFailed):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
