# coding=utf-8
"""
date:           oct-2026

usage:          exceptions raised by the report layer. All of them are usage errors (exit code 2).
"""


class G2ReportError(ValueError):
    pass


class UnknownSuiteError(G2ReportError):
    def __init__(self, name: str, known):
        super().__init__("unknown suite {n!r}; choose one of {k}".format(n=name, k=", ".join(known)))
        self.name = name


class UnknownCheckError(G2ReportError):
    pass


class StudyNotSupportedError(G2ReportError):
    """The check has no step-size dependent residual."""

    pass
