# coding=utf-8
"""
date:           oct-2026

usage:          exceptions raised by the exact algebra layer. All of them are ValueErrors:
                the caller handed us something that does not satisfy a precondition, or an
                identity that must hold exactly did not.
"""


class G2AlgebraError(ValueError):
    pass


class DimensionMismatchError(G2AlgebraError):
    pass


class AmbientMismatchError(G2AlgebraError):
    pass


class DegenerateFormError(G2AlgebraError):
    pass


class InvalidParameterError(G2AlgebraError):
    pass


class CertificationError(G2AlgebraError):
    """
    An identity that is supposed to hold with zero exact residual failed.
    `witness` carries whatever the caller needs to reproduce the failure.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SingularMatrixError(G2AlgebraError):
    pass
