# coding=utf-8
"""
date:           oct-2026

usage:          exceptions raised by the numerical geometry layer
"""


class G2GeometryError(ValueError):
    pass


class InvalidConfigError(G2GeometryError):
    pass


class StencilDomainError(G2GeometryError):
    """A finite-difference stencil point left the field's smooth domain."""

    def __init__(self, point, direction: int, h: float):
        super().__init__(
            "stencil at {p} along direction {d} with h={h} leaves the domain".format(
                p=[round(float(x), 6) for x in point], d=direction, h=h
            )
        )
        self.point = point
        self.direction = direction
        self.h = h


class DegenerateMetricError(G2GeometryError):
    pass


class FieldValueError(G2GeometryError):
    """A field took a value its construction forbids (u = 0, v <= 0, V <= 0)."""

    pass
