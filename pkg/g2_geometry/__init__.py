# coding=utf-8
"""
Sample-based finite-difference field calculus and the G2 metric constructions built on it.
"""

default_app_config = "g2_geometry.apps.G2GeometryConfig"
