# coding=utf-8
"""
Common settings for g2_geometry

Handling of environment variables, see: https://django-environ.readthedocs.io/en/latest/
"""
import os

import environ

# path to this app.
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
environ.Env.read_env(os.path.join(BASE_DIR, ".env"))

env = environ.Env(
    G2_SAMPLES=(int, 200),
    G2_FD_STEP=(float, 1e-3),
    G2_FD_ORDER=(int, 2),
    G2_CURVATURE_STEP=(float, 1e-2),
    G2_CURVATURE_ORDER=(int, 4),
    G2_EXCLUSION_MARGIN=(float, 10.0),
)


def plugin_settings(settings):
    """
    Injects the geometry layer's defaults into django settings. The math itself never reads
    these; the report layer turns them into StencilConfig values and sample counts.

    G2_EXCLUSION_MARGIN is a multiple of the stencil step: samples closer than margin·h to a
    box face or a singular locus are rejected.
    """
    settings.G2_SAMPLES = env("G2_SAMPLES")
    settings.G2_FD_STEP = env("G2_FD_STEP")
    settings.G2_FD_ORDER = env("G2_FD_ORDER")
    settings.G2_CURVATURE_STEP = env("G2_CURVATURE_STEP")
    settings.G2_CURVATURE_ORDER = env("G2_CURVATURE_ORDER")
    settings.G2_EXCLUSION_MARGIN = env("G2_EXCLUSION_MARGIN")
