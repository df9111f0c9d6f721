# coding=utf-8
"""
Common settings for g2_report

Handling of environment variables, see: https://django-environ.readthedocs.io/en/latest/
"""
import os

import environ

# path to this app.
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
environ.Env.read_env(os.path.join(BASE_DIR, ".env"))

env = environ.Env(
    G2_CONVERGENCE_STEPS=(str, "2e-2,1e-2,5e-3"),
    G2_ORDER_BAND=(str, "1.8,2.2"),
    G2_NEGATIVE_CONTROL_FLOOR=(float, 0.01),
    G2_NULL_BAND=(str, "-0.2,0.2"),
    G2_CURVATURE_SAMPLES=(int, 100),
    G2_WORKERS=(int, 1),
    G2_REPORT_TIMINGS=(bool, False),
    G2_LOG_LEVEL=(str, "INFO"),
)


def plugin_settings(settings):
    """
    Injects the report layer's settings into django settings.

    G2_CONVERGENCE_STEPS, G2_ORDER_BAND and G2_NULL_BAND are comma separated floats; they are parsed and
    validated by g2_report.config.RunConfig.from_settings().
    """
    settings.G2_CONVERGENCE_STEPS = env("G2_CONVERGENCE_STEPS")
    settings.G2_ORDER_BAND = env("G2_ORDER_BAND")
    settings.G2_NEGATIVE_CONTROL_FLOOR = env("G2_NEGATIVE_CONTROL_FLOOR")
    settings.G2_NULL_BAND = env("G2_NULL_BAND")
    settings.G2_CURVATURE_SAMPLES = env("G2_CURVATURE_SAMPLES")
    settings.G2_WORKERS = env("G2_WORKERS")
    settings.G2_REPORT_TIMINGS = env("G2_REPORT_TIMINGS")
    settings.G2_LOG_LEVEL = env("G2_LOG_LEVEL")
