# coding=utf-8
"""
Common settings for g2_algebra

Handling of environment variables, see: https://django-environ.readthedocs.io/en/latest/
"""
import os

import environ

# path to this app.
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
environ.Env.read_env(os.path.join(BASE_DIR, ".env"))

env = environ.Env(
    G2_SEED=(int, 42),
)


def plugin_settings(settings):
    """
    Injects the algebra layer's settings into django settings.
    G2_SEED seeds every random rational sample drawn by the certification checks.
    """
    settings.G2_SEED = env("G2_SEED")
