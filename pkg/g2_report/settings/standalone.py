# coding=utf-8
"""
Database-free Django project settings for manage.py, the g2-certify console script and the
test suite. Every app's plugin_settings() injects its G2_* keys into this module.
"""
import sys

import environ

from g2_algebra.settings import common as algebra_settings
from g2_geometry.settings import common as geometry_settings
from g2_report.settings import common as report_settings

env = environ.Env(
    DJANGO_SECRET_KEY=(str, "g2-certify-standalone"),
    DJANGO_DEBUG=(bool, False),
)

SECRET_KEY = env("DJANGO_SECRET_KEY")
DEBUG = env("DJANGO_DEBUG")
INSTALLED_APPS = [
    "g2_algebra.apps.G2AlgebraConfig",
    "g2_geometry.apps.G2GeometryConfig",
    "g2_report.apps.G2ReportConfig",
]
DATABASES = {}
USE_TZ = True

_this = sys.modules[__name__]
for _app_settings in (algebra_settings, geometry_settings, report_settings):
    _app_settings.plugin_settings(_this)

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "stream": "ext://sys.stderr", "formatter": "standard"},
    },
    "loggers": {
        "g2_algebra": {"handlers": ["console"], "level": G2_LOG_LEVEL, "propagate": False},  # noqa: F821
        "g2_geometry": {"handlers": ["console"], "level": G2_LOG_LEVEL, "propagate": False},  # noqa: F821
        "g2_report": {"handlers": ["console"], "level": G2_LOG_LEVEL, "propagate": False},  # noqa: F821
        "secure_logger": {"handlers": ["console"], "level": "WARNING", "propagate": False},
    },
}
