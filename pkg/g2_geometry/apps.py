# coding=utf-8
"""
date:           oct-2026

usage:          Django app configuration for the finite-difference geometry layer
"""
import logging

from django.apps import AppConfig

log = logging.getLogger(__name__)
IS_READY = False


class G2GeometryConfig(AppConfig):
    name = "g2_geometry"
    label = "g2_geometry"
    verbose_name = "Finite-difference G2 constructions"

    def ready(self):
        global IS_READY

        if IS_READY:
            return

        from .__about__ import __version__

        log.info("{label} {version} is ready.".format(label=self.label, version=__version__))
        IS_READY = True
