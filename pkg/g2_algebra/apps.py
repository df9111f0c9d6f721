# coding=utf-8
"""
date:           oct-2026

usage:          Django app configuration for the exact algebra layer
"""
import logging

from django.apps import AppConfig

log = logging.getLogger(__name__)
IS_READY = False


class G2AlgebraConfig(AppConfig):
    name = "g2_algebra"
    label = "g2_algebra"
    verbose_name = "Exact sl(3) ⊂ g2 ⊂ so(7) ⊂ so(8) certification"

    def ready(self):
        global IS_READY

        if IS_READY:
            return

        from .__about__ import __version__

        log.info("{label} {version} is ready.".format(label=self.label, version=__version__))
        IS_READY = True
