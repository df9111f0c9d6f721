# coding=utf-8
"""
date:           oct-2026

usage:          Management command that measures the convergence order of one check.
"""
# python
import logging

# django
from django.core.management.base import BaseCommand, CommandError

# this repo
from g2_geometry.exceptions import G2GeometryError
from g2_report.config import RunConfig
from g2_report.exceptions import G2ReportError
from g2_report.reports import summary_table
from g2_report.suites import run_convergence_study

log = logging.getLogger(__name__)


class Command(BaseCommand):
    """
        Management command to run a convergence study.

    Example usage:
    ./manage.py convergence_study --check gh.taub-nut.ricci --steps 2e-2,1e-2,5e-3
    ./manage.py convergence_study --check negative.broken-monopole --samples 20
    """

    help = """
    residuals of a check at each step size, with the least-squares order of log residual
    against log h. Prints one JSON CheckReport.
    """

    def add_arguments(self, parser):
        parser.add_argument("--check", required=True, dest="check_id", help="check id, see run_suite --list")
        parser.add_argument("--steps", default=None, help="comma separated step sizes, at least three")
        parser.add_argument("--seed", type=int, default=None)
        parser.add_argument("--samples", type=int, default=None)
        parser.add_argument("--json-only", action="store_true")

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_settings(seed=options["seed"], samples=options["samples"])
            report = run_convergence_study(options["check_id"], options["steps"] or config.steps, config)
        except (G2ReportError, G2GeometryError) as e:
            raise CommandError(str(e), returncode=2) from e

        self.stdout.write(report.to_json())
        if not options["json_only"]:
            self.stderr.write(summary_table([report]))
        if not report.passed:
            raise CommandError("convergence study of {c} failed".format(c=options["check_id"]), returncode=1)
