# coding=utf-8
"""
date:           oct-2026

usage:          Management command that runs a certification suite and prints one JSON
                CheckReport per line.
"""
# python
import logging

# django
from django.core.management.base import BaseCommand, CommandError

# this repo
from g2_geometry.exceptions import G2GeometryError
from g2_report.config import RunConfig
from g2_report.exceptions import G2ReportError
from g2_report.reports import summary_table, write_jsonl
from g2_report.suites import SUITE_NAMES, manifest, run_suite

log = logging.getLogger(__name__)


class Command(BaseCommand):
    """
        Management command to run a certification suite.

    Example usage:
    ./manage.py run_suite --suite algebra
    ./manage.py run_suite --suite negative-controls --samples 50 --out controls.jsonl
    g2-certify --suite all --workers 4 --json-only
    """

    help = """
    run a certification suite. JSON Lines go to stdout (or --out), the summary table to stderr.
    exit code 0 when every check passes, 1 when any check fails, 2 on usage errors.
    """

    def add_arguments(self, parser):
        parser.add_argument("--suite", default="all", help="one of: {s}".format(s=", ".join(SUITE_NAMES)))
        parser.add_argument("--seed", type=int, default=None, help="sampling seed. default: G2_SEED (42)")
        parser.add_argument("--samples", type=int, default=None, help="sample count. default: G2_SAMPLES (200)")
        parser.add_argument(
            "--curvature-samples",
            type=int,
            default=None,
            help="sample cap of curvature and holonomy checks. default: G2_CURVATURE_SAMPLES (100)",
        )
        parser.add_argument("--h", type=float, default=None, dest="h", help="first-derivative stencil step")
        parser.add_argument("--json-only", action="store_true", help="do not print the summary table")
        parser.add_argument("--list", action="store_true", dest="list_checks", help="list suites and their checks")
        parser.add_argument("--out", metavar="FILE", default=None, help="write JSON Lines to FILE")
        parser.add_argument("--dump-samples", metavar="DIR", default=None, help="write per-sample CSV files to DIR")
        parser.add_argument("--workers", type=int, default=None, help="checks run concurrently")
        parser.add_argument("--timings", action="store_true", default=None, help="record wall-clock runtime_ms")

    def list_suites(self):
        for name in SUITE_NAMES:
            self.stdout.write(name)
            for check_id in manifest(name).check_ids:
                self.stdout.write("    {c}".format(c=check_id))

    def handle(self, *args, **options):
        if options["list_checks"]:
            self.list_suites()
            return

        try:
            config = RunConfig.from_settings(
                seed=options["seed"],
                samples=options["samples"],
                curvature_samples=options["curvature_samples"],
                h=options["h"],
                workers=options["workers"],
                timings=options["timings"],
                dump_dir=options["dump_samples"],
            )
            reports, code = run_suite(options["suite"], config)
        except (G2ReportError, G2GeometryError) as e:
            raise CommandError(str(e), returncode=2) from e

        if options["out"]:
            with open(options["out"], "w", encoding="utf-8") as stream:
                write_jsonl(reports, stream)
        else:
            for report in reports:
                self.stdout.write(report.to_json())

        if not options["json_only"]:
            self.stderr.write(summary_table(reports))
        if code != 0:
            raise CommandError("suite {s} has failing checks".format(s=options["suite"]), returncode=code)
