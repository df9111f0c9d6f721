#!/usr/bin/env python
# coding=utf-8
"""
Django's command-line utility for the standalone g2-certify project.

Example usage:
./manage.py run_suite --suite algebra
./manage.py convergence_study --check gh.taub-nut.ricci --steps 2e-2,1e-2,5e-3
"""
import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "g2_report.settings.standalone")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as e:
        raise ImportError("Couldn't import Django. Is it installed and available on your PYTHONPATH?") from e
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
