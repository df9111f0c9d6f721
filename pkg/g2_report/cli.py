# coding=utf-8
"""
date:           oct-2026

usage:          the g2-certify console script.

                g2-certify --suite algebra              same as ./manage.py run_suite --suite algebra
                g2-certify convergence_study --check …  same as ./manage.py convergence_study --check …
"""
# python
import os
import sys

COMMANDS = ("run_suite", "convergence_study")


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "g2_report.settings.standalone")

    # 3rd party
    from django.core.management import execute_from_command_line

    command = argv.pop(0) if argv and argv[0] in COMMANDS else "run_suite"
    execute_from_command_line(["g2-certify", command] + argv)


if __name__ == "__main__":
    main()
