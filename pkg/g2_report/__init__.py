# coding=utf-8
"""
Certification suites, convergence studies and JSON Lines reports for g2_algebra and g2_geometry.
"""

default_app_config = "g2_report.apps.G2ReportConfig"
