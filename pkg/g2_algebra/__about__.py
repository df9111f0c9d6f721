# coding=utf-8
"""
date:           oct-2026

usage:          semantic version control for g2_algebra
"""
__version__ = "0.1.0"
