# coding=utf-8
"""
Exact certification of the sl(3) ⊂ g₂ ⊂ so(7) ⊂ so(8) embeddings and the octonion lab.
"""

default_app_config = "g2_algebra.apps.G2AlgebraConfig"
