# coding=utf-8
import os

# Increment this version number to trigger a new release. See
# CHANGELOG.md for information on the versioning scheme.
__version__ = "0.1.0"

# Appended to __version__ with a dash, e.g. "nightly". Kept apart from __version__
# so that release branches merge cleanly.
__version_suffix__ = ""

# Name of the installed distribution; a suffixed name keeps side-by-side installs apart.
__app__ = os.environ.get("G2_CERTIFY_APP", "g2-certify")

# Package version, as installed by pip, does not include the version suffix.
__package_version__ = __version__

if __version_suffix__:
    __version__ += "-" + __version_suffix__
    __app__ += "-" + __version_suffix__
