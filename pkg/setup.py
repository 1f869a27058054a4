"""Build script: compiles the optional C scanner extension.

The package works without the extension (pure-Python fallback is selected
at import time), so a failed compile is downgraded to a warning.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/histevents/_scanner.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    print(f"warning: C scanner extension disabled ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
