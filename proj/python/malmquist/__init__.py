"""Constructive bounded interpolation on finite subsets of the unit disc.

Thin package wrapper around the compiled extension. Installed wheels carry
the extension inside the package; in-tree test runs put it on sys.path
directly, so both import forms are tried.
"""

try:
    from ._malmquist import *  # noqa: F401,F403
    from ._malmquist import __doc__  # noqa: F401
except ImportError:
    from _malmquist import *  # noqa: F401,F403
    from _malmquist import __doc__  # noqa: F401
