"""Exact verification toolkit for prime-universal diagonal quadratic forms.

Thin package wrapper: the compiled extension module carries the API. When
installed as a wheel the extension lives inside this package; in a plain
CMake build it sits on sys.path as a top-level module.
"""

try:
    from ._qpu import *  # noqa: F401,F403
    from ._qpu import __version__  # noqa: F401
except ImportError:  # pragma: no cover - plain CMake build layout
    from _qpu import *  # noqa: F401,F403
    from _qpu import __version__  # noqa: F401
