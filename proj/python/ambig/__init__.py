"""Integer linear array ambiguity toolkit.

Thin wrapper over the compiled extension. Exact rationals cross the
boundary as strings like "p/q"; enumeration reports are dictionaries
parsed from the library's canonical JSON rendering.
"""

import json as _json

try:
    from ._ambig import *  # noqa: F401,F403  (installed package layout)
    from . import _ambig as _impl
except ImportError:  # in-tree test layout: extension directly on sys.path
    from _ambig import *  # noqa: F401,F403
    import _ambig as _impl


def enumerate_all(array, max_nodes=0, max_seconds=0.0, prune=True,
                  root_orbit_prune=False, jobs=1):
    """Full ambiguity enumeration; returns the report as a dictionary."""
    text = _impl.enumerate_all_json(array, max_nodes, max_seconds, prune,
                                    root_orbit_prune, jobs)
    return _json.loads(text)


__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__all__.append("enumerate_all")
