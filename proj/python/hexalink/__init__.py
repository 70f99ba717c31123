"""Angle-symmetric 6R linkages: classification, synthesis and curve tracing.

Thin convenience layer over the compiled `_hexalink` module. All heavy
operations run in C++; linkages and results travel as JSON documents (see
the project README for the schemas).
"""

import json as _json

try:
    # installed wheel: the extension lives inside the package
    from ._hexalink import (  # noqa: F401
        HexalinkError,
        InvalidInput,
        JsonError,
        __version__,
        closure_residual,
        classify,
        example1,
        generate,
        poses,
        rank,
        trace,
    )
except ImportError:
    # in-tree build: the extension sits on sys.path next to the package
    from _hexalink import (  # noqa: F401
        HexalinkError,
        InvalidInput,
        JsonError,
        __version__,
        closure_residual,
        classify,
        example1,
        generate,
        poses,
        rank,
        trace,
    )


def classify_dict(linkage_json, scalar=""):
    """Classify a linkage and return the result as a dict."""
    return _json.loads(classify(linkage_json, scalar))


def trace_points(linkage_json, start, stop, count, slice_var=3, tol=1e-9):
    """Trace the configuration curve; returns a list of (t1, t2, t3) tuples
    with float('inf') for parameters at infinity."""
    doc = _json.loads(trace(linkage_json, start, stop, count, slice_var, tol))
    out = []
    for entry in doc["configs"]:
        out.append(tuple(float("inf") if v == "inf" else float(v) for v in entry))
    return out
