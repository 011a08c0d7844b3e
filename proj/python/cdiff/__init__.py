"""c-differential spectra of x^((q+1)/2) over odd-characteristic finite fields."""

import json

from ._core import (
    Field,
    InternalInconsistency,
    InvalidInput,
    abc_sums,
    classify,
    cornacchia,
    run_cli,
    spectrum_brute,
    trace_lift,
    trace_x3_minus_x,
)
from . import _core

__all__ = [
    "Field",
    "InternalInconsistency",
    "InvalidInput",
    "abc_sums",
    "classify",
    "closed_spectrum",
    "cornacchia",
    "curve_trace",
    "n4",
    "run_cli",
    "spectrum_brute",
    "trace_lift",
    "trace_x3_minus_x",
    "verify",
]


def closed_spectrum(field, c, variant="cprim"):
    return json.loads(_core.closed_spectrum_json(field, c, variant))


def curve_trace(field, c, via_subfield=False):
    return json.loads(_core.curve_trace_json(field, c, via_subfield))


def n4(field, c, d=None):
    return int(_core.n4_str(field, c, d))


def verify(field, c):
    return json.loads(_core.verify_json(field, c))
