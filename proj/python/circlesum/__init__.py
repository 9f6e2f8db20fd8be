"""Power sums of points on the unit circle.

Thin wrapper over the C++ core: representations of target power sums by
2n+1 unimodular points, the approximation kernels built on them, and
integration-free harmonic extraction.
"""

import json as _json

from . import _core
from ._core import (
    BorderlineError,
    CirclesumError,
    InvalidArgument,
    NotFoundError,
    NumericalError,
    PoleProximityError,
    PreconditionError,
    RepresentTooSmall,
    RootCountError,
    Representation,
    best_tail_bound,
    build_p,
    combination_phases,
    disk_zero_free,
    exp_antiderivative_taylor,
    exp_sum_bound,
    exp_sum_eval,
    extract_harmonic,
    extraction_phases,
    fourier_coeffs,
    n0,
    power_sum,
    represent,
    roots_on_circle,
    spf_bound_bounded,
    spf_eval,
    spf_interpolation_order,
    tail_bound_bounded,
    tail_bound_general,
)

__all__ = [name for name in dir(_core) if not name.startswith("_")] + ["run_job"]


def run_job(command, document, **options):
    """Run a CLI pipeline in-process. Returns (exit_code, parsed document).

    command is one of represent, verify, approx (needs mode=...) or
    harmonics (document is {"a": [...], "b": [...]}; nu=..., grid=...).
    """
    if command == "represent":
        code, text = _core.run_represent(_json.dumps(document))
    elif command == "verify":
        code, text = _core.run_verify(_json.dumps(document))
    elif command == "approx":
        code, text = _core.run_approx(options["mode"], _json.dumps(document))
    elif command == "harmonics":
        code, text = _core.run_harmonics(
            document["a"], document["b"], str(options.get("nu", 1)), options.get("grid", 720)
        )
    else:
        raise ValueError(f"unknown command {command!r}")
    return code, _json.loads(text)
