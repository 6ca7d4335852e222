"""Python access to the matgor core.

Matroids are given as JSON specs (dicts or strings) or built-in names such as
"fivevec" or "boolean:4".
"""

import json

from . import _matgor
from ._matgor import GuardExceeded, InputError, MatgorError, __version__

__all__ = [
    "GuardExceeded",
    "InputError",
    "MatgorError",
    "__version__",
    "builtin",
    "canonical",
    "check",
    "fan",
    "hilbert",
    "normalize_poly",
    "phi",
    "report_all",
]


def _spec(m):
    if isinstance(m, str):
        if m.lstrip().startswith("{"):
            return m
        return _matgor.builtin_spec(m)
    return json.dumps(m)


def builtin(name):
    return json.loads(_matgor.builtin_spec(name))


def canonical(m):
    return json.loads(_matgor.canonical(_spec(m)))


def hilbert(m):
    ann, jm = _matgor.hilbert(_spec(m))
    return {"ann": ann, "jm": jm}


def phi(m):
    return _matgor.phi(_spec(m))


def normalize_poly(text):
    return _matgor.normalize_poly(text)


def check(m, name, seed=1, big=False, method="", ideal=""):
    return json.loads(_matgor.run_check(_spec(m), name, seed, big, method, ideal))


def fan(m, ideal="jm", seed=1, big=False):
    return check(m, "fan", seed=seed, big=big, ideal=ideal)["fan"]


def report_all(m, seed=1, big=False):
    return json.loads(_matgor.report_all(_spec(m), seed, big))
