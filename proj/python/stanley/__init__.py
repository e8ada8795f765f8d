"""Stanley depth and depth of squarefree monomial quotients I/J."""

import json as _json

from ._core import (
    Instance,
    StanleyError,
    brute_force_sdepth,
    canonical_key,
    depth,
    generate,
    poset_size,
    sdepth,
    sdepth_decision,
    taylor_depth,
)
from . import _core

__all__ = [
    "Instance",
    "StanleyError",
    "analyze",
    "brute_force_sdepth",
    "campaign",
    "canonical_key",
    "depth",
    "generate",
    "koszul_homology",
    "paths",
    "poset_size",
    "sdepth",
    "sdepth_decision",
    "taylor_depth",
    "verify",
]


def analyze(instance):
    """B, C, W, C2, C3, C23, omegas and hypothesis flags as a dict."""
    return _json.loads(_core.analyze_json(instance))


def koszul_homology(instance, field="gf2", module="i-over-j"):
    return _json.loads(_core.koszul_json(instance, field, module))


def verify(instance, field="gf2", cross_check=False, lemma_dep=False):
    return _json.loads(_core.verify_json(instance, field, cross_check, lemma_dep))


def paths(instance, b, start=None):
    return _json.loads(_core.paths_json(instance, b, start))


def campaign(config_text, jobs=1, write_files=False):
    """Runs a campaign described by config text and returns its summary."""
    return _json.loads(_core.campaign_json(config_text, jobs, write_files))
