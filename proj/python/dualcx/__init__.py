"""Exact dual-complex computations for finite abelian group actions.

Thin, dict-friendly wrappers around the C++ extension module. Structured
inputs and outputs (complexes, fans, action specs, reports) are plain
dictionaries matching the JSON schemas of the ``dualcx`` CLI.
"""

import json as _json

from dualcx import _core
from dualcx._core import ParseError, smith_normal_form, subgroup_structure

__version__ = _core.__version__

__all__ = [
    "ParseError",
    "canonical_fermat_action",
    "check_smooth",
    "f_vector",
    "homology",
    "hypersurface_dual_complex",
    "linearizability_report",
    "projective_space_fan",
    "simplex_boundary",
    "smith_normal_form",
    "star_subdivision",
    "stellar_subdivide",
    "subgroup_structure",
    "top_invariant",
    "toric_dual_complex",
    "validate_complex",
    "validate_hypersurface",
]


def simplex_boundary(n):
    """Boundary of the n-simplex as a complex dict."""
    return _json.loads(_core.simplex_boundary(n))


def projective_space_fan(n):
    return _json.loads(_core.projective_space_fan(n))


def check_smooth(fan_dict):
    """Smoothness violations of a fan (empty list = smooth)."""
    return _core.check_smooth(_json.dumps(fan_dict))


def canonical_fermat_action(n, d):
    """Canonical diagonal action on a degree-d Fermat-type hypersurface."""
    return _json.loads(_core.canonical_fermat(n, d))


def validate_complex(complex_dict):
    return _core.validate_complex(_json.dumps(complex_dict))


def f_vector(complex_dict):
    return _core.f_vector(_json.dumps(complex_dict))


def homology(complex_dict):
    """Integral homology table as a list of {degree, betti, torsion, pretty}."""
    return _core.homology(_json.dumps(complex_dict))


def top_invariant(complex_dict, variety_dim):
    return _core.top_invariant(_json.dumps(complex_dict), variety_dim)


def stellar_subdivide(complex_dict, cell):
    return _json.loads(_core.stellar_subdivide(_json.dumps(complex_dict), cell))


def toric_dual_complex(fan_dict, group_dict):
    return _json.loads(
        _core.toric_dual_complex(_json.dumps(fan_dict), _json.dumps(group_dict))
    )


def star_subdivision(fan_dict, cone):
    return _json.loads(_core.star_subdivision(_json.dumps(fan_dict), list(cone)))


def validate_hypersurface(spec_dict):
    return _core.validate_hypersurface(_json.dumps(spec_dict))


def hypersurface_dual_complex(spec_dict):
    return _json.loads(_core.hypersurface_dual_complex(_json.dumps(spec_dict)))


def linearizability_report(spec_dict):
    return _core.linearizability_report(_json.dumps(spec_dict))
