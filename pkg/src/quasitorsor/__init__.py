"""Ribbon graphs, their regular orthogonal matroids, Jacobians and torsors.

Typical use::

    from quasitorsor import load_rmap, canonical_rep, JacGroup, canonical_torsor
    G = load_rmap("torus.rmap")
    rep = canonical_rep(G)
    JacGroup(rep).describe()          # 'Z/4'
    canonical_torsor(G, rep).is_simply_transitive()
"""

from .errors import *  # noqa: F401,F403
from .ribbonmap import (Dart, HalfCrossing, RibbonGraph, parse_rmap, load_rmap,
                        parse_dart, interlacement_matrix, random_map)
from .orthomat import (GroundSet, OrthoRep, Fourientation, rep_from_pu_matrix,
                       rep_from_quasi_tree, validate_axioms, restrict, reorient,
                       farkas, fourientation_of)
from .jacobian import (JacGroup, ReversalClass, ReversalSystem, reversal_classes,
                       reduce_to_orientation, psi_lift, act)
from .bby import (CircuitSignature, lex_signature, is_acyclic, beta_sigma,
                  is_triangulating, bby_bijection, torsor, TorsorTable)
from .ribbontorsor import (gamma_h, bernardi_map, canonical_rep, extract_signature,
                           bernardi_torsor, canonical_torsor, duality_check)
from .bridges import (compare_sphere, proportion_from_torsor, check_ps_axioms,
                      group_from_proportion, torsor_isomorphism)

__version__ = "0.1.0"
