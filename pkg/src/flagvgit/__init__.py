"""GIT of a reductive subgroup acting on the flag variety of a larger group.

Strata of the unstable locus, ample-cone membership, the nested cones of
weights with unstable locus of codimension at least k, chamber structure and
a brute-force invariant counter.
"""
from .embed import (EmbeddingDatum, EmbeddingError, custom_embedding, diagonal_embedding,
                    embedding_from_spec, identity_embedding, principal_embedding)
from .rootcore import CapExceeded, RootDatum, WeylElement, build_root_datum, parse_type
from .popov import build_tree, is_ample, min_norm_point
from .strat import codim_unstable, stratifying_pairs, t_codim_unstable
from .cones import ck_cone, no_jump_audit, rho_criterion, t_chambers
from .oracle import invariant_dim, membership

__version__ = "0.1.0"

__all__ = [
    "EmbeddingDatum", "EmbeddingError", "custom_embedding", "diagonal_embedding",
    "embedding_from_spec", "identity_embedding", "principal_embedding",
    "CapExceeded", "RootDatum", "WeylElement", "build_root_datum", "parse_type",
    "build_tree", "is_ample", "min_norm_point",
    "codim_unstable", "stratifying_pairs", "t_codim_unstable",
    "ck_cone", "no_jump_audit", "rho_criterion", "t_chambers",
    "invariant_dim", "membership",
]
