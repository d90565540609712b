"""R-subgroups and subspaces of R^n over finite Dickson nearfields."""

from .dickson import (
    NDTriple,
    NearfieldCtx,
    cayley_table,
    dickson_build,
    distributive_elements,
    find_nd_triple,
    is_dickson_pair,
)
from .finite_field import FieldCtx, gf_build
from .gen import GenBasis, GenCertificate, distributivity_trick, ege, gen_membership, spanning_vectors
from .span import CoordMask, SpanCertificate, adjustment_trick, aege, is_subspace, span_mask_shortcut, span_of, subspace_count
from .vectors import NfMatrix, NfVector, rref

__all__ = [
    "CoordMask", "FieldCtx", "GenBasis", "GenCertificate", "NDTriple", "NearfieldCtx",
    "NfMatrix", "NfVector", "SpanCertificate", "adjustment_trick", "aege", "cayley_table",
    "dickson_build", "distributive_elements", "distributivity_trick", "ege", "find_nd_triple",
    "gen_membership", "gf_build", "is_dickson_pair", "is_subspace", "rref", "span_mask_shortcut",
    "span_of", "spanning_vectors", "subspace_count",
]
