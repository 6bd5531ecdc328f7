"""Exact linear algebra over Z, Q and F_p, and homology of free chain complexes."""

from .domains import GF, QQ, ZZ, CoefficientDomain, UnsupportedDomainError, parse_domain
from .matrix import ExactMatrix
from .kernels import BACKEND
from .linalg import rank, rref, nullspace
from .snf import SmithForm, smith_normal_form
from .chain import FreeChainComplex, HomologyResult, ResourceError, homology

__all__ = [
    "BACKEND", "GF", "QQ", "ZZ", "CoefficientDomain", "ExactMatrix", "FreeChainComplex",
    "HomologyResult", "ResourceError", "SmithForm", "UnsupportedDomainError", "homology",
    "nullspace", "parse_domain", "rank", "rref", "smith_normal_form",
]
