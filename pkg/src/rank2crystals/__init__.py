"""Crystals of fundamental highest-weight modules for rank-2 Kac-Moody algebras.

Two realizations, Lakshmibai-Seshadri paths and Nakajima monomials, and the
explicit isomorphism ``phi_map`` between them.
"""
from .cartan import CartanData, ClWeight, Coset, new_cartan
from .errors import CrystalError, InternalConsistencyError, NotInImageError, ParseError, RangeError
from .graph import CrystalGraph, VerifyReport, export_dot, export_json, generate, read_json, verify_isomorphism
from .iso import extremal_monomial, phi_inverse, phi_map
from .kernels import BACKEND
from .lspath import LSPath, enumerate_paths, format_path, highest_path, is_member, parse_path
from .monomial import LaurentMonomial, format_monomial, parse_monomial

__version__ = "0.1.0"
