"""Exact multiplier Hopf algebras, their pairings and quantum doubles."""
from .catalog import example, finite_group_pair, lazy_int_group_pair, sweedler_pair
from .double import DoubleHandle, VerificationFailed, build_double
from .mha import Mha, SuiteConfig, mha_suite
from .pairing import Pairing, pairing_full_report, verify_pairing, verify_prepairing
from .scalar import I, format_scalar, parse_scalar
from .tensor import TensorVec, Vec

__all__ = [
    "DoubleHandle", "I", "Mha", "Pairing", "SuiteConfig", "TensorVec", "Vec", "VerificationFailed",
    "build_double", "example", "finite_group_pair", "format_scalar", "lazy_int_group_pair", "mha_suite",
    "pairing_full_report", "parse_scalar", "sweedler_pair", "verify_pairing", "verify_prepairing",
]
__version__ = "0.1.0"
