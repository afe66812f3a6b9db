"""Exact algebra of outer products on R^6, star products on R^8 and their spin-group representations."""

from .identities import default_report, replay, verify_identities
from .iso import MapType, multiplicativity_type
from .kernels import BACKEND
from .lie import jacobi_failures, killing_signature, repair_search
from .linalg import Matrix, det, inertia
from .octo import Oct, associativity_failures, star
from .report import VerificationReport, emit_report, load_report
from .reps import GroupTag, Source, is_group_member, rep_matrix
from .scalar import EXACT, FLOAT, Complex, scalar_mode
from .vec6 import B1, B2, B3, SPIN4, ProductVariant, Vec6, conj, cross, inner

__version__ = "0.1.0"
