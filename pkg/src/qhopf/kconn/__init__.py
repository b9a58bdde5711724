"""Strong connections, idempotents and the index pairing."""
from .connection import (
    ConnReport, FibreTensor, GradedEntwining, StrongConn, alpha_21, check_strong_connection,
    circle_connection, combine_connections, corrupted_connection, explicit_connection,
    lift_left, lift_right, trivial_connection,
)
from .pairing import CLASSES, EPS_EPS0, ID_EPS, KHomClass, NotIdempotent, index_pairing, snap
from .projections import (
    ENProjection, LiftInversionError, SingularSystem, bass_idempotent, bass_idempotent_numeric,
    en_monomials, projection_EN, projection_pN,
)

__all__ = [
    "ConnReport", "FibreTensor", "GradedEntwining", "StrongConn", "alpha_21",
    "check_strong_connection", "circle_connection", "combine_connections",
    "corrupted_connection", "explicit_connection", "lift_left", "lift_right",
    "trivial_connection", "CLASSES", "EPS_EPS0", "ID_EPS", "KHomClass", "NotIdempotent",
    "index_pairing", "snap", "ENProjection", "LiftInversionError", "SingularSystem",
    "bass_idempotent", "bass_idempotent_numeric", "en_monomials", "projection_EN", "projection_pN",
]
