"""Exact tools for linear deterministic interfering cellular channels:
channel simulation, rate formulas, scheme construction, certification,
uplink/downlink duality, and a brute-force search oracle."""

from .channel import (CellParams, Regime, classify_regime, imac_output,
                      ibc_output, IMAC, IBC, OUT_OF_VERY_WEAK,
                      VERY_WEAK_MIXED, VERY_WEAK_SUB_A, VERY_WEAK_SUB_B)
from .errors import (CapacityError, ConstructionError, LdcellError,
                     RegimeError)
from .rates import (achievable_sum, phi, subsystem_rates, upper_bound_ktx,
                    upper_bound_sum, WCurvePoint, WCURVE_CSV_HEADER,
                    wcurve_csv, wcurve_sweep)
from .scheme import (Certificate, LinearScheme, MessageEntry, ReceiverCert,
                     construct_imac, dualize, load_scheme, receiver_blocks,
                     save_scheme, search_best, verify, verify_exhaustive)

__version__ = "0.1.0"

__all__ = [
    "CellParams", "Regime", "classify_regime", "imac_output", "ibc_output",
    "IMAC", "IBC", "OUT_OF_VERY_WEAK", "VERY_WEAK_MIXED", "VERY_WEAK_SUB_A",
    "VERY_WEAK_SUB_B",
    "CapacityError", "ConstructionError", "LdcellError", "RegimeError",
    "achievable_sum", "phi", "subsystem_rates", "upper_bound_ktx",
    "upper_bound_sum", "WCurvePoint", "WCURVE_CSV_HEADER", "wcurve_csv",
    "wcurve_sweep",
    "Certificate", "LinearScheme", "MessageEntry", "ReceiverCert",
    "construct_imac", "dualize", "load_scheme", "receiver_blocks",
    "save_scheme", "search_best", "verify", "verify_exhaustive",
    "__version__",
]
