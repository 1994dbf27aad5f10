from .primes import primes_up_to
from .zeta import (TailBoundParams, bernoulli, euler_maclaurin_remainder, euler_maclaurin_upper,
                   zeta_tail_upper)
from .truncation import (AsympParams, CertifiedValue, PlanningError, TruncationCertificate,
                         certificate, certified_at, plan_truncation, rho_global,
                         root_error_bound, truncated_product, truncation_error_bound,
                         verify_asymptote_inequality)

__all__ = [
    "primes_up_to", "TailBoundParams", "bernoulli", "euler_maclaurin_remainder",
    "euler_maclaurin_upper", "zeta_tail_upper",
    "AsympParams", "CertifiedValue", "PlanningError", "TruncationCertificate", "certificate",
    "certified_at", "plan_truncation", "rho_global", "root_error_bound", "truncated_product",
    "truncation_error_bound", "verify_asymptote_inequality",
]
