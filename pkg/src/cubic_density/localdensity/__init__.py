from .xi import XiTable, xi, xi_table
from .system import LinearSystem, Row, UnknownId, all_unknowns, build_system
from .solve import (ProbabilityTable, SingularSystemError, one_minus_rho, residuals, rho_local,
                    solve, solve_staged)

__all__ = [
    "XiTable", "xi", "xi_table",
    "LinearSystem", "Row", "UnknownId", "all_unknowns", "build_system",
    "ProbabilityTable", "SingularSystemError", "one_minus_rho", "residuals", "rho_local",
    "solve", "solve_staged",
]
