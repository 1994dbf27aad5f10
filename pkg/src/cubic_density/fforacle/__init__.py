from .field import FieldTower, build_field_tower, is_prime, smallest_irreducible_cubic
from .forms import (CubicForm, MonomialIndex, TypeCounts, check_condition, classify_form,
                    condition_total, count_types, enumerate_counts, gaussian_binomial,
                    generate_type_forms, monomial_index)
from .padic import SolubilityEstimate, binary_cubic_solubility, padic_binary_cubic_sample

__all__ = [
    "FieldTower", "build_field_tower", "is_prime", "smallest_irreducible_cubic",
    "CubicForm", "MonomialIndex", "TypeCounts", "check_condition", "classify_form",
    "condition_total", "count_types", "enumerate_counts", "gaussian_binomial",
    "generate_type_forms", "monomial_index",
    "SolubilityEstimate", "binary_cubic_solubility", "padic_binary_cubic_sample",
]
