"""Projective Reed-Muller codes: parameters, duals, hulls and weight enumerators."""

import json

from ._prmhull import (
    BudgetExceeded,
    Field,
    PrmhullError,
    design_lambda,
    dim_mr,
    dim_sorensen,
    generator,
    hull_dim,
    hull_dim_predicted,
    min_dist_formula,
    min_distance,
    prm_length,
    run_cli,
    weight_distribution,
    _classify_json,
)


def classify(n, k, q):
    """Predicted vs constructed classification of C_{n,k}^q as a dict."""
    return json.loads(_classify_json(n, k, q))


__all__ = [
    "BudgetExceeded",
    "Field",
    "PrmhullError",
    "classify",
    "design_lambda",
    "dim_mr",
    "dim_sorensen",
    "generator",
    "hull_dim",
    "hull_dim_predicted",
    "min_dist_formula",
    "min_distance",
    "prm_length",
    "run_cli",
    "weight_distribution",
]
