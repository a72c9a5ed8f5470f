"""Exact calculus for the Brown-Thompson groups F(n) and the n-adic
Lodha-Moore groups: word evaluation on eventually periodic points, the
standard-form rewriting system, abelianization maps, HNN decomposition
checks and cluster-complex combinatorics.

The heavy lifting lives in the C++ extension ``_lmwb``; this package
re-exports its functions.
"""

from _lmwb import (
    abelianization,
    cluster_cells,
    cluster_euler,
    dense_support_word,
    equal,
    evaluate,
    hnn_verify,
    hnn_witness,
    is_identity,
    is_special,
    rank_certificate,
    standard_form,
    support,
    verify_relation_family,
)

__all__ = [
    "abelianization",
    "cluster_cells",
    "cluster_euler",
    "dense_support_word",
    "equal",
    "evaluate",
    "hnn_verify",
    "hnn_witness",
    "is_identity",
    "is_special",
    "rank_certificate",
    "standard_form",
    "support",
    "verify_relation_family",
]
