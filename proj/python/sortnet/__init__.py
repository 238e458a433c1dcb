"""Uniformly random sorting networks.

Networks are passed around as ``(n, swaps)`` with one-based swap positions;
tableaux are lists of rows.
"""

from ._sortnet import (
    UsageError,
    arch_sample,
    artifact_version,
    bubble_sort,
    configuration,
    count_reduced_words,
    dimension,
    double_flip_probability,
    eg_forward,
    eg_inverse,
    enumerate_networks,
    first_swap_distribution,
    great_circle_distances,
    hook_walk,
    is_sorting_network,
    lln_distance,
    octagon_margin,
    profile_L,
    promote,
    run_command,
    sample,
    sample_tableau,
    semicircle_cdf,
    semicircle_pdf,
    stanley_count,
    verify,
)

__version__ = artifact_version


def staircase(n):
    """Shape (n-1, n-2, ..., 1)."""
    return list(range(n - 1, 0, -1))
