"""GME witness construction toolkit.

Python bindings over the C++ core: family states, the bipartite-to-
multipartite witness lift, white-noise tolerances, and the unfaithfulness
and entanglement-measure applications.
"""

from gmew._core import (
    PureState,
    Witness,
    __version__,
    bipartitions,
    biseparable_min,
    certify,
    cluster_noise_tolerance,
    construct,
    ehat_closed,
    eps_o,
    expectation,
    fidelity_tolerance_bound,
    gamma_bound,
    ld_maximize,
    make_state,
    pe,
    pf,
    po,
    reproduce,
    schmidt_values,
    unfaithful_average,
    verify,
    vk_class,
    white_noise_tolerance,
)

__all__ = [
    "PureState",
    "Witness",
    "__version__",
    "bipartitions",
    "biseparable_min",
    "certify",
    "cluster_noise_tolerance",
    "construct",
    "ehat_closed",
    "eps_o",
    "expectation",
    "fidelity_tolerance_bound",
    "gamma_bound",
    "ld_maximize",
    "make_state",
    "pe",
    "pf",
    "po",
    "reproduce",
    "schmidt_values",
    "unfaithful_average",
    "verify",
    "vk_class",
    "white_noise_tolerance",
]
