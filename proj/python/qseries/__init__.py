"""q-series evaluation, q-Borel/Laplace resummation and identity checks."""

from ._qseries import (
    QSeriesError,
    TruncatedValue,
    borel_image_2psi2,
    connection_coefficient,
    corollary,
    default_report_json,
    identities,
    main_theorem_rhs,
    phi,
    psi,
    qpochhammer,
    qpochhammer_inf,
    ramanujan,
    resum_2psi1,
    run_default_sweep,
    slater,
    theta,
    v_solution,
    watson,
)

__all__ = [
    "QSeriesError",
    "TruncatedValue",
    "borel_image_2psi2",
    "connection_coefficient",
    "corollary",
    "default_report_json",
    "identities",
    "main_theorem_rhs",
    "phi",
    "psi",
    "qpochhammer",
    "qpochhammer_inf",
    "ramanujan",
    "resum_2psi1",
    "run_default_sweep",
    "slater",
    "theta",
    "v_solution",
    "watson",
]
