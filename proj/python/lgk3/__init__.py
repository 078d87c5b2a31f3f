"""Leggett-Garg K3 engine for unital qubit channels."""

from ._core import (  # noqa: F401
    __version__,
    apply,
    bloch_to_density,
    bloch_trajectory,
    choi_eigenvalues,
    choi_matrix,
    classify,
    compose,
    correlators_from_maps,
    density_to_bloch,
    divisibility_witness,
    is_completely_positive,
    is_positive,
    k3_algebraic,
    k3_unitary,
    kraus_from_map,
    make_lueders_pair,
    make_unital_rdr,
    maximize_k3,
    NotCompletelyPositiveError,
    params_from_maps,
    parse_angle,
    parse_map_spec,
    project,
    rdr_decompose,
    reversed_sequence_z,
    rot_y,
    rot_z,
    rot_zyz,
    shrink_sweep,
    simulate_protocol,
    simulate_unitary_protocol,
    state_independence_probe,
    threshold_certificate,
)

__all__ = [
    "apply",
    "bloch_to_density",
    "bloch_trajectory",
    "choi_eigenvalues",
    "choi_matrix",
    "classify",
    "compose",
    "correlators_from_maps",
    "density_to_bloch",
    "divisibility_witness",
    "is_completely_positive",
    "is_positive",
    "k3_algebraic",
    "k3_unitary",
    "kraus_from_map",
    "make_lueders_pair",
    "make_unital_rdr",
    "maximize_k3",
    "NotCompletelyPositiveError",
    "params_from_maps",
    "parse_angle",
    "parse_map_spec",
    "project",
    "rdr_decompose",
    "reversed_sequence_z",
    "rot_y",
    "rot_z",
    "rot_zyz",
    "shrink_sweep",
    "simulate_protocol",
    "simulate_unitary_protocol",
    "state_independence_probe",
    "threshold_certificate",
]
