"""Quon algebra toolkit.

Vacuum expectation values under the q-mutation relation, permutation-symmetry
classification of many-quon states, quonic oscillator and rotor spectra, and
rotational-band fitting. Thin wrapper over the C++ core in `quon._quon`.
"""

from ._quon import (
    BandInputError,
    CapExceeded,
    QPoly,
    classify,
    fit_band,
    gram,
    lower_symmetric,
    oscillator_degeneracy,
    oscillator_energy,
    oscillator_full_solve,
    overlap,
    overlap_poly,
    permutation_words,
    q_bracket,
    q_bracket_poly,
    q_factorial,
    q_factorial_poly,
    raise_symmetric_element,
    rotor_energy,
    rotor_matrix_element,
    run_verification,
    symmetric_state,
    vev,
    vev_poly,
)

__all__ = [
    "BandInputError",
    "CapExceeded",
    "QPoly",
    "classify",
    "fit_band",
    "gram",
    "lower_symmetric",
    "oscillator_degeneracy",
    "oscillator_energy",
    "oscillator_full_solve",
    "overlap",
    "overlap_poly",
    "permutation_words",
    "q_bracket",
    "q_bracket_poly",
    "q_factorial",
    "q_factorial_poly",
    "raise_symmetric_element",
    "rotor_energy",
    "rotor_matrix_element",
    "run_verification",
    "symmetric_state",
    "vev",
    "vev_poly",
]

__version__ = "0.1.0"
