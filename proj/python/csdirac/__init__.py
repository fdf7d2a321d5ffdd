"""Bound states of a Dirac particle around a cosmic string.

Thin wrapper over the compiled extension: closed-form spectrum and
eigenfunctions, coherent families, and the self-verification suites.
"""

from ._core import (
    clifford_residual,
    coherent_table,
    perelomov_fock,
    spectrum_level,
    spectrum_sweep,
    verify_suite,
    wavefunction_table,
)

__all__ = [
    "clifford_residual",
    "coherent_table",
    "perelomov_fock",
    "spectrum_level",
    "spectrum_sweep",
    "verify_suite",
    "wavefunction_table",
]
