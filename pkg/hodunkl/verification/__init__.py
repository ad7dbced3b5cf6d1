"""Invariant sweeps shared by the verify command and the tests."""

from .sweeps import (
    CheckResult,
    bounded_weights,
    hull_lemma_sweep,
    intertwiner_sweep,
    multiplicity_grid,
    positivity_sweep,
    random_hull_agreement,
    rankone_agreement,
    relative_error,
    run_all,
    spectral_orbit_sweep,
    weight_box,
)
