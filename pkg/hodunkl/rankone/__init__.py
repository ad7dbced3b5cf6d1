"""Closed-form rank-one oracles."""

from .special_functions import (
    bessel_j,
    closed_E,
    closed_E_trig,
    closed_F,
    gegenbauer_bessel_limit,
    gegenbauer_coefficients,
    gegenbauer_Q,
    hyp2f1,
)
from .oracles import (
    bessel_limit_table,
    e_oracle_defect,
    f_oracle_table,
    line_to_point,
)
