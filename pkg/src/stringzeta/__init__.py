"""stringzeta: exact symbolic-numeric engine for string-amplitude
zeta-value expansions, their special-MZV reductions, the single-valued
projection between the open- and closed-string sides, and an independent
torus-quadrature oracle for the genus-one asymptotics."""

from .rings import ZetaMonomial, ZetaPoly, bernoulli, even_zeta_normal_form, zeta
from .series import TruncSeries, series_exp, series_log, series_mul_div
from .laurent import LaurentPoly
from .mzv import HIndex, ZIndex, h_exact, h_tornheim, z_bruteforce, z_partial_product

__all__ = [
    "ZetaMonomial", "ZetaPoly", "bernoulli", "even_zeta_normal_form", "zeta",
    "TruncSeries", "series_exp", "series_log", "series_mul_div",
    "LaurentPoly",
    "HIndex", "ZIndex", "h_exact", "h_tornheim", "z_bruteforce", "z_partial_product",
]
