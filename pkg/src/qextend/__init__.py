"""Fourier extension estimates for quadratic surfaces over prime fields.

Characters and exponential sums, quadratic forms and their level sets, the
Fourier transform on F_q^d, the extension operator, and incidence/energy
counts, each paired with a slow oracle in :mod:`qextend.reference`.
"""
from .errors import *  # noqa: F401,F403
from .exponents import (
    ExponentPair,
    bootstrap_exponent,
    incidence3_by_interpolation,
    incidence3_exponents,
    interpolate_exponents,
    stein_tomas_exponent,
)
from .expsums import SumValue, gauss_sum, kloosterman_sum, power_sum_identity_check, salie_sum
from .extension import (
    ExtensionTransform,
    bochner_riesz_kernel,
    extension_transform,
    rstar_lower_bound,
    rstar_two_two_exact,
    stein_tomas_sweep,
    surface_ft_closed_form,
    surface_ft_direct,
)
from .field import PrimeField, chi, inv, make_field, psi
from .fourier import (
    GridFunction,
    SurfaceFunction,
    fourier_forward,
    fourier_inverse,
    measure_convolution,
    norm_phase,
    norm_space,
    norm_surface,
)
from .incidence import (
    SubsetE,
    additive_energy,
    big_set_l4_check,
    energy_l4_identity,
    pairsum_count,
    random_subset,
    shifted_incidence_count,
    small_set_l4_check,
)
from .quadform import (
    DiagonalForm,
    QuadraticForm,
    Surface,
    diagonalize,
    enumerate_surface,
    evaluate,
    is_nondegenerate,
    parse_form_spec,
)
from .report import BoundReport

__version__ = "0.1.0"
