"""Geometric integration of the 1D nonparaxial nonlinear Schrodinger equation

    kappa u_tt + i u_t + beta u_xx + f(u) = 0

on a periodic interval: Fourier pseudospectral collocation in space, the
symplectic implicit midpoint rule in time, plus the analytical apparatus
around it (exact linear propagator, conserved functionals, dispersion
relations, cubic solitons, relative-equilibrium residuals).
"""

from .analysis import (SolitonSpec, continuous_dispersion_residual,
                       continuous_dispersion_roots, lambda_eigenvalues,
                       linear_multiplier, numerical_dispersion_residual,
                       numerical_dispersion_roots, plane_wave_omega,
                       relative_equilibrium_residual, soliton_state_arrays,
                       soliton_time_derivatives, soliton_value, xi_plus)
from .config import (RunConfig, load_config, load_state_json,
                     parse_config_text, save_state_json)
from .conserved import (DiagnosticsRecord, MSFormPair, hamiltonian_h,
                        invariant_i1, invariant_i2, local_conservation_residuals,
                        pack_state, s1_matrix, s2_matrix, symplectic_form)
from .errors import ConfigError, IntegratorError
from .grid import (GridSpec, bh_entry, dense_bh, forward_transform,
                   inverse_transform, make_grid, spectral_derivative)
from .models import (CubicQuintic, DetunedCubic, HeavisideKerr, ModelParams,
                     NonlinearityModel, PowerLaw, Saturable, evaluate_V,
                     evaluate_df, evaluate_f, evaluate_g, model_from_tag,
                     wirtinger_residual)
from .stepping import (FieldState, MidpointStepper, StepperConfig, TangentState,
                       exact_linear_step, midpoint_step, simulate,
                       variational_step)

__version__ = "0.1.0"
