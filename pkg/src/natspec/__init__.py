"""Measures on the circle with exact positions: algebra, spectra, decomposition.

The package represents measures as finite atom lists at exactly-represented
angles (rational turns plus integer combinations of named independent
generators) together with trigonometric-polynomial densities.  On top of the
convolution algebra it provides spectral-radius bounds, character-value
sampling, simultaneous rotation approximation, and a constructive splitting
of any measure into three pieces whose transform clouds fill out their
spectral disks.
"""

from .angles import (FRESH_GENERATOR_VALUES, Angle, GeneratorBasis, TWO_PI,
                     angle_add, angle_scale, angle_to_radians,
                     basis_fresh_generators)
from .decomposition import (GENERATOR_STRATEGIES, RADIUS_MODES, DecompositionOptions,
                            DecompositionResult, VerificationCheck,
                            VerificationReport, decompose, verify_decomposition)
from .errors import (BasisMismatchError, BudgetExceededError, GeneratorsExhaustedError,
                     KroneckerNotFoundError, NatspecError, OutOfDiskError,
                     RadiusValidationError, SchemaError)
from .kronecker import (KroneckerProblem, KroneckerSolution, chordal, disk_preimage,
                        disk_preimage_shifted, hit_target, pair_transform_values,
                        solve)
from .measures import (ConvolutionBudget, DiscreteMeasure, MeasureLike, MixedMeasure,
                       TrigPolyDensity, as_mixed, convolve, convolve_power,
                       fourier_coefficient, make_rho, make_theta0, make_theta1,
                       parity_projections, tv_norm, tv_norm_bounds)
from .spectrum import (CharacterPolynomial, FeketeReport, NaturalSpectrumReport,
                       SpectrumSample, char_polynomial, character_values,
                       covering_radius, disk_grid, fekete_bound, hausdorff,
                       natural_spectrum_check, restrict, spectrum_sample,
                       torus_max, transform_closure_sample)

__version__ = "0.1.0"

__all__ = [
    "Angle", "GeneratorBasis", "TWO_PI", "FRESH_GENERATOR_VALUES",
    "angle_add", "angle_scale", "angle_to_radians", "basis_fresh_generators",
    "DiscreteMeasure", "TrigPolyDensity", "MixedMeasure", "MeasureLike",
    "ConvolutionBudget", "as_mixed", "convolve", "convolve_power",
    "fourier_coefficient", "tv_norm", "tv_norm_bounds", "parity_projections",
    "make_theta0", "make_theta1", "make_rho",
    "FeketeReport", "fekete_bound", "CharacterPolynomial", "char_polynomial",
    "character_values", "restrict", "torus_max", "SpectrumSample",
    "spectrum_sample", "transform_closure_sample", "covering_radius",
    "hausdorff", "disk_grid", "NaturalSpectrumReport", "natural_spectrum_check",
    "KroneckerProblem", "KroneckerSolution", "chordal", "solve",
    "pair_transform_values", "disk_preimage", "disk_preimage_shifted", "hit_target",
    "RADIUS_MODES", "GENERATOR_STRATEGIES", "DecompositionOptions",
    "DecompositionResult", "VerificationCheck", "VerificationReport",
    "decompose", "verify_decomposition",
    "NatspecError", "BasisMismatchError", "GeneratorsExhaustedError",
    "BudgetExceededError", "OutOfDiskError", "KroneckerNotFoundError",
    "RadiusValidationError", "SchemaError",
]
