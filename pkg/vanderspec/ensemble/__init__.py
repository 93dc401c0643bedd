from vanderspec.ensemble.dirichlet import dirichlet_kernel, dirichlet_envelope, build_dirichlet_gram
from vanderspec.ensemble.exponents import ExponentSequence
from vanderspec.ensemble.phases import PhaseVector, SeedSpec, InverseCdfDensity, sample_phases, hash64
from vanderspec.ensemble.vandermonde import ComplexMatrix, gamma_index, build_vandermonde, build_generalized

__all__ = ['PhaseVector', 'SeedSpec', 'InverseCdfDensity', 'sample_phases', 'hash64', 'ExponentSequence', 'ComplexMatrix',
           'gamma_index', 'build_vandermonde', 'build_generalized', 'dirichlet_kernel', 'dirichlet_envelope',
           'build_dirichlet_gram']
