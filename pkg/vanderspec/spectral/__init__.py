from vanderspec.spectral.bounds import min_eig_2x2_bound, min_spacing_cdf_check, circular_min_spacing, max_row_sum_bound, \
    occupancy_lower_bound, principal_submatrix
from vanderspec.spectral.gram import gram, singular_values, matrix_norms
from vanderspec.spectral.identities import LogDeterminant, logdet_gram, trace_log
from vanderspec.spectral.jacobi import HermitianMatrix, Spectrum, eig_hermitian, eig_hermitian_lapack, spectrum_of

__all__ = ['HermitianMatrix', 'Spectrum', 'eig_hermitian', 'eig_hermitian_lapack', 'spectrum_of', 'gram', 'singular_values',
           'matrix_norms', 'LogDeterminant', 'logdet_gram', 'trace_log', 'min_eig_2x2_bound', 'min_spacing_cdf_check',
           'circular_min_spacing', 'max_row_sum_bound', 'occupancy_lower_bound', 'principal_submatrix']
