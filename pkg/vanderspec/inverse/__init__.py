from vanderspec.inverse.symmetric import SymmetricFunctions, elem_sym_excluding
from vanderspec.inverse.vandermonde_inverse import InverseMatrix, vandermonde_inverse, row_abs_sums, row_abs_sums_closed_form, \
    distance_identity_check, inverse_moment_probe, inverse_trace, raw_vandermonde

__all__ = ['SymmetricFunctions', 'elem_sym_excluding', 'InverseMatrix', 'vandermonde_inverse', 'row_abs_sums',
           'row_abs_sums_closed_form', 'distance_identity_check', 'inverse_moment_probe', 'inverse_trace', 'raw_vandermonde']
