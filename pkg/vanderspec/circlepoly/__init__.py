from vanderspec.circlepoly.bounds import Lambda1Bounds, t_p_max, hadamard_index, lambda1_sandwich, deleted_log_products
from vanderspec.circlepoly.littlewood_offord import lo_exact, lo_exact_fraction, lo_exhaustive
from vanderspec.circlepoly.polynomial import CirclePolynomial, log_abs_poly, log_abs_poly_grid, t_n_functional, max_on_circle
from vanderspec.circlepoly.sign_flip import GAMMA, PairedRoots, RandpolyResult, balance_function, find_balanced_point, \
    sign_flip_sample, sign_flip_polynomial_form, strong_pair_fraction, sign_flip_tail_frequency, randpoly_experiment, \
    randpoly_threshold, main_comb_threshold

__all__ = ['CirclePolynomial', 'log_abs_poly', 'log_abs_poly_grid', 't_n_functional', 'max_on_circle', 'Lambda1Bounds',
           't_p_max', 'hadamard_index', 'lambda1_sandwich', 'deleted_log_products', 'GAMMA', 'PairedRoots',
           'RandpolyResult', 'balance_function', 'find_balanced_point', 'sign_flip_sample', 'sign_flip_polynomial_form',
           'strong_pair_fraction', 'sign_flip_tail_frequency', 'randpoly_experiment', 'randpoly_threshold',
           'main_comb_threshold', 'lo_exact', 'lo_exact_fraction', 'lo_exhaustive']
