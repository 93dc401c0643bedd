from vanderspec.bridge.empirical import EmpiricalProcess, kolmogorov_cdf, mu_eps, sigma2_eps, log_kernel_variance, \
    t_n_eps, z_n_eps
from vanderspec.bridge.functionals import log_kernel, cot_kernel, i_phi, i_phi_all_shifts, i_star
from vanderspec.bridge.path import BridgePath, DyadicPhases, sample_bridge, sample_bridges, shift_bridge, dyadic_phases

__all__ = ['BridgePath', 'DyadicPhases', 'sample_bridge', 'sample_bridges', 'shift_bridge', 'dyadic_phases',
           'log_kernel', 'cot_kernel', 'i_phi', 'i_phi_all_shifts', 'i_star', 'EmpiricalProcess', 'kolmogorov_cdf',
           'mu_eps', 'sigma2_eps', 'log_kernel_variance', 't_n_eps', 'z_n_eps']
