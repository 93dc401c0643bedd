from vanderspec.moments.counting import SolutionCount, count_solutions, count_four_cycle_pair_sums, k_rho_estimate, \
    asymptotic_moment, block_equations
from vanderspec.moments.partitions import SetPartition, enumerate_partitions, is_noncrossing, four_cycle_partition, \
    bell_number, catalan_number
from vanderspec.moments.spectral_moments import empirical_moment, mp_density, mp_moment, mp_cdf, mp_bin_masses, \
    polytope_volume

__all__ = ['SetPartition', 'enumerate_partitions', 'is_noncrossing', 'four_cycle_partition', 'bell_number',
           'catalan_number', 'SolutionCount', 'count_solutions', 'count_four_cycle_pair_sums', 'k_rho_estimate',
           'asymptotic_moment', 'block_equations', 'empirical_moment', 'mp_density', 'mp_moment', 'mp_cdf',
           'mp_bin_masses', 'polytope_volume']
