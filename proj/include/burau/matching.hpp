#ifndef BURAU_MATCHING_HPP
#define BURAU_MATCHING_HPP

#include <complex>
#include <vector>

namespace burau {

/// Greedy nearest-neighbour pairing of two equal-size multisets; returns the
/// largest paired distance (an upper bound for the optimal value).
double greedy_match_distance(const std::vector<std::complex<double>>& a,
                             const std::vector<std::complex<double>>& b);

/// Optimal (bottleneck) pairing: the smallest achievable value of the
/// largest paired distance, found by a binary search over candidate radii
/// with an augmenting-path perfect matching at each step.
double optimal_match_distance(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b);

/// Greedy first; falls back to the optimal matcher when the greedy bound
/// exceeds tol.  Throws std::invalid_argument on size mismatch.
double multiset_match_distance(const std::vector<std::complex<double>>& a,
                               const std::vector<std::complex<double>>& b, double tol);

}  // namespace burau

#endif
