#include "burau/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace burau {

namespace {

std::vector<double> pair_distances(const std::vector<std::complex<double>>& a,
                                   const std::vector<std::complex<double>>& b) {
    std::vector<double> d(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) d[i * b.size() + j] = std::abs(a[i] - b[j]);
    return d;
}

// Kuhn's augmenting-path matching restricted to edges with distance <= radius.
bool perfect_matching_within(const std::vector<double>& dist, std::size_t n, double radius) {
    std::vector<int> match_of_b(n, -1);
    std::vector<char> visited(n);
    auto augment = [&](auto&& self, std::size_t i) -> bool {
        for (std::size_t j = 0; j < n; ++j) {
            if (visited[j] || dist[i * n + j] > radius) continue;
            visited[j] = 1;
            if (match_of_b[j] < 0 || self(self, static_cast<std::size_t>(match_of_b[j]))) {
                match_of_b[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, i)) return false;
    }
    return true;
}

}  // namespace

double greedy_match_distance(const std::vector<std::complex<double>>& a,
                             const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multiset size mismatch");
    std::vector<char> used(b.size());
    double worst = 0.0;
    for (const auto& x : a) {
        std::size_t best = b.size();
        double best_dist = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (best == b.size() || d < best_dist) {
                best = j;
                best_dist = d;
            }
        }
        used[best] = 1;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

double optimal_match_distance(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multiset size mismatch");
    if (a.empty()) return 0.0;
    const std::size_t n = a.size();
    std::vector<double> dist = pair_distances(a, b);
    std::vector<double> radii = dist;
    std::sort(radii.begin(), radii.end());
    std::size_t lo = 0, hi = radii.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (perfect_matching_within(dist, n, radii[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return radii[lo];
}

double multiset_match_distance(const std::vector<std::complex<double>>& a,
                               const std::vector<std::complex<double>>& b, double tol) {
    const double greedy = greedy_match_distance(a, b);
    if (greedy <= tol) return greedy;
    return optimal_match_distance(a, b);
}

}  // namespace burau
