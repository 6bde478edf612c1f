#include "burau/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "burau/burau.hpp"

namespace burau {

namespace {

// e^{2 pi i j/k} with the symmetry eta(k-j) == conj(eta(j)) holding exactly
// in floating point, and exact values on the real and imaginary axes.  The
// whole evaluation pipeline is conjugation-equivariant, so spectra at theta
// and 1-theta come out exactly conjugate instead of differing by rounding
// noise that ill-conditioned eigenvalues would amplify.
std::complex<double> unit_point(long j, long k) {
    j %= k;
    if (j < 0) j += k;
    if (j == 0) return {1.0, 0.0};
    if (2 * j == k) return {-1.0, 0.0};
    if (4 * j == k) return {0.0, 1.0};
    if (4 * j == 3 * k) return {0.0, -1.0};
    if (2 * j > k) return std::conj(unit_point(k - j, k));
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k));
}

void sort_by_modulus(std::vector<std::complex<double>>& values) {
    std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigenvalues need a square matrix");
    if (!a.allFinite()) throw std::invalid_argument("eigenvalues need finite entries");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
    solver.setMaxIterations(100 * static_cast<int>(a.rows()));
    solver.compute(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw EigenvalueError("eigenvalue iteration did not converge within 100*dim steps");
    std::vector<std::complex<double>> out(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    sort_by_modulus(out);
    return out;
}

double spectral_radius(const Eigen::MatrixXcd& a) {
    double radius = 0.0;
    for (const auto& mu : eigenvalues(a)) radius = std::max(radius, std::abs(mu));
    return radius;
}

SpectralScan scan(const BraidWord& word, int resolution) {
    if (resolution < 2) throw std::invalid_argument("scan resolution must be at least 2");
    const LaurentMatrix b = burau_matrix(word);
    SpectralScan result{word, resolution, {}};
    result.samples.reserve(static_cast<std::size_t>(resolution));
    for (int j = 0; j < resolution; ++j) {
        const double theta = static_cast<double>(j) / resolution;
        auto eig = eigenvalues(substitute(b, unit_point(j, resolution)));
        double radius = 0.0;
        for (const auto& mu : eig) radius = std::max(radius, std::abs(mu));
        result.samples.push_back(ScanSample{theta, radius, std::move(eig)});
    }
    return result;
}

std::vector<UnitySlot> unity_spectrum(const BraidWord& word, int k) {
    if (k < 1) throw std::invalid_argument("cover order must be at least 1");
    const LaurentMatrix b = burau_matrix(word);
    std::vector<UnitySlot> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const auto eta = unit_point(j, k);
        out.push_back(UnitySlot{j, eta, eigenvalues(substitute(b, eta))});
    }
    return out;
}

SharpnessReport sharpness(const BraidWord& word, double lambda, int k_max, double tol) {
    if (lambda <= 1.0) throw std::invalid_argument("growth rate must exceed 1");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");

    const LaurentMatrix b = burau_matrix(word);
    SharpnessReport report{lambda, tol, k_max, word.strings, {}, std::nullopt, 0, false, false};
    for (int k = 1; k <= k_max; ++k) {
        for (int j = (k == 1 ? 0 : 1); j < k; ++j) {
            if (std::gcd(j, k) != 1) continue;
            const auto eig = eigenvalues(substitute(b, unit_point(j, k)));
            const double radius = eig.empty() ? 0.0 : std::abs(eig.front());
            if (radius < lambda - tol) continue;
            int multiplicity = 0;
            for (const auto& mu : eig)
                if (std::abs(mu) >= radius - 1e-8 * std::max(1.0, radius)) ++multiplicity;
            report.sharp.push_back(SharpRoot{Fraction{j, k}, radius, multiplicity});
            if (!report.minimal_k || k < *report.minimal_k) report.minimal_k = k;
        }
    }

    report.bound = 2 * word.strings / 3;
    if (report.minimal_k) {
        const int k = *report.minimal_k;
        report.minimal_k_within_bound = k <= report.bound;
        report.minimal_k_twice_power_of_two = k >= 2 && (k & (k - 1)) == 0;
    }
    return report;
}

}  // namespace burau
