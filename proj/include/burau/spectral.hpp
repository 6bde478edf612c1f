#ifndef BURAU_SPECTRAL_HPP
#define BURAU_SPECTRAL_HPP

#include <complex>
#include <optional>
#include <vector>

#include "burau/braid.hpp"
#include "burau/fraction.hpp"
#include "burau/matrix.hpp"

namespace burau {

/// Thrown when the dense eigensolver fails to converge within its iteration
/// cap (100 * dim QR iterations); callers report this, it never aborts.
struct EigenvalueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All eigenvalues with multiplicity, sorted by descending modulus (ties by
/// real then imaginary part).  Backward-stable dense solve: Hessenberg
/// reduction plus shifted QR.
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXcd& a);

double spectral_radius(const Eigen::MatrixXcd& a);

struct ScanSample {
    double theta;
    double radius;
    std::vector<std::complex<double>> eigenvalues;
};

/// The sampled map theta -> spec(B(exp(2 pi i theta))) on the uniform
/// closed-open grid theta = j/resolution, j = 0..resolution-1.
struct SpectralScan {
    BraidWord word;
    int resolution;
    std::vector<ScanSample> samples;
};

SpectralScan scan(const BraidWord& word, int resolution);

struct UnitySlot {
    int j;
    std::complex<double> eta;
    std::vector<std::complex<double>> eigenvalues;
};

/// Eigenvalues of B(e^{2 pi i j/k}) for j = 0..k-1.  Their union is the
/// spectrum of the induced action on the k-fold cyclic cover summand
/// (see cover.hpp for the independent verification).
std::vector<UnitySlot> unity_spectrum(const BraidWord& word, int k);

struct SharpRoot {
    Fraction root;
    double value;
    /// Number of eigenvalues within 1e-8 * max(1, value) of the top modulus.
    int multiplicity;
};

struct SharpnessReport {
    double lambda;
    double tol;
    int k_max;
    int strings;
    /// Roots of unity with spec(B(e^{2 pi i j/k})) >= lambda - tol, sorted
    /// by (k, j).
    std::vector<SharpRoot> sharp;
    std::optional<int> minimal_k;
    /// floor(2n/3) comparison data for the minimal sharp order.
    int bound;
    bool minimal_k_within_bound;
    bool minimal_k_twice_power_of_two;
};

/// Scans all primitive fractions j/k with k <= k_max.  Non-primitive points
/// are covered under their reduced denominator.
SharpnessReport sharpness(const BraidWord& word, double lambda, int k_max, double tol);

}  // namespace burau

#endif
