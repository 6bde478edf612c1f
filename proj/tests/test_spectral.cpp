#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "burau/burau.hpp"
#include "burau/matching.hpp"
#include "burau/spectral.hpp"
#include "corpus.hpp"

using namespace burau;

namespace {

const double kGolden = (3.0 + std::sqrt(5.0)) / 2.0;  // 2.6180339887...

// Independent cross-check for dominant eigenvalues with a clear gap.
double power_iteration_radius(const Eigen::MatrixXcd& a, int steps = 2000) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(a.rows());
    v.normalize();
    double estimate = 0.0;
    for (int i = 0; i < steps; ++i) {
        v = a * v;
        estimate = v.norm();
        v /= estimate;
    }
    return estimate;
}

Eigen::MatrixXcd random_complex_matrix(std::mt19937& rng, int dim) {
    auto draw = [&] { return static_cast<double>(rng()) / 4294967296.0 * 2.0 - 1.0; };
    Eigen::MatrixXcd a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = std::complex<double>(draw(), draw());
    return a;
}

}  // namespace

TEST_CASE("eigenvalues of reference matrices") {
    Eigen::MatrixXcd fib(2, 2);
    fib << 1, 1, 1, 2;
    const auto eig = eigenvalues(fib);
    REQUIRE(eig.size() == 2);
    CHECK(std::abs(eig[0] - kGolden) < 1e-10);
    CHECK(std::abs(eig[1] - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-10);

    const auto ones = eigenvalues(Eigen::MatrixXcd::Identity(3, 3));
    for (const auto& mu : ones) CHECK(std::abs(mu - 1.0) < 1e-12);

    // companion matrix of x^3 - 1
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(3, 3);
    comp(0, 2) = 1;
    comp(1, 0) = 1;
    comp(2, 1) = 1;
    auto roots = eigenvalues(comp);
    for (const auto& mu : roots) CHECK(std::abs(std::pow(mu, 3) - 1.0) < 1e-10);
    CHECK(std::abs(roots[0] * roots[1] * roots[2] - 1.0) < 1e-10);
}

TEST_CASE("spectral radius") {
    Eigen::MatrixXcd fib(2, 2);
    fib << 1, 1, 1, 2;
    CHECK(std::abs(spectral_radius(fib) - 2.6180339887) < 1e-9);
    CHECK(spectral_radius(Eigen::MatrixXcd::Identity(4, 4)) == doctest::Approx(1.0));

    const BraidWord prime1 = parse_braid_word("b[1,3,3] b[4,3,3]^2 b[1,3,3]^3", 9);
    const double at_minus_one = spectral_radius(substitute(burau_matrix(prime1), -1.0));
    CHECK(std::abs(at_minus_one - 5.828) < 1e-3);
    // the exact growth rate of this family is 3 + 2*sqrt(2)
    CHECK(std::abs(at_minus_one - (3.0 + 2.0 * std::sqrt(2.0))) < 1e-9);
}

TEST_CASE("solver cross-checks") {
    Eigen::MatrixXcd fib(2, 2);
    fib << 1, 1, 1, 2;
    CHECK(std::abs(power_iteration_radius(fib) - spectral_radius(fib)) < 1e-9);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const Eigen::MatrixXcd a = random_complex_matrix(rng, 6);
        const auto eig = eigenvalues(a);
        std::complex<double> prod = 1.0;
        for (const auto& mu : eig) prod *= mu;
        const std::complex<double> det = a.determinant();
        CHECK(std::abs(prod - det) <= 1e-8 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("scan of the golden example") {
    const SpectralScan s = scan(parse_braid_word("1 -2", 3), 4);
    REQUIRE(s.samples.size() == 4);
    CHECK(s.samples[0].theta == 0.0);
    CHECK(s.samples[0].radius == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(s.samples[2].radius == doctest::Approx(kGolden).epsilon(1e-9));
    CHECK(s.samples[1].radius == doctest::Approx(s.samples[3].radius).epsilon(1e-12));
    CHECK(s.samples[1].radius == doctest::Approx(1.0).epsilon(1e-9));

    const SpectralScan id = scan(parse_braid_word("", 3), 8);
    for (const auto& sample : id.samples) CHECK(sample.radius == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(scan(parse_braid_word("1", 3), 1), std::invalid_argument);
}

TEST_CASE("scan radius equals the max eigenvalue modulus") {
    testing::WordGen gen(32);
    for (int trial = 0; trial < 10; ++trial) {
        const SpectralScan s = scan(gen.word(3, 6, 10), 16);
        for (const auto& sample : s.samples) {
            double top = 0.0;
            for (const auto& mu : sample.eigenvalues) top = std::max(top, std::abs(mu));
            CHECK(sample.radius == doctest::Approx(top).epsilon(1e-12));
        }
    }
}

TEST_CASE("evenness, periodicity and conjugation symmetry") {
    testing::WordGen gen(33);
    for (int trial = 0; trial < 30; ++trial) {
        const BraidWord w = gen.word(3, 7, 16);
        const int res = 16;
        const SpectralScan s = scan(w, res);
        for (int j = 1; j < res; ++j) {
            CHECK(std::abs(s.samples[static_cast<std::size_t>(j)].radius -
                           s.samples[static_cast<std::size_t>(res - j)].radius) <= 1e-8);
            // Eigenvalue multiset at theta matches the conjugates at 1 - theta.
            // The self-paired sample theta = 1/2 is excluded: there the matrix
            // is real and the comparison collapses to conjugation-closure of a
            // single computed spectrum, which a double eigensolve cannot
            // certify at 1e-8 when eigenvalues are defective.
            if (2 * j == res) continue;
            auto mirrored = s.samples[static_cast<std::size_t>(res - j)].eigenvalues;
            for (auto& mu : mirrored) mu = std::conj(mu);
            CHECK(multiset_match_distance(s.samples[static_cast<std::size_t>(j)].eigenvalues,
                                          mirrored, 1e-8) <= 1e-8);
        }
        CHECK(std::abs(spectral_radius(substitute(burau_matrix(w), 1.0)) - 1.0) <= 1e-8);
    }
}

TEST_CASE("scans never exceed the growth rate of the example braids") {
    const double golden = kGolden;
    const double silver = 3.0 + 2.0 * std::sqrt(2.0);
    struct Case {
        const char* text;
        int strings;
        double rate;
    };
    const Case cases[] = {
        {"b[1,1,1] b[2,1,1]^-1", 3, golden},
        {"b[1,3,3] b[4,3,3]^-1", 9, golden},
        {"b[1,8,8] b[9,8,8]^-1", 24, golden},
        {"b[1,3,3] b[4,3,3]^2 b[1,3,3]^3", 9, silver},
        {"b[1,3,3] b[4,3,2] b[4,2,3] b[1,3,3]^3", 8, silver},
        {"b[1,3,3] b[4,3,3]^-1 b[1,9,1] b[1,1,9]", 10, golden},
    };
    for (const Case& c : cases) {
        const SpectralScan s = scan(parse_braid_word(c.text, c.strings), 240);
        double top = 0.0;
        for (const auto& sample : s.samples) top = std::max(top, sample.radius);
        CHECK(top <= c.rate + 1e-6);
    }
}

TEST_CASE("unity spectra") {
    const BraidWord golden = parse_braid_word("1 -2", 3);
    const auto k1 = unity_spectrum(golden, 1);
    REQUIRE(k1.size() == 1);
    for (const auto& mu : k1[0].eigenvalues) CHECK(std::abs(std::abs(mu) - 1.0) < 1e-10);

    const auto k2 = unity_spectrum(golden, 2);
    REQUIRE(k2.size() == 2);
    bool found = false;
    for (const auto& mu : k2[1].eigenvalues) found = found || std::abs(mu - kGolden) < 1e-10;
    CHECK(found);

    for (const auto& slot : unity_spectrum(parse_braid_word("", 5), 3))
        for (const auto& mu : slot.eigenvalues) CHECK(std::abs(mu - 1.0) < 1e-12);
}

TEST_CASE("sharpness reports") {
    const BraidWord golden = parse_braid_word("1 -2", 3);
    const SharpnessReport report = sharpness(golden, kGolden, 16, 1e-6);
    REQUIRE(report.sharp.size() == 1);
    CHECK(report.sharp[0].root == Fraction{1, 2});
    CHECK(report.sharp[0].multiplicity == 1);
    CHECK(report.minimal_k == 2);
    CHECK(report.bound == 2);
    CHECK(report.minimal_k_within_bound);
    CHECK(report.minimal_k_twice_power_of_two);

    const BraidWord prime1 = parse_braid_word("b[1,3,3] b[4,3,3]^2 b[1,3,3]^3", 9);
    const SharpnessReport r1 = sharpness(prime1, 5.828, 12, 5e-3);
    REQUIRE(r1.sharp.size() == 3);
    CHECK(r1.sharp[0].root == Fraction{1, 2});
    CHECK(r1.sharp[1].root == Fraction{1, 6});
    CHECK(r1.sharp[2].root == Fraction{5, 6});
    CHECK(r1.minimal_k == 2);

    // no sharp root below lambda: empty set is a valid result
    const SharpnessReport none = sharpness(golden, 10.0, 8, 1e-6);
    CHECK(none.sharp.empty());
    CHECK(!none.minimal_k.has_value());

    CHECK_THROWS_AS(sharpness(golden, 0.9, 8, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(sharpness(golden, 2.0, 8, -1.0), std::invalid_argument);
}
