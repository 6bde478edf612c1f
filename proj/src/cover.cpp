#include "burau/cover.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "burau/matching.hpp"
#include "burau/polyroots.hpp"
#include "burau/spectral.hpp"

namespace burau {

namespace {

int mod(int value, int k) { return ((value % k) + k) % k; }

// The two spectra agree exactly in theory, but defective eigenvalues cost a
// double eigensolve half its digits, which is right at the 1e-8 matching
// tolerance.  The comparison therefore runs in extended precision.
using MatrixXcld = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

std::vector<std::complex<double>> eigenvalues_precise(const MatrixXcld& a) {
    Eigen::ComplexEigenSolver<MatrixXcld> solver;
    solver.setMaxIterations(100 * static_cast<int>(a.rows()));
    solver.compute(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw EigenvalueError("eigenvalue iteration did not converge within 100*dim steps");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        out[static_cast<std::size_t>(i)] =
            std::complex<double>(static_cast<double>(solver.eigenvalues()(i).real()),
                                 static_cast<double>(solver.eigenvalues()(i).imag()));
    return out;
}

MatrixXcld to_complex_precise(const IntMatrix& m) {
    MatrixXcld out(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            out(i, j) = std::complex<long double>(m.at(i, j).convert_to<long double>());
    return out;
}

MatrixXcld substitute_precise(const LaurentMatrix& m, std::complex<long double> eta) {
    MatrixXcld out(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = m.at(i, j).eval_precise(eta);
    return out;
}

// --- escalation path ------------------------------------------------------
// Jordan blocks of size m cost any fixed-precision eigensolve a factor of
// eps^(1/m), so a handful of fuzz words cannot reach the 1e-8 matching
// tolerance even in extended precision.  Those pairs are recomputed from
// exact characteristic polynomials: the cover side is square-free factored
// over Z[x] so every root-finding problem is simple, and the union side is
// the exact bivariate polynomial evaluated at 100-digit roots of unity.

using BigReal = boost::multiprecision::cpp_bin_float_100;

BigComplex eval_laurent_big(const LaurentPoly& p, const BigComplex& eta) {
    if (p.is_zero()) return BigComplex(0);
    BigComplex acc = 0;
    for (int e = p.max_exp(); e >= p.min_exp(); --e)
        acc = acc * eta + BigComplex(BigReal(p.coeff(e)), 0);
    // |eta| = 1 to working precision, so the inverse is the conjugate
    BigComplex unit_power = 1;
    const BigComplex factor = p.min_exp() >= 0 ? eta : conj(eta);
    for (int i = 0; i < std::abs(p.min_exp()); ++i) unit_power *= factor;
    return acc * unit_power;
}

std::vector<std::complex<double>> refined_cover_spectrum(const IntMatrix& cover) {
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(cover.dim()));
    for (const SquareFreeFactor& factor : square_free_decomposition(integer_char_poly(cover))) {
        std::vector<BigComplex> coeffs;
        coeffs.reserve(factor.coeffs.size());
        for (const Int& c : factor.coeffs) coeffs.emplace_back(BigReal(c), 0);
        for (const BigComplex& root : polynomial_roots(coeffs))
            for (int copy = 0; copy < factor.multiplicity; ++copy) out.push_back(to_double(root));
    }
    return out;
}

std::vector<std::complex<double>> refined_union_spectrum(const LaurentMatrix& m, int k) {
    const BivariatePoly chi = char_poly(m);
    const BigReal tau = 8 * atan(BigReal(1));
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(k * m.dim()));
    for (int j = 0; j < k; ++j) {
        const BigReal angle = tau * j / k;
        const BigComplex eta(cos(angle), sin(angle));
        std::vector<BigComplex> coeffs;
        coeffs.reserve(chi.coefficients().size());
        for (const LaurentPoly& c : chi.coefficients()) coeffs.push_back(eval_laurent_big(c, eta));
        for (const BigComplex& root : polynomial_roots(coeffs)) out.push_back(to_double(root));
    }
    return out;
}

}  // namespace

CoverAction build_cover_action(const LaurentMatrix& m, int k) {
    if (k < 1) throw std::invalid_argument("cover order must be at least 1");
    const int r = m.dim();

    // Residue-class sums N_c = sum over e = c mod k of M_e.
    std::vector<IntMatrix> residue_sum(static_cast<std::size_t>(k), IntMatrix(r));
    for (const MatrixTerm& term : decompose(m)) {
        IntMatrix& target = residue_sum[static_cast<std::size_t>(mod(term.exp, k))];
        target = target + term.coeff;
    }

    IntMatrix cover(k * r);
    for (int bi = 0; bi < k; ++bi)
        for (int bj = 0; bj < k; ++bj) {
            const IntMatrix& block = residue_sum[static_cast<std::size_t>(mod(bi - bj, k))];
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) cover.at(bi * r + i, bj * r + j) = block.at(i, j);
        }
    return CoverAction{k, r, std::move(cover)};
}

IntMatrix block_shift_matrix(int k, int base_dim) {
    IntMatrix shift(k * base_dim);
    for (int b = 0; b < k; ++b)
        for (int i = 0; i < base_dim; ++i) shift.at(((b + 1) % k) * base_dim + i, b * base_dim + i) = 1;
    return shift;
}

bool shift_commutation_check(const CoverAction& cover) {
    const IntMatrix shift = block_shift_matrix(cover.k, cover.base_dim);
    return cover.matrix * shift == shift * cover.matrix;
}

CoverVerdict verify_direct_sum(const LaurentMatrix& m, int k, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const CoverAction cover = build_cover_action(m, k);
    const auto cover_eigenvalues = eigenvalues_precise(to_complex_precise(cover.matrix));

    std::vector<std::complex<double>> union_eigenvalues;
    union_eigenvalues.reserve(cover_eigenvalues.size());
    const long double tau = 2.0L * std::numbers::pi_v<long double>;
    for (int j = 0; j < k; ++j) {
        const auto eta = std::polar(1.0L, tau * j / k);
        for (const auto& mu : eigenvalues_precise(substitute_precise(m, eta)))
            union_eigenvalues.push_back(mu);
    }

    double distance = multiset_match_distance(cover_eigenvalues, union_eigenvalues, tol);
    if (distance > tol)
        distance = multiset_match_distance(refined_cover_spectrum(cover.matrix),
                                           refined_union_spectrum(m, k), tol);
    return CoverVerdict{k, cover.matrix.dim(), distance, distance <= tol};
}

}  // namespace burau
