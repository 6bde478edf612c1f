#ifndef BURAU_MATRIX_HPP
#define BURAU_MATRIX_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>
#include <vector>

#include "burau/laurent.hpp"

namespace burau {

/// Minimal dense square matrix over an exact ring (LaurentPoly or Int).
template <class T>
class SquareMatrix {
public:
    explicit SquareMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, T(0)) {
        if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    static SquareMatrix identity(int dim) {
        SquareMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = T(1);
        return m;
    }

    int dim() const { return dim_; }

    T& at(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    const T& at(int row, int col) const { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }

    bool operator==(const SquareMatrix& other) const = default;

    SquareMatrix operator*(const SquareMatrix& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
        SquareMatrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < dim_; ++j) out.at(i, j) += a * other.at(k, j);
            }
        return out;
    }

    SquareMatrix operator+(const SquareMatrix& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
        SquareMatrix out(*this);
        for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
        return out;
    }

    T trace() const {
        T acc(0);
        for (int i = 0; i < dim_; ++i) acc += at(i, i);
        return acc;
    }

private:
    int dim_;
    std::vector<T> entries_;
};

using LaurentMatrix = SquareMatrix<LaurentPoly>;
using IntMatrix = SquareMatrix<Int>;

/// Fraction-free (Bareiss) determinant; every division is exact in the ring.
template <class T>
T determinant(SquareMatrix<T> m) {
    const int n = m.dim();
    int sign = 1;
    T prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == T(0)) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(m.at(i, k) == T(0))) { swap_row = i; break; }
            if (swap_row < 0) return T(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    T det = m.at(n - 1, n - 1);
    return sign < 0 ? T(0) - det : det;
}

/// det(x I - M) for a Laurent matrix M: monic in x, with Laurent-polynomial
/// coefficients stored by ascending power of x.
class BivariatePoly {
public:
    explicit BivariatePoly(std::vector<LaurentPoly> by_x_power) : coeffs_(std::move(by_x_power)) {
        if (coeffs_.empty() || !(coeffs_.back() == LaurentPoly(1)))
            throw std::invalid_argument("bivariate polynomial must be monic in x");
    }

    int x_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const LaurentPoly& coeff(int x_power) const { return coeffs_.at(static_cast<std::size_t>(x_power)); }
    const std::vector<LaurentPoly>& coefficients() const { return coeffs_; }

    bool operator==(const BivariatePoly& other) const = default;

    /// Coefficients of the univariate polynomial in x obtained by fixing t.
    std::vector<std::complex<double>> eval_at_t(std::complex<double> t0) const {
        std::vector<std::complex<double>> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.eval(t0));
        return out;
    }

    std::complex<double> eval(std::complex<double> x0, std::complex<double> t0) const {
        std::complex<double> acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + it->eval(t0);
        return acc;
    }

    std::string str() const;

private:
    std::vector<LaurentPoly> coeffs_;
};

/// Characteristic polynomial det(x I - M), exactly, via the
/// Faddeev-LeVerrier recurrence (all scalar divisions are exact).
BivariatePoly char_poly(const LaurentMatrix& m);

/// One term of the finite decomposition M = sum_i t^i M_i.
struct MatrixTerm {
    int exp;
    IntMatrix coeff;

    bool operator==(const MatrixTerm&) const = default;
};

/// All nonzero M_i of M = sum_i t^i M_i, in ascending exponent order.
std::vector<MatrixTerm> decompose(const LaurentMatrix& m);

/// Reassembles sum_i t^i M_i (test oracle for decompose).
LaurentMatrix recompose(const std::vector<MatrixTerm>& terms, int dim);

/// Entrywise evaluation at eta != 0.
Eigen::MatrixXcd substitute(const LaurentMatrix& m, std::complex<double> eta);

}  // namespace burau

#endif
