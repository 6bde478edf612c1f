#ifndef BURAU_LAURENT_HPP
#define BURAU_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

namespace burau {

// Exact integer type for all ring arithmetic.  Burau entries of long words
// overflow 64 bits, so coefficients are arbitrary precision throughout.
using Int = boost::multiprecision::cpp_int;

/// An integer Laurent polynomial sum_j c_j t^j, stored as the contiguous
/// coefficient run [min_exp, max_exp].  Canonical form: the first and last
/// stored coefficients are nonzero; the zero polynomial stores nothing and
/// has min_exp() == 0.  Values are immutable in spirit: all operations
/// return new polynomials and never round.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long value) : LaurentPoly(Int(value), 0) {}
    LaurentPoly(Int value) : LaurentPoly(std::move(value), 0) {}
    LaurentPoly(Int coeff, int exp);

    /// coeff * t^exp
    static LaurentPoly monomial(Int coeff, int exp) { return LaurentPoly(std::move(coeff), exp); }
    /// t
    static LaurentPoly variable() { return LaurentPoly(Int(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const { return min_exp_; }
    int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t term_span() const { return coeffs_.size(); }

    /// Coefficient of t^exp (zero outside the stored run).
    const Int& coeff(int exp) const;

    bool operator==(const LaurentPoly& other) const = default;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly& operator+=(const LaurentPoly& other) { return *this = *this + other; }
    LaurentPoly& operator-=(const LaurentPoly& other) { return *this = *this - other; }
    LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

    /// Multiplication by t^shift.
    LaurentPoly shifted(int shift) const;

    /// Entrywise evaluation at eta != 0: Horner on the coefficient run times
    /// eta^min_exp, which keeps relative error bounded on |eta| = 1.
    std::complex<double> eval(std::complex<double> eta) const;

    /// Extended-precision evaluation for spectra that must be compared
    /// tighter than double eigensolves can deliver.
    std::complex<long double> eval_precise(std::complex<long double> eta) const;

    /// Signed monomial-sum form in ascending exponents, e.g. "-t^-1+2-t".
    std::string str() const;

private:
    int min_exp_ = 0;
    std::vector<Int> coeffs_;

    void trim();
};

/// Exact quotient a / b in Z[t^{+-1}]; throws std::domain_error if b is zero
/// or does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / k for an integer scalar k.
LaurentPoly exact_div(const LaurentPoly& a, const Int& k);

/// Exact integer quotient (overload used by generic fraction-free code).
Int exact_div(const Int& a, const Int& b);

template <class Real>
std::complex<Real> pow_int(std::complex<Real> base, int exp) {
    if (exp < 0) return std::complex<Real>(1) / pow_int(base, -exp);
    std::complex<Real> acc(1);
    while (exp > 0) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

}  // namespace burau

#endif
