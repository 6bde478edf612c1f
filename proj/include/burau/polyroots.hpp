#ifndef BURAU_POLYROOTS_HPP
#define BURAU_POLYROOTS_HPP

#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>
#include <vector>

#include "burau/matrix.hpp"

namespace burau {

using BigComplex = boost::multiprecision::cpp_complex_100;

/// Exact characteristic polynomial of an integer matrix, ascending
/// coefficients, monic of degree dim.
std::vector<Int> integer_char_poly(const IntMatrix& m);

struct SquareFreeFactor {
    std::vector<Int> coeffs;  // ascending, monic
    int multiplicity;
};

/// Yun's square-free decomposition of a monic integer polynomial:
/// f = prod factor_i ^ multiplicity_i with each factor square-free and the
/// factors pairwise coprime.  All arithmetic is exact.
std::vector<SquareFreeFactor> square_free_decomposition(const std::vector<Int>& monic_ascending);

/// All roots of a complex-coefficient polynomial by the Durand-Kerner
/// simultaneous iteration at 100-digit precision.  Converges quadratically
/// for simple roots; multiple roots come back as tight clusters far below
/// double resolution.  Coefficients are ascending; the leading one must be
/// nonzero.
std::vector<BigComplex> polynomial_roots(const std::vector<BigComplex>& ascending_coeffs);

std::complex<double> to_double(const BigComplex& z);

}  // namespace burau

#endif
