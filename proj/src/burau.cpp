#include "burau/burau.hpp"

namespace burau {

namespace {

const LaurentPoly kOne(1);
const LaurentPoly kT = LaurentPoly::variable();
const LaurentPoly kMinusT = LaurentPoly::monomial(-1, 1);
const LaurentPoly kTInv = LaurentPoly::monomial(1, -1);
const LaurentPoly kMinusTInv = LaurentPoly::monomial(-1, -1);

void check_generator(int index, int strings) {
    if (strings < 2) throw std::invalid_argument("a braid needs at least 2 strings");
    if (index < 1 || index > strings - 1)
        throw std::out_of_range("generator index " + std::to_string(index) + " out of range for " +
                                std::to_string(strings) + " strings");
}

// Right-multiplies M in place by the image of sigma_index^sign.  Every
// generator image is the identity outside one column, so the update touches
// a single column of M.
void apply_generator(LaurentMatrix& m, int index, int sign) {
    const int dim = m.dim();
    if (dim == 1) {
        const LaurentPoly& factor = sign > 0 ? kMinusT : kMinusTInv;
        m.at(0, 0) *= factor;
        return;
    }
    // 0-based column the update lands in, and its neighbours.
    if (index == 1) {
        for (int r = 0; r < dim; ++r)
            m.at(r, 0) = sign > 0 ? kMinusT * m.at(r, 0) + m.at(r, 1)
                                  : kMinusTInv * m.at(r, 0) + kTInv * m.at(r, 1);
        return;
    }
    if (index == dim) {  // sigma_{n-1}
        const int q = dim - 1;
        for (int r = 0; r < dim; ++r)
            m.at(r, q) = sign > 0 ? kT * m.at(r, q - 1) + kMinusT * m.at(r, q)
                                  : m.at(r, q - 1) + kMinusTInv * m.at(r, q);
        return;
    }
    const int b = index - 1;
    for (int r = 0; r < dim; ++r)
        m.at(r, b) = sign > 0 ? kT * m.at(r, b - 1) + kMinusT * m.at(r, b) + m.at(r, b + 1)
                              : m.at(r, b - 1) + kMinusTInv * m.at(r, b) + kTInv * m.at(r, b + 1);
}

}  // namespace

LaurentMatrix burau_generator(int index, int sign, int strings) {
    check_generator(index, strings);
    LaurentMatrix m = LaurentMatrix::identity(strings - 1);
    apply_generator(m, index, sign);
    return m;
}

LaurentMatrix burau_matrix(const BraidWord& word) {
    if (word.strings < 2) throw std::invalid_argument("a braid needs at least 2 strings");
    LaurentMatrix m = LaurentMatrix::identity(word.strings - 1);
    for (int letter : word.letters) {
        const int index = letter < 0 ? -letter : letter;
        check_generator(index, word.strings);
        apply_generator(m, index, letter < 0 ? -1 : 1);
    }
    return m;
}

}  // namespace burau
