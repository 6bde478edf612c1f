#include "burau/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace burau {

LaurentPoly::LaurentPoly(Int coeff, int exp) {
    if (coeff != 0) {
        min_exp_ = exp;
        coeffs_.push_back(std::move(coeff));
    }
}

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    std::size_t tail = coeffs_.size();
    while (coeffs_[tail - 1] == 0) --tail;
    if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    coeffs_.resize(tail - lead);
    min_exp_ += static_cast<int>(lead);
}

const Int& LaurentPoly::coeff(int exp) const {
    static const Int zero = 0;
    if (is_zero() || exp < min_exp_ || exp > max_exp()) return zero;
    return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (Int& c : out.coeffs_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    const int lo = std::min(min_exp_, other.min_exp_);
    const int hi = std::max(max_exp(), other.max_exp());
    LaurentPoly out;
    out.min_exp_ = lo;
    out.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[static_cast<std::size_t>(min_exp_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        out.coeffs_[static_cast<std::size_t>(other.min_exp_ - lo) + i] += other.coeffs_[i];
    out.trim();
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (is_zero() || other.is_zero()) return LaurentPoly();
    LaurentPoly out;
    out.min_exp_ = min_exp_ + other.min_exp_;
    out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    out.trim();
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.min_exp_ += shift;
    return out;
}

namespace {

template <class Real>
std::complex<Real> horner(const std::vector<Int>& coeffs, int min_exp, std::complex<Real> eta) {
    if (coeffs.empty()) return std::complex<Real>(0);
    if (eta == std::complex<Real>(0) && min_exp < 0)
        throw std::domain_error("Laurent polynomial with negative exponents cannot be evaluated at 0");
    std::complex<Real> acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * eta + std::complex<Real>(it->template convert_to<Real>());
    return acc * pow_int(eta, min_exp);
}

}  // namespace

std::complex<double> LaurentPoly::eval(std::complex<double> eta) const {
    return horner(coeffs_, min_exp_, eta);
}

std::complex<long double> LaurentPoly::eval_precise(std::complex<long double> eta) const {
    return horner(coeffs_, min_exp_, eta);
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = min_exp_; e <= max_exp(); ++e) {
        const Int& c = coeff(e);
        if (c == 0) continue;
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? '-' : '+');
        }
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag;
            out << 't';
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("Laurent division by zero");
    if (a.is_zero()) return LaurentPoly();
    // Strip the monomial parts; the remaining division happens in Z[t] from
    // the top coefficient down and must terminate with remainder zero.
    const int quot_shift = a.min_exp() - b.min_exp();
    const int deg_a = a.max_exp() - a.min_exp();
    const int deg_b = b.max_exp() - b.min_exp();
    if (deg_a < deg_b) throw std::domain_error("inexact Laurent division");

    std::vector<Int> rem(static_cast<std::size_t>(deg_a) + 1);
    for (int i = 0; i <= deg_a; ++i) rem[static_cast<std::size_t>(i)] = a.coeff(a.min_exp() + i);
    std::vector<Int> div(static_cast<std::size_t>(deg_b) + 1);
    for (int i = 0; i <= deg_b; ++i) div[static_cast<std::size_t>(i)] = b.coeff(b.min_exp() + i);

    std::vector<Int> quot(static_cast<std::size_t>(deg_a - deg_b) + 1);
    for (int d = deg_a - deg_b; d >= 0; --d) {
        Int& lead = rem[static_cast<std::size_t>(d + deg_b)];
        if (lead % div.back() != 0) throw std::domain_error("inexact Laurent division");
        Int q = lead / div.back();
        quot[static_cast<std::size_t>(d)] = q;
        if (q != 0)
            for (int i = 0; i <= deg_b; ++i)
                rem[static_cast<std::size_t>(d + i)] -= q * div[static_cast<std::size_t>(i)];
    }
    for (const Int& r : rem)
        if (r != 0) throw std::domain_error("inexact Laurent division");

    LaurentPoly out;
    for (int d = 0; d < static_cast<int>(quot.size()); ++d)
        out += LaurentPoly::monomial(quot[static_cast<std::size_t>(d)], quot_shift + d);
    return out;
}

LaurentPoly exact_div(const LaurentPoly& a, const Int& k) {
    if (k == 0) throw std::domain_error("division by zero scalar");
    LaurentPoly out;
    for (int e = a.min_exp(); !a.is_zero() && e <= a.max_exp(); ++e) {
        const Int& c = a.coeff(e);
        if (c == 0) continue;
        if (c % k != 0) throw std::domain_error("inexact scalar division");
        out += LaurentPoly::monomial(c / k, e);
    }
    return out;
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("division by zero");
    if (a % b != 0) throw std::domain_error("inexact integer division");
    return a / b;
}

}  // namespace burau
