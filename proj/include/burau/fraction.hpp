#ifndef BURAU_FRACTION_HPP
#define BURAU_FRACTION_HPP

#include <compare>
#include <numeric>
#include <string>

namespace burau {

/// A rotation angle j/k of the unit circle, stored reduced with
/// 0 <= j < k.  The angle of -1 is 1/2.
struct Fraction {
    long num = 0;
    long den = 1;

    static Fraction reduced(long j, long k) {
        const long g = std::gcd(j, k);
        return Fraction{j / g, k / g};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend auto operator<=>(const Fraction& a, const Fraction& b) {
        // Order by angle; denominators are small, no overflow concern.
        return a.num * b.den <=> b.num * a.den;
    }
    friend bool operator==(const Fraction& a, const Fraction& b) = default;
};

}  // namespace burau

#endif
