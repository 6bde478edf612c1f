#include "burau/polyroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace burau {

std::vector<Int> integer_char_poly(const IntMatrix& m) {
    const int n = m.dim();
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[static_cast<std::size_t>(n)] = 1;
    IntMatrix power = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix shifted = power;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += coeffs[static_cast<std::size_t>(n - k + 1)];
            power = m * shifted;
        }
        coeffs[static_cast<std::size_t>(n - k)] = exact_div(Int(0) - power.trace(), Int(k));
    }
    return coeffs;
}

namespace {

using Poly = std::vector<Int>;  // ascending coefficients

int degree(const Poly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

Poly trimmed(Poly p) {
    p.resize(static_cast<std::size_t>(std::max(degree(p), 0)) + 1);
    return p;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return Poly{Int(0)};
    Poly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = Int(static_cast<long>(i)) * p[i];
    return trimmed(std::move(out));
}

Int content(const Poly& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? Int(1) : g;
}

Poly primitive(Poly p) {
    p = trimmed(std::move(p));
    Int g = content(p);
    if (p.back() < 0) g = -g;
    for (Int& c : p) c /= g;
    return p;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trimmed(std::move(out));
}

// Exact division in Z[x]; throws if the division leaves a remainder.
Poly divide_exact(Poly num, const Poly& den) {
    num = trimmed(std::move(num));
    const int dn = degree(num), dd = degree(den);
    if (dd < 0) throw std::domain_error("polynomial division by zero");
    if (dn < 0) return Poly{Int(0)};
    if (dn < dd) throw std::domain_error("inexact polynomial division");
    Poly quot(static_cast<std::size_t>(dn - dd) + 1, Int(0));
    for (int d = dn - dd; d >= 0; --d) {
        const Int& lead = num[static_cast<std::size_t>(d + dd)];
        if (lead % den[static_cast<std::size_t>(dd)] != 0)
            throw std::domain_error("inexact polynomial division");
        const Int q = lead / den[static_cast<std::size_t>(dd)];
        quot[static_cast<std::size_t>(d)] = q;
        if (q != 0)
            for (int i = 0; i <= dd; ++i)
                num[static_cast<std::size_t>(d + i)] -= q * den[static_cast<std::size_t>(i)];
    }
    for (const Int& c : num)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return trimmed(std::move(quot));
}

// Primitive-PRS gcd in Z[x]; result is primitive with positive leading
// coefficient.
Poly gcd_poly(Poly a, Poly b) {
    a = trimmed(std::move(a));
    b = trimmed(std::move(b));
    if (degree(a) < 0) return primitive(std::move(b));
    if (degree(b) < 0) return primitive(std::move(a));
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (degree(a) < degree(b)) std::swap(a, b);
    while (true) {
        // pseudo-remainder of a by b
        Poly rem = a;
        const int db = degree(b);
        while (degree(rem) >= db && degree(rem) >= 0) {
            const int dr = degree(rem);
            const Int lead = rem[static_cast<std::size_t>(dr)];
            for (Int& c : rem) c *= b[static_cast<std::size_t>(db)];
            for (int i = 0; i <= db; ++i)
                rem[static_cast<std::size_t>(dr - db + i)] -= lead * b[static_cast<std::size_t>(i)];
            rem = trimmed(std::move(rem));
            if (degree(rem) == dr) throw std::logic_error("pseudo-division failed to reduce degree");
        }
        if (degree(rem) < 0) return primitive(std::move(b));
        a = std::move(b);
        b = primitive(std::move(rem));
    }
}

}  // namespace

std::vector<SquareFreeFactor> square_free_decomposition(const std::vector<Int>& monic_ascending) {
    Poly f = trimmed(monic_ascending);
    const int total_degree = degree(f);
    if (total_degree < 1 || f.back() != 1)
        throw std::invalid_argument("square-free decomposition expects a monic polynomial");

    std::vector<SquareFreeFactor> factors;
    // Yun's algorithm; monic input keeps every factor monic.
    Poly fp = derivative(f);
    Poly g = gcd_poly(f, fp);
    Poly w = divide_exact(f, g);
    Poly y = divide_exact(fp, g);
    Poly z = trimmed(std::move(y));
    {
        const Poly wp = derivative(w);
        Poly diff(std::max(z.size(), wp.size()), Int(0));
        for (std::size_t i = 0; i < z.size(); ++i) diff[i] += z[i];
        for (std::size_t i = 0; i < wp.size(); ++i) diff[i] -= wp[i];
        z = trimmed(std::move(diff));
    }
    int mult = 1;
    int accounted = 0;
    while (degree(w) > 0) {
        Poly a = gcd_poly(w, z);
        if (degree(a) > 0) {
            factors.push_back(SquareFreeFactor{a, mult});
            accounted += mult * degree(a);
        }
        w = divide_exact(w, a);
        Poly y_next = divide_exact(z, a);
        const Poly wp = derivative(w);
        Poly diff(std::max(y_next.size(), wp.size()), Int(0));
        for (std::size_t i = 0; i < y_next.size(); ++i) diff[i] += y_next[i];
        for (std::size_t i = 0; i < wp.size(); ++i) diff[i] -= wp[i];
        z = trimmed(std::move(diff));
        ++mult;
    }
    if (accounted != total_degree) throw std::logic_error("square-free decomposition lost degree");

    // cross-check: the factors multiply back to the input
    Poly product{Int(1)};
    for (const auto& factor : factors)
        for (int i = 0; i < factor.multiplicity; ++i) product = multiply(product, factor.coeffs);
    if (trimmed(product) != f) throw std::logic_error("square-free decomposition does not recompose");
    return factors;
}

std::vector<BigComplex> polynomial_roots(const std::vector<BigComplex>& ascending_coeffs) {
    using Real = boost::multiprecision::cpp_bin_float_100;
    std::vector<BigComplex> coeffs = ascending_coeffs;
    while (coeffs.size() > 1 && abs(coeffs.back()) == 0) coeffs.pop_back();
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) return {};

    // monic normalization
    const BigComplex lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    // Fujiwara-style inclusion radius
    Real radius = 0;
    for (int i = 0; i < deg; ++i) {
        const Real mag = abs(coeffs[static_cast<std::size_t>(i)]);
        if (mag > 0) {
            const Real candidate = pow(mag, Real(1) / (deg - i));
            radius = std::max(radius, candidate);
        }
    }
    radius = 2 * radius + 1;

    const Real pi = atan(Real(1)) * 4;
    std::vector<BigComplex> z(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        // deterministic non-symmetric start angles avoid stalling on
        // symmetric configurations
        const Real angle = 2 * pi * (Real(i) + Real(1) / 4) / deg + Real(1) / 1000;
        z[static_cast<std::size_t>(i)] = BigComplex(radius * cos(angle), radius * sin(angle));
    }

    auto eval = [&](const BigComplex& x) {
        BigComplex acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    // Matching happens at 1e-8; corrections below 1e-25 leave the roots
    // orders of magnitude past what the comparison can see.
    const Real stop(1e-25);
    for (int iter = 0; iter < 2000; ++iter) {
        Real worst = 0;
        for (int i = 0; i < deg; ++i) {
            BigComplex denom = 1;
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                BigComplex diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (abs(diff) == 0) diff = BigComplex(Real(1) / 1000000, 0);
                denom *= diff;
            }
            const BigComplex step = eval(z[static_cast<std::size_t>(i)]) / denom;
            z[static_cast<std::size_t>(i)] -= step;
            worst = std::max(worst, Real(abs(step)));
        }
        if (worst < stop) break;
    }
    return z;
}

std::complex<double> to_double(const BigComplex& z) {
    return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

}  // namespace burau
