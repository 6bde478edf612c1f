#include "burau/matrix.hpp"

#include <map>
#include <sstream>

namespace burau {

std::string BivariatePoly::str() const {
    std::ostringstream out;
    bool first = true;
    for (int p = x_degree(); p >= 0; --p) {
        const LaurentPoly& c = coeff(p);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        const bool single_term = cs.find('+', 1) == std::string::npos && cs.find('-', 1) == std::string::npos;
        if (!first) out << '+';
        first = false;
        if (p == 0) {
            out << (single_term ? cs : "(" + cs + ")");
            continue;
        }
        if (cs == "1") {
        } else if (cs == "-1") {
            out << '-';
        } else {
            out << (single_term ? cs : "(" + cs + ")");
        }
        out << 'x';
        if (p != 1) out << '^' << p;
    }
    if (first) out << '0';
    return out.str();
}

BivariatePoly char_poly(const LaurentMatrix& m) {
    const int n = m.dim();
    std::vector<LaurentPoly> coeff_by_drop(static_cast<std::size_t>(n) + 1);
    coeff_by_drop[0] = LaurentPoly(1);

    LaurentMatrix power = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            LaurentMatrix shifted = power;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += coeff_by_drop[static_cast<std::size_t>(k - 1)];
            power = m * shifted;
        }
        coeff_by_drop[static_cast<std::size_t>(k)] = exact_div(LaurentPoly(0) - power.trace(), Int(k));
    }

    std::vector<LaurentPoly> by_x_power(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) by_x_power[static_cast<std::size_t>(n - k)] = coeff_by_drop[static_cast<std::size_t>(k)];
    return BivariatePoly(std::move(by_x_power));
}

std::vector<MatrixTerm> decompose(const LaurentMatrix& m) {
    const int n = m.dim();
    std::map<int, IntMatrix> terms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LaurentPoly& p = m.at(i, j);
            if (p.is_zero()) continue;
            for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
                if (p.coeff(e) == 0) continue;
                auto [it, _] = terms.try_emplace(e, IntMatrix(n));
                it->second.at(i, j) = p.coeff(e);
            }
        }
    std::vector<MatrixTerm> out;
    out.reserve(terms.size());
    for (auto& [exp, coeff] : terms) out.push_back(MatrixTerm{exp, std::move(coeff)});
    return out;
}

LaurentMatrix recompose(const std::vector<MatrixTerm>& terms, int dim) {
    LaurentMatrix out(dim);
    for (const MatrixTerm& term : terms)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (term.coeff.at(i, j) != 0)
                    out.at(i, j) += LaurentPoly::monomial(term.coeff.at(i, j), term.exp);
    return out;
}

Eigen::MatrixXcd substitute(const LaurentMatrix& m, std::complex<double> eta) {
    if (eta == std::complex<double>(0.0, 0.0))
        throw std::invalid_argument("substitution point must be nonzero");
    const int n = m.dim();
    Eigen::MatrixXcd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m.at(i, j).eval(eta);
    return out;
}

}  // namespace burau
