#include "burau/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace burau {

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

double rounded_real(double value) { return std::strtod(format_real(value).c_str(), nullptr); }

nlohmann::json json_real(double value) { return rounded_real(value); }

namespace {

nlohmann::json coeff_to_json(const Int& value) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (value >= lo && value <= hi) return value.convert_to<long long>();
    return value.str();  // too wide for a JSON integer; emit the digits
}

}  // namespace

nlohmann::json to_json(const LaurentPoly& poly) {
    nlohmann::json obj = nlohmann::json::object();
    if (poly.is_zero()) return obj;
    for (int e = poly.min_exp(); e <= poly.max_exp(); ++e)
        if (poly.coeff(e) != 0) obj[std::to_string(e)] = coeff_to_json(poly.coeff(e));
    return obj;
}

nlohmann::json to_json(const LaurentMatrix& matrix) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < matrix.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < matrix.dim(); ++j) row.push_back(to_json(matrix.at(i, j)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"dim", matrix.dim()}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const BivariatePoly& poly) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const LaurentPoly& c : poly.coefficients()) coeffs.push_back(to_json(c));
    return nlohmann::json{{"x_degree", poly.x_degree()}, {"coefficients", std::move(coeffs)}};
}

nlohmann::json to_json(const CoverVerdict& verdict) {
    return nlohmann::json{{"k", verdict.k},
                          {"dim", verdict.dim},
                          {"max_match_distance", json_real(verdict.max_match_distance)},
                          {"pass", verdict.pass}};
}

nlohmann::json to_json(const SharpnessReport& report) {
    nlohmann::json sharp = nlohmann::json::array();
    for (const SharpRoot& root : report.sharp)
        sharp.push_back(nlohmann::json{{"j", root.root.num},
                                       {"k", root.root.den},
                                       {"value", json_real(root.value)},
                                       {"multiplicity", root.multiplicity}});
    nlohmann::json out{{"lambda", json_real(report.lambda)},
                       {"tol", json_real(report.tol)},
                       {"k_max", report.k_max},
                       {"strings", report.strings},
                       {"sharp", std::move(sharp)},
                       {"bound", report.bound}};
    if (report.minimal_k) {
        out["minimal_k"] = *report.minimal_k;
        out["minimal_k_within_bound"] = report.minimal_k_within_bound;
        out["minimal_k_twice_power_of_two"] = report.minimal_k_twice_power_of_two;
    } else {
        out["minimal_k"] = nullptr;
    }
    return out;
}

nlohmann::json unity_to_json(const std::vector<UnitySlot>& slots, int k, int dim) {
    nlohmann::json spectra = nlohmann::json::array();
    for (const UnitySlot& slot : slots) {
        nlohmann::json eigs = nlohmann::json::array();
        for (const auto& mu : slot.eigenvalues)
            eigs.push_back(nlohmann::json::array({json_real(mu.real()), json_real(mu.imag())}));
        spectra.push_back(nlohmann::json{{"j", slot.j},
                                         {"theta", json_real(static_cast<double>(slot.j) / k)},
                                         {"eta_re", json_real(slot.eta.real())},
                                         {"eta_im", json_real(slot.eta.imag())},
                                         {"eigenvalues", std::move(eigs)}});
    }
    return nlohmann::json{{"k", k}, {"dim", dim}, {"spectra", std::move(spectra)}};
}

std::string pretty_matrix(const LaurentMatrix& matrix) {
    // Column-aligned rows, entries in signed monomial-sum form.
    std::vector<std::size_t> width(static_cast<std::size_t>(matrix.dim()), 0);
    for (int j = 0; j < matrix.dim(); ++j)
        for (int i = 0; i < matrix.dim(); ++i)
            width[static_cast<std::size_t>(j)] =
                std::max(width[static_cast<std::size_t>(j)], matrix.at(i, j).str().size());
    std::ostringstream out;
    for (int i = 0; i < matrix.dim(); ++i) {
        out << "[ ";
        for (int j = 0; j < matrix.dim(); ++j) {
            const std::string entry = matrix.at(i, j).str();
            if (j) out << ", ";
            out << entry << std::string(width[static_cast<std::size_t>(j)] - entry.size(), ' ');
        }
        out << " ]\n";
    }
    return out.str();
}

std::string scan_to_csv(const SpectralScan& scan, bool include_eigenvalues) {
    std::ostringstream out;
    out << "theta,spectral_radius";
    const int dim = scan.word.strings - 1;
    if (include_eigenvalues)
        for (int i = 1; i <= dim; ++i) out << ",re_" << i << ",im_" << i;
    out << '\n';
    for (const ScanSample& sample : scan.samples) {
        out << format_real(sample.theta) << ',' << format_real(sample.radius);
        if (include_eigenvalues)
            for (const auto& mu : sample.eigenvalues)
                out << ',' << format_real(mu.real()) << ',' << format_real(mu.imag());
        out << '\n';
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file: " + tmp.string());
        out << contents;
        if (!out.flush()) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("failed writing output file: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("failed moving output into place: " + path);
    }
}

}  // namespace burau
