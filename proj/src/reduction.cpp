#include "burau/reduction.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace burau {

namespace {

void validate(const ReductionData& data) {
    if (data.strings < 2) throw std::runtime_error("reduction data needs at least 2 strings");
    long direct_punctures = 0;
    for (const ComponentData& c : data.components) {
        if (c.cycle_length < 1) throw std::runtime_error("component cycle length must be positive");
        if (c.genus < 0) throw std::runtime_error("component genus must be nonnegative");
        for (const SingularityDatum& s : c.boundary) {
            if (s.order < 1 || s.enclosed < 1)
                throw std::runtime_error("boundary singularities need kappa >= 1 and m >= 1");
        }
        for (const SingularityDatum& s : c.interior)
            if (s.order < 1) throw std::runtime_error("interior singularities need kappa >= 1");
        if (c.is_pseudo_anosov && c.boundary.size() < 3)
            throw std::runtime_error("a pseudo-Anosov component needs at least 3 boundary items");
        // Bare punctures (m = 1) are owned by exactly one piece each.
        for (const SingularityDatum& s : c.boundary)
            if (s.enclosed == 1) direct_punctures += c.cycle_length;
    }
    if (direct_punctures > data.strings)
        throw std::runtime_error("components enclose more punctures than the braid has strings");
}

}  // namespace

long enclosed_puncture_gcd(const ComponentData& component) {
    if (component.boundary.empty())
        throw std::invalid_argument("enclosure gcd needs at least one boundary item");
    long g = 0;
    for (const SingularityDatum& s : component.boundary) g = std::gcd(g, static_cast<long>(s.enclosed));
    return g;
}

EphCheck euler_poincare_check(const ComponentData& component) {
    // Work with doubled values so the halves stay exact.
    long lhs2 = 4 - 4 * static_cast<long>(component.genus);
    long rhs2 = 0;
    for (const SingularityDatum& s : component.boundary) rhs2 += 2 - s.order;
    for (const SingularityDatum& s : component.interior) rhs2 += 2 - s.order;
    return EphCheck{lhs2 == rhs2, static_cast<double>(lhs2 - rhs2) / 2.0};
}

Orientability burau_orientable(const ComponentData& component) {
    if (!component.is_pseudo_anosov)
        throw std::invalid_argument("orientability is defined for pseudo-Anosov components");
    const long a = enclosed_puncture_gcd(component);
    int two_power = 0;
    for (long v = a; v % 2 == 0; v /= 2) ++two_power;

    for (const SingularityDatum& s : component.interior)
        if (s.order % 2 != 0) return Orientability{false, two_power};
    for (const SingularityDatum& s : component.boundary)
        if ((s.enclosed / a) % 2 != s.order % 2) return Orientability{false, two_power};
    return Orientability{true, two_power};
}

SharpPrediction predict_sharp_set(const ReductionData& data) {
    SharpPrediction prediction;
    for (const ComponentData& c : data.components) {
        if (!c.is_pseudo_anosov || !c.is_max_entropy) continue;
        const Orientability orient = burau_orientable(c);
        if (!orient.orientable) continue;
        const long a = enclosed_puncture_gcd(c);
        for (long j = 0; j < a; ++j) prediction.roots.insert(Fraction::reduced(2 * j + 1, 2 * a));
    }
    for (const Fraction& f : prediction.roots)
        if (!prediction.minimal_k || f.den < *prediction.minimal_k)
            prediction.minimal_k = static_cast<int>(f.den);
    return prediction;
}

bool sharp_at_minus_one(const std::vector<int>& puncture_orders,
                        const std::vector<int>& interior_orders) {
    for (int order : puncture_orders)
        if (order % 2 == 0) return false;
    for (int order : interior_orders)
        if (order % 2 != 0) return false;
    return true;
}

KBoundReport k_bound_check(const ReductionData& data) {
    const SharpPrediction prediction = predict_sharp_set(data);
    if (!prediction.minimal_k)
        throw std::invalid_argument("the bound check needs a nonempty sharp prediction");
    KBoundReport report;
    report.bound = 2 * data.strings / 3;
    report.predicted_minimal_k = *prediction.minimal_k;
    report.within_bound = report.predicted_minimal_k <= report.bound;
    report.attains = report.predicted_minimal_k == report.bound;
    return report;
}

ReductionData reduction_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("reduction file is not valid JSON: ") + e.what());
    }
    try {
        ReductionData data;
        data.strings = doc.at("n").get<int>();
        for (const auto& comp : doc.at("components")) {
            ComponentData c;
            c.cycle_length = comp.at("ell").get<int>();
            c.genus = comp.at("genus").get<int>();
            c.is_pseudo_anosov = comp.at("is_pA").get<bool>();
            c.is_max_entropy = comp.at("is_max_entropy").get<bool>();
            for (const auto& item : comp.at("boundary")) {
                SingularityDatum s;
                s.enclosed = item.at("m").get<int>();
                s.order = item.at("kappa").get<int>();
                s.kind = s.enclosed == 1 ? SingularityKind::puncture : SingularityKind::deleted_disk;
                c.boundary.push_back(s);
            }
            for (const auto& kappa : comp.at("interior"))
                c.interior.push_back(SingularityDatum{SingularityKind::interior, kappa.get<int>(), 1});
            data.components.push_back(std::move(c));
        }
        validate(data);
        return data;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed reduction data: ") + e.what());
    }
}

ReductionData load_reduction_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reduction file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return reduction_from_json_text(buffer.str());
}

}  // namespace burau
