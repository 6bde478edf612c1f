// Command-line front end: exact Burau matrices, unit-circle spectral scans,
// root-of-unity sharpness reports, cyclic-cover verification, and sharp-set
// prediction from declared reduction data.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "burau/braid.hpp"
#include "burau/burau.hpp"
#include "burau/cover.hpp"
#include "burau/reduction.hpp"
#include "burau/serialize.hpp"
#include "burau/spectral.hpp"

namespace {

using namespace burau;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct Options {
    int strings = 0;
    std::string word_text;
    std::string word_file;
    std::string format;
    std::string out_path;

    int resolution = 0;
    bool with_eigenvalues = false;
    int cover_order = 0;
    int k_max = 0;
    double lambda = 0.0;
    double sharp_tol = 1e-6;
    double cover_tol = 1e-8;
    std::string reduction_path;
};

BraidWord word_from_options(const Options& opt) {
    if (opt.strings < 2) throw std::invalid_argument("--n must be at least 2");
    std::string text = opt.word_text;
    if (!opt.word_file.empty()) {
        std::ifstream in(opt.word_file);
        if (!in) throw std::runtime_error("cannot open word file: " + opt.word_file);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return parse_braid_word(text, opt.strings);
}

void emit(const Options& opt, const std::string& contents) {
    if (opt.out_path.empty())
        std::cout << contents;
    else
        write_file_atomic(opt.out_path, contents);
}

std::string render_json(const Options& opt, const nlohmann::json& doc) {
    return (opt.format == "pretty" ? doc.dump(2) : doc.dump()) + "\n";
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
    for (const char* name : allowed)
        if (opt.format == name) return;
    throw std::invalid_argument("--format " + opt.format + " is not supported by this subcommand");
}

int run_burau(const Options& opt) {
    require_format(opt, {"pretty", "json"});
    const LaurentMatrix matrix = burau_matrix(word_from_options(opt));
    emit(opt, opt.format == "json" ? render_json(opt, to_json(matrix)) : pretty_matrix(matrix));
    return kExitOk;
}

int run_charpoly(const Options& opt) {
    require_format(opt, {"pretty", "json"});
    const BivariatePoly chi = char_poly(burau_matrix(word_from_options(opt)));
    emit(opt, opt.format == "json" ? render_json(opt, to_json(chi)) : chi.str() + "\n");
    return kExitOk;
}

int run_scan(const Options& opt) {
    require_format(opt, {"csv"});
    const SpectralScan result = scan(word_from_options(opt), opt.resolution);
    emit(opt, scan_to_csv(result, opt.with_eigenvalues));
    return kExitOk;
}

int run_unity(const Options& opt) {
    require_format(opt, {"json", "pretty"});
    const BraidWord word = word_from_options(opt);
    const auto slots = unity_spectrum(word, opt.cover_order);
    emit(opt, render_json(opt, unity_to_json(slots, opt.cover_order, word.strings - 1)));
    return kExitOk;
}

int run_sharp(const Options& opt) {
    require_format(opt, {"json", "pretty"});
    const SharpnessReport report = sharpness(word_from_options(opt), opt.lambda, opt.k_max, opt.sharp_tol);
    emit(opt, render_json(opt, to_json(report)));
    return kExitOk;
}

int run_cover_check(const Options& opt) {
    require_format(opt, {"json", "pretty"});
    const LaurentMatrix matrix = burau_matrix(word_from_options(opt));
    const CoverVerdict verdict = verify_direct_sum(matrix, opt.cover_order, opt.cover_tol);
    nlohmann::json doc = to_json(verdict);
    doc["shift_commutes"] = shift_commutation_check(build_cover_action(matrix, opt.cover_order));
    emit(opt, render_json(opt, doc));
    return kExitOk;
}

int run_predict(const Options& opt) {
    require_format(opt, {"json", "pretty"});
    const ReductionData data = load_reduction_file(opt.reduction_path);

    nlohmann::json components = nlohmann::json::array();
    bool consistent = true;
    for (std::size_t i = 0; i < data.components.size(); ++i) {
        const ComponentData& c = data.components[i];
        const EphCheck eph = euler_poincare_check(c);
        consistent = consistent && eph.pass;
        nlohmann::json entry{{"index", i},
                             {"ell", c.cycle_length},
                             {"is_pA", c.is_pseudo_anosov},
                             {"is_max_entropy", c.is_max_entropy},
                             {"eph_pass", eph.pass},
                             {"eph_residual", json_real(eph.residual)}};
        if (c.is_pseudo_anosov) {
            entry["a"] = enclosed_puncture_gcd(c);
            const Orientability orient = burau_orientable(c);
            entry["orientable"] = orient.orientable;
            if (orient.orientable) {
                entry["u"] = orient.two_power;
                entry["orientable_lift_multiples_of"] = 1 << (orient.two_power + 1);
            }
        }
        components.push_back(std::move(entry));
    }
    if (!consistent) {
        std::cerr << "reduction data is inconsistent: Euler-Poincare-Hopf check failed\n"
                  << components.dump(2) << "\n";
        return kExitComputation;
    }

    const SharpPrediction prediction = predict_sharp_set(data);
    nlohmann::json sharp = nlohmann::json::array();
    for (const Fraction& f : prediction.roots) sharp.push_back(nlohmann::json{{"j", f.num}, {"k", f.den}});

    nlohmann::json doc{{"n", data.strings}, {"components", std::move(components)}, {"sharp", std::move(sharp)}};
    if (prediction.minimal_k) {
        doc["minimal_k"] = *prediction.minimal_k;
        const KBoundReport bound = k_bound_check(data);
        doc["k_bound"] = nlohmann::json{{"bound", bound.bound},
                                        {"predicted_minimal_k", bound.predicted_minimal_k},
                                        {"within_bound", bound.within_bound},
                                        {"attains", bound.attains}};
    } else {
        doc["minimal_k"] = nullptr;
    }
    emit(opt, render_json(opt, doc));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burau entropy-estimate toolkit for braids"};
    app.fallthrough();
    Options opt;

    app.add_option("--n", opt.strings, "number of braid strings (generators are 1..n-1)");
    auto* word_opt = app.add_option("--word", opt.word_text, "braid word, e.g. \"1 -2\" or \"b[1,3,3]^-1\"");
    auto* file_opt = app.add_option("--word-file", opt.word_file, "file containing the braid word");
    word_opt->excludes(file_opt);
    app.add_option("--format", opt.format, "output format: csv | json | pretty");
    app.add_option("--out", opt.out_path, "output path (written atomically); stdout when absent");

    int (*handler)(const Options&) = nullptr;
    std::string default_format;

    auto* burau_cmd = app.add_subcommand("burau", "print the exact reduced Burau matrix");
    burau_cmd->callback([&] { handler = run_burau; default_format = "pretty"; });

    auto* charpoly_cmd = app.add_subcommand("charpoly", "print the exact characteristic polynomial");
    charpoly_cmd->callback([&] { handler = run_charpoly; default_format = "pretty"; });

    auto* scan_cmd = app.add_subcommand("scan", "sample spec(B(e^{2 pi i theta})) on a uniform grid");
    scan_cmd->add_option("--resolution", opt.resolution, "number of grid points on [0,1)")->required();
    scan_cmd->add_flag("--eigenvalues", opt.with_eigenvalues, "include eigenvalue columns");
    scan_cmd->callback([&] { handler = run_scan; default_format = "csv"; });

    auto* unity_cmd = app.add_subcommand("unity", "eigenvalues at all k-th roots of unity");
    unity_cmd->add_option("--k", opt.cover_order, "root-of-unity order")->required()->check(CLI::PositiveNumber);
    unity_cmd->callback([&] { handler = run_unity; default_format = "json"; });

    auto* sharp_cmd = app.add_subcommand("sharp", "roots of unity where the estimate reaches lambda");
    sharp_cmd->add_option("--lambda", opt.lambda, "growth rate to compare against")->required();
    sharp_cmd->add_option("--kmax", opt.k_max, "largest root-of-unity order scanned")->required();
    sharp_cmd->add_option("--tol", opt.sharp_tol, "absolute tolerance on the spectral radius");
    sharp_cmd->callback([&] { handler = run_sharp; default_format = "json"; });

    auto* cover_cmd = app.add_subcommand("cover-check", "verify the cyclic-cover direct-sum spectrum");
    cover_cmd->add_option("--k", opt.cover_order, "cover order")->required()->check(CLI::PositiveNumber);
    cover_cmd->add_option("--tol", opt.cover_tol, "eigenvalue matching tolerance");
    cover_cmd->callback([&] { handler = run_cover_check; default_format = "json"; });

    auto* predict_cmd = app.add_subcommand("predict", "predict the sharp set from reduction data");
    predict_cmd->add_option("--reduction", opt.reduction_path, "reduction-data JSON file")->required();
    predict_cmd->callback([&] { handler = run_predict; default_format = "json"; });

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (opt.format.empty()) opt.format = default_format;

    try {
        return handler(opt);
    } catch (const ParseError& e) {
        std::cerr << "braid word error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "braid word error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
