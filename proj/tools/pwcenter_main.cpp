#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pwcenter/analysis.hpp"
#include "pwcenter/errors.hpp"
#include "pwcenter/serialize.hpp"
#include "pwcenter/tolerances.hpp"

// Exit codes: 0 success (kind=none from decompose is a finding, not an
// error), 2 malformed input, 3 non-simple structure of b, 4 numeric failure.
namespace {

namespace fs = std::filesystem;
using namespace pwcenter;

struct Config {
    std::string input;
    std::string out_dir = ".";
    double quad_tol = 1e-11;
    double root_tol = 1e-10;
    double center_tol = 1e-6;
    int grid = 512;
    std::string x_range;
    bool csv = false;
    double trace_x = 0.0;
    bool has_trace = false;
    int scan_points = 201;
};

AnalysisOptions options_of(const Config& cfg) {
    AnalysisOptions opt;
    opt.flow.quad_tol = cfg.quad_tol;
    opt.flow.crossing_t = cfg.root_tol;
    opt.flow.grid_per_period = cfg.grid;
    opt.center_tol = cfg.center_tol;
    return opt;
}

std::pair<double, double> parse_range(const std::string& s) {
    const auto pos = s.find(':');
    if (pos == std::string::npos) throw std::invalid_argument("--x-range expects LO:HI");
    size_t used = 0;
    const double lo = std::stod(s.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument("--x-range expects LO:HI");
    const std::string hi_part = s.substr(pos + 1);
    const double hi = std::stod(hi_part, &used);
    if (used != hi_part.size() || !(lo < hi))
        throw std::invalid_argument("--x-range expects LO:HI with LO < HI");
    return {lo, hi};
}

void emit_report(const Config& cfg, const json& j, const std::string& name) {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    fs::create_directories(cfg.out_dir);
    write_text(cfg.out_dir + "/" + name, text);
}

int run_construct(const Config& cfg) {
    const CompositionWitness w = load_witness(cfg.input);
    const ConstructedPair pr = construct_from_witness(w);
    json j;
    j["a"] = to_json(pr.a);
    j["b"] = to_json(pr.b);
    emit_report(cfg, j, "pair.json");
    std::cout << "deg a = " << pr.a.degree() << ", deg b = " << pr.b.degree() << "\n";
    if (pr.b.is_zero(tol::coeff_trim)) {
        std::cerr << "warning: b is identically zero; the analysis pipeline rejects it\n";
        return 3;
    }
    const ZeroList zs = zeros_on_period(pr.b);
    const bool all_simple =
        !zs.empty() && std::all_of(zs.begin(), zs.end(), [](const ZeroOnPeriod& z) {
            return z.simple;
        });
    std::cout << "b zeros on [0, 2*pi): " << zs.size() << (all_simple ? ", all simple" : "")
              << "\n";
    if (!all_simple) {
        std::cerr << "warning: b lacks simple zeros; band analysis assumptions fail\n";
        return 3;
    }
    return 0;
}

int run_decompose(const Config& cfg) {
    const PairInput in = load_pair(cfg.input);
    const DecompositionOutcome out = find_common_witness(in.a, in.b);
    json j = to_json(out);
    j["config"] = {{"witness_tol", tol::witness}, {"coeff_trim", tol::coeff_trim}};
    emit_report(cfg, j, "report.json");
    return 0;
}

int run_analyze(const Config& cfg) {
    const PairInput in = load_pair(cfg.input);
    const AnalysisOptions opt = options_of(cfg);
    const ClassificationReport rep = center_classify(in.a, in.b, opt);
    json j = to_json(rep);
    j["config"] = {{"quad_tol", cfg.quad_tol},
                   {"root_tol", cfg.root_tol},
                   {"center_tol", cfg.center_tol},
                   {"grid", cfg.grid},
                   {"witness_tol", tol::witness},
                   {"outer_tol", tol::outer},
                   {"limit_cycle_amplitude", tol::lc_amplitude},
                   {"hypothesis_gap", tol::hyp_gap}};
    emit_report(cfg, j, "report.json");

    if (cfg.csv || !cfg.x_range.empty()) {
        std::vector<DisplacementSample> scan = rep.numeric.scan;
        if (!cfg.x_range.empty()) {
            const auto [lo, hi] = parse_range(cfg.x_range);
            const PwlOde ode = canonicalize(in.a, in.b);
            for (int i = 0; i < cfg.scan_points; ++i) {
                const double x = lo + (hi - lo) * i / (cfg.scan_points - 1);
                scan.push_back({x, displacement(ode, x, opt.flow)});
            }
        }
        write_text(cfg.out_dir + "/displacement.csv", displacement_csv(scan));
    }
    if (cfg.has_trace) {
        const PwlOde ode = canonicalize(in.a, in.b);
        FlowOptions fo = opt.flow;
        fo.keep_samples = true;
        const Trace tr = integrate(ode, 0.0, cfg.trace_x, two_pi, fo);
        write_text(cfg.out_dir + "/trace.csv", trace_csv(tr));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"center analysis of x' = a(t)|x| + b(t) with trig-polynomial coefficients"};
    app.require_subcommand(1);
    Config cfg;

    CLI::App* construct = app.add_subcommand(
        "construct", "build the coefficient pair (a, b) from a witness file {p, q, h}");
    construct->add_option("input", cfg.input, "witness JSON file")->required();
    construct->add_option("--out", cfg.out_dir, "output directory (pair.json)");

    CLI::App* decompose =
        app.add_subcommand("decompose", "search a pair file {a, b} for a composition witness");
    decompose->add_option("input", cfg.input, "pair JSON file")->required();
    decompose->add_option("--out", cfg.out_dir, "output directory (report.json)");

    CLI::App* analyze = app.add_subcommand(
        "analyze", "full band/hypothesis/displacement/witness classification of a pair file");
    analyze->add_option("input", cfg.input, "pair JSON file")->required();
    analyze->add_option("--out", cfg.out_dir, "output directory (report.json, CSV)");
    analyze->add_option("--quad-tol", cfg.quad_tol, "absolute quadrature tolerance")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--root-tol", cfg.root_tol, "crossing-time bisection tolerance")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--center-tol", cfg.center_tol, "max |displacement| accepted as center")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--grid", cfg.grid, "crossing-bracketing grid points per period")
        ->check(CLI::Range(3, 1 << 20));
    analyze->add_option("--x-range", cfg.x_range,
                        "LO:HI extra uniform displacement scan on the canonical section");
    analyze->add_option("--scan-points", cfg.scan_points, "points in the --x-range scan")
        ->check(CLI::Range(2, 1 << 20));
    analyze->add_flag("--csv", cfg.csv, "write displacement.csv");
    CLI::Option* trace_opt = analyze->add_option(
        "--trace", cfg.trace_x, "write trace.csv for this initial value on the canonical section");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.has_trace = trace_opt->count() > 0;

    try {
        if (construct->parsed()) return run_construct(cfg);
        if (decompose->parsed()) return run_decompose(cfg);
        if (analyze->parsed()) return run_analyze(cfg);
        return 2;
    } catch (const pwcenter::NonSimpleBError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pwcenter::TangencyAmbiguousError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const pwcenter::InconsistentBandError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
