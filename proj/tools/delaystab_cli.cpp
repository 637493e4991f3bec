// delaystab: command-line front end for the stability library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delaystab/dpartition.hpp"
#include "delaystab/errors.hpp"
#include "delaystab/io.hpp"
#include "delaystab/kernels.hpp"
#include "delaystab/roots.hpp"
#include "delaystab/stability.hpp"
#include "delaystab/verify.hpp"

namespace {

using namespace dstab;
using ojson = nlohmann::ordered_json;
using cplx = std::complex<double>;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;

cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {io::parse_double(s), 0.0};
    return {io::parse_double(s.substr(0, comma)), io::parse_double(s.substr(comma + 1))};
}

std::pair<double, double> parse_pair(const std::string& s, const char* what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError(what, "expected lo,hi");
    return {io::parse_double(s.substr(0, comma)), io::parse_double(s.substr(comma + 1))};
}

ojson num(double x) {
    if (std::isfinite(x)) return x;
    return io::format_double(x);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + path);
    out << text;
}

struct Args {
    double a = 0.0;
    std::string a_text = "0";
    std::string w = "0,0";
    double tau = 1.0;
    int n = 4;
    std::string format = "json";
    std::string kind = "hayes";
    std::optional<double> phi;
    std::optional<double> psi;
    std::string label = "c";
    std::size_t samples = 64;
    double sigma_min = 0.0;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    bool no_sim = false;
    std::string a_range = "-3,3";
    std::string rho_range = "0,3";
    std::string resolution = "64";
    std::string output;
    std::string isa = "auto";
};

int cmd_classify(const Args& g) {
    const CoefficientPoint p{g.a, parse_complex(g.w)};
    const RegionClass r = classify(p);
    ojson j;
    j["region"] = std::string(region_tag(r));
    const DelayWindow win = delay_window(p);
    if (std::holds_alternative<AllPositive>(win)) {
        j["window"] = "all";
    } else if (std::holds_alternative<EmptyWindow>(win)) {
        j["window"] = "empty";
    } else {
        j["window"] = "bounded";
        j["tau_c"] = num(std::get<UpTo>(win).tau_c);
    }
    j["schema_version"] = io::kSchemaVersion;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_tauc(const Args& g) {
    const CoefficientPoint p{g.a, parse_complex(g.w)};
    const double tc = critical_delay(p);
    const CriticalDelayForms f = critical_delay_forms(p);
    const MatsunagaParams m = matsunaga_params(p.w);
    ojson j;
    j["tau_c"] = num(tc);
    j["arccos_form"] = num(f.arccos_form);
    j["arccot_form"] = num(f.arccot_form);
    j["matsunaga"] = {{"b", num(m.b)}, {"theta", num(m.theta)}, {"value", num(matsunaga_delay(m.b, m.theta, p.a))}};
    j["schema_version"] = io::kSchemaVersion;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_ladder(const Args& g) {
    const CoefficientPoint p{g.a, parse_complex(g.w)};
    const TauLadder lad = tau_ladder(p, g.n);
    emit(g.format == "csv" ? io::ladder_to_csv(lad) : io::ladder_to_json(p, lad), g.output);
    return 0;
}

int cmd_curve(const Args& g) {
    BoundaryCurve c;
    if (g.kind == "hayes") {
        c = hayes_curve(g.tau, g.samples);
    } else if (g.kind == "sakata") {
        if (!g.phi) throw CLI::ValidationError("--phi", "required for --kind sakata");
        c = sakata_curve(*g.phi, g.tau, g.samples);
    } else {
        if (!g.psi) throw CLI::ValidationError("--psi", "required for --kind gamma");
        c = gamma_curve(CurveLabel::parse(g.label), *g.psi, g.tau, g.samples);
    }
    emit(g.format == "json" ? io::curve_to_json(c) : io::curve_to_csv(c), g.output);
    return 0;
}

int cmd_roots(const Args& g) {
    const CharParams p{parse_complex(g.a_text), parse_complex(g.w), g.tau};
    emit(io::roots_to_json(p, g.sigma_min, roots_right_of(p, g.sigma_min)), g.output);
    return 0;
}

int cmd_verify(const Args& g) {
    const VerifyReport r = run_verification(g.seed, g.count, !g.no_sim);
    emit(verify_report_json(g.seed, r), g.output);
    return r.agree() ? 0 : kExitNumerical;
}

int cmd_scan(const Args& g) {
    if (!g.psi) throw CLI::ValidationError("--psi", "required");
    const auto [a_lo, a_hi] = parse_pair(g.a_range, "--a-range");
    const auto [r_lo, r_hi] = parse_pair(g.rho_range, "--rho-range");
    if (!(a_lo < a_hi) || !(r_lo < r_hi) || r_lo < 0.0) throw DomainError("scan: ranges must be non-degenerate, rho >= 0");
    if (!(*g.psi > -std::numbers::pi && *g.psi <= std::numbers::pi)) throw DomainError("scan: psi must lie in (-pi, pi]");
    if (!(g.tau > 0.0)) throw DomainError("scan: tau must be positive");
    std::size_t na = 0, nr = 0;
    {
        const auto comma = g.resolution.find(',');
        try {
            na = std::stoul(g.resolution.substr(0, comma));
            nr = comma == std::string::npos ? na : std::stoul(g.resolution.substr(comma + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--resolution", "expected n or n,m");
        }
    }
    if (na < 2 || nr < 2) throw DomainError("scan: resolution must be >= 2");
    std::vector<double> a(na * nr), rho(na * nr), tc(na * nr);
    std::vector<std::uint8_t> st(na * nr);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nr; ++j) {
            a[i * nr + j] = a_lo + (a_hi - a_lo) * static_cast<double>(i) / static_cast<double>(na - 1);
            rho[i * nr + j] = r_lo + (r_hi - r_lo) * static_cast<double>(j) / static_cast<double>(nr - 1);
        }
    }
    kernels::stability_scan(a, rho, *g.psi, g.tau, st, tc);
    std::vector<io::ScanRow> rows(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) rows[k] = {a[k], rho[k], st[k] != 0, tc[k]};
    emit(io::scan_to_csv(rows), g.output);
    return 0;
}

void select_isa(const std::string& name) {
    if (name == "auto") return;
    for (auto isa : {kernels::Isa::Scalar, kernels::Isa::Simd128, kernels::Isa::Avx2}) {
        if (name == kernels::isa_name(isa)) {
            kernels::set_active_isa(isa);
            return;
        }
    }
    throw CLI::ValidationError("--isa", "unknown kernel variant: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    Args g;
    CLI::App app{"Stability analysis of x'(t) = -a x(t) + w x(t - tau)"};
    app.require_subcommand(1);
    app.add_option("--isa", g.isa, "Kernel variant: auto|scalar|simd128|avx2");

    auto add_aw = [&g](CLI::App* s) {
        s->add_option("--a", g.a, "Real coefficient a")->required();
        s->add_option("--w", g.w, "Complex coefficient w as re,im")->required();
    };
    auto add_out = [&g](CLI::App* s) { s->add_option("--output", g.output, "Write to file instead of stdout"); };

    auto* classify_cmd = app.add_subcommand("classify", "Region I/II/III and delay window");
    add_aw(classify_cmd);

    auto* tauc_cmd = app.add_subcommand("tauc", "Critical delay in all closed forms");
    add_aw(tauc_cmd);

    auto* ladder_cmd = app.add_subcommand("ladder", "Imaginary-axis crossing delays");
    add_aw(ladder_cmd);
    ladder_cmd->add_option("--n", g.n, "Largest ladder index")->check(CLI::PositiveNumber);
    ladder_cmd->add_option("--format", g.format)->check(CLI::IsMember({"json", "csv"}));
    add_out(ladder_cmd);

    auto* curve_cmd = app.add_subcommand("curve", "Stability boundary or Gamma curve samples");
    curve_cmd->add_option("--kind", g.kind)->check(CLI::IsMember({"hayes", "sakata", "gamma"}));
    curve_cmd->add_option("--phi", g.phi, "|Arg w| for sakata");
    curve_cmd->add_option("--psi", g.psi, "Arg w for gamma");
    curve_cmd->add_option("--tau", g.tau);
    curve_cmd->add_option("--label", g.label, "c or a nonzero integer");
    curve_cmd->add_option("--samples", g.samples)->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    curve_cmd->add_option("--format", g.format)->check(CLI::IsMember({"json", "csv"}));
    add_out(curve_cmd);

    auto* roots_cmd = app.add_subcommand("roots", "Characteristic roots right of sigma-min");
    roots_cmd->add_option("--a", g.a_text, "Coefficient a as re[,im]")->required();
    roots_cmd->add_option("--w", g.w, "Coefficient w as re,im")->required();
    roots_cmd->add_option("--tau", g.tau)->required();
    roots_cmd->add_option("--sigma-min", g.sigma_min);
    add_out(roots_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against numerical oracles");
    verify_cmd->add_option("--seed", g.seed);
    verify_cmd->add_option("--count", g.count);
    verify_cmd->add_flag("--no-sim", g.no_sim, "Skip the simulator");
    add_out(verify_cmd);

    auto* scan_cmd = app.add_subcommand("scan", "Stability over an (a, rho) grid at fixed Arg w and tau");
    scan_cmd->add_option("--a-range", g.a_range, "lo,hi");
    scan_cmd->add_option("--rho-range", g.rho_range, "lo,hi");
    scan_cmd->add_option("--psi", g.psi)->required();
    scan_cmd->add_option("--tau", g.tau)->required();
    scan_cmd->add_option("--resolution", g.resolution, "n or n,m");
    add_out(scan_cmd);

    // ladder defaults to JSON, curve to CSV
    curve_cmd->preparse_callback([&g](std::size_t) { g.format = "csv"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        select_isa(g.isa);
        if (*classify_cmd) return cmd_classify(g);
        if (*tauc_cmd) return cmd_tauc(g);
        if (*ladder_cmd) return cmd_ladder(g);
        if (*curve_cmd) return cmd_curve(g);
        if (*roots_cmd) return cmd_roots(g);
        if (*verify_cmd) return cmd_verify(g);
        if (*scan_cmd) return cmd_scan(g);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
