#include "delaystab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "delaystab/errors.hpp"

namespace dstab::io {
namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

ojson number(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);  // JSON has no NaN/inf literals
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string& s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    // from_chars rejects a leading '+'
    if (last - first > 1 && *first == '+' && first[1] != '-') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ptr != last || first == last) throw DomainError("not a number: '" + s + "'");
    if (ec == std::errc::result_out_of_range) {
        // underflow (subnormal or zero) is fine, overflow is not
        v = std::strtod(std::string(first, last).c_str(), nullptr);
        if (!std::isfinite(v)) throw DomainError("out of range: '" + s + "'");
    } else if (ec != std::errc()) {
        throw DomainError("not a number: '" + s + "'");
    }
    return v;
}

std::string curve_kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::Hayes: return "hayes";
        case CurveKind::Sakata: return "sakata";
        case CurveKind::Gamma: return "gamma";
    }
    return "?";
}

std::string crossing_kind_name(CrossingKind k) {
    switch (k) {
        case CrossingKind::Critical: return "critical";
        case CrossingKind::Plus: return "plus";
        case CrossingKind::Minus: return "minus";
    }
    return "?";
}

std::string curve_to_csv(const BoundaryCurve& c) {
    std::string out = "param,a,rho,w_re,w_im\n";
    for (const auto& s : c.samples) {
        const auto w = c.w_of(s);
        out += format_double(s.param) + ',' + format_double(s.a) + ',' + format_double(s.rho) + ',' +
               format_double(w.real()) + ',' + format_double(w.imag()) + '\n';
    }
    return out;
}

BoundaryCurve curve_from_csv(const std::string& text, const BoundaryCurve& meta) {
    BoundaryCurve c = meta;
    c.samples.clear();
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "param,a,rho,w_re,w_im") throw DomainError("curve CSV: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 5) throw DomainError("curve CSV: expected 5 fields");
        c.samples.push_back({parse_double(f[0]), parse_double(f[1]), parse_double(f[2])});
    }
    return c;
}

std::string curve_to_json(const BoundaryCurve& c) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = curve_kind_name(c.kind);
    if (c.label) j["label"] = c.label->str();
    j["psi"] = number(c.psi);
    j["tau"] = number(c.tau);
    if (c.fold_index) j["fold_index"] = *c.fold_index;
    ojson samples = ojson::array();
    for (const auto& s : c.samples) {
        samples.push_back({{"param", number(s.param)}, {"a", number(s.a)}, {"rho", number(s.rho)}});
    }
    j["samples"] = std::move(samples);
    return j.dump(2) + "\n";
}

std::string ladder_to_csv(const TauLadder& l) {
    std::string out = "entry,tau,label,n,omega\n";
    for (std::size_t i = 0; i < l.entries.size(); ++i) {
        for (const auto& lab : l.entries[i].labels) {
            out += std::to_string(i) + ',' + format_double(l.entries[i].tau) + ',' + crossing_kind_name(lab.kind) +
                   ',' + std::to_string(lab.n) + ',' + format_double(lab.omega) + '\n';
        }
    }
    return out;
}

std::string ladder_to_json(const CoefficientPoint& p, const TauLadder& l) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["a"] = number(p.a);
    j["w"] = {number(p.w.real()), number(p.w.imag())};
    ojson entries = ojson::array();
    for (const auto& e : l.entries) {
        ojson labels = ojson::array();
        for (const auto& lab : e.labels) {
            labels.push_back({{"kind", crossing_kind_name(lab.kind)}, {"n", lab.n}, {"omega", number(lab.omega)}});
        }
        entries.push_back({{"tau", number(e.tau)}, {"coincident", e.coincident()}, {"labels", std::move(labels)}});
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string roots_to_json(const CharParams& p, double sigma_min, const RootSet& r) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["a"] = {number(p.a.real()), number(p.a.imag())};
    j["w"] = {number(p.w.real()), number(p.w.imag())};
    j["tau"] = number(p.tau);
    j["sigma_min"] = number(sigma_min);
    ojson roots = ojson::array();
    for (const auto& e : r.roots) {
        roots.push_back({{"re", number(e.z.real())},
                         {"im", number(e.z.imag())},
                         {"branch", e.branch},
                         {"residual", number(e.residual)},
                         {"merged", e.merged}});
    }
    j["roots"] = std::move(roots);
    return j.dump(2) + "\n";
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "a,rho,stable,tau_c\n";
    for (const auto& r : rows) {
        out += format_double(r.a) + ',' + format_double(r.rho) + ',' + (r.stable ? "1" : "0") + ',' +
               format_double(r.tau_c) + '\n';
    }
    return out;
}

}  // namespace dstab::io
