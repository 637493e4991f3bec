#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <json.hpp>
#include <random>

#include "delaystab/dpartition.hpp"
#include "delaystab/errors.hpp"
#include "delaystab/io.hpp"
#include "delaystab/verify.hpp"

using namespace dstab;
using cplx = std::complex<double>;

TEST(Io, FormatDoubleRoundTripsExactly) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t bits = rng();
        double x;
        std::memcpy(&x, &bits, sizeof x);
        if (std::isnan(x)) continue;
        const double y = io::parse_double(io::format_double(x));
        EXPECT_EQ(std::memcmp(&x, &y, sizeof x), 0) << io::format_double(x);
    }
    EXPECT_EQ(io::format_double(std::nan("")), "nan");
    EXPECT_EQ(io::format_double(-INFINITY), "-inf");
    EXPECT_EQ(io::format_double(1.5707963267948966), "1.5707963267948966");
    EXPECT_TRUE(std::isnan(io::parse_double("nan")));
    EXPECT_THROW(io::parse_double("1.0x"), DomainError);
    EXPECT_THROW(io::parse_double(""), DomainError);
}

TEST(Io, CurveCsvRoundTrip) {
    const std::vector<BoundaryCurve> curves{hayes_curve(1.0, 64), sakata_curve(2.5, 0.7, 33),
                                            gamma_curve(CurveLabel::Branch(-2), 1.0, 2.0, 50)};
    for (const auto& c : curves) {
        const std::string csv = io::curve_to_csv(c);
        EXPECT_EQ(csv.find('\r'), std::string::npos);
        EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(c.samples.size() + 1));
        const BoundaryCurve back = io::curve_from_csv(csv, c);
        ASSERT_EQ(back.samples.size(), c.samples.size());
        for (std::size_t i = 0; i < c.samples.size(); ++i) {
            EXPECT_EQ(back.samples[i].param, c.samples[i].param);
            EXPECT_EQ(back.samples[i].a, c.samples[i].a);
            EXPECT_EQ(back.samples[i].rho, c.samples[i].rho);
        }
        EXPECT_EQ(io::curve_to_csv(back), csv);
    }
    EXPECT_THROW(io::curve_from_csv("x,y\n", curves[0]), DomainError);
    EXPECT_THROW(io::curve_from_csv("param,a,rho,w_re,w_im\n1,2\n", curves[0]), DomainError);
}

TEST(Io, JsonCarriesSchemaVersion) {
    const CoefficientPoint p{0.0, -1.0};
    const auto lj = nlohmann::json::parse(io::ladder_to_json(p, tau_ladder(p, 2)));
    EXPECT_EQ(lj.at("schema_version"), io::kSchemaVersion);
    EXPECT_EQ(lj.at("entries").size(), 3u);
    EXPECT_EQ(lj.at("entries")[0].at("labels")[0].at("kind"), "critical");
    EXPECT_TRUE(lj.at("entries")[0].at("coincident").get<bool>());
    const auto cj = nlohmann::json::parse(io::curve_to_json(sakata_curve(2.5, 1.0, 10)));
    EXPECT_EQ(cj.at("schema_version"), io::kSchemaVersion);
    EXPECT_EQ(cj.at("kind"), "sakata");
    EXPECT_TRUE(cj.contains("fold_index"));
    const CharParams cp{0.0, -1.0, 2.0};
    const auto rj = nlohmann::json::parse(io::roots_to_json(cp, 0.0, roots_right_of(cp, 0.0)));
    EXPECT_EQ(rj.at("schema_version"), io::kSchemaVersion);
    EXPECT_EQ(rj.at("roots").size(), 2u);
    const auto vj = nlohmann::json::parse(verify_report_json(3, run_verification(3, 20, false)));
    EXPECT_EQ(vj.at("schema_version"), io::kSchemaVersion);
}

TEST(Io, JsonNumbersRoundTrip) {
    const CoefficientPoint p{0.123456789012345678, std::polar(2.0, 2.9)};
    const TauLadder l = tau_ladder(p, 5);
    const auto j = nlohmann::json::parse(io::ladder_to_json(p, l));
    for (std::size_t i = 0; i < l.entries.size(); ++i) {
        EXPECT_EQ(j.at("entries")[i].at("tau").get<double>(), l.entries[i].tau);
    }
    EXPECT_EQ(j.at("a").get<double>(), p.a);
}

TEST(Io, LadderCsv) {
    const std::string csv = io::ladder_to_csv(tau_ladder({0.0, cplx(0, 1)}, 1));
    EXPECT_EQ(csv,
              "entry,tau,label,n,omega\n"
              "0,3.1415926535897931,minus,1,-1\n"
              "1,6.2831853071795862,plus,1,1\n");
}

TEST(Io, ScanCsv) {
    const std::string csv = io::scan_to_csv({{0.0, 1.0, true, 1.5707963267948966}, {1.0, 0.5, true, std::nan("")}});
    EXPECT_EQ(csv, "a,rho,stable,tau_c\n0,1,1,1.5707963267948966\n1,0.5,1,nan\n");
}

TEST(Io, Deterministic) {
    EXPECT_EQ(io::curve_to_json(gamma_curve(CurveLabel::Critical(), 2.0, 1.0, 40)),
              io::curve_to_json(gamma_curve(CurveLabel::Critical(), 2.0, 1.0, 40)));
    EXPECT_EQ(verify_report_json(9, run_verification(9, 30, false)), verify_report_json(9, run_verification(9, 30, false)));
}

TEST(Verify, DrawIsSeededAndInRange) {
    const auto a = draw_points(5, 500);
    const auto b = draw_points(5, 500);
    ASSERT_EQ(a.size(), 500u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].a, b[i].a);
        EXPECT_EQ(a[i].tau, b[i].tau);
        EXPECT_GE(a[i].a, -3.0);
        EXPECT_LE(a[i].a, 3.0);
        EXPECT_LE(std::hypot(a[i].w_re, a[i].w_im), 3.0);
        EXPECT_GT(a[i].tau, 0.0);
        EXPECT_LE(a[i].tau, 5.0);
    }
    EXPECT_NE(draw_points(6, 1)[0].a, a[0].a);
}

TEST(Verify, SmallRunAgrees) {
    const VerifyReport r = run_verification(11, 150, true);
    EXPECT_EQ(r.drawn, 150u);
    EXPECT_GT(r.evaluated, 100u);
    EXPECT_TRUE(r.agree()) << verify_report_json(11, r);
}
