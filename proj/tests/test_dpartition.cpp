#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "delaystab/dpartition.hpp"
#include "delaystab/errors.hpp"
#include "delaystab/scalarfun.hpp"
#include "delaystab/stability.hpp"
#include "oracles.hpp"

using namespace dstab;
using cplx = std::complex<double>;
using oracle::pi;

TEST(CurveLabel, ParseAndPrint) {
    EXPECT_EQ(CurveLabel::parse("c"), CurveLabel::Critical());
    EXPECT_EQ(CurveLabel::parse("-3"), CurveLabel::Branch(-3));
    EXPECT_EQ(CurveLabel::Branch(7).str(), "7");
    EXPECT_EQ(CurveLabel::Critical().str(), "c");
    EXPECT_THROW(CurveLabel::Branch(0), DomainError);
    EXPECT_THROW(CurveLabel::parse("0"), DomainError);
    EXPECT_THROW(CurveLabel::parse("x"), DomainError);
}

TEST(GradedGrid, InteriorSortedAndGraded) {
    const auto g = graded_grid(0.0, pi, 50);
    ASSERT_EQ(g.size(), 50u);
    EXPECT_NEAR(g.front(), 1e-4 * pi, 1e-15);
    EXPECT_NEAR(g.back(), pi - 1e-4 * pi, 1e-14);
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
    EXPECT_LT(g[1] - g[0], g[25] - g[24]);
}

TEST(Hayes, Examples) {
    const CurveSample s0 = hayes_point(1e-4, 1.0);
    EXPECT_NEAR(s0.a, -1.0, 1e-6);
    EXPECT_NEAR(s0.rho, 1.0, 1e-6);
    const CurveSample s1 = hayes_point(pi / 2, 1.0);
    EXPECT_NEAR(s1.a, 0.0, 1e-12);
    EXPECT_NEAR(s1.rho, pi / 2, 1e-12);
    const CurveSample s2 = hayes_point(1e-4, 1.0 / 3);
    EXPECT_NEAR(s2.a, -3.0, 1e-6);
    EXPECT_NEAR(s2.rho, 3.0, 1e-6);
}

TEST(Hayes, CurveMatchesOracleAndBoundary) {
    for (double tau : {0.5, 1.0, 3.0}) {
        const BoundaryCurve c = hayes_curve(tau, 200);
        EXPECT_EQ(c.kind, CurveKind::Hayes);
        EXPECT_EQ(c.psi, pi);
        ASSERT_EQ(c.samples.size(), 200u);
        for (const auto& s : c.samples) {
            ASSERT_GT(s.param, 0.0);
            ASSERT_LT(s.param, pi);
            EXPECT_NEAR(s.a, -oracle::theta_cot(s.param) / tau, 1e-12 * std::max(1.0, std::abs(s.a)));
            EXPECT_NEAR(s.rho, s.param / (tau * std::sin(s.param)), 1e-12 * s.rho);
            EXPECT_LT(std::abs(s.a), s.rho);
            // w = -rho < -|a|; inward (smaller |w|) stable, outward unstable
            if (s.param > 0.05 && s.param < pi - 0.01) {
                EXPECT_TRUE(is_stable(s.a, -(s.rho - 1e-4), tau));
                EXPECT_FALSE(is_stable(s.a, -(s.rho + 1e-4), tau));
            }
        }
    }
    EXPECT_THROW(hayes_curve(0.0, 10), DomainError);
    EXPECT_THROW(hayes_curve(1.0, 1), DomainError);
}

TEST(Sakata, Examples) {
    const CurveSample s0 = sakata_point(1e-4, pi / 2, 1.0);
    EXPECT_LT(std::abs(s0.a), 1e-7);
    EXPECT_LT(s0.rho, 2e-4);
    const CurveSample s1 = sakata_point(pi / 4, pi / 2, 1.0);
    EXPECT_NEAR(s1.a, pi / 4, 1e-14);
    EXPECT_NEAR(s1.rho, pi * std::sqrt(2.0) / 4, 1e-14);
    EXPECT_NEAR(s1.rho, big_r_phi(-s1.a, pi / 2), 1e-12);
}

TEST(Sakata, FoldPoint) {
    for (double phi : {3 * pi / 4, 9 * pi / 10}) {
        for (double tau : {0.5, 1.0, 2.0}) {
            const BoundaryCurve c = sakata_curve(phi, tau, 101);
            ASSERT_TRUE(c.fold_index.has_value());
            ASSERT_EQ(c.samples.size(), 102u);
            const SplitPoint sp = split_point(phi);
            const CurveSample& f = c.samples[*c.fold_index];
            EXPECT_NEAR(f.param, sp.s_phi, 1e-15);
            EXPECT_NEAR(f.a, -sp.m_phi / tau, 1e-9);
            EXPECT_NEAR(f.rho, std::sqrt(sp.m_phi) / tau, 1e-9);
            for (std::size_t i = 1; i < c.samples.size(); ++i) EXPECT_LT(c.samples[i - 1].param, c.samples[i].param);
        }
    }
    EXPECT_FALSE(sakata_curve(pi / 3, 1.0, 10).fold_index.has_value());
}

TEST(Sakata, BoundaryEquivalence) {
    for (double phi : {pi / 4, pi / 2, 3 * pi / 4, 9 * pi / 10}) {
        const double tau = 1.3;
        const BoundaryCurve c = sakata_curve(phi, tau, 120);
        EXPECT_NEAR(c.psi, phi, 0.0);
        for (const auto& s : c.samples) {
            if (s.param < 0.02 || s.param > phi - 0.02) continue;
            EXPECT_LT(std::abs(s.a), s.rho);
            // rho is R(-tau a; phi)/tau on the branch selected by theta
            const double x = -tau * s.a;
            const bool folded = phi > pi / 2;
            const double split = folded ? split_point(phi).s_phi : 0.0;
            if (folded && std::abs(s.param - split) < 0.02) continue;
            const bool lower = folded && s.param < split;
            double r_expected;
            if (!folded) r_expected = big_r_phi(x, phi);
            else r_expected = lower ? big_r1(x, phi) : big_r2(x, phi);
            EXPECT_NEAR(tau * s.rho, r_expected, 1e-9 * std::max(1.0, r_expected));
            // stable side: below R and R2, above R1
            const double inward = lower ? 1e-4 : -1e-4;
            EXPECT_TRUE(is_stable(s.a, std::polar(s.rho + inward, phi), tau)) << phi << " " << s.param;
            EXPECT_FALSE(is_stable(s.a, std::polar(s.rho - inward, phi), tau)) << phi << " " << s.param;
        }
    }
}

TEST(Sakata, HayesIsTheLimit) {
    const BoundaryCurve s = sakata_curve(pi - 1e-4, 1.0, 100);
    const BoundaryCurve h = hayes_curve(1.0, 100);
    ASSERT_TRUE(s.fold_index.has_value());
    ASSERT_EQ(s.samples.size(), h.samples.size() + 1);
    for (std::size_t i = 0, j = 0; i < s.samples.size(); ++i) {
        if (i == *s.fold_index) continue;
        const auto& ss = s.samples[i];
        const auto& hs = h.samples[j++];
        // the limit is not uniform at either end: near theta = 0 the Sakata
        // curve tends to (0, 0) for every phi < pi, so |diff| ~ (pi - phi) / theta
        if (ss.param < 200 * 1e-4 || ss.param > pi - 0.05) continue;
        EXPECT_LT(std::hypot(ss.a - hs.a, ss.rho - hs.rho), 1e-2) << ss.param;
    }
}

TEST(Interval, Examples) {
    const auto i1 = interval_of(CurveLabel::Branch(1), pi / 2);
    EXPECT_NEAR(i1.lo, 3 * pi / 2, 1e-15);
    EXPECT_NEAR(i1.hi, 5 * pi / 2, 1e-15);
    const auto ic = interval_of(CurveLabel::Critical(), -2.0);
    EXPECT_EQ(ic.lo, -2.0);
    EXPECT_EQ(ic.hi, 0.0);
    const auto im = interval_of(CurveLabel::Branch(-1), 0.0);
    EXPECT_NEAR(im.lo, -2 * pi, 1e-15);
    EXPECT_NEAR(im.hi, -pi, 1e-15);
    EXPECT_THROW(interval_of(CurveLabel::Critical(), 0.0), DomainError);
}

TEST(Gamma, Examples) {
    const BoundaryCurve c = gamma_curve(CurveLabel::Critical(), pi, 1.0, 201);
    // Omega = pi/2 is the grid midpoint
    const auto& mid = c.samples[100];
    EXPECT_NEAR(mid.param, pi / 2, 1e-12);
    EXPECT_NEAR(mid.a, 0.0, 1e-12);
    EXPECT_NEAR(mid.rho, pi / 2, 1e-12);
    EXPECT_THROW(gamma_curve(CurveLabel::Critical(), 0.0, 1.0, 10), DomainError);
}

namespace {
const std::vector<CurveLabel> kGammaLabels{CurveLabel::Critical(), CurveLabel::Branch(1), CurveLabel::Branch(-1),
                                           CurveLabel::Branch(3), CurveLabel::Branch(-2)};
const double kGammaPsis[] = {-2.5, -pi / 2, 0.3, pi / 2, 3.0, pi};
}  // namespace

TEST(Gamma, PositivityConeAndInterval) {
    for (double psi : kGammaPsis) {
        for (const auto& lab : kGammaLabels) {
            const BoundaryCurve c = gamma_curve(lab, psi, 1.0, 60);
            const auto iv = interval_of(lab, psi);
            for (const auto& s : c.samples) {
                EXPECT_GT(s.rho, 0.0);
                EXPECT_LT(std::abs(s.a), s.rho);
                EXPECT_TRUE(iv.contains(s.param));
                if (lab.critical) {
                    EXPECT_GT(s.a, s.rho * std::cos(psi));
                }
            }
        }
    }
}

TEST(Gamma, FrequencyInvariant) {
    // rho^2 - a^2 = Omega^2 to 1e-9 relative on every sample
    for (double psi : kGammaPsis) {
        for (const auto& lab : kGammaLabels) {
            const BoundaryCurve c = gamma_curve(lab, psi, 1.0, 60);
            for (const auto& s : c.samples) {
                EXPECT_NEAR((s.rho - s.a) * (s.rho + s.a), s.param * s.param, 1e-9 * s.param * s.param)
                    << lab.str() << " psi=" << psi << " Omega=" << s.param;
            }
        }
    }
}

TEST(Gamma, Scaling) {
    for (double psi : kGammaPsis) {
        for (const auto& lab : kGammaLabels) {
            const BoundaryCurve c1 = gamma_curve(lab, psi, 1.0, 60);
            const BoundaryCurve c3 = gamma_curve(lab, psi, 3.0, 60);
            for (std::size_t i = 0; i < c1.samples.size(); ++i) {
                const auto& s = c1.samples[i];
                EXPECT_NEAR(c3.samples[i].a * 3.0, s.a, 1e-12 * std::max(1.0, std::abs(s.a)));
                EXPECT_NEAR(c3.samples[i].rho * 3.0, s.rho, 1e-12 * s.rho);
            }
        }
    }
}

TEST(Gamma, CriticalSymmetricInPsi) {
    // I_c(-psi) = -I_c(psi): the samples coincide in reverse order
    const BoundaryCurve p = gamma_curve(CurveLabel::Critical(), 1.1, 1.0, 40);
    const BoundaryCurve m = gamma_curve(CurveLabel::Critical(), -1.1, 1.0, 40);
    const std::size_t n = p.samples.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ps = p.samples[i];
        const auto& ms = m.samples[n - 1 - i];
        EXPECT_NEAR(ps.param, -ms.param, 1e-15);
        EXPECT_NEAR(ps.a, ms.a, 1e-12 * std::max(1.0, std::abs(ps.a)));
        EXPECT_NEAR(ps.rho, ms.rho, 1e-12 * ps.rho);
    }
}

TEST(Gamma, LadderConsistency) {
    const std::vector<CurveLabel> labels{CurveLabel::Critical(), CurveLabel::Branch(1), CurveLabel::Branch(-1),
                                         CurveLabel::Branch(2), CurveLabel::Branch(-2)};
    for (double psi : {pi / 4, pi / 2, 3 * pi / 4, pi, -pi / 3}) {
        for (double tau : {0.5, 1.0, 2.0}) {
            for (const auto& lab : labels) {
                const BoundaryCurve c = gamma_curve(lab, psi, tau, 30);
                for (const auto& s : c.samples) {
                    const CoefficientPoint p{s.a, c.w_of(s)};
                    const auto all = match_tau_labels(p, tau);
                    EXPECT_NE(std::find(all.begin(), all.end(), lab), all.end()) << lab.str() << " " << psi;
                }
            }
        }
    }
}

TEST(MatchTauLabel, Examples) {
    EXPECT_FALSE(match_tau_label({0.0, -1.0}, 1.0).has_value());
    EXPECT_EQ(match_tau_label({0.0, cplx(0, 1)}, 2 * pi), CurveLabel::Branch(1));
    EXPECT_EQ(match_tau_label({0.0, cplx(0, 1)}, pi), CurveLabel::Branch(-1));
    // coincidence at psi = pi: critical and Minus(1)
    const auto both = match_tau_labels({0.0, -1.0}, pi / 2);
    ASSERT_EQ(both.size(), 2u);
    EXPECT_EQ(both[0], CurveLabel::Critical());
    EXPECT_EQ(both[1], CurveLabel::Branch(-1));
    EXPECT_THROW(match_tau_label({2.0, 1.0}, 1.0), DomainError);
}

TEST(RayOrdering, ImaginaryDirection) {
    const auto hits = ray_ordering(pi / 2, 1.0, {0.0, cplx(0, 1)}, 2);
    ASSERT_EQ(hits.size(), 4u);
    const std::vector<CurveLabel> want{CurveLabel::Branch(-1), CurveLabel::Branch(1), CurveLabel::Branch(-2),
                                       CurveLabel::Branch(2)};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(hits[i].s, (i + 1) * pi, 1e-13);
        ASSERT_EQ(hits[i].labels.size(), 1u);
        EXPECT_EQ(hits[i].labels[0], want[i]);
    }
    EXPECT_THROW(ray_ordering(pi / 2, 1.0, {2.0, cplx(0, 1)}, 2), DomainError);
    EXPECT_THROW(ray_ordering(pi / 4, 1.0, {0.0, cplx(0, 1)}, 2), DomainError);
}

TEST(RayOrdering, ScaledDirectionLandsOnCurve) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double psi = pi * (2 * u(rng) - 1);
        const double rho = 0.5 + u(rng);
        const double a = rho * (2 * u(rng) - 1) * 0.99;
        const CoefficientPoint d{a, std::polar(rho, psi)};
        const double tau = 0.7;
        for (const auto& h : ray_ordering(psi, tau, d, 3)) {
            const CoefficientPoint sp{h.s * a, h.s * d.w};
            const auto found = match_tau_labels(sp, tau);
            for (const auto& l : h.labels) EXPECT_NE(std::find(found.begin(), found.end(), l), found.end());
        }
    }
}

TEST(CriticalRegionScan, Examples) {
    const auto f = critical_region_scan(pi, 1.0, {{0.0, 1.0}, {0.0, 2.0}, {1.0, 0.5}});
    EXPECT_TRUE(f[0]);
    EXPECT_FALSE(f[1]);
    EXPECT_FALSE(f[2]);
}

TEST(CriticalRegionScan, FlaggedPointsScaleOntoCriticalCurve) {
    const double psi = 2.0, tau = 1.0;
    std::vector<ScanPoint> grid;
    for (int i = 1; i < 30; ++i) {
        for (int j = 1; j < 30; ++j) {
            const double rho = 3.0 * j / 30;
            const double a = rho * std::cos(psi) + (rho - rho * std::cos(psi)) * i / 30.0;
            grid.push_back({a, rho});
        }
    }
    const auto flags = critical_region_scan(psi, tau, grid);
    int flagged = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const CoefficientPoint p{grid[i].a, std::polar(grid[i].rho, psi)};
        const double tc = critical_delay(p);
        EXPECT_EQ(flags[i], tc > tau);
        if (!flags[i]) continue;
        ++flagged;
        const double s = tc / tau;
        const CoefficientPoint q{s * p.a, s * p.w};
        EXPECT_EQ(match_tau_label(q, tau), CurveLabel::Critical());
    }
    EXPECT_GT(flagged, 0);
}
