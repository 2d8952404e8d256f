#include <cmath>
#include <random>

#include "doctest.h"
#include "heis/reference.hpp"
#include "heis/transform.hpp"
#include "heis/util.hpp"
#include "test_helpers.hpp"

using namespace heis;

namespace {

SpatialGrid desk_grid() { return SpatialGrid(64, 64, 64, 4.0, 6.4); }
FrequencyGrid desk_freq(int M = 32) { return FrequencyGrid::log_gauss(M, 0.02, 23.0, 48, 4); }

SpatialField bump_field(const SpatialGrid& g, const testutil::Bump& b) {
    return SpatialField::from_function(
        g, [b](double x, double y, double z) { return b(x, y, z); });
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("fast engine matches direct reference on a tiny grid") {
    const SpatialGrid sg(10, 10, 12, 3.0, 3.0);
    const FrequencyGrid fg = FrequencyGrid::log_gauss(3, 0.3, 2.0, 4, 4);
    TransformOptions opt;
    opt.warnings = false;
    const TransformEngine eng(sg, fg, opt);

    const SpatialField f = SpatialField::from_function(sg, [](double x, double y, double z) {
        return std::exp(-(x * x + y * y) / 1.1 - z * z / 1.3) * (1.0 + 0.3 * x - 0.2 * y);
    });
    const SpectralField F = eng.forward(f);
    const SpectralField Fr = ref::forward_direct(f, fg);
    // compare on the grid-resolvable entries; the engine zeroes the rest
    double dmax = 0.0, ref_max = 0.0;
    for (int s = 0; s < 2; ++s)
        for (int j = 0; j < fg.n_lambda(); ++j) {
            const int mc = eng.mcap(fg.lam[j]);
            for (int m = 0; m <= fg.M; ++m)
                for (int l = 0; l <= fg.M; ++l) {
                    if (m <= mc && l <= mc) {
                        dmax = std::max(dmax, std::abs(F.at(s, m, l, j) - Fr.at(s, m, l, j)));
                        ref_max = std::max(ref_max, std::abs(Fr.at(s, m, l, j)));
                    } else {
                        CHECK(F.at(s, m, l, j) == cplx(0.0, 0.0));
                    }
                }
        }
    CHECK(ref_max > 0.01);
    CHECK(dmax / ref_max < 2e-6);

    // inverse comparison on a masked copy so both sides see the same input
    SpectralField Fm = Fr;
    for (int s = 0; s < 2; ++s)
        for (int j = 0; j < fg.n_lambda(); ++j) {
            const int mc = eng.mcap(fg.lam[j]);
            for (int m = 0; m <= fg.M; ++m)
                for (int l = 0; l <= fg.M; ++l)
                    if (m > mc || l > mc) Fm.at(s, m, l, j) = cplx(0.0, 0.0);
        }
    const SpatialField u = eng.inverse(Fm);
    const SpatialField ur = ref::inverse_direct(Fm, sg);
    double du = 0.0;
    for (std::size_t i = 0; i < u.v.size(); ++i) du = std::max(du, std::abs(u.v[i] - ur.v[i]));
    CHECK(du / ur.max_abs() < 2e-6);
}

TEST_CASE("dirac surrogate transforms to the diagonal identity") {
    // narrow normalized bump at e; deviation from 1_{m=l} is O((2m+1) lam w^2)
    const SpatialGrid sg(48, 48, 48, 1.8, 1.8);
    const FrequencyGrid fg = FrequencyGrid::log_gauss(6, 0.2, 1.0, 12, 4);
    TransformOptions opt;
    opt.warnings = false;
    const TransformEngine eng(sg, fg, opt);
    const double w = 0.15;
    SpatialField f = SpatialField::from_function(sg, [w](double x, double y, double z) {
        return std::exp(-(x * x + y * y + z * z) / (w * w));
    });
    const double mass = f.integral();
    f *= 1.0 / mass;
    const SpectralField F = eng.forward(f);
    int j = 0;
    while (j + 1 < fg.n_lambda() && fg.lam[j] < 0.5) ++j;
    for (int m = 0; m <= fg.M; ++m)
        for (int l = 0; l <= fg.M; ++l) {
            const double expect = (m == l) ? 1.0 : 0.0;
            CHECK(std::abs(F.at(0, m, l, j) - expect) < 0.15);
        }
}

TEST_CASE("linearity") {
    const SpatialGrid sg(16, 16, 16, 3.0, 3.0);
    const FrequencyGrid fg = FrequencyGrid::log_gauss(4, 0.3, 2.0, 4, 4);
    TransformOptions opt;
    opt.warnings = false;
    const TransformEngine eng(sg, fg, opt);
    const SpatialField f = SpatialField::from_function(
        sg, [](double x, double y, double z) { return std::exp(-x * x - y * y - z * z); });
    const SpatialField g = SpatialField::from_function(
        sg, [](double x, double y, double z) { return z * std::exp(-x * x - y * y - z * z); });
    SpatialField lin = f;
    lin *= 2.0;
    SpatialField gscaled = g;
    gscaled *= -3.0;
    lin += gscaled;
    const SpectralField L = eng.forward(lin);
    SpectralField Fc = eng.forward(f);
    Fc *= 2.0;
    SpectralField Gc = eng.forward(g);
    Gc *= -3.0;
    Fc += Gc;
    double d = 0.0;
    for (std::size_t i = 0; i < L.c.size(); ++i) d = std::max(d, std::abs(L.c[i] - Fc.c[i]));
    CHECK(d < 1e-12 * std::max(1.0, L.max_abs()));
}

TEST_CASE("roundtrip and Plancherel at desk scale") {
    const SpatialGrid sg = desk_grid();
    const FrequencyGrid fg = desk_freq();
    TransformOptions opt;
    opt.warnings = false;
    const TransformEngine eng(sg, fg, opt);
    const testutil::Bump b{};
    const SpatialField f = bump_field(sg, b);
    const SpectralField F = eng.forward(f);
    const SpatialField fr = eng.inverse(F);

    double sup = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) sup = std::max(sup, std::abs(fr.v[i] - f.v[i]));
    CHECK(sup / f.max_abs() < 1e-3);

    const double l2 = f.l2_norm_sq();
    CHECK(std::abs(plancherel_norm_sq(F) - l2) / l2 < 1e-4);

    // zero field inverts to zero
    const SpectralField Z(fg);
    CHECK(eng.inverse(Z).max_abs() == 0.0);
}

TEST_CASE("plancherel scaling and heat-multiplier monotonicity") {
    const FrequencyGrid fg = FrequencyGrid::log_gauss(8, 0.1, 8.0, 16, 4);
    SpectralField F = theta_multiplier(fg, [](double g) { return std::exp(-g); });
    const double base = plancherel_norm_sq(F);
    SpectralField F3 = F;
    F3 *= 3.0;
    CHECK(plancherel_norm_sq(F3) == doctest::Approx(9.0 * base).epsilon(1e-12));

    double prev = 1e300;
    for (double t : {0.1, 0.3, 1.0, 3.0}) {
        SpectralField Pt = theta_multiplier(fg, [t](double g) { return std::exp(-4.0 * t * g); });
        const double cur = plancherel_norm_sq(Pt);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("spectral multiply: algebra identities") {
    const FrequencyGrid fg = FrequencyGrid::log_gauss(6, 0.3, 3.0, 6, 4);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd;
    SpectralField F(fg);
    for (auto& c : F.c) c = cplx(nd(rng), nd(rng));

    // identity of the algebra: Dirac transform 1_{m=l}
    const SpectralField I = theta_multiplier(fg, [](double) { return 1.0; });
    const SpectralField FI = spectral_multiply(F, I);
    const SpectralField IF = spectral_multiply(I, F);
    for (std::size_t i = 0; i < F.c.size(); ++i) {
        CHECK(std::abs(FI.c[i] - F.c[i]) < 1e-12);
        CHECK(std::abs(IF.c[i] - F.c[i]) < 1e-12);
    }

    // two diagonal fields multiply pointwise on the diagonal
    const SpectralField A = theta_multiplier(fg, [](double g) { return std::exp(-g); });
    const SpectralField B = theta_multiplier(fg, [](double g) { return 1.0 / (1.0 + g); });
    const SpectralField AB = spectral_multiply(A, B);
    CHECK(AB.diagonal);
    for (int s = 0; s < 2; ++s)
        for (int m = 0; m <= fg.M; ++m)
            for (int j = 0; j < fg.n_lambda(); ++j) {
                const double g = fg.gauge(m, j);
                CHECK(std::abs(AB.at(s, m, m, j) - std::exp(-g) / (1.0 + g)) < 1e-12);
            }
}

TEST_CASE("convolution identity against direct group convolution") {
    // narrow bumps, wide box; oracle computes f*g by direct quadrature
    const SpatialGrid sg(28, 28, 32, 3.5, 4.0);
    const FrequencyGrid fg = FrequencyGrid::log_gauss(8, 0.15, 4.0, 16, 4);
    TransformOptions opt;
    opt.warnings = false;
    const TransformEngine eng(sg, fg, opt);

    auto fa = [](const GroupPoint& q) {
        return std::exp(-2.0 * (q.x[0] * q.x[0] + q.y[0] * q.y[0]) - 1.5 * q.z * q.z);
    };
    auto fb = [](const GroupPoint& q) {
        return std::exp(-2.5 * (q.x[0] * q.x[0] + q.y[0] * q.y[0]) - 2.0 * q.z * q.z) *
               (1.0 + 0.4 * q.x[0]);
    };
    const SpatialField A = SpatialField::from_function(
        sg, [&](double x, double y, double z) { return fa(GroupPoint(x, y, z)); });
    const SpatialField B = SpatialField::from_function(
        sg, [&](double x, double y, double z) { return fb(GroupPoint(x, y, z)); });
    const SpatialField AB = ref::convolve(fa, fb, sg, SpatialGrid(40, 40, 44, 3.5, 4.0));

    const SpectralField FA = eng.forward(A);
    const SpectralField FB = eng.forward(B);
    const SpectralField Fprod = spectral_multiply(FA, FB);
    const SpectralField Fconv = eng.forward(AB);

    double dmax = 0.0, fmax = 0.0;
    for (std::size_t i = 0; i < Fprod.c.size(); ++i) {
        dmax = std::max(dmax, std::abs(Fprod.c[i] - Fconv.c[i]));
        fmax = std::max(fmax, std::abs(Fconv.c[i]));
    }
    CHECK(fmax > 1e-3);
    CHECK(dmax / fmax < 2e-3);
}

TEST_CASE("laplacian multiplier") {
    const FrequencyGrid fg = FrequencyGrid::log_gauss(6, 0.3, 3.0, 6, 4);
    SpectralField F = theta_multiplier(fg, [](double g) { return std::exp(-0.5 * g); });

    // power 0 is the identity
    const SpectralField F0 = laplacian_multiplier(F, 0.0);
    for (std::size_t i = 0; i < F.c.size(); ++i) CHECK(F0.c[i] == F.c[i]);

    // Delta then Delta^{-1} with sign handling
    const SpectralField D = laplacian_multiplier(F, 1.0, true);
    const SpectralField DD = laplacian_multiplier(D, -1.0, true);
    for (std::size_t i = 0; i < F.c.size(); ++i)
        CHECK(std::abs(DD.c[i] - F.c[i]) < 1e-14 * std::max(1.0, std::abs(F.c[i])));

    // multiplier algebra: power a then power b equals power a+b exactly
    const SpectralField Pa = laplacian_multiplier(F, 0.7);
    const SpectralField Pab = laplacian_multiplier(Pa, -0.2);
    const SpectralField Pc = laplacian_multiplier(F, 0.5);
    for (std::size_t i = 0; i < F.c.size(); ++i)
        CHECK(std::abs(Pab.c[i] - Pc.c[i]) <= 1e-12 * std::max(1.0, std::abs(Pc.c[i])));

    // Delta on the heat transform at m=0, n=1: factor -4|lambda|
    const int j = 2;
    const double lam = fg.lam[j];
    const SpectralField DF = laplacian_multiplier(F, 1.0, true);
    CHECK(DF.at(0, 0, 0, j).real() ==
          doctest::Approx(-4.0 * lam * F.at(0, 0, 0, j).real()).epsilon(1e-12));
}

TEST_CASE("frequency metrics") {
    CHECK(dhat({3}, {1}, 0.7, {3}, {1}, 0.7) == doctest::Approx(0.0));
    CHECK(dhat0({0}, {0}, -1.3) == doctest::Approx(1.3));
    CHECK(dhat0({2}, {2}, 0.5) == doctest::Approx(0.5 * (4 + 1)));
    // symmetry
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> mi(0, 6);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        std::vector<int> m{mi(rng)}, l{mi(rng)}, m2{mi(rng)}, l2{mi(rng)};
        const double a = u(rng), b = u(rng);
        CHECK(dhat(m, l, a, m2, l2, b) == doctest::Approx(dhat(m2, l2, b, m, l, a)));
    }
}

TEST_CASE("delta_hat: constant diagonal field is harmonic") {
    const FrequencyGrid fg = FrequencyGrid::log_gauss(8, 0.3, 3.0, 6, 4);
    const SpectralField C = theta_multiplier(fg, [](double) { return 2.5; });
    const SpectralField DC = delta_hat(C);
    // interior rows; the top row m = M sees the truncation
    for (int s = 0; s < 2; ++s)
        for (int m = 0; m + 1 <= fg.M; ++m)
            for (int j = 0; j < fg.n_lambda(); ++j) CHECK(std::abs(DC.at(s, m, m, j)) < 1e-12);
}

TEST_CASE("delta_hat correspondence: M^2 f = -(Delta_hat f_hat)^inverse") {
    const SpatialGrid sg(40, 40, 40, 4.0, 4.5);
    const FrequencyGrid fg = FrequencyGrid::log_gauss(14, 0.35, 5.0, 20, 4);
    TransformOptions opt;
    opt.warnings = false;
    const TransformEngine eng(sg, fg, opt);
    const SpatialField f = SpatialField::from_function(sg, [](double x, double y, double z) {
        return std::exp(-(x * x + y * y) / 1.1 - z * z / 1.2) * std::cos(2.4 * z);
    });
    const SpatialField m2f = SpatialField::from_function(sg, [](double x, double y, double z) {
        return (x * x + y * y) * std::exp(-(x * x + y * y) / 1.1 - z * z / 1.2) * std::cos(2.4 * z);
    });
    const SpectralField Fh = eng.forward(f);
    const SpectralField M2 = eng.forward(m2f);
    const SpectralField DH = delta_hat(Fh);

    double dmax = 0.0, scale = 0.0;
    for (int m = 0; m + 2 <= fg.M; ++m)
        for (int l = 0; l + 2 <= fg.M; ++l)
            for (int j = 0; j < fg.n_lambda(); ++j) {
                if (fg.lam[j] < 0.6 || fg.lam[j] > 1.7) continue;
                dmax = std::max(dmax, std::abs(M2.at(0, m, l, j) + DH.at(0, m, l, j)));
                scale = std::max(scale, std::abs(M2.at(0, m, l, j)));
            }
    CHECK(scale > 1e-3);
    CHECK(dmax / scale < 2e-3);
}

TEST_CASE("dlambda_hat correspondence: -i z f on a uniform lambda grid") {
    const SpatialGrid sg(40, 40, 40, 4.0, 4.5);
    const FrequencyGrid fg = FrequencyGrid::uniform(12, 0.5, 4.5, 160);
    TransformOptions opt;
    opt.warnings = false;
    const TransformEngine eng(sg, fg, opt);
    const SpatialField f = SpatialField::from_function(sg, [](double x, double y, double z) {
        return std::exp(-(x * x + y * y) / 1.1 - z * z / 1.2) * std::cos(2.4 * z);
    });
    const SpatialField zf = SpatialField::from_function(sg, [](double x, double y, double z) {
        return z * std::exp(-(x * x + y * y) / 1.1 - z * z / 1.2) * std::cos(2.4 * z);
    });
    const SpectralField Fh = eng.forward(f);
    const SpectralField Zh = eng.forward(zf);  // \widehat{M_0 f} = -i Zh
    const SpectralField DL = dlambda_hat(Fh);

    double dmax = 0.0, scale = 0.0;
    for (int m = 0; m + 2 <= fg.M; ++m)
        for (int l = 0; l + 2 <= fg.M; ++l)
            for (int j = 8; j < fg.n_lambda() - 8; ++j) {
                if (fg.lam[j] < 1.0 || fg.lam[j] > 1.9) continue;
                const cplx want = cplx(0.0, -1.0) * Zh.at(0, m, l, j);
                dmax = std::max(dmax, std::abs(want - DL.at(0, m, l, j)));
                scale = std::max(scale, std::abs(want));
            }
    CHECK(scale > 1e-3);
    CHECK(dmax / scale < 5e-3);
}

TEST_CASE("theta multiplier: identity, unit ball, scaling") {
    const FrequencyGrid fg = FrequencyGrid::log_gauss(10, 0.01, 8.0, 24, 4);
    const SpectralField One = theta_multiplier(fg, [](double) { return 1.0; });
    CHECK(One.diagonal);
    for (int m = 0; m <= fg.M; ++m) CHECK(One.at(0, m, m, 3) == cplx(1.0, 0.0));
    CHECK(One.at(0, 2, 3, 3) == cplx(0.0, 0.0));

    // phi == 1 on B_1 = {m = l, |lambda|(2m+n) < 1}
    auto phi = [](double g) { return smooth_step_down(g, 1.0, 4.0 / 3.0); };
    const SpectralField Phi = theta_multiplier(fg, phi);
    for (int s = 0; s < 2; ++s)
        for (int m = 0; m <= fg.M; ++m)
            for (int j = 0; j < fg.n_lambda(); ++j) {
                if (fg.gauge(m, j) < 1.0) CHECK(Phi.at(s, m, m, j).real() == doctest::Approx(1.0));
                if (fg.gauge(m, j) >= 4.0 / 3.0) CHECK(std::abs(Phi.at(s, m, m, j)) == 0.0);
            }

    // scaling: Theta_tau(m,m,lambda) = Theta_1(m,m,lambda/tau)
    const double tau = 2.5;
    const SpectralField Phit = theta_multiplier(fg, [&](double g) { return phi(g / tau); });
    for (int m = 0; m <= fg.M; ++m)
        for (int j = 0; j < fg.n_lambda(); ++j)
            CHECK(Phit.at(0, m, m, j).real() ==
                  doctest::Approx(phi(fg.gauge(m, j) / tau)).epsilon(1e-14));
}

TEST_CASE("dilation covariance of theta-multiplier inverse transforms") {
    // g_tau(q) = tau^{n+1} g_1(delta_{sqrt(tau)} q), n = 1
    const FrequencyGrid fg = FrequencyGrid::log_gauss(40, 1e-4, 60.0, 80, 4);
    auto phi = [](double g) { return smooth_step_down(g, 1.0, 4.0 / 3.0); };
    const double tau = 2.0;
    const SpectralField G1 = theta_multiplier(fg, phi);
    const SpectralField Gt = theta_multiplier(fg, [&](double g) { return phi(g / tau); });
    for (const GroupPoint& q :
         {GroupPoint(0.2, -0.1, 0.3), GroupPoint(0.8, 0.5, -0.6), GroupPoint(0.0, 0.0, 0.0)}) {
        const double lhs = point_inverse_diagonal(Gt, q);
        const double rhs = tau * tau * point_inverse_diagonal(G1, dilate(std::sqrt(tau), q));
        CHECK(std::abs(lhs - rhs) <= 1e-3 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("point inverse agrees with grid inverse for diagonal fields") {
    const SpatialGrid sg(32, 32, 32, 4.0, 4.0);
    const FrequencyGrid fg = FrequencyGrid::log_gauss(10, 0.05, 6.0, 24, 4);
    TransformOptions opt;
    opt.warnings = false;
    const TransformEngine eng(sg, fg, opt);
    const SpectralField F =
        theta_multiplier(fg, [](double g) { return std::exp(-1.5 * g) * g; });
    const SpatialField f = eng.inverse(F);
    for (int ix : {8, 16, 21})
        for (int iz : {7, 16, 25}) {
            const GroupPoint q(sg.xs[ix], sg.ys[ix], sg.zs[iz]);
            const double direct = point_inverse_diagonal(F, q);
            CHECK(std::abs(direct - f.at(ix, ix, iz)) <
                  1e-6 * std::max(1.0, std::abs(direct)));
        }
}

}  // TEST_SUITE
