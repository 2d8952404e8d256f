#include "heis/heat.hpp"

#include <cmath>
#include <stdexcept>

#include "heis/util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heis {

double gaveau_kernel(double t, const GroupPoint& q) {
    if (!(t > 0.0)) throw std::invalid_argument("gaveau_kernel: t must be positive");
    const int n = q.n();
    double v2 = 0.0;
    for (int i = 0; i < n; ++i) v2 += q.x[i] * q.x[i] + q.y[i] * q.y[i];
    const double zf = q.z / t;
    const double vf = v2 / t;

    // integrand envelope ~ exp(-lam (2n + vf)); oscillation rate |zf|
    auto integrand = [&](double lam) {
        if (lam < 1e-14) lam = 1e-14;
        const double ratio = 2.0 * lam / std::sinh(2.0 * lam);
        const double coth = 1.0 / std::tanh(2.0 * lam);
        return std::cos(lam * zf) * std::pow(ratio, n) * std::exp(-lam * vf * coth);
    };
    const double decay = 2.0 * n + vf;
    const double cutoff = std::max(2.0, 42.0 / decay);
    // panel density follows the phase rate
    const int panels = std::max(16, static_cast<int>(std::ceil(cutoff * (std::abs(zf) + 4.0) / 4.0)));
    const QuadRule rule = composite_gl(0.0, cutoff, std::min(panels, 20000), 8);
    std::vector<double> terms(rule.x.size());
    for (std::size_t i = 0; i < rule.x.size(); ++i) terms[i] = rule.w[i] * integrand(rule.x[i]);
    const double integral = 2.0 * pairwise_sum(terms);
    return integral / std::pow(2.0 * M_PI * t, n + 1);
}

double heat_kernel(double t, const GroupPoint& q, HeatConvention c) {
    return gaveau_kernel(0.5 * generator_scale(c) * t, q);
}

namespace {

// Partial sums of the spectral synthesis series at truncation degree M:
//   (2/pi^2) sum_m Re[ ((m+1) r^m - m r^{m-1}) / p^2 ],
//   p = v^2 + s t (2m+1) - i z,  r = (p - 2 v^2)/p.
double heat_series_partial(double st, double v2, double z, int M) {
    const double c2 = 2.0 * v2;
    double total = 0.0;
    for (int m = 0; m <= M; ++m) {
        const cplx p(v2 + st * (2.0 * m + 1.0), -z);
        const cplx r = (p - c2) / p;
        // r^m and r^{m-1} by log-free powers: stable since |r| <= 1
        cplx rm1 = m > 0 ? std::pow(r, m - 1) : cplx(0.0, 0.0);
        cplx rm = m > 0 ? rm1 * r : cplx(1.0, 0.0);
        const cplx val = (double(m + 1) * rm - double(m) * rm1) / (p * p);
        total += val.real();
    }
    return 2.0 * total / (M_PI * M_PI);
}

}  // namespace

double spectral_heat_point(double t, const GroupPoint& q, HeatConvention c, int base_degree) {
    if (q.n() != 1) throw std::invalid_argument("spectral_heat_point: n = 1 only");
    if (!(t > 0.0)) throw std::invalid_argument("spectral_heat_point: t must be positive");
    const double st = generator_scale(c) * t;
    const double v2 = q.x[0] * q.x[0] + q.y[0] * q.y[0];
    // tail is a smooth O(1/M) series; two Richardson steps in M kill 1/M, 1/M^2
    const double s1 = heat_series_partial(st, v2, q.z, base_degree);
    const double s2 = heat_series_partial(st, v2, q.z, 2 * base_degree);
    const double s4 = heat_series_partial(st, v2, q.z, 4 * base_degree);
    const double r1 = 2.0 * s2 - s1;
    const double r2 = 2.0 * s4 - s2;
    return (4.0 * r2 - r1) / 3.0;
}

SpectralField semigroup_apply(const SpectralField& F, double t, HeatConvention c) {
    if (t < 0.0) throw std::invalid_argument("semigroup_apply: t must be >= 0");
    if (t == 0.0) return F;
    const double s = generator_scale(c);
    return apply_gauge_multiplier(F, [s, t](double g) { return std::exp(-s * t * g); });
}

SpatialField semigroup_apply(const SpatialField& f, const TransformEngine& eng, double t,
                             HeatConvention c) {
    if (t == 0.0) return f;
    return eng.inverse(semigroup_apply(eng.forward(f), t, c));
}

GaveauConvolver::GaveauConvolver(int nv, int nz, double Lv, double Lz)
    : ugrid_(nv, nv, nz, Lv, Lz), p1_(ugrid_.size()) {
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic)
#endif
    for (int ix = 0; ix < ugrid_.nx; ++ix)
        for (int iy = 0; iy < ugrid_.ny; ++iy)
            for (int iz = 0; iz < ugrid_.nz; ++iz)
                p1_[ugrid_.idx(ix, iy, iz)] = gaveau_kernel(1.0, ugrid_.point(ix, iy, iz));
}

double GaveauConvolver::apply(const std::function<double(const GroupPoint&)>& f, double t,
                              const GroupPoint& p, HeatConvention c) const {
    if (p.n() != 1) throw std::invalid_argument("GaveauConvolver: n = 1 only");
    const double s = 0.5 * generator_scale(c) * t;
    const double rs = std::sqrt(s);
    const double vol = ugrid_.cell_volume() * s * s;  // dmu(delta_sqrt(s) u) = s^{n+1} dmu(u)
    std::vector<double> terms(ugrid_.size());
    GroupPoint w(0.0, 0.0, 0.0);
    for (int ix = 0; ix < ugrid_.nx; ++ix)
        for (int iy = 0; iy < ugrid_.ny; ++iy)
            for (int iz = 0; iz < ugrid_.nz; ++iz) {
                // p * (delta_sqrt(s) u)^{-1}
                const double ux = rs * ugrid_.xs[ix], uy = rs * ugrid_.ys[iy],
                             uz = s * ugrid_.zs[iz];
                w.x[0] = p.x[0] - ux;
                w.y[0] = p.y[0] - uy;
                w.z = p.z - uz + 2.0 * (-ux * p.y[0] + p.x[0] * uy);
                terms[ugrid_.idx(ix, iy, iz)] = f(w) * p1_[ugrid_.idx(ix, iy, iz)];
            }
    return pairwise_sum(terms) * vol;
}

double green_kernel(double alpha, const GroupPoint& p, const GroupPoint& q) {
    const int n = p.n();
    if (!(alpha > 0.0 && alpha < n + 1.0))
        throw std::invalid_argument("green_kernel: alpha must lie in (0, n+1)");
    const GroupPoint w = multiply(inverse(q), p);
    const double d = homogeneous_norm(w);
    if (d == 0.0) throw std::invalid_argument("green_kernel: diagonal singularity p = q");
    const double tstar = d * d;

    // t = tstar e^u; integrand tstar^alpha e^{alpha u} p^(4)_{tstar e^u}(w).
    // Small-t side dies like exp(-c e^{-u}); large-t side like e^{(alpha-n-1)u}.
    auto g = [&](double u) {
        const double t = tstar * std::exp(u);
        return std::pow(t, alpha) * heat_kernel(t, w, HeatConvention::PaperFour);
    };
    const double lo = -14.0;
    const double hi = 42.0 / (n + 1.0 - alpha) + 6.0;
    const double val = adaptive_quad(g, lo, hi, 1e-13, 1e-9, 36);
    return val / std::tgamma(alpha);
}

std::vector<double> smoothing_check(const SpectralField& F, const TransformEngine& eng,
                                    const PartitionOfUnity& pu, double kappa, double kappa2,
                                    const std::vector<double>& ts, const BesovParams& base,
                                    HeatConvention c) {
    BesovParams pk = base, pk2 = base;
    pk.gamma = kappa;
    pk2.gamma = kappa2;
    const double den = besov_norm(F, eng, pu, pk);
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) {
        const SpectralField Pt = semigroup_apply(F, t, c);
        const double num = besov_norm(Pt, eng, pu, pk2);
        out.push_back(std::pow(t, 0.5 * (kappa2 - kappa)) * num / den);
    }
    return out;
}

std::vector<double> time_regularity_check(const SpectralField& F, const TransformEngine& eng,
                                          const PartitionOfUnity& pu, double kappa,
                                          double gamma, const std::vector<double>& ts,
                                          const BesovParams& base, HeatConvention c) {
    BesovParams pk = base, pg = base;
    pk.gamma = kappa;
    pg.gamma = kappa - 2.0 * gamma;
    const double den = besov_norm(F, eng, pu, pk);
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) {
        SpectralField D = F;
        D -= semigroup_apply(F, t, c);
        const double num = besov_norm(D, eng, pu, pg);
        out.push_back(num / (std::pow(t, gamma) * den));
    }
    return out;
}

}  // namespace heis
