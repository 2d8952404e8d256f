#include "heis/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heis/hermite.hpp"
#include "heis/util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heis {

TransformEngine::TransformEngine(SpatialGrid sgrid, FrequencyGrid fgrid, TransformOptions opt)
    : sgrid_(std::move(sgrid)), fgrid_(std::move(fgrid)), opt_(opt) {
    if (fgrid_.n != 1) throw std::invalid_argument("TransformEngine: grid transforms require n = 1");
}

int TransformEngine::mcap(double lam) const {
    if (!lambda_resolvable(lam)) return -1;
    const double r = std::pow(0.5 * opt_.eta_xy * sgrid_.nyquist_xy(), 2) / lam;  // (2m+1) <= r
    const double mc = std::floor(0.5 * (r - 1.0));
    if (mc < 0.0) return -1;
    return std::min(fgrid_.M, static_cast<int>(mc));
}

bool TransformEngine::lambda_resolvable(double lam) const {
    return lam <= opt_.eta_z * sgrid_.nyquist_z();
}

TransformEngine::XiRule TransformEngine::xi_rule(double lam, int mc) const {
    const double slam = std::sqrt(lam);
    const double U = std::min(std::sqrt(2.0 * mc + 1.0) + 6.0,
                              0.5 * opt_.eta_xy * sgrid_.nyquist_xy() / slam + 2.0);
    const double du = std::min(M_PI / (2.0 * sgrid_.L * slam),
                               0.5 / std::sqrt(2.0 * fgrid_.M + 1.0)) /
                      opt_.du_factor;
    const int order = 8;
    int panels = std::max(6, static_cast<int>(std::ceil(2.0 * U / du / order)));
    QuadRule r = composite_gl(-U, U, panels, order);
    return XiRule{std::move(r.x), std::move(r.w)};
}

SpectralField TransformEngine::forward(const SpatialField& f) const {
    if (!f.grid.same_as(sgrid_)) throw std::invalid_argument("forward: field grid mismatch");
    if (opt_.warnings) {
        const double bmax = f.boundary_max_abs();
        const double fmax = f.max_abs();
        if (fmax > 0.0 && bmax > opt_.boundary_warn * fmax)
            WarningSink::warn("forward: boundary mass " + std::to_string(bmax / fmax) +
                              " of max|f| exceeds " + std::to_string(opt_.boundary_warn));
    }

    SpectralField F(fgrid_);
    const int nm = fgrid_.n_m();
    const int nlam = fgrid_.n_lambda();
    const int nx = sgrid_.nx, ny = sgrid_.ny, nz = sgrid_.nz;
    const double hx = sgrid_.hx(), hy = sgrid_.hy(), hz = sgrid_.hz();

#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < nlam; ++j) {
        const double lam = fgrid_.lam[j];
        const int mc = mcap(lam);
        if (mc < 0) continue;
        const double slam = std::sqrt(lam);

        // z projection: g(x,y) = sum_z e^{-i lam z} f hz
        std::vector<cplx> g(std::size_t(nx) * ny);
        std::vector<cplx> zph(nz);
        for (int iz = 0; iz < nz; ++iz)
            zph[iz] = cplx(std::cos(lam * sgrid_.zs[iz]), -std::sin(lam * sgrid_.zs[iz])) * hz;
        for (int ix = 0; ix < nx; ++ix)
            for (int iy = 0; iy < ny; ++iy) {
                cplx acc(0.0, 0.0);
                const double* row = &f.v[f.grid.idx(ix, iy, 0)];
                for (int iz = 0; iz < nz; ++iz) acc += row[iz] * zph[iz];
                g[std::size_t(ix) * ny + iy] = acc;
            }

        const XiRule xi = xi_rule(lam, mc);
        const int ns = static_cast<int>(xi.u.size());

        // y projection: h(x,s) = sum_y hy e^{-2i sqrt(lam) y u_s} g(x,y)
        std::vector<cplx> yph(std::size_t(ny) * ns);
        for (int iy = 0; iy < ny; ++iy)
            for (int s = 0; s < ns; ++s) {
                const double ph = -2.0 * slam * sgrid_.ys[iy] * xi.u[s];
                yph[std::size_t(iy) * ns + s] = cplx(std::cos(ph), std::sin(ph)) * hy;
            }

        std::vector<cplx> h(ns);
        std::vector<double> A, B;
        std::vector<cplx> U(std::size_t(mc + 1) * ns);
        std::vector<cplx> acc(std::size_t(nm) * nm, cplx(0.0, 0.0));
        std::vector<double> Atab(std::size_t(mc + 1) * ns), Btab(std::size_t(mc + 1) * ns);
        const double x_cut = (std::sqrt(2.0 * mc + 1.0) + 7.0) / slam;

        for (int ix = 0; ix < nx; ++ix) {
            const double x = sgrid_.xs[ix];
            if (std::abs(x) > x_cut) continue;
            const double a = slam * x;
            for (int s = 0; s < ns; ++s) {
                hermite_all(mc, xi.u[s] + a, A);
                hermite_all(mc, xi.u[s] - a, B);
                for (int m = 0; m <= mc; ++m) {
                    Atab[std::size_t(m) * ns + s] = A[m];
                    Btab[std::size_t(m) * ns + s] = B[m];
                }
            }
            for (int s = 0; s < ns; ++s) {
                cplx sum(0.0, 0.0);
                const cplx* grow = &g[std::size_t(ix) * ny];
                for (int iy = 0; iy < ny; ++iy) sum += grow[iy] * yph[std::size_t(iy) * ns + s];
                h[s] = sum * xi.w[s];
            }
            for (int m = 0; m <= mc; ++m) {
                const double* arow = &Atab[std::size_t(m) * ns];
                cplx* urow = &U[std::size_t(m) * ns];
                for (int s = 0; s < ns; ++s) urow[s] = arow[s] * h[s];
            }
            for (int m = 0; m <= mc; ++m) {
                const cplx* urow = &U[std::size_t(m) * ns];
                for (int l = 0; l <= mc; ++l) {
                    const double* brow = &Btab[std::size_t(l) * ns];
                    cplx sum(0.0, 0.0);
                    for (int s = 0; s < ns; ++s) sum += urow[s] * brow[s];
                    acc[std::size_t(m) * nm + l] += hx * sum;
                }
            }
        }
        for (int m = 0; m <= mc; ++m)
            for (int l = 0; l <= mc; ++l) {
                const cplx v = acc[std::size_t(m) * nm + l];
                F.at(0, m, l, j) = v;
                F.at(1, m, l, j) = std::conj(v);  // real input field
            }
    }
    return F;
}

SpatialField TransformEngine::inverse(const SpectralField& F) const {
    if (!F.grid.same_as(fgrid_)) throw std::invalid_argument("inverse: spectral grid mismatch");
    if (opt_.warnings) {
        const double frac = masked_mass_fraction(F);
        if (frac > opt_.tail_warn)
            WarningSink::warn("inverse: spectral mass fraction " + std::to_string(frac) +
                              " lies outside the grid-resolvable region (truncated)");
    }

    const int nm = fgrid_.n_m();
    const int nlam = fgrid_.n_lambda();
    const int nx = sgrid_.nx, ny = sgrid_.ny, nz = sgrid_.nz;
    const double cn = fgrid_.plancherel_const();

    SpatialField out(sgrid_);
    std::vector<double> imag_max(nlam, 0.0);

    // Accumulation buffer indexed like the field; lambda loop is serial and
    // per-lambda work is parallel, so sums are deterministic for any thread
    // count.
    std::vector<cplx> fc(out.v.size(), cplx(0.0, 0.0));

    for (int j = 0; j < nlam; ++j) {
        const double lam = fgrid_.lam[j];
        const int mc = mcap(lam);
        if (mc < 0) continue;
        const double slam = std::sqrt(lam);
        const XiRule xi = xi_rule(lam, mc);
        const int ns = static_cast<int>(xi.u.size());
        const double x_cut = (std::sqrt(2.0 * mc + 1.0) + 7.0) / slam;
        const bool diag = F.diagonal;

        // P{0,1}(x, s) = sum_{m,l} A_m(x,s) B_l(x,s) F(s, m, l, j)
        std::vector<cplx> P0(std::size_t(nx) * ns, cplx(0, 0)), P1(std::size_t(nx) * ns, cplx(0, 0));
#pragma omp parallel for schedule(dynamic)
        for (int ix = 0; ix < nx; ++ix) {
            const double x = sgrid_.xs[ix];
            if (std::abs(x) > x_cut) continue;
            const double a = slam * x;
            std::vector<double> A, B;
            std::vector<double> Atab(std::size_t(mc + 1) * ns), Btab(std::size_t(mc + 1) * ns);
            for (int s = 0; s < ns; ++s) {
                hermite_all(mc, xi.u[s] + a, A);
                hermite_all(mc, xi.u[s] - a, B);
                for (int m = 0; m <= mc; ++m) {
                    Atab[std::size_t(m) * ns + s] = A[m];
                    Btab[std::size_t(m) * ns + s] = B[m];
                }
            }
            std::vector<cplx> W0(ns), W1(ns);
            for (int m = 0; m <= mc; ++m) {
                if (diag) {
                    const cplx f0 = F.at(0, m, m, j), f1 = F.at(1, m, m, j);
                    const double* brow = &Btab[std::size_t(m) * ns];
                    for (int s = 0; s < ns; ++s) {
                        W0[s] = f0 * brow[s];
                        W1[s] = f1 * brow[s];
                    }
                } else {
                    std::fill(W0.begin(), W0.end(), cplx(0, 0));
                    std::fill(W1.begin(), W1.end(), cplx(0, 0));
                    for (int l = 0; l <= mc; ++l) {
                        const cplx f0 = F.at(0, m, l, j), f1 = F.at(1, m, l, j);
                        if (f0 == cplx(0, 0) && f1 == cplx(0, 0)) continue;
                        const double* brow = &Btab[std::size_t(l) * ns];
                        for (int s = 0; s < ns; ++s) {
                            W0[s] += f0 * brow[s];
                            W1[s] += f1 * brow[s];
                        }
                    }
                }
                const double* arow = &Atab[std::size_t(m) * ns];
                cplx* p0 = &P0[std::size_t(ix) * ns];
                cplx* p1 = &P1[std::size_t(ix) * ns];
                for (int s = 0; s < ns; ++s) {
                    p0[s] += arow[s] * W0[s];
                    p1[s] += arow[s] * W1[s];
                }
            }
        }

        // G{0,1}(x,y) = sum_s w_s P(x,s) e^{+-2i sqrt(lam) y u_s}
        std::vector<cplx> G0(std::size_t(nx) * ny), G1(std::size_t(nx) * ny);
        std::vector<cplx> yph(std::size_t(ny) * ns);
        for (int iy = 0; iy < ny; ++iy)
            for (int s = 0; s < ns; ++s) {
                const double ph = 2.0 * slam * sgrid_.ys[iy] * xi.u[s];
                yph[std::size_t(iy) * ns + s] = cplx(std::cos(ph), std::sin(ph));
            }
#pragma omp parallel for schedule(static)
        for (int ix = 0; ix < nx; ++ix) {
            for (int iy = 0; iy < ny; ++iy) {
                cplx a0(0, 0), a1(0, 0);
                const cplx* p0 = &P0[std::size_t(ix) * ns];
                const cplx* p1 = &P1[std::size_t(ix) * ns];
                const cplx* ph = &yph[std::size_t(iy) * ns];
                for (int s = 0; s < ns; ++s) {
                    a0 += xi.w[s] * p0[s] * ph[s];
                    a1 += xi.w[s] * p1[s] * std::conj(ph[s]);
                }
                G0[std::size_t(ix) * ny + iy] = a0;
                G1[std::size_t(ix) * ny + iy] = a1;
            }
        }

        // z synthesis, weight c_n |lam|^n dlam for each sign
        const double wgt = cn * std::pow(lam, fgrid_.n) * fgrid_.w_dlam[j];
        std::vector<cplx> zph(nz);
        for (int iz = 0; iz < nz; ++iz)
            zph[iz] = cplx(std::cos(lam * sgrid_.zs[iz]), std::sin(lam * sgrid_.zs[iz]));
#pragma omp parallel for schedule(static)
        for (int ix = 0; ix < nx; ++ix)
            for (int iy = 0; iy < ny; ++iy) {
                const cplx g0 = G0[std::size_t(ix) * ny + iy] * wgt;
                const cplx g1 = G1[std::size_t(ix) * ny + iy] * wgt;
                cplx* row = &fc[out.grid.idx(ix, iy, 0)];
                for (int iz = 0; iz < nz; ++iz) row[iz] += g0 * zph[iz] + g1 * std::conj(zph[iz]);
            }
    }

    double imax = 0.0;
    for (std::size_t i = 0; i < fc.size(); ++i) {
        out.v[i] = fc[i].real();
        imax = std::max(imax, std::abs(fc[i].imag()));
    }
    if (opt_.warnings && imax > 1e-8 * std::max(1.0, out.max_abs()))
        WarningSink::warn("inverse: imaginary residue " + std::to_string(imax) +
                          " (input not Hermitian-symmetric?)");
    return out;
}

double TransformEngine::masked_mass_fraction(const SpectralField& F) const {
    const int nm = fgrid_.n_m(), nlam = fgrid_.n_lambda();
    double total = 0.0, masked = 0.0;
    for (int j = 0; j < nlam; ++j) {
        const double wp = fgrid_.w_plancherel(j);
        const int mc = mcap(fgrid_.lam[j]);
        for (int s = 0; s < 2; ++s)
            for (int m = 0; m < nm; ++m)
                for (int l = 0; l < nm; ++l) {
                    const double e = std::norm(F.at(s, m, l, j)) * wp;
                    total += e;
                    if (m > mc || l > mc) masked += e;
                }
    }
    return total > 0.0 ? masked / total : 0.0;
}

double plancherel_norm_sq(const SpectralField& F) {
    const FrequencyGrid& g = F.grid;
    const int nm = g.n_m(), nlam = g.n_lambda();
    std::vector<double> terms;
    terms.reserve(F.c.size());
    for (int s = 0; s < 2; ++s)
        for (int m = 0; m < nm; ++m)
            for (int l = 0; l < nm; ++l)
                for (int j = 0; j < nlam; ++j)
                    terms.push_back(std::norm(F.at(s, m, l, j)) * g.w_plancherel(j));
    return pairwise_sum(terms);
}

SpectralField apply_gauge_multiplier(const SpectralField& F,
                                     const std::function<double(double)>& mult) {
    SpectralField out = F;
    const int nm = F.grid.n_m(), nlam = F.grid.n_lambda();
    for (int j = 0; j < nlam; ++j)
        for (int m = 0; m < nm; ++m) {
            const double g = mult(F.grid.gauge(m, j));
            for (int s = 0; s < 2; ++s)
                for (int l = 0; l < nm; ++l) out.at(s, m, l, j) *= g;
        }
    return out;
}

SpectralField laplacian_multiplier(const SpectralField& F, double power, bool negative_sign) {
    const double sign = negative_sign ? -1.0 : 1.0;
    if (negative_sign && std::abs(power - std::round(power)) > 1e-12)
        throw std::invalid_argument("laplacian_multiplier: signed form needs integer power");
    return apply_gauge_multiplier(F, [power, sign](double gauge) {
        const double v = std::pow(4.0 * gauge, power);
        if (sign < 0.0) {
            const long long N = static_cast<long long>(std::llround(power));
            return (N % 2 != 0) ? -v : v;
        }
        return v;
    });
}

SpectralField spectral_multiply(const SpectralField& F, const SpectralField& G) {
    if (!F.grid.same_as(G.grid)) throw std::invalid_argument("spectral_multiply: grid mismatch");
    const int nm = F.grid.n_m(), nlam = F.grid.n_lambda();
    SpectralField out(F.grid, F.diagonal && G.diagonal);
#pragma omp parallel for collapse(2) schedule(static)
    for (int s = 0; s < 2; ++s)
        for (int j = 0; j < nlam; ++j) {
            for (int m = 0; m < nm; ++m)
                for (int l = 0; l < nm; ++l) {
                    cplx sum(0.0, 0.0);
                    for (int k = 0; k < nm; ++k) sum += F.at(s, m, k, j) * G.at(s, k, l, j);
                    out.at(s, m, l, j) = sum;
                }
        }
    return out;
}

namespace {
double manhattan(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}
}  // namespace

double dhat(const std::vector<int>& m, const std::vector<int>& l, double lam,
            const std::vector<int>& m2, const std::vector<int>& l2, double lam2) {
    const int n = static_cast<int>(m.size());
    std::vector<double> t1(n), t2(n);
    for (int i = 0; i < n; ++i) {
        t1[i] = lam * (m[i] + l[i]) - lam2 * (m2[i] + l2[i]);
        t2[i] = (m[i] - l[i]) - (m2[i] - l2[i]);
    }
    return manhattan(t1) + manhattan(t2) + n * std::abs(lam - lam2);
}

double dhat0(const std::vector<int>& m, const std::vector<int>& l, double lam) {
    const int n = static_cast<int>(m.size());
    double mpl = 0.0, mml = 0.0;
    for (int i = 0; i < n; ++i) {
        mpl += std::abs(double(m[i] + l[i]));
        mml += std::abs(double(m[i] - l[i]));
    }
    return std::abs(lam) * (mpl + n) + mml;
}

SpectralField delta_hat(const SpectralField& F) {
    const int nm = F.grid.n_m(), nlam = F.grid.n_lambda(), M = F.grid.M;
    const int n = F.grid.n;
    SpectralField out(F.grid, false);
    auto get = [&](int s, int m, int l, int j) -> cplx {
        if (m < 0 || l < 0 || m > M || l > M) return cplx(0.0, 0.0);
        return F.at(s, m, l, j);
    };
    for (int s = 0; s < 2; ++s)
        for (int j = 0; j < nlam; ++j) {
            const double alam = F.grid.lam[j];
            for (int m = 0; m < nm; ++m)
                for (int l = 0; l < nm; ++l) {
                    cplx v = -(double(m + l) + n) / (2.0 * alam) * get(s, m, l, j);
                    v += std::sqrt(double(m + 1) * (l + 1)) / (2.0 * alam) * get(s, m + 1, l + 1, j);
                    v += std::sqrt(double(m) * l) / (2.0 * alam) * get(s, m - 1, l - 1, j);
                    out.at(s, m, l, j) = v;
                }
        }
    return out;
}

SpectralField dlambda_hat(const SpectralField& F) {
    const int nm = F.grid.n_m(), nlam = F.grid.n_lambda(), M = F.grid.M;
    const int n = F.grid.n;
    SpectralField out(F.grid, false);
    auto get = [&](int s, int m, int l, int j) -> cplx {
        if (m < 0 || l < 0 || m > M || l > M) return cplx(0.0, 0.0);
        return F.at(s, m, l, j);
    };
    // d/dlambda by nonuniform centered differences along the stored positive
    // nodes; for the negative sign lambda = -lam[j] so d/dlambda flips sign.
    auto ddl = [&](int s, int m, int l, int j) -> cplx {
        cplx d;
        if (j == 0) {
            d = (get(s, m, l, 1) - get(s, m, l, 0)) / (F.grid.lam[1] - F.grid.lam[0]);
        } else if (j == nlam - 1) {
            d = (get(s, m, l, j) - get(s, m, l, j - 1)) / (F.grid.lam[j] - F.grid.lam[j - 1]);
        } else {
            const double hm = F.grid.lam[j] - F.grid.lam[j - 1];
            const double hp = F.grid.lam[j + 1] - F.grid.lam[j];
            d = (get(s, m, l, j + 1) * (hm * hm) - get(s, m, l, j - 1) * (hp * hp) +
                 get(s, m, l, j) * (hp * hp - hm * hm)) /
                (hm * hp * (hm + hp));
        }
        return s == 0 ? d : -d;
    };
    for (int s = 0; s < 2; ++s)
        for (int j = 0; j < nlam; ++j) {
            const double lam = s == 0 ? F.grid.lam[j] : -F.grid.lam[j];
            for (int m = 0; m < nm; ++m)
                for (int l = 0; l < nm; ++l) {
                    cplx v = ddl(s, m, l, j);
                    v += n / (2.0 * lam) * get(s, m, l, j);
                    v += std::sqrt(double(m) * l) / (2.0 * lam) * get(s, m - 1, l - 1, j);
                    v -= std::sqrt(double(m + 1) * (l + 1)) / (2.0 * lam) * get(s, m + 1, l + 1, j);
                    out.at(s, m, l, j) = v;
                }
        }
    return out;
}

SpectralField theta_multiplier(const FrequencyGrid& g,
                               const std::function<double(double)>& profile) {
    return SpectralField::diagonal_from_gauge(g, profile);
}

double point_inverse_diagonal(const SpectralField& F, const GroupPoint& q) {
    if (!F.diagonal) throw std::invalid_argument("point_inverse_diagonal: field not diagonal");
    if (q.n() != 1) throw std::invalid_argument("point_inverse_diagonal: n = 1 only");
    const FrequencyGrid& g = F.grid;
    const double v2 = q.x[0] * q.x[0] + q.y[0] * q.y[0];
    const double cn = g.plancherel_const();
    double total = 0.0;
    for (int j = 0; j < g.n_lambda(); ++j) {
        const double lam = g.lam[j];
        const double w = cn * std::pow(lam, g.n) * g.w_dlam[j];
        // Laguerre values for all m at 2 lam v^2 via recurrence
        const double arg = 2.0 * lam * v2;
        const double damp = std::exp(-lam * v2);
        double lm1 = 1.0, lv = 1.0 - arg;
        const cplx zph(std::cos(lam * q.z), std::sin(lam * q.z));
        cplx acc(0.0, 0.0);
        for (int m = 0; m <= g.M; ++m) {
            double Lm;
            if (m == 0) Lm = 1.0;
            else if (m == 1) Lm = lv;
            else {
                const double lp1 = ((2 * (m - 1) + 1 - arg) * lv - (m - 1) * lm1) / m;
                lm1 = lv;
                lv = lp1;
                Lm = lv;
            }
            const double K = damp * Lm;
            acc += K * (F.at(0, m, m, j) * zph + F.at(1, m, m, j) * std::conj(zph));
        }
        total += w * acc.real();
    }
    return total;
}

double point_inverse_diagonal(const FrequencyGrid& g,
                              const std::function<double(int, double)>& symbol,
                              const GroupPoint& q) {
    SpectralField F(g, true);
    for (int j = 0; j < g.n_lambda(); ++j)
        for (int m = 0; m <= g.M; ++m) {
            F.at(0, m, m, j) = symbol(m, g.lam[j]);
            F.at(1, m, m, j) = symbol(m, -g.lam[j]);
        }
    return point_inverse_diagonal(F, q);
}

}  // namespace heis
