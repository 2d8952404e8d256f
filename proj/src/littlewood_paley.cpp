#include "heis/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

#include "heis/util.hpp"

namespace heis {

PartitionOfUnity::PartitionOfUnity(FrequencyGrid grid, int k_max)
    : grid_(std::move(grid)), k_max_(k_max) {
    if (k_max_ < 0) throw std::invalid_argument("PartitionOfUnity: k_max must be >= 0");
    // the top block must be non-empty on the grid
    const double top_lo = 0.75 * std::pow(2.0, k_max_);
    if (grid_.lam.back() * (2.0 * grid_.M + grid_.n) < top_lo)
        throw std::invalid_argument("PartitionOfUnity: grid too coarse for k_max");
    phi_.reserve(k_max_ + 2);
    for (int k = -1; k <= k_max_; ++k)
        phi_.push_back(theta_multiplier(grid_, [this, k](double g) { return chi(k, g); }));
}

double PartitionOfUnity::chi(int k, double r) const {
    if (k == -1) return smooth_step_down(r, 1.0, 4.0 / 3.0);
    const double sk = std::pow(2.0, k);
    if (k == k_max_) return 1.0 - smooth_step_down(r / sk, 1.0, 4.0 / 3.0);
    return smooth_step_down(r / (2.0 * sk), 1.0, 4.0 / 3.0) -
           smooth_step_down(r / sk, 1.0, 4.0 / 3.0);
}

double PartitionOfUnity::chi_sum(double r) const {
    double s = 0.0;
    for (int k = -1; k <= k_max_; ++k) s += chi(k, r);
    return s;
}

SpectralField PartitionOfUnity::block(const SpectralField& F, int k) const {
    if (k < -1 || k > k_max_) throw std::invalid_argument("block: k out of range");
    return apply_gauge_multiplier(F, [this, k](double g) { return chi(k, g); });
}

SpectralField PartitionOfUnity::partial_sum(const SpectralField& F, int k) const {
    return apply_gauge_multiplier(F, [this, k](double g) {
        double s = 0.0;
        for (int i = -1; i < k; ++i) s += chi(i, g);
        return s;
    });
}

std::vector<SpatialField> PartitionOfUnity::spatial_blocks(const SpectralField& F,
                                                           const TransformEngine& eng) const {
    std::vector<SpatialField> out;
    out.reserve(k_max_ + 2);
    for (int k = -1; k <= k_max_; ++k) out.push_back(eng.inverse(block(F, k)));
    return out;
}

double weighted_lp_norm(const SpatialField& g, double alpha, const Weight& w) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("weighted_lp_norm: alpha must be >= 1");
    const SpatialGrid& sg = g.grid;
    if (std::isinf(alpha)) {
        double m = 0.0;
        for (int ix = 0; ix < sg.nx; ++ix)
            for (int iy = 0; iy < sg.ny; ++iy)
                for (int iz = 0; iz < sg.nz; ++iz) {
                    const double star =
                        star_norm_from_h(homogeneous_norm(sg.point(ix, iy, iz)));
                    m = std::max(m, std::abs(g.at(ix, iy, iz)) * w.eval_star(star));
                }
        return m;
    }
    std::vector<double> terms(sg.size());
    for (int ix = 0; ix < sg.nx; ++ix)
        for (int iy = 0; iy < sg.ny; ++iy)
            for (int iz = 0; iz < sg.nz; ++iz) {
                const double star = star_norm_from_h(homogeneous_norm(sg.point(ix, iy, iz)));
                const double v = std::abs(g.at(ix, iy, iz)) * w.eval_star(star);
                terms[sg.idx(ix, iy, iz)] = std::pow(v, alpha);
            }
    return std::pow(pairwise_sum(terms) * sg.cell_volume(), 1.0 / alpha);
}

std::vector<double> besov_block_norms(const SpectralField& F, const TransformEngine& eng,
                                      const PartitionOfUnity& pu, double alpha,
                                      const Weight& w) {
    std::vector<double> norms;
    norms.reserve(pu.k_max() + 2);
    for (int k = -1; k <= pu.k_max(); ++k)
        norms.push_back(weighted_lp_norm(eng.inverse(pu.block(F, k)), alpha, w));
    return norms;
}

double besov_combine(const std::vector<double>& block_norms, double gamma, double beta) {
    if (!(beta >= 1.0)) throw std::invalid_argument("besov_combine: beta must be >= 1");
    double out = 0.0;
    for (std::size_t i = 0; i < block_norms.size(); ++i) {
        const int k = static_cast<int>(i) - 1;
        const double term = std::pow(2.0, gamma * k) * block_norms[i];
        if (std::isinf(beta)) out = std::max(out, term);
        else out += std::pow(term, beta);
    }
    if (!std::isinf(beta)) out = std::pow(out, 1.0 / beta);
    if (!std::isfinite(out)) throw std::runtime_error("besov norm is not finite");
    return out;
}

double besov_norm(const SpectralField& F, const TransformEngine& eng,
                  const PartitionOfUnity& pu, const BesovParams& p) {
    return besov_combine(besov_block_norms(F, eng, pu, p.alpha, p.w), p.gamma, p.beta);
}

double besov_norm(const SpatialField& f, const TransformEngine& eng,
                  const PartitionOfUnity& pu, const BesovParams& p) {
    return besov_norm(eng.forward(f), eng, pu, p);
}

double bernstein_ratio(const SpectralField& F, const TransformEngine& eng, int k, double tau,
                       double alpha, double beta, const Weight& w, double support_tol) {
    // support check: Plancherel mass at gauge >= tau
    const FrequencyGrid& g = F.grid;
    double inside = 0.0, outside = 0.0;
    for (int s = 0; s < 2; ++s)
        for (int m = 0; m <= g.M; ++m)
            for (int l = 0; l <= g.M; ++l)
                for (int j = 0; j < g.n_lambda(); ++j) {
                    const double e = std::norm(F.at(s, m, l, j)) * g.w_plancherel(j);
                    if (g.gauge(m, j) < tau) inside += e;
                    else outside += e;
                }
    if (outside > support_tol * (inside + outside))
        throw std::invalid_argument("bernstein_ratio: spectral support exceeds tau");

    const SpectralField D = laplacian_multiplier(F, static_cast<double>(k));
    const double num = weighted_lp_norm(eng.inverse(D), alpha, w);
    const double den = weighted_lp_norm(eng.inverse(F), beta, w);
    const double n1 = g.n + 1.0;
    const double expo = k + n1 * (1.0 / beta - 1.0 / alpha);
    return num / (std::pow(tau, expo) * den);
}

}  // namespace heis
