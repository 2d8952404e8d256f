#pragma once

#include <vector>

#include "heis/transform.hpp"

namespace heis {

// Dyadic partition of unity on the frequency set, built from a C^infty
// transition S with S = 1 on [0,1] and S = 0 on [4/3, inf):
//   chi_{-1}(r) = S(r)
//   chi_k(r)    = S(r/2^{k+1}) - S(r/2^k),   0 <= k < k_max
//   chi_kmax(r) = 1 - S(r/2^{k_max})          (closing block, absorbs the tail)
// so that sum_{k=-1}^{k_max} chi_k(r) = 1 identically; supports satisfy
// supp chi_{-1} in {r < 4/3} and supp chi_k in {3/4 * 2^k <= r < 8/3 * 2^k}.
class PartitionOfUnity {
  public:
    PartitionOfUnity(FrequencyGrid grid, int k_max);

    int k_max() const { return k_max_; }
    const FrequencyGrid& grid() const { return grid_; }

    // scalar profiles
    double chi(int k, double r) const;
    double chi_sum(double r) const;  // always 1 by construction

    // diagonal multiplier field phi_k = Theta_{chi_k}
    const SpectralField& phi(int k) const { return phi_[k + 1]; }

    // sigma_k f in spectral form: phi_k . F (diagonal action on the row index)
    SpectralField block(const SpectralField& F, int k) const;
    // partial sum S_k f = sum_{i < k} sigma_i f
    SpectralField partial_sum(const SpectralField& F, int k) const;
    // all blocks k = -1..k_max as spatial fields
    std::vector<SpatialField> spatial_blocks(const SpectralField& F,
                                             const TransformEngine& eng) const;

  private:
    FrequencyGrid grid_;
    int k_max_;
    std::vector<SpectralField> phi_;
};

// Besov norm parameters. alpha, beta in [1, inf]; use INFINITY for sup-type.
struct BesovParams {
    double gamma = 0.0;
    double alpha = 2.0;
    double beta = 2.0;
    Weight w = Weight::one();
};

// || g ||_{L^alpha_w} = (int |g|^alpha w^alpha dmu)^{1/alpha}; the weight is
// raised to the power alpha, so alpha = inf degenerates to max |g| w.
double weighted_lp_norm(const SpatialField& g, double alpha, const Weight& w);

// Per-block weighted norms ||sigma_k f||_{L^alpha_w}, k = -1..k_max.
std::vector<double> besov_block_norms(const SpectralField& F, const TransformEngine& eng,
                                      const PartitionOfUnity& pu, double alpha,
                                      const Weight& w);

// l^beta over k of 2^{gamma k} ||sigma_k f||_{L^alpha_w}.
double besov_norm(const SpectralField& F, const TransformEngine& eng,
                  const PartitionOfUnity& pu, const BesovParams& p);
double besov_norm(const SpatialField& f, const TransformEngine& eng,
                  const PartitionOfUnity& pu, const BesovParams& p);
// Combine precomputed block norms.
double besov_combine(const std::vector<double>& block_norms, double gamma, double beta);

// Bernstein ratio || Delta^k f ||_{L^alpha_w} /
//                 (tau^{k + (n+1)(1/beta - 1/alpha)} || f ||_{L^beta_w})
// for f with spectral support in {|lambda|(2|m|+n) < tau}. Throws if the
// support condition fails by more than `support_tol` of the total mass.
double bernstein_ratio(const SpectralField& F, const TransformEngine& eng, int k, double tau,
                       double alpha, double beta, const Weight& w,
                       double support_tol = 1e-8);

}  // namespace heis
