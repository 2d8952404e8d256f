#pragma once

#include <functional>

#include "heis/grids.hpp"

namespace heis {

struct TransformOptions {
    double eta_xy = 0.92;       // fraction of the xy Nyquist rate the kernel may use
    double eta_z = 0.95;        // fraction of the z Nyquist rate for |lambda|
    double du_factor = 2.6;     // xi-quadrature oversampling
    double boundary_warn = 1e-6;
    double tail_warn = 1e-6;    // relative spectral mass allowed in the masked region
    bool warnings = true;
};

// Projective Fourier transform between a spatial grid and a truncated
// frequency grid (n = 1). The xi-integral of the kernel K_{m,l,lambda} is
// folded into the quadrature so the cost per lambda node is
// O(nx * nxi * ((M+1)^2 + ny)) instead of a kernel table per (m,l,x,y).
//
// Coefficients whose kernel oscillates beyond what the grid resolves
// (2 sqrt(|lambda|(2m+1)) above the xy Nyquist rate, or |lambda| above the
// z Nyquist rate) are not representable on the grid and are set to zero;
// fields with energy there trigger a warning, not an error.
class TransformEngine {
  public:
    TransformEngine(SpatialGrid sgrid, FrequencyGrid fgrid, TransformOptions opt = {});

    SpectralField forward(const SpatialField& f) const;
    SpatialField inverse(const SpectralField& F) const;

    // Highest Hermite degree resolvable at lambda (or -1 if none).
    int mcap(double lam) const;
    bool lambda_resolvable(double lam) const;

    // Fraction of |F|^2 mass (Plancherel-weighted) in the masked region.
    double masked_mass_fraction(const SpectralField& F) const;

    const SpatialGrid& sgrid() const { return sgrid_; }
    const FrequencyGrid& fgrid() const { return fgrid_; }
    const TransformOptions& options() const { return opt_; }

  private:
    SpatialGrid sgrid_;
    FrequencyGrid fgrid_;
    TransformOptions opt_;

    struct XiRule {
        std::vector<double> u, w;
    };
    XiRule xi_rule(double lam, int mc) const;

    friend class BenchAccess;
};

// ||F||^2 in L^2(H^n) by the Plancherel formula on the truncated grid.
double plancherel_norm_sq(const SpectralField& F);

// Diagonal spectral multiplier by a function of the gauge |lambda|(2m+n).
// Applies to every (m, l) pair through the row index m (the convolution
// algebra acts on the left index).
SpectralField apply_gauge_multiplier(const SpectralField& F,
                                     const std::function<double(double)>& mult);

// Fractional Laplacian multiplier (4|lambda|(2m+n))^power; `negative_sign`
// multiplies by (-1)^N for the signed integer power Delta^N.
SpectralField laplacian_multiplier(const SpectralField& F, double power,
                                   bool negative_sign = false);

// Convolution product: (F . G)(m,l,lambda) = sum_j F(m,j,lambda) G(j,l,lambda).
SpectralField spectral_multiply(const SpectralField& F, const SpectralField& G);

// Metrics on the frequency set.
double dhat(const std::vector<int>& m, const std::vector<int>& l, double lam,
            const std::vector<int>& m2, const std::vector<int>& l2, double lam2);
double dhat0(const std::vector<int>& m, const std::vector<int>& l, double lam);

// Difference operators on spectral fields. Indices outside [0, M] follow the
// convention g = 0 (below) resp. truncation (above).
SpectralField delta_hat(const SpectralField& F);
SpectralField dlambda_hat(const SpectralField& F);

// Diagonal multiplier field Theta(m,m,lambda) = profile(|lambda|(2m+n)).
SpectralField theta_multiplier(const FrequencyGrid& g,
                               const std::function<double(double)>& profile);

// Point evaluation of the inverse transform of a diagonal field, using the
// closed Laguerre form of the diagonal kernel (n = 1):
//   K_{m,m,lambda}(x,y) = e^{-|lambda||v|^2} L_m(2 |lambda| |v|^2).
double point_inverse_diagonal(const SpectralField& F, const GroupPoint& q);

// Same evaluation for an analytic diagonal symbol g(m, lambda) integrated
// over the grid nodes (both lambda signs).
double point_inverse_diagonal(const FrequencyGrid& g,
                              const std::function<double(int, double)>& symbol,
                              const GroupPoint& q);

}  // namespace heis
