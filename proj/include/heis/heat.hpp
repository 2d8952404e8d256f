#pragma once

#include <functional>

#include "heis/littlewood_paley.hpp"
#include "heis/transform.hpp"

namespace heis {

// Two generator conventions coexist in the analysis:
//   PaperFour:     multiplier e^{-4 t |lambda|(2|m|+n)}  (transform-side Delta)
//   HalfLaplacian: multiplier e^{-2 t |lambda|(2|m|+n)}  = e^{t Delta / 2};
//                  this is the semigroup generated by the closed-form kernel
//                  below and the one the PAM equation uses.
enum class HeatConvention { PaperFour, HalfLaplacian };
inline double generator_scale(HeatConvention c) {
    return c == HeatConvention::PaperFour ? 4.0 : 2.0;
}

// Closed-form heat kernel on H^n (n = 1 here), oscillatory lambda integral
// evaluated adaptively:
//   p_t(q) = (2 pi t)^{-(n+1)} int e^{i lam z / t} (2 lam / sinh 2 lam)^n
//            exp(-(lam/t)|v|^2 coth 2 lam) dlam.
// Its spectral multiplier is e^{-2 t |lambda|(2|m|+n)} (HalfLaplacian).
double gaveau_kernel(double t, const GroupPoint& q);

// Heat kernel in a chosen convention: p^{(c)}_t = gaveau at time
// (generator_scale(c)/2) * t.
double heat_kernel(double t, const GroupPoint& q, HeatConvention c);

// Spectral synthesis of the heat kernel at a point: the inversion integral of
// e^{-s t |lambda|(2m+n)} 1_{m=l}, n = 1. The lambda integral is closed-form
// per m (Laguerre transform); the m series converges O(1/M) and is
// Richardson-extrapolated in the truncation degree.
double spectral_heat_point(double t, const GroupPoint& q, HeatConvention c,
                           int base_degree = 2000);

// Heat semigroup acting on spectral fields: multiplier
// e^{-generator_scale(c) t |lambda|(2m+n)}.
SpectralField semigroup_apply(const SpectralField& F, double t, HeatConvention c);

// Spatial route via the engine (forward -> multiplier -> inverse).
SpatialField semigroup_apply(const SpatialField& f, const TransformEngine& eng, double t,
                             HeatConvention c);

// Convolution route of Eq-type P_t f(p) = int f(q) p_t(q^{-1} p) dmu(q),
// evaluated in dilated form with a fixed unit-time kernel table:
//   P_t f(p) = int f(p (delta_{sqrt(s)} u)^{-1}) p_1(u) dmu(u),  s = scale*t/2.
// `f` is an analytic integrand so no off-grid interpolation enters.
class GaveauConvolver {
  public:
    explicit GaveauConvolver(int nv = 40, int nz = 56, double Lv = 6.0, double Lz = 11.0);
    double apply(const std::function<double(const GroupPoint&)>& f, double t,
                 const GroupPoint& p, HeatConvention c) const;

  private:
    SpatialGrid ugrid_;
    std::vector<double> p1_;
};

// Green kernel G_alpha(p,q) = Gamma(alpha)^{-1} int_0^inf t^{alpha-1}
// p_t(q^{-1} p) dt for 0 < alpha < n+1, p != q, in the PaperFour convention
// (so G_alpha inverts the multiplier (4|lambda|(2m+n))^alpha). The t-integral
// is split logarithmically around t* = |q^{-1}p|_h^2.
double green_kernel(double alpha, const GroupPoint& p, const GroupPoint& q);

// Ratio tables for the smoothing estimate
//   t^{(kappa'-kappa)/2} ||P_t f||_{B^{kappa'}} / ||f||_{B^{kappa}}.
std::vector<double> smoothing_check(const SpectralField& F, const TransformEngine& eng,
                                    const PartitionOfUnity& pu, double kappa, double kappa2,
                                    const std::vector<double>& ts, const BesovParams& base,
                                    HeatConvention c = HeatConvention::PaperFour);

// Ratio tables for the time regularity ||(Id - P_t) f||_{B^{kappa - 2 gamma}}
// / (t^gamma ||f||_{B^kappa}).
std::vector<double> time_regularity_check(const SpectralField& F, const TransformEngine& eng,
                                          const PartitionOfUnity& pu, double kappa,
                                          double gamma, const std::vector<double>& ts,
                                          const BesovParams& base,
                                          HeatConvention c = HeatConvention::PaperFour);

}  // namespace heis
