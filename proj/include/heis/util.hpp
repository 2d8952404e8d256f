#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

// Deterministic pairwise summation. Order of evaluation is fixed by the
// buffer layout, independent of thread count, and more accurate than a
// running sum for long buffers.
double pairwise_sum(std::span<const double> v);

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(std::span<const double>(v.data(), v.size()));
}

// SplitMix64 mixer; used to derive independent per-cell RNG streams from a
// global seed so sampling is reproducible for any thread count.
std::uint64_t splitmix64(std::uint64_t x);

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x9e3779b97f4a7c15ull));
}

// Gauss-Legendre nodes/weights on [-1,1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

// Composite Gauss-Legendre rule on [a,b] with `panels` panels of given order.
struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
};
QuadRule composite_gl(double a, double b, int panels, int order = 8);

// Adaptive 1-D quadrature (adaptive Simpson) for smooth or mildly
// oscillatory integrands on a finite interval.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol = 1e-12, int max_depth = 48);

// C^infty transition: 1 for r <= r0, 0 for r >= r1, monotone in between.
// Built from the standard exp(-1/t) mollifier profile.
double smooth_step_down(double r, double r0, double r1);

// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

// Simple warning sink. Numerical routines report soft conditions (boundary
// mass, truncated spectral tails) here instead of failing.
class WarningSink {
  public:
    using Handler = std::function<void(const std::string&)>;
    static void warn(const std::string& msg);
    static void set_handler(Handler h);
    static void reset();

  private:
    static Handler handler_;
};

}  // namespace heis
