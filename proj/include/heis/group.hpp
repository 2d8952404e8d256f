#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace heis {

// Point q = (x, y, z) of the Heisenberg group H^n, identified with
// R^{2n} x R under the twisted multiplication.
struct GroupPoint {
    std::vector<double> x;
    std::vector<double> y;
    double z = 0.0;

    GroupPoint() = default;
    GroupPoint(std::vector<double> x_, std::vector<double> y_, double z_)
        : x(std::move(x_)), y(std::move(y_)), z(z_) {
        if (x.size() != y.size()) throw std::invalid_argument("GroupPoint: dim mismatch");
    }
    // n = 1 convenience.
    GroupPoint(double x1, double y1, double z1) : x{x1}, y{y1}, z(z1) {}

    int n() const { return static_cast<int>(x.size()); }
};

GroupPoint identity(int n);
GroupPoint multiply(const GroupPoint& p, const GroupPoint& q);
GroupPoint inverse(const GroupPoint& q);
GroupPoint dilate(double lambda, const GroupPoint& q);

// Symplectic form omega((x,y),(x',y')) = sum_i x'_i y_i - x_i y'_i.
double symplectic(const GroupPoint& p, const GroupPoint& q);

// |q|_h = (|x|^2 + |y|^2 + |z|)^{1/2}.
double homogeneous_norm(const GroupPoint& q);

// Carnot-Caratheodory distance surrogate: d_cc(p,q) := |p^{-1} q|_h.
// The exact geodesic distance is equivalent to this quasi-norm; downstream
// weights only depend on the equivalence class, so the constant is fixed to 1.
double cc_distance(const GroupPoint& p, const GroupPoint& q);

// |q|_* = sqrt(1 + d_cc(e,q)^2). Satisfies |e|_* = 1 and the triangle
// inequality up to the norm-equivalence constant.
double star_norm(const GroupPoint& q);
inline double star_norm_from_h(double hnorm) { return std::sqrt(1.0 + hnorm * hnorm); }

// Weight functions on H^n. Three forms are used:
//   Exponential   w_nu(q)   = exp(-nu |q|_*^eta), 0 < eta < 1
//   PolyBernstein rho_b(q)  = c (1 + |q|_*^b)
//   PolyTilde     rho(q)    = |q|_*^{-b}
struct Weight {
    enum class Kind { Exponential, PolyBernstein, PolyTilde };

    Kind kind = Kind::Exponential;
    double nu = 0.0;
    double eta = 0.5;
    double b = 0.0;
    double c = 1.0;

    static Weight exponential(double nu, double eta);
    static Weight poly_bernstein(double b, double c = 1.0);
    static Weight poly_tilde(double b);
    static Weight one() { return exponential(0.0, 0.5); }

    // Evaluate from the precomputed pseudo-norm |q|_* (grid fast path).
    double eval_star(double star) const;
    double operator()(const GroupPoint& q) const { return eval_star(star_norm(q)); }

    // Pointwise product of two weights of the same evaluation model is not
    // closed in this family; besov code multiplies eval_star values directly.
};

}  // namespace heis
