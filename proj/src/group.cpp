#include "heis/group.hpp"

namespace heis {

GroupPoint identity(int n) {
    GroupPoint e;
    e.x.assign(n, 0.0);
    e.y.assign(n, 0.0);
    e.z = 0.0;
    return e;
}

double symplectic(const GroupPoint& p, const GroupPoint& q) {
    double s = 0.0;
    for (int i = 0; i < p.n(); ++i) s += q.x[i] * p.y[i] - p.x[i] * q.y[i];
    return s;
}

GroupPoint multiply(const GroupPoint& p, const GroupPoint& q) {
    if (p.n() != q.n()) throw std::invalid_argument("multiply: dimension mismatch");
    GroupPoint r;
    r.x.resize(p.n());
    r.y.resize(p.n());
    for (int i = 0; i < p.n(); ++i) {
        r.x[i] = p.x[i] + q.x[i];
        r.y[i] = p.y[i] + q.y[i];
    }
    r.z = p.z + q.z + 2.0 * symplectic(p, q);
    return r;
}

GroupPoint inverse(const GroupPoint& q) {
    GroupPoint r = q;
    for (int i = 0; i < q.n(); ++i) {
        r.x[i] = -q.x[i];
        r.y[i] = -q.y[i];
    }
    r.z = -q.z;
    return r;
}

GroupPoint dilate(double lambda, const GroupPoint& q) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");
    GroupPoint r = q;
    for (int i = 0; i < q.n(); ++i) {
        r.x[i] = lambda * q.x[i];
        r.y[i] = lambda * q.y[i];
    }
    r.z = lambda * lambda * q.z;
    return r;
}

double homogeneous_norm(const GroupPoint& q) {
    double v2 = 0.0;
    for (int i = 0; i < q.n(); ++i) v2 += q.x[i] * q.x[i] + q.y[i] * q.y[i];
    return std::sqrt(v2 + std::abs(q.z));
}

double cc_distance(const GroupPoint& p, const GroupPoint& q) {
    return homogeneous_norm(multiply(inverse(p), q));
}

double star_norm(const GroupPoint& q) { return star_norm_from_h(homogeneous_norm(q)); }

Weight Weight::exponential(double nu, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("Weight: eta must lie in (0,1)");
    Weight w;
    w.kind = Kind::Exponential;
    w.nu = nu;
    w.eta = eta;
    return w;
}

Weight Weight::poly_bernstein(double b, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("Weight: c must be positive");
    Weight w;
    w.kind = Kind::PolyBernstein;
    w.b = b;
    w.c = c;
    return w;
}

Weight Weight::poly_tilde(double b) {
    Weight w;
    w.kind = Kind::PolyTilde;
    w.b = b;
    return w;
}

double Weight::eval_star(double star) const {
    switch (kind) {
        case Kind::Exponential:
            return std::exp(-nu * std::pow(star, eta));
        case Kind::PolyBernstein:
            return c * (1.0 + std::pow(star, b));
        case Kind::PolyTilde:
            return std::pow(star, -b);
    }
    return 1.0;
}

}  // namespace heis
