#include "heis/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heis/util.hpp"

namespace heis {

void hermite_all(int M, double t, std::vector<double>& out) {
    out.resize(M + 1);
    out[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * t * t);
    if (M >= 1) out[1] = std::sqrt(2.0) * t * out[0];
    for (int k = 1; k < M; ++k) {
        out[k + 1] = std::sqrt(2.0 / (k + 1)) * t * out[k] - std::sqrt(double(k) / (k + 1)) * out[k - 1];
    }
}

double hermite1d(int k, double t) {
    if (k < 0) throw std::invalid_argument("hermite1d: negative degree");
    std::vector<double> buf;
    hermite_all(k, t, buf);
    return buf[k];
}

double hermite(const std::vector<int>& k, const std::vector<double>& x) {
    if (k.size() != x.size()) throw std::invalid_argument("hermite: index/point dim mismatch");
    double prod = 1.0;
    for (std::size_t j = 0; j < k.size(); ++j) prod *= hermite1d(k[j], x[j]);
    return prod;
}

double hermite_rescaled(const std::vector<int>& k, double lambda, const std::vector<double>& x) {
    if (lambda == 0.0) throw std::invalid_argument("hermite_rescaled: lambda must be nonzero");
    const double s = std::sqrt(std::abs(lambda));
    std::vector<double> xs(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) xs[j] = s * x[j];
    return std::pow(std::abs(lambda), 0.25 * x.size()) * hermite(k, xs);
}

double laguerre(int k, int type, double x) {
    if (k < 0 || type < 0) throw std::invalid_argument("laguerre: negative order/type");
    if (k == 0) return 1.0;
    // long double: the recurrence cancels several digits for x >> k
    long double lm1 = 1.0L;
    long double l = 1.0L + type - (long double)x;
    for (int i = 1; i < k; ++i) {
        long double lp1 = ((2 * i + 1 + type - (long double)x) * l - (i + type) * lm1) / (i + 1);
        lm1 = l;
        l = lp1;
    }
    return static_cast<double>(l);
}

std::complex<double> wigner_ambiguity_1d(int m, int l, double a, double b) {
    // Effective support: |u+a| <= R_m and |u-a| <= R_l with R_k = sqrt(2k+1)+7.
    const double Rm = std::sqrt(2.0 * m + 1.0) + 7.0;
    const double Rl = std::sqrt(2.0 * l + 1.0) + 7.0;
    const double lo = std::max(-a - Rm, a - Rl);
    const double hi = std::min(-a + Rm, a + Rl);
    if (lo >= hi) return {0.0, 0.0};

    const double herm_rate = std::sqrt(2.0 * std::max(m, l) + 1.0);
    const double rate = std::abs(b) + herm_rate + 2.0;
    const int order = 8;
    int panels = static_cast<int>(std::ceil((hi - lo) * rate / (2.0 * M_PI)));
    panels = std::clamp(panels * 2, 4, 4000);

    QuadRule rule = composite_gl(lo, hi, panels, order);
    std::vector<double> pa, pb;
    double re = 0.0, im = 0.0;
    const int Mx = std::max(m, l);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double u = rule.x[i];
        hermite_all(Mx, u + a, pa);
        hermite_all(Mx, u - a, pb);
        const double g = pa[m] * pb[l] * rule.w[i];
        re += g * std::cos(b * u);
        im += g * std::sin(b * u);
    }
    return {re, im};
}

std::complex<double> wigner_kernel(const std::vector<int>& m, const std::vector<int>& l,
                                   double lambda, const GroupPoint& q) {
    if (lambda == 0.0) throw std::invalid_argument("wigner_kernel: lambda must be nonzero");
    if (static_cast<int>(m.size()) != q.n() || static_cast<int>(l.size()) != q.n())
        throw std::invalid_argument("wigner_kernel: dimension mismatch");
    const double s = std::sqrt(std::abs(lambda));
    const double sgn = lambda > 0.0 ? 1.0 : -1.0;
    std::complex<double> prod(1.0, 0.0);
    for (int j = 0; j < q.n(); ++j) {
        prod *= wigner_ambiguity_1d(m[j], l[j], s * q.x[j], 2.0 * sgn * s * q.y[j]);
    }
    return prod;
}

}  // namespace heis
