#include "heis/util.hpp"

#include <cstdio>
#include <mutex>

namespace heis {

double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(order, 0.0);
    weights.assign(order, 0.0);
    // Newton iteration on Legendre polynomials.
    for (int i = 0; i < order; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = order * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

QuadRule composite_gl(double a, double b, int panels, int order) {
    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);
    QuadRule rule;
    rule.x.reserve(static_cast<std::size_t>(panels) * order);
    rule.w.reserve(static_cast<std::size_t>(panels) * order);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        for (int i = 0; i < order; ++i) {
            rule.x.push_back(mid + 0.5 * h * gx[i]);
            rule.w.push_back(0.5 * h * gw[i]);
        }
    }
    return rule;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol, int max_depth) {
    // Seed with a few panels so narrow features are not missed by the first split.
    const int seed_panels = 8;
    double total = 0.0;
    const double h = (b - a) / seed_panels;
    for (int p = 0; p < seed_panels; ++p) {
        const double lo = a + p * h, hi = lo + h;
        const double m = 0.5 * (lo + hi);
        const double fa = f(lo), fb = f(hi), fm = f(m);
        const double whole = simpson(f, lo, fa, hi, fb, m, fm);
        total += adaptive_step(f, lo, fa, hi, fb, m, fm, whole,
                               std::max(abs_tol, rel_tol * std::abs(whole)) / seed_panels,
                               max_depth);
    }
    return total;
}

double smooth_step_down(double r, double r0, double r1) {
    if (r <= r0) return 1.0;
    if (r >= r1) return 0.0;
    const double t = (r - r0) / (r1 - r0);
    const auto h = [](double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; };
    return h(1.0 - t) / (h(t) + h(1.0 - t));
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_slope: need >= 2 points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

WarningSink::Handler WarningSink::handler_;
namespace {
std::mutex warn_mutex;
}

void WarningSink::warn(const std::string& msg) {
    std::lock_guard<std::mutex> lock(warn_mutex);
    if (handler_) {
        handler_(msg);
    } else {
        std::fprintf(stderr, "[heis] warning: %s\n", msg.c_str());
    }
}

void WarningSink::set_handler(Handler h) {
    std::lock_guard<std::mutex> lock(warn_mutex);
    handler_ = std::move(h);
}

void WarningSink::reset() {
    std::lock_guard<std::mutex> lock(warn_mutex);
    handler_ = nullptr;
}

}  // namespace heis
