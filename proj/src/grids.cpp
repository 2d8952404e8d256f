#include "heis/grids.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heis/util.hpp"

namespace heis {

SpatialGrid::SpatialGrid(int nx_, int ny_, int nz_, double L_, double Lz_)
    : nx(nx_), ny(ny_), nz(nz_), L(L_), Lz(Lz_) {
    if (nx <= 0 || ny <= 0 || nz <= 0 || L <= 0.0 || Lz <= 0.0)
        throw std::invalid_argument("SpatialGrid: sizes and extents must be positive");
    xs.resize(nx);
    ys.resize(ny);
    zs.resize(nz);
    for (int i = 0; i < nx; ++i) xs[i] = -L + (i + 0.5) * hx();
    for (int i = 0; i < ny; ++i) ys[i] = -L + (i + 0.5) * hy();
    for (int i = 0; i < nz; ++i) zs[i] = -Lz + (i + 0.5) * hz();
}

bool SpatialGrid::same_as(const SpatialGrid& o) const {
    return nx == o.nx && ny == o.ny && nz == o.nz && L == o.L && Lz == o.Lz;
}

SpatialField SpatialField::from_function(
    const SpatialGrid& g, const std::function<double(double, double, double)>& f) {
    SpatialField out(g);
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.ny; ++iy)
            for (int iz = 0; iz < g.nz; ++iz) out.at(ix, iy, iz) = f(g.xs[ix], g.ys[iy], g.zs[iz]);
    return out;
}

double SpatialField::integral() const { return pairwise_sum(v) * grid.cell_volume(); }

double SpatialField::l2_norm_sq() const {
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sq[i] = v[i] * v[i];
    return pairwise_sum(sq) * grid.cell_volume();
}

double SpatialField::max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double SpatialField::boundary_max_abs() const {
    double m = 0.0;
    for (int ix = 0; ix < grid.nx; ++ix)
        for (int iy = 0; iy < grid.ny; ++iy)
            for (int iz = 0; iz < grid.nz; ++iz) {
                const bool edge = ix == 0 || iy == 0 || iz == 0 || ix == grid.nx - 1 ||
                                  iy == grid.ny - 1 || iz == grid.nz - 1;
                if (edge) m = std::max(m, std::abs(at(ix, iy, iz)));
            }
    return m;
}

SpatialField& SpatialField::operator+=(const SpatialField& o) {
    if (!grid.same_as(o.grid)) throw std::invalid_argument("SpatialField: grid mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
}

SpatialField& SpatialField::operator-=(const SpatialField& o) {
    if (!grid.same_as(o.grid)) throw std::invalid_argument("SpatialField: grid mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
}

SpatialField& SpatialField::operator*=(double c) {
    for (double& x : v) x *= c;
    return *this;
}

SpatialField operator*(const SpatialField& a, const SpatialField& b) {
    if (!a.grid.same_as(b.grid)) throw std::invalid_argument("SpatialField: grid mismatch");
    SpatialField out(a.grid);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i] * b.v[i];
    return out;
}

FrequencyGrid FrequencyGrid::log_gauss(int M, double lam_min, double lam_max, int panels,
                                       int order) {
    if (!(lam_min > 0.0 && lam_max > lam_min)) throw std::invalid_argument("FrequencyGrid: bad lambda range");
    if (M < 0 || panels <= 0) throw std::invalid_argument("FrequencyGrid: bad sizes");
    FrequencyGrid g;
    g.n = 1;
    g.M = M;
    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);
    const double slo = std::log(lam_min), shi = std::log(lam_max);
    const double h = (shi - slo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = slo + (p + 0.5) * h;
        for (int i = 0; i < order; ++i) {
            const double s = mid + 0.5 * h * gx[i];
            const double lam = std::exp(s);
            g.lam.push_back(lam);
            g.w_dlam.push_back(0.5 * h * gw[i] * lam);  // dlam = lam ds
        }
    }
    return g;
}

FrequencyGrid FrequencyGrid::for_blocks(int M, int k_max, int panels_per_side, int order) {
    const double lam_min = std::pow(2.0, -(k_max + 2));
    const double lam_max = (8.0 / 3.0) * std::pow(2.0, k_max + 2);
    return log_gauss(M, lam_min, lam_max, panels_per_side, order);
}

FrequencyGrid FrequencyGrid::uniform(int M, double lam_min, double lam_max, int count) {
    if (!(lam_min > 0.0 && lam_max > lam_min) || count < 2)
        throw std::invalid_argument("FrequencyGrid: bad uniform grid");
    FrequencyGrid g;
    g.n = 1;
    g.M = M;
    const double h = (lam_max - lam_min) / count;
    for (int i = 0; i < count; ++i) {
        g.lam.push_back(lam_min + (i + 0.5) * h);
        g.w_dlam.push_back(h);
    }
    return g;
}

double FrequencyGrid::plancherel_const() const {
    return std::pow(2.0, n - 1) / std::pow(M_PI, n + 1);
}

bool FrequencyGrid::same_as(const FrequencyGrid& o) const {
    return n == o.n && M == o.M && lam == o.lam && w_dlam == o.w_dlam;
}

SpectralField SpectralField::diagonal_from_gauge(const FrequencyGrid& g,
                                                 const std::function<double(double)>& profile) {
    SpectralField F(g, true);
    for (int s = 0; s < 2; ++s)
        for (int m = 0; m <= g.M; ++m)
            for (int j = 0; j < g.n_lambda(); ++j)
                F.at(s, m, m, j) = profile(g.gauge(m, j));
    return F;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    if (!grid.same_as(o.grid)) throw std::invalid_argument("SpectralField: grid mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    diagonal = diagonal && o.diagonal;
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    if (!grid.same_as(o.grid)) throw std::invalid_argument("SpectralField: grid mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    diagonal = diagonal && o.diagonal;
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (cplx& x : c) x *= a;
    return *this;
}

SpectralField& SpectralField::operator*=(cplx a) {
    for (cplx& x : c) x *= a;
    return *this;
}

double SpectralField::max_abs() const {
    double m = 0.0;
    for (const cplx& x : c) m = std::max(m, std::abs(x));
    return m;
}

void SpectralField::hermitian_symmetrize() {
    const int nm = grid.n_m(), nl = grid.n_lambda();
    for (int m = 0; m < nm; ++m)
        for (int l = 0; l < nm; ++l)
            for (int j = 0; j < nl; ++j) {
                const cplx avg = 0.5 * (at(0, m, l, j) + std::conj(at(1, m, l, j)));
                at(0, m, l, j) = avg;
                at(1, m, l, j) = std::conj(avg);
            }
}

double SpectralField::hermitian_defect() const {
    const int nm = grid.n_m(), nl = grid.n_lambda();
    double d = 0.0;
    for (int m = 0; m < nm; ++m)
        for (int l = 0; l < nm; ++l)
            for (int j = 0; j < nl; ++j)
                d = std::max(d, std::abs(at(0, m, l, j) - std::conj(at(1, m, l, j))));
    return d;
}

}  // namespace heis
