#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "heis/group.hpp"

namespace heis {

using cplx = std::complex<double>;

// Cell-centered rectangular grid over [-L,L]^2 x [-Lz,Lz] with Lebesgue
// (= Haar) quadrature weights. Spatial grids are n = 1 only; see README.
struct SpatialGrid {
    int nx = 0, ny = 0, nz = 0;
    double L = 0.0, Lz = 0.0;
    std::vector<double> xs, ys, zs;

    SpatialGrid() = default;
    SpatialGrid(int nx_, int ny_, int nz_, double L_, double Lz_);

    double hx() const { return 2.0 * L / nx; }
    double hy() const { return 2.0 * L / ny; }
    double hz() const { return 2.0 * Lz / nz; }
    double cell_volume() const { return hx() * hy() * hz(); }
    std::size_t size() const { return std::size_t(nx) * ny * nz; }
    std::size_t idx(int ix, int iy, int iz) const {
        return (std::size_t(ix) * ny + iy) * nz + iz;
    }
    double nyquist_xy() const { return M_PI / hx(); }
    double nyquist_z() const { return M_PI / hz(); }
    bool same_as(const SpatialGrid& o) const;

    GroupPoint point(int ix, int iy, int iz) const {
        return GroupPoint(xs[ix], ys[iy], zs[iz]);
    }
};

// Real scalar field sampled on a SpatialGrid.
struct SpatialField {
    SpatialGrid grid;
    std::vector<double> v;

    SpatialField() = default;
    explicit SpatialField(const SpatialGrid& g) : grid(g), v(g.size(), 0.0) {}

    double& at(int ix, int iy, int iz) { return v[grid.idx(ix, iy, iz)]; }
    double at(int ix, int iy, int iz) const { return v[grid.idx(ix, iy, iz)]; }

    static SpatialField from_function(const SpatialGrid& g,
                                      const std::function<double(double, double, double)>& f);

    double integral() const;                 // \int f dmu by grid quadrature
    double l2_norm_sq() const;               // \int f^2 dmu
    double max_abs() const;
    double boundary_max_abs() const;         // max |f| over the outermost cell layer

    SpatialField& operator+=(const SpatialField& o);
    SpatialField& operator-=(const SpatialField& o);
    SpatialField& operator*=(double c);
    friend SpatialField operator*(const SpatialField& a, const SpatialField& b);  // pointwise
};

// Truncated frequency set of the projective transform: indices (m, l, lambda)
// with m, l <= M and lambda on a symmetric log-Gauss grid on
// [-Lam, -lam_min] U [lam_min, Lam]. Weights come in two flavours:
//   w_dlam       -- plain d(lambda) quadrature weight of the positive node
//   w_plancherel -- (2^{n-1}/pi^{n+1}) |lambda|^n w_dlam  (one sign only)
struct FrequencyGrid {
    int n = 1;
    int M = 0;
    std::vector<double> lam;     // positive nodes, ascending
    std::vector<double> w_dlam;  // d(lambda) weights for the positive nodes

    FrequencyGrid() = default;
    // Log-spaced Gauss-Legendre panels between lam_min and lam_max.
    static FrequencyGrid log_gauss(int M, double lam_min, double lam_max, int panels,
                                   int order = 4);
    // Grid sized for a Littlewood-Paley analysis up to scale 2^k_max, per the
    // dyadic block supports: lam_min = 2^{-k_max-2}, Lam = (8/3) 2^{k_max+2}.
    static FrequencyGrid for_blocks(int M, int k_max, int panels_per_side, int order = 4);
    // Uniform lambda spacing (used where centered finite differences in
    // lambda are required).
    static FrequencyGrid uniform(int M, double lam_min, double lam_max, int count);

    int n_lambda() const { return static_cast<int>(lam.size()); }
    int n_m() const { return M + 1; }
    double plancherel_const() const;  // 2^{n-1} / pi^{n+1}
    double w_plancherel(int j) const { return plancherel_const() * std::pow(lam[j], n) * w_dlam[j]; }
    bool same_as(const FrequencyGrid& o) const;

    // gauge |lambda|(2m+n) at node j, degree m
    double gauge(int m, int j) const { return lam[j] * (2.0 * m + n); }
};

// Complex coefficients f^(m, l, lambda) on a FrequencyGrid, n = 1. Both signs
// of lambda are stored; index s = 0 is lambda > 0, s = 1 is the mirrored
// negative node -lam[j].
struct SpectralField {
    FrequencyGrid grid;
    bool diagonal = false;  // supported on {m = l}; off-diagonal entries are exactly 0
    std::vector<cplx> c;    // layout: ((s*(M+1) + m)*(M+1) + l)*nLam + j

    SpectralField() = default;
    explicit SpectralField(const FrequencyGrid& g, bool diag = false)
        : grid(g), diagonal(diag),
          c(2 * std::size_t(g.n_m()) * g.n_m() * g.n_lambda(), cplx(0.0, 0.0)) {}

    std::size_t idx(int s, int m, int l, int j) const {
        return ((std::size_t(s) * grid.n_m() + m) * grid.n_m() + l) * grid.n_lambda() + j;
    }
    cplx& at(int s, int m, int l, int j) { return c[idx(s, m, l, j)]; }
    cplx at(int s, int m, int l, int j) const { return c[idx(s, m, l, j)]; }
    double lambda_of(int s, int j) const { return s == 0 ? grid.lam[j] : -grid.lam[j]; }

    // Build a diagonal field Theta(m,m,lambda) = profile(|lambda| (2m+n)).
    static SpectralField diagonal_from_gauge(const FrequencyGrid& g,
                                             const std::function<double(double)>& profile);

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double a);
    SpectralField& operator*=(cplx a);

    double max_abs() const;
    // Enforce f^(m,l,-lambda) = conj f^(m,l,lambda) (reality of the spatial field).
    void hermitian_symmetrize();
    double hermitian_defect() const;
};

}  // namespace heis
