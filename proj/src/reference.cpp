#include "heis/reference.hpp"

#include <cmath>

#include "heis/hermite.hpp"

namespace heis::ref {

SpectralField forward_direct(const SpatialField& f, const FrequencyGrid& g) {
    SpectralField F(g);
    const SpatialGrid& sg = f.grid;
    const double vol = sg.cell_volume();
    for (int s = 0; s < 2; ++s)
        for (int j = 0; j < g.n_lambda(); ++j) {
            const double lam = s == 0 ? g.lam[j] : -g.lam[j];
            for (int m = 0; m <= g.M; ++m)
                for (int l = 0; l <= g.M; ++l) {
                    cplx acc(0.0, 0.0);
                    for (int ix = 0; ix < sg.nx; ++ix)
                        for (int iy = 0; iy < sg.ny; ++iy) {
                            const GroupPoint q(sg.xs[ix], sg.ys[iy], 0.0);
                            const cplx K = wigner_kernel({m}, {l}, lam, q);
                            for (int iz = 0; iz < sg.nz; ++iz) {
                                const double z = sg.zs[iz];
                                const cplx ph(std::cos(lam * z), std::sin(lam * z));
                                acc += std::conj(ph * K) * f.at(ix, iy, iz);
                            }
                        }
                    F.at(s, m, l, j) = acc * vol;
                }
        }
    return F;
}

SpatialField inverse_direct(const SpectralField& F, const SpatialGrid& g) {
    SpatialField out(g);
    const FrequencyGrid& fg = F.grid;
    const double cn = fg.plancherel_const();
    for (int ix = 0; ix < g.nx; ++ix)
        for (int iy = 0; iy < g.ny; ++iy) {
            for (int iz = 0; iz < g.nz; ++iz) {
                cplx acc(0.0, 0.0);
                for (int s = 0; s < 2; ++s)
                    for (int j = 0; j < fg.n_lambda(); ++j) {
                        const double lam = s == 0 ? fg.lam[j] : -fg.lam[j];
                        const double w = cn * std::pow(std::abs(lam), fg.n) * fg.w_dlam[j];
                        const GroupPoint q(g.xs[ix], g.ys[iy], 0.0);
                        const cplx ph(std::cos(lam * g.zs[iz]), std::sin(lam * g.zs[iz]));
                        cplx inner(0.0, 0.0);
                        for (int m = 0; m <= fg.M; ++m)
                            for (int l = 0; l <= fg.M; ++l) {
                                const cplx c = F.at(s, m, l, j);
                                if (c == cplx(0.0, 0.0)) continue;
                                inner += wigner_kernel({m}, {l}, lam, q) * c;
                            }
                        acc += w * ph * inner;
                    }
                out.at(ix, iy, iz) = acc.real();
            }
        }
    return out;
}

SpatialField convolve(const std::function<double(const GroupPoint&)>& f,
                      const std::function<double(const GroupPoint&)>& g,
                      const SpatialGrid& outer, const SpatialGrid& inner) {
    SpatialField out(outer);
    const double vol = inner.cell_volume();
    // inner samples of g, cached
    std::vector<double> gv(inner.size());
    for (int jx = 0; jx < inner.nx; ++jx)
        for (int jy = 0; jy < inner.ny; ++jy)
            for (int jz = 0; jz < inner.nz; ++jz)
                gv[inner.idx(jx, jy, jz)] = g(inner.point(jx, jy, jz));

#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic)
#endif
    for (int ix = 0; ix < outer.nx; ++ix)
        for (int iy = 0; iy < outer.ny; ++iy) {
            GroupPoint w(0.0, 0.0, 0.0);
            for (int iz = 0; iz < outer.nz; ++iz) {
                const double px = outer.xs[ix], py = outer.ys[iy], pz = outer.zs[iz];
                double acc = 0.0;
                for (int jx = 0; jx < inner.nx; ++jx)
                    for (int jy = 0; jy < inner.ny; ++jy) {
                        const double qx = inner.xs[jx], qy = inner.ys[jy];
                        // p q^{-1} = (px-qx, py-qy, pz-qz + 2(qy px - qx py - px py + px py))
                        const double wx = px - qx, wy = py - qy;
                        const double tw = 2.0 * (-qx * py + px * qy);
                        w.x[0] = wx;
                        w.y[0] = wy;
                        const double* grow = &gv[inner.idx(jx, jy, 0)];
                        for (int jz = 0; jz < inner.nz; ++jz) {
                            w.z = pz - inner.zs[jz] + tw;
                            acc += f(w) * grow[jz];
                        }
                    }
                out.at(ix, iy, iz) = acc * vol;
            }
        }
    return out;
}

}  // namespace heis::ref
