#pragma once

#include <functional>

#include "heis/grids.hpp"

namespace heis::ref {

// Straightforward single-threaded transforms evaluating the kernel
// K_{m,l,lambda} point by point from its definition. O((M+1)^2 * grid *
// lambda * xi) -- intended as a correctness oracle on tiny grids only.
SpectralField forward_direct(const SpatialField& f, const FrequencyGrid& g);
SpatialField inverse_direct(const SpectralField& F, const SpatialGrid& g);

// Group convolution (f * g)(p) = int f(p q^{-1}) g(q) dmu(q) of two analytic
// integrands, quadratured on `inner`, sampled on `outer`.
SpatialField convolve(const std::function<double(const GroupPoint&)>& f,
                      const std::function<double(const GroupPoint&)>& g,
                      const SpatialGrid& outer, const SpatialGrid& inner);

}  // namespace heis::ref
