#pragma once

#include <random>

#include "doctest.h"
#include "heis/grids.hpp"

namespace testutil {

inline heis::GroupPoint random_point(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return heis::GroupPoint(u(rng), u(rng), u(rng));
}

// z-modulated radial Gaussian bump; spectrum concentrated near |lambda| = om
// and geometric Hermite-coefficient decay at every scale.
struct Bump {
    double wv = 1.05, wz = 1.7, om = 3.4, eps = 0.2, amp = 1.0;
    double operator()(double x, double y, double z) const {
        return amp * std::exp(-(x * x + y * y) / (wv * wv) - z * z / (wz * wz)) *
               std::cos(om * z) * (1.0 + eps * x);
    }
};

}  // namespace testutil
