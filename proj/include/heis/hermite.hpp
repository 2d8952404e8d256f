#pragma once

#include <complex>
#include <vector>

#include "heis/group.hpp"

namespace heis {

// Hermite functions Phi_k on R, orthonormal in L^2(R), evaluated with the
// stable three-term recurrence
//   Phi_0(t)    = pi^{-1/4} exp(-t^2/2)
//   Phi_{k+1}   = sqrt(2/(k+1)) t Phi_k - sqrt(k/(k+1)) Phi_{k-1},
// equivalent to the creation-operator normalization but free of k! overflow.
void hermite_all(int M, double t, std::vector<double>& out);
double hermite1d(int k, double t);

// Tensor-product Hermite function Phi_k(x) on R^n, k a multi-index.
double hermite(const std::vector<int>& k, const std::vector<double>& x);

// Rescaled Hermite function Phi_k^lambda(x) = |lambda|^{n/4} Phi_k(sqrt|lambda| x).
double hermite_rescaled(const std::vector<int>& k, double lambda, const std::vector<double>& x);

// Generalized Laguerre polynomial L_k^{type}(x) by recurrence.
double laguerre(int k, int type, double x);

// 1-D Wigner/ambiguity factor
//   A_{m,l}(a, b) = int e^{i b u} Phi_m(u + a) Phi_l(u - a) du,
// evaluated by composite Gauss-Legendre quadrature with node density tied to
// the phase rate |b| and the Hermite oscillation sqrt(2 max(m,l)+1).
std::complex<double> wigner_ambiguity_1d(int m, int l, double a, double b);

// Fourier kernel K_{m,l,lambda}(q) = int e^{2i lambda <y,xi>}
// Phi^lambda_m(x+xi) Phi^lambda_l(-x+xi) dxi. Factorizes over coordinates;
// per coordinate it equals A_{m_j,l_j}(sqrt|lambda| x_j, 2 sgn(lambda) sqrt|lambda| y_j).
// Does not depend on z.
std::complex<double> wigner_kernel(const std::vector<int>& m, const std::vector<int>& l,
                                   double lambda, const GroupPoint& q);

}  // namespace heis
