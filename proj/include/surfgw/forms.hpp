#ifndef SURFGW_FORMS_HPP
#define SURFGW_FORMS_HPP

#include "surfgw/laurent.hpp"

namespace surfgw {

// Truncation request: coefficients are computed for q-exponent < qOrder
// and (where applicable) z-exponent < zOrder.
struct FormRequest {
    long qOrder = 1;
    long zOrder = 1;
};

// Bernoulli number B_n by the standard recurrence, cached.
Rat bernoulli(long n);

// Classical Eisenstein series
//   G_{2k}(q) = -B_{2k}/(2*2k) + sum_{n>=1} sigma_{2k-1}(n) q^n.
QLaurent eisenstein(long k2, const FormRequest& req);

// Discriminant modular form Delta = q prod_{n>=1} (1-q^n)^24.
QLaurent delta(const FormRequest& req);

// Normalized odd Jacobi theta function
//   Theta(z,q) = z exp(-2 sum_{k>=1} G_{2k} z^{2k}/(2k)!).
BiSeries theta(const FormRequest& req);

enum class SMethod { LogDerivative, DivisorSum };

// S(z,q) = -q d/dq log Theta
//        = sum_{n>=1} sum_{d|n} (n/d)(e^{dz} - 2 + e^{-dz}) q^n.
BiSeries sSeries(const FormRequest& req, SMethod method = SMethod::LogDerivative);

// phi_m(z,q) = Res_{x=0} (Theta(x+z,q)/Theta(x,q))^m.
// Zero for all m <= 0.
BiSeries phi(long m, const FormRequest& req);

// phi_{m,n}(z,q), defined by
//   Dq phi_{m,n} = m n phi_m phi_n (Dq^2 Theta)/Theta + (Dq phi_m)(Dq phi_n)
// together with phi_{m,n} = O(q).
BiSeries phi2(long m, long n, const FormRequest& req);

// The ODE right-hand side above, built from independently supplied
// phi_m and phi_n (used for residual checks).
BiSeries phi2Rhs(const BiSeries& phiM, const BiSeries& phiN, long m, long n,
                 const FormRequest& req);

// Termwise q-integration of a series that is O(q): coefficient at q^k is
// divided by k. Throws InconsistentODE if any coefficient at q^k, k <= 0,
// is nonzero.
BiSeries integrateDq(const BiSeries& a);

} // namespace surfgw

#endif
