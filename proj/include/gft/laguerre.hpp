#pragma once

#include <vector>

#include "gft/types.hpp"

namespace gft {

// The pair (n, alpha) identifying the degree-n polynomial M_{n,alpha} with
// M(0) = 1, coefficients c_k = (-1)^k n! / ((1+alpha)_k (n-k)! k!).
struct PolynomialSpec {
  int degree = 0;     // n >= 0
  double alpha = 0.0; // alpha > -1
};

// Throws std::invalid_argument when degree < 0, alpha <= -1, or alpha is not
// finite.
void validate(const PolynomialSpec& spec);

// Rising factorial x(x+1)...(x+k-1) as an iterated product (never via gamma
// quotients). k = 0 gives 1.
double pochhammer(double x, int k);

// Coefficients c_0..c_n (ascending powers) via the multiplicative update
// c_{k+1} = -c_k (n-k) / ((alpha+1+k)(k+1)); c_0 = 1. Exact cancellation
// structure keeps every c_k a correctly-rounded rational for moderate n.
std::vector<double> coefficients(const PolynomialSpec& spec);

// Coefficients of the order-th formal derivative (empty when the derivative
// is identically zero, i.e. order > deg(c)).
std::vector<double> derivative_coefficients(std::vector<double> c, int order);

// Value of the derivative_order-th derivative of M_{n,alpha} at z; orders
// above the degree return 0.
cplx eval(const PolynomialSpec& spec, cplx z, int derivative_order = 0);

// z M'' + (alpha+1-z) M' + n M; identically zero in exact arithmetic.
cplx ode_residual(const PolynomialSpec& spec, cplx z);

// M'_{n,alpha}(z) + (n/(1+alpha)) M_{n-1,alpha+1}(z); identically zero.
// Requires degree >= 1 (throws std::invalid_argument otherwise).
cplx derivative_identity_residual(const PolynomialSpec& spec, cplx z);

// Terminating Kummer series sum_{k=0}^{n} (-n)_k / ((alpha+1)_k k!) z^k,
// accumulated term-by-term (an evaluation route independent of Horner on the
// recurrence coefficients).
cplx hypergeometric_eval(int n, double alpha, cplx z);

// M_{n,-1/2}(z^2) - (-1)^n n!/(2n)! H_{2n}(z), with H_k from the recurrence
// H_0 = 1, H_1 = 2z, H_{k+1} = 2z H_k - 2k H_{k-1}; identically zero.
cplx hermite_relation_residual(int n, cplx z);

} // namespace gft
