#pragma once
// Principal log-gamma on the right half-plane via the Stirling series with
// Bernoulli coefficients and recurrence-based argument lifting.

#include "shq/mp.hh"

namespace shq {

// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2), cached across calls.
const std::vector<rat>& bernoulli_table(unsigned n);

// Principal log Gamma, Re z > 0.  Accuracy tracks the working precision up
// to a small guard; throws std::domain_error on Re z <= 0 and at poles.
cplx log_gamma(const cplx& z);

inline cplx tgamma_c(const cplx& z) { return exp(log_gamma(z)); }

} // namespace shq
