#pragma once
// Root extraction for H_n and critical-line verification.

#include "shq/analysis.hh"
#include "shq/sheffer.hh"

#include <vector>

namespace shq {

// All roots of sum c[k] x^k, c.back() != 0, by the Aberth simultaneous
// iteration with deterministic initial points.  Exact zero roots are deflated
// first.  Escalates the working precision internally until the normalized
// residual at every root is below 10^{-bits/8}.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs, unsigned bits);

enum class zero_class { trivial_zero, trivial_one, trivial_half, on_line, off_line };

struct zero_info {
    cplx x;
    zero_class cls;
    real line_distance; // |Re x - 1/2|
};

struct line_report {
    unsigned n = 0;
    std::vector<zero_info> zeros;
    unsigned on_line = 0, off_line = 0, trivial = 0;
    bool symmetric = false; // multiset closed under x -> 1-x and conjugation
    real max_line_distance; // over nontrivial zeros
    real vieta_gap;         // |sum of roots + c_{n-1}/c_n| / |c_{n-1}/c_n|
    real residual_max;      // max normalized |H(root)|
};

// Roots of H_n for the given Q, classified against the line Re x = 1/2 with
// the given tolerance.  bits is the rooting precision.
line_report critical_line_report(const quadratic_q& q, unsigned n, unsigned bits,
                                 const real& tol);

struct count_result {
    unsigned n = 0;
    unsigned sign_changes = 0;
    unsigned grid = 0;         // t samples in the refined pass
    bool refined_stable = false; // count unchanged after doubling the grid
    bool scale_warning = false;  // adjacent samples differ by more than 1e6x
    real tmax;
};

// Sign changes of the real number carrying pi H_n(1/2 + int) over a uniform
// t grid on (0, tmax], refined once by doubling.
count_result line_zero_count(const critical_data& cd, unsigned n, unsigned grid,
                             const real& tmax);

} // namespace shq
