#pragma once
// Critical-point geometry, the branch-limit contour integral, and the three
// asymptotic approximants (interior saddle, boundary layers, small t).
//
// Conventions, fixed once for the whole module:
//   x = 1/2 + i n t,  J = integral of f over the loop around [z1, oo),
//   pi H_n(1/2+int) = n! Im J   (n even)
//                   = -i n! Re J (n odd).
// All complex powers and logarithms are principal unless a function says
// otherwise.  The working precision of each routine is set internally; the
// caller's precision is restored on return.

#include "shq/quadrature.hh"

#include <string>
#include <vector>

namespace shq {

// Gate constants and engine knobs.  The source ranges behind the gates are
// asymptotic statements with no constants; these are configuration values,
// not claims.
struct analysis_config {
    double smallt_gate_mult = 10.0; // t <= mult ln^4 n / n
    double layer_lo_mult = 1.0;     // mult n^{-2/3} <= tau
    double layer_hi_mult = 1.0;     // tau <= mult ln^2 n n^{-2/3}
    double saddle_lo_mult = 2.0;    // t >= mult n^{-1/2}
    double saddle_hi_mult = 8.0;    // T - t >= mult n^{-2/3}
    bool enforce_gates = true;

    unsigned nodes_per_chunk = 48;
    double chunk_factor = 1.3; // chunks per estimated oscillation cycle
    unsigned endpoint_terms = 48;
    unsigned rel_bits = 40;    // requested relative accuracy of the integral
    unsigned max_escalations = 3;

    double window_mult = 7.0;  // layer window |v| <= mult ln n / n^{1/3}
};

struct critical_data {
    real z1, z2;
    real T1, T2, T, E; // E = z1^2 - 6 z1 z2 + z2^2
    bool t_is_t2;      // regime flag: T = T2 iff E < 0
};

// Requires z2 > z1 > 0 and z1 != z2.
critical_data thresholds(const real& z1, const real& z2);

// Saddles in the closed first quadrant; principal square roots throughout.
// Requires 0 <= t <= T.
cplx zeta1(const critical_data& cd, const real& t);
cplx zeta2(const critical_data& cd, const real& t);

// |quartic(z)| / (sum of term magnitudes) for the critical-point equation.
real quartic_residual(const critical_data& cd, const cplx& z, const real& t);

cplx phi(const critical_data& cd, const cplx& z, const real& t);
cplx phi_z(const critical_data& cd, const cplx& z, const real& t);
cplx phi_zz(const critical_data& cd, const cplx& z, const real& t);
cplx phi_zzz(const critical_data& cd, const cplx& z, const real& t);
cplx phi_zt(const critical_data& cd, const cplx& z); // t-independent
cplx psi_f(const critical_data& cd, const cplx& z);

struct phi_eval {
    cplx value, dz, dz2, dz3, psi;
};
phi_eval phi_at(const critical_data& cd, const cplx& z, const real& t);

struct contour_result {
    cplx integral;  // J
    real est_error; // quadrature + series truncation + tail bound
    unsigned n;
    real t;
    unsigned bits;  // working precision that produced `integral`
};

// The loop integral via its branch-limit reduction to two real-segment
// integrals, endpoint power series, log-mapped composite Gauss-Legendre
// interior panels, and a geometric tail bound at R = 6 z2.  Escalates the
// working precision until est_error <= 2^{-rel_bits} |J|.  Requires n >= 3.
contour_result contour_integral(const critical_data& cd, unsigned n, const real& t,
                                const analysis_config& cfg = {});

// pi H_n(1/2 + int) from the exact generating-function recurrence, computed
// at two precisions and escalated until they agree to 1e-20 relative.
cplx exact_pi_h(const critical_data& cd, unsigned n, const real& t);

// The real number carrying pi H on the critical line (H is real there for
// even n and purely imaginary for odd n).
real parity_component(const cplx& pi_h, unsigned n);

// Same number extracted from J: n! Im J (even) / -n! Re J (odd).
real parity_of_contour(const cplx& j, unsigned n);

struct saddle_result {
    cplx plus, minus; // the two principal-branch signs
    cplx chosen;      // branch by continuous argument tracking of phi_zz
    bool admissible;
    std::string diagnostic;
};

// sqrt(2 pi) psi(zeta1) e^{-n phi} / sqrt(n phi_zz), both signs reported,
// branch chosen by tracking arg phi_zz(zeta1(t), t) continuously from t ~ 0.
saddle_result saddle_approx(const critical_data& cd, unsigned n, const real& t,
                            const analysis_config& cfg = {});

enum class layer_kind { atT, atT1_minus, atT1_plus };

struct layer_result {
    cplx value;
    real est_error;       // quadrature estimate, relative to |value|
    real residual_max;    // max curve-relation residual over the window
    bool admissible;
    std::string diagnostic;
};

// Boundary-layer approximant near T (either regime) or near T1 from below /
// above (T2 regime only).  tau is T - t, T1 - t, t - T1 respectively.
layer_result boundary_layer_approx(const critical_data& cd, unsigned n, const real& t,
                                   layer_kind kind, const analysis_config& cfg = {});

struct layer_curve_point {
    real y;
    cplx z;
    real residual; // |y^2 - (beta/6) v^2 (3 sqrt(tau) + sg v)|
};

// Samples of the curve z(y) across the integration window, with the
// defining-relation residual at each sample.
std::vector<layer_curve_point> layer_curve(const critical_data& cd, unsigned n,
                                           const real& t, layer_kind kind,
                                           std::size_t samples,
                                           const analysis_config& cfg = {});

struct smallt_result {
    cplx value;
    bool admissible;
    std::string diagnostic;
};

// -i (e^{n pi t} + e^{-n pi t}) z1^{-(n-1)} 2^{1/2-int} (z2-z1)^{1/2+int}
// (z2+z1)^{1/2-int} Gamma(3/2+int) n^{-(3/2+int)}
smallt_result smallt_approx(const critical_data& cd, unsigned n, const real& t,
                            const analysis_config& cfg = {});

// t as a function of the saddle, and the squared-saddle combination g(zeta).
cplx t_of_zeta(const critical_data& cd, const cplx& zeta);
cplx g_zeta(const critical_data& cd, unsigned n, const cplx& zeta);

// Closed-form layer constants (regime-dependent c; d and d-hat at T1).
cplx layer_c(const critical_data& cd);
cplx layer_d(const critical_data& cd);
cplx layer_dhat(const critical_data& cd);

} // namespace shq
