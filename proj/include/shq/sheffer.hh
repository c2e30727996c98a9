#pragma once
// The concrete Sheffer family: coefficient matrices A, Â, L_Q, D, C for a
// quadratic Q, the polynomials H_n(x), and the falling-factorial coefficient
// table.  Everything here is exact rational arithmetic.
//
// Two parametrizations of Q coexist:
//   AB form: Q(z) = (1+az)(1+bz), integer a,b > 0 (combinatorics)
//   Z form:  Q(z) = (z1-z)(z2-z), z2 > z1 > 0 (zero analysis)
// They are related by Qz(z) = z1 z2 * Qab(z) with a = -1/z1, b = -1/z2, an
// identity the tests verify instead of silently converting.

#include "shq/riordan.hh"

#include <optional>

namespace shq {

struct quadratic_q {
    enum class form_kind { ab, z };
    form_kind form;
    rat a, b;   // ab form
    rat z1, z2; // z form (rational carriers; analysis converts to real)

    static quadratic_q make_ab(const rat& a, const rat& b);
    static quadratic_q make_z(const rat& z1, const rat& z2);
};

struct poly_x {
    std::vector<rat> c; // coefficient of x^k

    std::size_t degree() const;
    rat eval(const rat& x) const;
    bool operator==(const poly_x& o) const { return c == o.c; }
};

// Q(z) = 1 + (a+b)z + ab z^2 at the given series order.
tseries<rat> q_series(const rat& a, const rat& b, std::size_t order);

// A = [Q(-z), ln(Q/Q(-z))]; row n holds the x-power coefficients of H_n.
exp_riordan coefficient_matrix(const rat& a, const rat& b, std::size_t nmax);

// Â = [Q(z), ln(Q/Q(-z))]
exp_riordan ahat_matrix(const rat& a, const rat& b, std::size_t nmax);

// L_Q = [Q(z), ln(Q/Q(-z))/(2(a+b))], unit lower triangular
exp_riordan lq_matrix(const rat& a, const rat& b, std::size_t nmax);

// D = [1, 2(a+b)z] = diag((2a+2b)^n)
rat_matrix d_diagonal(const rat& a, const rat& b, std::size_t nmax);

// C = [Q(-z), Q/Q(-z) - 1]; row n holds falling-factorial coefficients of H_n.
exp_riordan c_matrix(const rat& a, const rat& b, std::size_t nmax);

// [1, e^z - 1], entries S(n,k)
exp_riordan stirling2_riordan(std::size_t nmax);

poly_x hn_poly(const rat& a, const rat& b, unsigned n);

// Both sides of [x^k]H_n = (-1)^{n+k} (2a+2b)^k q_{n,k}.
std::pair<rat, rat> coeff_relation(const rat& a, const rat& b, unsigned n, unsigned k);

std::vector<rat> falling_factorial_coeffs(const rat& a, const rat& b, unsigned n);

// Σ_k coeffs[k] (x)_k expanded into the power basis.
poly_x expand_falling(const std::vector<rat>& coeffs);

// c_{n,k} by the three-term recurrence
// c_{n,k} = 2(a+b)c_{n-1,k-1} + (n+k-2)(a+b)c_{n-1,k} - (n-1)(n+2k-4)ab c_{n-2,k}
// with c_{0,0}=1, c_{1,0}=-(a+b), c_{1,1}=2(a+b), c_{2,0}=2ab, c_{n,0}=0 (n>=3).
rat_matrix c_recurrence_table(const rat& a, const rat& b, std::size_t nmax);

// Z-form coefficient matrix built directly from Qz(z) = (z1-z)(z2-z).
exp_riordan zform_coefficient_matrix(const rat& z1, const rat& z2, std::size_t nmax);

poly_x zform_hn_poly(const rat& z1, const rat& z2, unsigned n);

poly_x poly_derivative(const poly_x& p);

// (-1)^n p(1-x), for the reflection symmetry H_n(x) = (-1)^n H_n(1-x).
poly_x reflect_poly(const poly_x& p, unsigned n);

} // namespace shq
