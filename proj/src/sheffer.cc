#include "shq/sheffer.hh"

#include <stdexcept>

namespace shq {

quadratic_q quadratic_q::make_ab(const rat& a, const rat& b)
{
    if (a + b == rat(0)) throw std::domain_error("quadratic: a+b = 0 means Q'(0) = 0");
    return {form_kind::ab, a, b, rat(0), rat(0)};
}

quadratic_q quadratic_q::make_z(const rat& z1, const rat& z2)
{
    if (!(z2 > z1 && z1 > rat(0))) throw std::domain_error("quadratic: need z2 > z1 > 0");
    return {form_kind::z, rat(0), rat(0), z1, z2};
}

std::size_t poly_x::degree() const
{
    std::size_t d = c.size();
    while (d > 1 && c[d - 1] == rat(0)) --d;
    return d - 1;
}

rat poly_x::eval(const rat& x) const
{
    rat acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

tseries<rat> q_series(const rat& a, const rat& b, std::size_t order)
{
    tseries<rat> q(order);
    q[0] = rat(1);
    if (order >= 1) q[1] = a + b;
    if (order >= 2) q[2] = a * b;
    return q;
}

namespace {

tseries<rat> q_neg(const rat& a, const rat& b, std::size_t order)
{
    return q_series(-a, -b, order);
}

// The series behind a matrix are built two orders past nmax: that keeps the
// degenerate small-nmax cases well-formed and leaves the derivative-based
// horizontal pair exact through every reported production row.
exp_riordan trim_rows(exp_riordan a, std::size_t rows)
{
    a.b.resize(rows);
    for (auto& r : a.b) r.resize(rows, rat(0));
    return a;
}

} // namespace

exp_riordan coefficient_matrix(const rat& a, const rat& b, std::size_t nmax)
{
    const std::size_t M = nmax + 2;
    tseries<rat> q = q_series(a, b, M);
    tseries<rat> qn = q_neg(a, b, M);
    return trim_rows(build_riordan(qn, log_series(q / qn)), nmax + 1);
}

exp_riordan ahat_matrix(const rat& a, const rat& b, std::size_t nmax)
{
    const std::size_t M = nmax + 2;
    tseries<rat> q = q_series(a, b, M);
    tseries<rat> qn = q_neg(a, b, M);
    return trim_rows(build_riordan(q, log_series(q / qn)), nmax + 1);
}

exp_riordan lq_matrix(const rat& a, const rat& b, std::size_t nmax)
{
    const std::size_t M = nmax + 2;
    tseries<rat> q = q_series(a, b, M);
    tseries<rat> qn = q_neg(a, b, M);
    rat s = rat(1) / (rat(2) * (a + b));
    return trim_rows(build_riordan(q, s * log_series(q / qn)), nmax + 1);
}

rat_matrix d_diagonal(const rat& a, const rat& b, std::size_t nmax)
{
    rat_matrix d(nmax + 1, std::vector<rat>(nmax + 1, rat(0)));
    rat v(1);
    rat step = rat(2) * (a + b);
    for (std::size_t n = 0; n <= nmax; ++n) {
        d[n][n] = v;
        v *= step;
    }
    return d;
}

exp_riordan c_matrix(const rat& a, const rat& b, std::size_t nmax)
{
    const std::size_t M = nmax + 2;
    tseries<rat> q = q_series(a, b, M);
    tseries<rat> qn = q_neg(a, b, M);
    tseries<rat> one = tseries<rat>::constant(rat(1), M);
    return trim_rows(build_riordan(qn, q / qn - one), nmax + 1);
}

exp_riordan stirling2_riordan(std::size_t nmax)
{
    const std::size_t M = nmax + 2;
    tseries<rat> z = tseries<rat>::zvar(M);
    tseries<rat> one = tseries<rat>::constant(rat(1), M);
    return trim_rows(build_riordan(one, exp_series(z) - one), nmax + 1);
}

poly_x hn_poly(const rat& a, const rat& b, unsigned n)
{
    exp_riordan A = coefficient_matrix(a, b, n);
    poly_x p;
    p.c.assign(A.b[n].begin(), A.b[n].begin() + n + 1);
    return p;
}

std::pair<rat, rat> coeff_relation(const rat& a, const rat& b, unsigned n, unsigned k)
{
    poly_x h = hn_poly(a, b, n);
    exp_riordan lq = lq_matrix(a, b, n);
    rat sign = ((n + k) % 2 == 0) ? rat(1) : rat(-1);
    rat rhs = sign * rat_pow(rat(2) * (a + b), static_cast<long>(k)) * lq.b[n][k];
    return {h.c[k], rhs};
}

std::vector<rat> falling_factorial_coeffs(const rat& a, const rat& b, unsigned n)
{
    exp_riordan C = c_matrix(a, b, n);
    return std::vector<rat>(C.b[n].begin(), C.b[n].begin() + n + 1);
}

poly_x expand_falling(const std::vector<rat>& coeffs)
{
    poly_x acc;
    acc.c.assign(coeffs.size(), rat(0));
    std::vector<rat> fall{rat(1)}; // (x)_0
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) {
            // (x)_k = (x)_{k-1} * (x - (k-1))
            std::vector<rat> next(fall.size() + 1, rat(0));
            rat shift = rat(static_cast<long>(k - 1));
            for (std::size_t i = 0; i < fall.size(); ++i) {
                next[i + 1] += fall[i];
                next[i] -= shift * fall[i];
            }
            fall = std::move(next);
        }
        for (std::size_t i = 0; i < fall.size(); ++i) acc.c[i] += coeffs[k] * fall[i];
    }
    return acc;
}

rat_matrix c_recurrence_table(const rat& a, const rat& b, std::size_t nmax)
{
    rat_matrix c(nmax + 1, std::vector<rat>(nmax + 1, rat(0)));
    rat s = a + b, p = a * b;
    c[0][0] = rat(1);
    if (nmax >= 1) {
        c[1][0] = -s;
        c[1][1] = rat(2) * s;
    }
    if (nmax >= 2) c[2][0] = rat(2) * p;
    for (std::size_t n = 2; n <= nmax; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            rat acc = rat(2) * s * c[n - 1][k - 1];
            acc += rat(static_cast<long>(n + k) - 2) * s * c[n - 1][k];
            acc -= rat(static_cast<long>(n) - 1) * rat(static_cast<long>(n + 2 * k) - 4) * p * c[n - 2][k];
            c[n][k] = acc;
        }
    }
    return c;
}

exp_riordan zform_coefficient_matrix(const rat& z1, const rat& z2, std::size_t nmax)
{
    // Qz(z) = (z1-z)(z2-z) = z1 z2 + ... ; same construction, g(0) = z1 z2.
    const std::size_t M = nmax + 2;
    tseries<rat> q(M), qn(M);
    q[0] = z1 * z2;
    qn[0] = z1 * z2;
    q[1] = -(z1 + z2);
    qn[1] = z1 + z2;
    q[2] = rat(1);
    qn[2] = rat(1);
    return trim_rows(build_riordan(qn, log_series(q / qn)), nmax + 1);
}

poly_x zform_hn_poly(const rat& z1, const rat& z2, unsigned n)
{
    exp_riordan A = zform_coefficient_matrix(z1, z2, n);
    poly_x p;
    p.c.assign(A.b[n].begin(), A.b[n].begin() + n + 1);
    return p;
}

poly_x poly_derivative(const poly_x& p)
{
    poly_x d;
    if (p.c.size() <= 1) {
        d.c = {rat(0)};
        return d;
    }
    d.c.resize(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) d.c[i - 1] = rat(static_cast<long>(i)) * p.c[i];
    return d;
}

poly_x reflect_poly(const poly_x& p, unsigned n)
{
    // (-1)^n p(1-x) via binomial expansion of (1-x)^k
    poly_x r;
    r.c.assign(p.c.size(), rat(0));
    for (std::size_t k = 0; k < p.c.size(); ++k) {
        if (p.c[k] == rat(0)) continue;
        for (std::size_t i = 0; i <= k; ++i) {
            rat term = rat(binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)));
            if (i % 2 == 1) term = -term;
            r.c[i] += p.c[k] * term;
        }
    }
    if (n % 2 == 1)
        for (auto& v : r.c) v = -v;
    return r;
}

} // namespace shq
