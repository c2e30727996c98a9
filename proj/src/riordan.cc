#include "shq/riordan.hh"

#include <stdexcept>

namespace shq {

exp_riordan build_riordan(const tseries<rat>& g, const tseries<rat>& f)
{
    if (g[0] == rat(0)) throw std::domain_error("riordan: g(0) = 0");
    if (f[0] != rat(0)) throw std::domain_error("riordan: f(0) != 0");
    if (f.order() < 1 || f[1] == rat(0)) throw std::domain_error("riordan: f'(0) = 0");
    if (g.order() != f.order()) throw std::invalid_argument("riordan: order mismatch");

    const std::size_t N = g.order();
    exp_riordan a{g, f, rat_matrix(N + 1, std::vector<rat>(N + 1, rat(0)))};
    tseries<rat> col = g; // g f^k, divided by k! at extraction
    rat kfact(1);
    for (std::size_t k = 0; k <= N; ++k) {
        if (k > 0) {
            col = col * f;
            kfact *= rat(static_cast<long>(k));
        }
        rat nfact(1);
        for (std::size_t n = 0; n <= N; ++n) {
            if (n > 0) nfact *= rat(static_cast<long>(n));
            if (n >= k) a.b[n][k] = nfact / kfact * col[n];
        }
    }
    return a;
}

exp_riordan rmul(const exp_riordan& a, const exp_riordan& b)
{
    if (a.g.order() != b.g.order()) throw std::invalid_argument("riordan: order mismatch");
    return build_riordan(a.g * compose(b.g, a.f), compose(b.f, a.f));
}

exp_riordan rinv(const exp_riordan& a)
{
    tseries<rat> fbar = reverse(a.f);
    tseries<rat> one = tseries<rat>::constant(rat(1), a.g.order());
    return build_riordan(one / compose(a.g, fbar), fbar);
}

exp_riordan riordan_identity(std::size_t order)
{
    return build_riordan(tseries<rat>::constant(rat(1), order), tseries<rat>::zvar(order));
}

production_matrix horizontal_pair(const exp_riordan& a)
{
    // One series order is lost to the derivative, so c and r are exact only
    // through index N-1 and the production rows through i = N-2; nothing
    // beyond that is emitted.
    const std::size_t N = a.g.order();
    tseries<rat> fbar = reverse(a.f);
    tseries<rat> c = compose(a.g.derivative() / a.g, fbar);
    tseries<rat> r = compose(a.f.derivative(), fbar);

    production_matrix pm;
    pm.c.resize(N);
    pm.r.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        pm.c[i] = c[i];
        pm.r[i] = r[i];
    }

    pm.p.assign(N - 1, std::vector<rat>(N, rat(0)));
    rat ifact(1);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        if (i > 0) ifact *= rat(static_cast<long>(i));
        rat jfact(1);
        for (std::size_t j = 0; j <= i + 1; ++j) {
            if (j > 0) jfact *= rat(static_cast<long>(j));
            rat cv = (i >= j) ? pm.c[i - j] : rat(0);
            rat rv = pm.r[i - j + 1];
            pm.p[i][j] = ifact / jfact * (cv + rat(static_cast<long>(j)) * rv);
        }
    }
    return pm;
}

rat_matrix production_from_matrix(const exp_riordan& a)
{
    // A·P = U·A restricted to the leading M x M block, M = rows-1; the last
    // row of A has no successor so it only constrains nothing.
    const std::size_t M = a.rows() - 1;
    rat_matrix p(M, std::vector<rat>(M, rat(0)));
    for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t n = 0; n < M; ++n) {
            rat acc = a.b[n + 1][j];
            for (std::size_t i = 0; i < n; ++i) acc -= a.b[n][i] * p[i][j];
            p[n][j] = acc / a.b[n][n];
        }
    }
    return p;
}

bool stieltjes_check(const exp_riordan& a, const rat_matrix& p)
{
    const std::size_t M = a.rows() - 1;
    for (std::size_t n = 0; n < M; ++n)
        for (std::size_t k = 0; k < M; ++k) {
            rat acc(0);
            for (std::size_t i = 0; i < std::min(a.rows(), p.size()); ++i)
                acc += a.b[n][i] * p[i][k];
            if (acc != a.b[n + 1][k]) return false;
        }
    return true;
}

rat_matrix row_recurrence(const rat& g0, const rat_matrix& p, std::size_t rows)
{
    rat_matrix b(rows, std::vector<rat>(rows, rat(0)));
    b[0][0] = g0;
    for (std::size_t n = 0; n + 1 < rows; ++n)
        for (std::size_t k = 0; k < rows; ++k) {
            rat acc(0);
            for (std::size_t i = (k == 0 ? 0 : k - 1); i <= n && i < p.size(); ++i)
                acc += b[n][i] * p[i][k];
            b[n + 1][k] = acc;
        }
    return b;
}

rat_matrix conjugate_ordinary(const exp_riordan& a)
{
    const std::size_t R = a.rows();
    rat_matrix d(R, std::vector<rat>(R, rat(0)));
    rat nfact(1);
    for (std::size_t n = 0; n < R; ++n) {
        if (n > 0) nfact *= rat(static_cast<long>(n));
        rat kfact(1);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) kfact *= rat(static_cast<long>(k));
            d[n][k] = kfact / nfact * a.b[n][k];
        }
    }
    return d;
}

rat_matrix matrix_product(const rat_matrix& a, const rat_matrix& b)
{
    const std::size_t R = a.size();
    const std::size_t C = b.empty() ? 0 : b[0].size();
    const std::size_t K = b.size();
    rat_matrix r(R, std::vector<rat>(C, rat(0)));
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t k = 0; k < K && k < a[i].size(); ++k) {
            if (a[i][k] == rat(0)) continue;
            for (std::size_t j = 0; j < C; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

} // namespace shq
