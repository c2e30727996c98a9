#include "shq/combinat.hh"

#include <stdexcept>

namespace shq {

namespace {

std::vector<std::vector<bigint>> stirling2_rows(unsigned nmax)
{
    std::vector<std::vector<bigint>> s(nmax + 1, std::vector<bigint>(nmax + 1, bigint(0)));
    s[0][0] = 1;
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned k = 1; k <= n; ++k)
            s[n][k] = bigint(k) * s[n - 1][k] + s[n - 1][k - 1];
    return s;
}

std::vector<std::vector<bigint>> stirling1_rows(unsigned nmax)
{
    std::vector<std::vector<bigint>> s(nmax + 1, std::vector<bigint>(nmax + 1, bigint(0)));
    s[0][0] = 1;
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned k = 1; k <= n; ++k)
            s[n][k] = bigint(n - 1) * s[n - 1][k] + s[n - 1][k - 1];
    return s;
}

bigint to_integer(const rat& q)
{
    if (denominator(q) != 1) throw std::domain_error("production matrix entry is not an integer");
    return numerator(q);
}

} // namespace

bigint stirling2(unsigned n, unsigned k)
{
    if (k > n) return bigint(0);
    return stirling2_rows(n)[n][k];
}

bigint stirling1_unsigned(unsigned n, unsigned k)
{
    if (k > n) return bigint(0);
    return stirling1_rows(n)[n][k];
}

std::vector<marked_level> tree_levels(const rat_matrix& p, unsigned depth)
{
    const std::size_t labels = depth + 2;
    std::vector<marked_level> levels(depth + 1);
    for (auto& lv : levels) {
        lv.unmarked.assign(labels, bigint(0));
        lv.marked.assign(labels, bigint(0));
    }
    levels[0].unmarked[0] = 1;

    for (unsigned n = 0; n < depth; ++n) {
        for (std::size_t k = 0; k < labels && k < p.size(); ++k) {
            for (std::size_t j = 0; j <= k + 1 && j < labels && j < p[k].size(); ++j) {
                bigint mult = to_integer(p[k][j]);
                if (mult == 0) continue;
                bool flip = mult < 0;
                bigint m = flip ? bigint(-mult) : mult;
                // unmarked parents
                if (levels[n].unmarked[k] != 0)
                    (flip ? levels[n + 1].marked : levels[n + 1].unmarked)[j] +=
                        m * levels[n].unmarked[k];
                // marked parents: a flip cancels the mark
                if (levels[n].marked[k] != 0)
                    (flip ? levels[n + 1].unmarked : levels[n + 1].marked)[j] +=
                        m * levels[n].marked[k];
            }
        }
    }
    return levels;
}

std::vector<std::vector<bigint>> tree_vector_recurrence(const rat_matrix& p, unsigned depth)
{
    const std::size_t labels = depth + 2;
    std::vector<std::vector<bigint>> rows(depth + 1, std::vector<bigint>(labels, bigint(0)));
    rows[0][0] = 1;
    for (unsigned n = 0; n < depth; ++n)
        for (std::size_t j = 0; j < labels; ++j) {
            bigint acc(0);
            for (std::size_t k = (j == 0 ? 0 : j - 1); k < labels && k < p.size(); ++k)
                if (j < p[k].size()) acc += rows[n][k] * to_integer(p[k][j]);
            rows[n + 1][j] = acc;
        }
    return rows;
}

rat_matrix lattice_sigma(const rat& a, const rat& b, std::size_t nmax)
{
    rat_matrix sg(nmax + 1, std::vector<rat>(nmax + 1, rat(0)));
    rat s = a + b, pr = a * b;
    sg[0][0] = rat(1);
    for (std::size_t n = 1; n <= nmax; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            rat acc(0);
            if (k >= 1) acc += rat(2) * s * sg[n - 1][k - 1];
            long ni = static_cast<long>(n), ki = static_cast<long>(k);
            acc += rat(ni + ki - 2) * s * sg[n - 1][k];
            if (n >= 2) acc -= rat(ni - 1) * rat(ni + 2 * ki - 4) * pr * sg[n - 2][k];
            sg[n][k] = acc;
        }
    }
    return sg;
}

poly_x hn_from_sigma(const rat& a, const rat& b, unsigned n)
{
    rat_matrix sg = lattice_sigma(a, b, n);
    auto s1 = stirling1_rows(n);
    poly_x h;
    h.c.assign(n + 1, rat(0));
    for (unsigned k = 0; k <= n; ++k)
        for (unsigned i = k; i <= n; ++i) {
            rat term = sg[n][i] * rat(s1[i][k]);
            if ((i + k) % 2 == 1) term = -term;
            h.c[k] += term;
        }
    return h;
}

} // namespace shq
