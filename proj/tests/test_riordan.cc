#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <shq/riordan.hh>
#include <shq/sheffer.hh>

#include <random>

using namespace shq;

namespace {

tseries<rat> expz(std::size_t order, long scale)
{
    tseries<rat> s = tseries<rat>::zvar(order);
    return exp_series(rat(scale) * s);
}

// random proper pair: g(0) != 0, f(0) = 0, f'(0) != 0, small rationals
std::pair<tseries<rat>, tseries<rat>> random_pair(std::mt19937& rng, std::size_t order)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::uniform_int_distribution<long> unit(0, 1);
    auto draw = [&] { return rat(num(rng)) / rat(den(rng)); };
    tseries<rat> g(order), f(order);
    g[0] = rat(unit(rng) ? 1 : -2) + rat(1) / rat(den(rng));
    for (std::size_t i = 1; i <= order; ++i) g[i] = draw();
    f[1] = rat(unit(rng) ? 1 : -1) * (rat(1) + rat(den(rng)));
    for (std::size_t i = 2; i <= order; ++i) f[i] = draw();
    return {g, f};
}

} // namespace

TEST_CASE("Pascal matrix is [e^z, z] with binomial entries")
{
    const std::size_t N = 8;
    exp_riordan pascal = build_riordan(expz(N, 1), tseries<rat>::zvar(N));
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(pascal.b[n][k] == rat(binomial(static_cast<unsigned>(n),
                                                 static_cast<unsigned>(k))));
}

TEST_CASE("group product squares Pascal to [e^{2z}, z]")
{
    const std::size_t N = 7;
    exp_riordan pascal = build_riordan(expz(N, 1), tseries<rat>::zvar(N));
    exp_riordan sq = rmul(pascal, pascal);
    CHECK(sq.g == expz(N, 2));
    CHECK(sq.f == tseries<rat>::zvar(N));
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(sq.b[n][k] == rat_pow(rat(2), static_cast<long>(n - k)) *
                                    rat(binomial(static_cast<unsigned>(n),
                                                 static_cast<unsigned>(k))));
    // entries of the product agree with the matrix product of the factors
    rat_matrix mm = matrix_product(pascal.b, pascal.b);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(sq.b[n][k] == mm[n][k]);
}

TEST_CASE("group inverse of Pascal is [e^{-z}, z]")
{
    const std::size_t N = 7;
    exp_riordan pascal = build_riordan(expz(N, 1), tseries<rat>::zvar(N));
    exp_riordan inv = rinv(pascal);
    CHECK(inv.g == expz(N, -1));
    exp_riordan prod = rmul(pascal, inv);
    exp_riordan id = riordan_identity(N);
    CHECK(prod.g == id.g);
    CHECK(prod.f == id.f);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(prod.b[n][k] == (n == k ? rat(1) : rat(0)));
}

TEST_CASE("inverse on a non-trivial f round trips")
{
    const std::size_t N = 9;
    tseries<rat> g(N), f(N);
    g[0] = rat(1);
    g[2] = rat(-1, 2);
    g[3] = rat(2, 3);
    f[1] = rat(1);
    f[2] = rat(-1);
    f[4] = rat(3, 5);
    exp_riordan a = build_riordan(g, f);
    exp_riordan prod = rmul(a, rinv(a));
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(prod.b[n][k] == (n == k ? rat(1) : rat(0)));
}

TEST_CASE("production matrix routes agree and satisfy the Stieltjes relation")
{
    const std::size_t N = 10;
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 12; ++trial) {
        auto [g, f] = random_pair(rng, N);
        exp_riordan a = build_riordan(g, f);
        production_matrix hp = horizontal_pair(a);
        rat_matrix pm = production_from_matrix(a);
        // common block: horizontal pair emits N-1 rows, the solver N rows
        for (std::size_t i = 0; i + 1 < N; ++i)
            for (std::size_t j = 0; j < std::min(pm[i].size(), hp.p[i].size()); ++j)
                CHECK(hp.p[i][j] == pm[i][j]);
        CHECK(stieltjes_check(a, pm));
        // Hessenberg shape: nothing above the first superdiagonal
        for (std::size_t i = 0; i + 1 < N; ++i)
            for (std::size_t j = i + 2; j < hp.p[i].size(); ++j)
                CHECK(hp.p[i][j] == rat(0));
    }
}

TEST_CASE("Pascal production matrix is the classic bidiagonal")
{
    const std::size_t N = 8;
    exp_riordan pascal = build_riordan(expz(N, 1), tseries<rat>::zvar(N));
    production_matrix hp = horizontal_pair(pascal);
    // c and r are both the constant series 1, so the row formula leaves
    // a unit diagonal and unit superdiagonal and nothing else
    for (std::size_t i = 0; i + 1 < N; ++i)
        for (std::size_t j = 0; j <= i + 1; ++j) {
            rat expect = (j == i || j == i + 1) ? rat(1) : rat(0);
            CHECK(hp.p[i][j] == expect);
        }
}

TEST_CASE("row recurrence regenerates the matrix from its production rows")
{
    const std::size_t N = 10;
    std::mt19937 rng(777);
    auto [g, f] = random_pair(rng, N);
    exp_riordan a = build_riordan(g, f);
    rat_matrix pm = production_from_matrix(a);
    rat_matrix again = row_recurrence(a.b[0][0], pm, N);
    for (std::size_t n = 0; n < N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(again[n][k] == a.b[n][k]);
}

TEST_CASE("ordinary conjugation rescales by k!/n!")
{
    const std::size_t N = 6;
    exp_riordan pascal = build_riordan(expz(N, 1), tseries<rat>::zvar(N));
    rat_matrix d = conjugate_ordinary(pascal);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            rat expect = rat(factorial(static_cast<unsigned>(k))) /
                         rat(factorial(static_cast<unsigned>(n))) * pascal.b[n][k];
            CHECK(d[n][k] == expect);
        }
}

TEST_CASE("builder rejects improper pairs")
{
    const std::size_t N = 5;
    tseries<rat> g = tseries<rat>::constant(rat(1), N);
    tseries<rat> bad_f(N); // f identically zero: f'(0) = 0
    CHECK_THROWS_AS(build_riordan(g, bad_f), std::domain_error);
    tseries<rat> f = tseries<rat>::zvar(N);
    tseries<rat> bad_g(N); // g(0) = 0
    CHECK_THROWS_AS(build_riordan(bad_g, f), std::domain_error);
    tseries<rat> f_shift = tseries<rat>::zvar(N);
    f_shift[0] = rat(1); // f(0) != 0
    CHECK_THROWS_AS(build_riordan(g, f_shift), std::domain_error);
}
