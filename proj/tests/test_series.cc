#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <shq/series.hh>

using namespace shq;

using rs = tseries<rat>;

static rs from_ints(std::initializer_list<long> cs)
{
    rs s(cs.size() - 1);
    std::size_t i = 0;
    for (long v : cs) s[i++] = rat(v);
    return s;
}

TEST_CASE("arithmetic round trips")
{
    rs a = from_ints({1, 3, -2, 5, 0, 7});
    rs b = from_ints({2, -1, 4, 0, 1, -3});
    CHECK(a * b / b == a);
    CHECK((a + b) - b == a);
    CHECK(a.derivative().integral()[3] == a[3]);
    CHECK(a.derivative().integral()[0] == rat(0)); // constant term forgotten
    CHECK(a.integral().derivative()[5] == rat(0)); // top coefficient lost
}

TEST_CASE("exp and log invert each other")
{
    rs s(8);
    s[1] = rat(1);
    s[2] = rat(-3, 7);
    s[5] = rat(2, 11);
    CHECK(log_series(exp_series(s)) == s);

    rs u = from_ints({1, 2, 0, -5, 1, 0, 0, 4, 0});
    CHECK(exp_series(log_series(u)) == u);
}

TEST_CASE("exp has 1/n! coefficients")
{
    rs z = rs::zvar(6);
    rs e = exp_series(z);
    rat f(1);
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(e[n] == rat(1) / f);
        f *= static_cast<long>(n + 1);
    }
}

TEST_CASE("log(1+z) alternates with 1/n")
{
    rs s = rs::zvar(7);
    s[0] = rat(1);
    rs l = log_series(s);
    CHECK(l[0] == rat(0));
    for (std::size_t n = 1; n <= 7; ++n)
        CHECK(l[n] == rat(n % 2 ? 1 : -1) / rat(static_cast<long>(n)));
}

TEST_CASE("reversion of z - z^2 gives Catalan numbers")
{
    rs f = rs::zvar(9);
    f[2] = rat(-1);
    rs h = reverse(f);
    long catalan[] = {0, 1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (std::size_t n = 0; n <= 9; ++n)
        CHECK(h[n] == rat(catalan[n]));
    // both composition orders give the identity
    rs z = rs::zvar(9);
    CHECK(compose(f, h) == z);
    CHECK(compose(h, f) == z);
}

TEST_CASE("composition is associative with reversion in the middle")
{
    rs f(7);
    f[1] = rat(3);
    f[2] = rat(1, 2);
    f[4] = rat(-2, 5);
    f[7] = rat(9);
    rs h = reverse(f);
    CHECK(compose(f, h) == rs::zvar(7));
}

TEST_CASE("domain guards throw")
{
    rs a(3), b(4);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);

    rs c = from_ints({1, 1, 1});
    CHECK_THROWS_AS(reverse(c), std::domain_error); // c(0) != 0
    rs d(3);
    d[2] = rat(1);
    CHECK_THROWS_AS(reverse(d), std::domain_error); // d'(0) = 0
    CHECK_THROWS_AS(log_series(rs(2)), std::domain_error);
    rs e = from_ints({2, 1});
    CHECK_THROWS_AS(exp_series(e), std::domain_error); // exp(2) is irrational
    CHECK_THROWS_AS(log_series(e), std::domain_error); // log(2) is irrational
    CHECK_THROWS_AS(a / rs(3), std::domain_error);
}

TEST_CASE("complex backend lifts nonzero heads")
{
    precision_guard pg(128);
    using cs = tseries<cplx>;
    cs s(5);
    s[0] = cplx(real("0.5"), real("0.25"));
    s[1] = cplx(1);
    s[3] = cplx(real("-2"), real(3));
    cs e = exp_series(s);
    cs l = log_series(e);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(abs(l[n] - s[n]) < ldexp(real(1), -100));
}

TEST_CASE("rational to complex conversion preserves values")
{
    precision_guard pg(128);
    rs s = from_ints({3, -7, 22});
    s[2] = rat(22, 7);
    tseries<cplx> c = to_complex(s);
    CHECK(abs(c[2] - cplx(real(22) / 7)) < ldexp(real(1), -100));
    CHECK(re(c[1]) == real(-7));
}
