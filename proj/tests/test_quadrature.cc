#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <shq/quadrature.hh>

using namespace shq;

TEST_CASE("nodes are symmetric, ascending, interior; weights sum to two")
{
    precision_guard pg(256);
    for (unsigned count : {5u, 8u, 33u}) {
        auto r = gauss_legendre(count, 256);
        REQUIRE(r->x.size() == count);
        REQUIRE(r->w.size() == count);
        real eps = ldexp(real(1), -240);
        real wsum(0);
        for (unsigned i = 0; i < count; ++i) {
            CHECK(r->x[i] > real(-1));
            CHECK(r->x[i] < real(1));
            if (i > 0) CHECK(r->x[i] > r->x[i - 1]);
            CHECK(abs(r->x[i] + r->x[count - 1 - i]) <= eps);
            CHECK(abs(r->w[i] - r->w[count - 1 - i]) <= eps);
            CHECK(r->w[i] > real(0));
            wsum += r->w[i];
        }
        CHECK(abs(wsum - 2) <= eps);
    }
}

TEST_CASE("rule with m nodes integrates monomials through degree 2m-1")
{
    precision_guard pg(256);
    const unsigned count = 8;
    auto r = gauss_legendre(count, 256);
    for (unsigned deg = 0; deg < 2 * count; ++deg) {
        real acc(0);
        for (unsigned i = 0; i < count; ++i) acc += r->w[i] * pow(r->x[i], static_cast<int>(deg));
        real expect = deg % 2 == 1 ? real(0) : real(2) / (deg + 1);
        CHECK(abs(acc - expect) <= ldexp(real(1), -240));
    }
    // one degree past the guarantee must miss
    real acc(0);
    for (unsigned i = 0; i < count; ++i) acc += r->w[i] * pow(r->x[i], static_cast<int>(2 * count));
    CHECK(abs(acc - real(2) / (2 * count + 1)) > ldexp(real(1), -64));
}

TEST_CASE("entire integrand converges to full precision")
{
    precision_guard pg(256);
    auto r = gauss_legendre(24, 256);
    real acc(0);
    for (unsigned i = 0; i < 24; ++i) acc += r->w[i] * exp(r->x[i]);
    real expect = exp(real(1)) - exp(real(-1));
    CHECK(abs(acc - expect) <= ldexp(real(1), -240) * expect);
}

TEST_CASE("large rule reaches five hundred bits on a nearby pole")
{
    // 1/(2+x) has convergence ratio 2+sqrt(3); 160 nodes give roughly
    // 600 bits, comfortably past the 500-bit target
    precision_guard pg(512);
    auto r = gauss_legendre(160, 512);
    real acc(0);
    for (unsigned i = 0; i < 160; ++i) acc += r->w[i] / (real(2) + r->x[i]);
    real expect = log(real(3));
    CHECK(abs(acc - expect) <= ldexp(real(1), -500) * expect);
}

TEST_CASE("cache returns the same rule and upgrades with precision")
{
    auto a = gauss_legendre(16, 128);
    auto b = gauss_legendre(16, 128);
    CHECK(a.get() == b.get());
    CHECK(a->bits >= 128);
    auto c = gauss_legendre(16, a->bits * 2);
    CHECK(c->bits >= a->bits * 2);
    // the low-precision request is still served, at either vintage
    auto d = gauss_legendre(16, 128);
    CHECK(d->bits >= 128);
}
