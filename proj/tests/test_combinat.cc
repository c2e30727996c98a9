#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <shq/combinat.hh>

using namespace shq;

TEST_CASE("Stirling triangles against known rows")
{
    CHECK(stirling2(4, 2) == bigint(7));
    CHECK(stirling1_unsigned(4, 2) == bigint(11));
    std::vector<long> s2row4 = {0, 1, 7, 6, 1};
    std::vector<long> s1row4 = {0, 6, 11, 6, 1};
    for (unsigned k = 0; k <= 4; ++k) {
        CHECK(stirling2(4, k) == bigint(s2row4[k]));
        CHECK(stirling1_unsigned(4, k) == bigint(s1row4[k]));
    }
    CHECK(stirling2(7, 7) == bigint(1));
    CHECK(stirling2(7, 1) == bigint(1));
    CHECK(stirling2(3, 5) == bigint(0));
    // row sums of the first kind count permutations
    for (unsigned n = 1; n <= 8; ++n) {
        bigint sum(0);
        for (unsigned k = 0; k <= n; ++k) sum += stirling1_unsigned(n, k);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("signed first kind inverts the second kind")
{
    const unsigned N = 9;
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned k = 0; k <= N; ++k) {
            bigint acc(0);
            for (unsigned i = k; i <= n; ++i) {
                bigint term = stirling1_unsigned(n, i) * stirling2(i, k);
                if ((n + i) % 2 == 1) term = -term;
                acc += term;
            }
            CHECK(acc == (n == k ? bigint(1) : bigint(0)));
        }
}

TEST_CASE("partition matrix row sums are Bell numbers")
{
    exp_riordan S = stirling2_riordan(5);
    std::vector<long> bell = {1, 1, 2, 5, 15, 52};
    for (std::size_t n = 0; n <= 5; ++n) {
        rat sum(0);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(S.b[n][k] == rat(stirling2(static_cast<unsigned>(n),
                                             static_cast<unsigned>(k))));
            sum += S.b[n][k];
        }
        CHECK(sum == rat(bell[n]));
    }
}

TEST_CASE("tree with unit bidiagonal rules grows Pascal rows")
{
    const unsigned depth = 5;
    rat_matrix p(depth + 2, std::vector<rat>(depth + 3, rat(0)));
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k][k] = rat(1);
        p[k][k + 1] = rat(1);
    }
    auto levels = tree_levels(p, depth);
    for (unsigned n = 0; n <= depth; ++n)
        for (unsigned k = 0; k < levels[n].unmarked.size(); ++k) {
            CHECK(levels[n].marked[k] == bigint(0));
            bigint expect = k <= n ? binomial(n, k) : bigint(0);
            CHECK(levels[n].unmarked[k] == expect);
        }
}

TEST_CASE("mark flip separates totals from signed counts")
{
    // single rule (0) -> two marked copies of (0): signed count (-2)^n,
    // total population 2^n
    rat_matrix p = {{rat(-2)}};
    const unsigned depth = 6;
    auto levels = tree_levels(p, depth);
    auto rec = tree_vector_recurrence(p, depth);
    bigint signd(1), total(1);
    for (unsigned n = 0; n <= depth; ++n) {
        CHECK(levels[n].unmarked[0] - levels[n].marked[0] == signd);
        CHECK(levels[n].unmarked[0] + levels[n].marked[0] == total);
        CHECK(rec[n][0] == signd);
        signd *= -2;
        total *= 2;
    }
}

TEST_CASE("tree expansion and vector recurrence agree on the signed counts")
{
    for (auto [ai, bi] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}}) {
        rat a(ai), b(bi);
        const unsigned depth = 6;
        exp_riordan lq = lq_matrix(a, b, depth + 2);
        production_matrix hp = horizontal_pair(lq);
        auto levels = tree_levels(hp.p, depth);
        auto rec = tree_vector_recurrence(hp.p, depth);
        REQUIRE(levels.size() == rec.size());
        for (std::size_t n = 0; n < rec.size(); ++n)
            for (std::size_t k = 0; k < rec[n].size(); ++k)
                CHECK(levels[n].unmarked[k] - levels[n].marked[k] == rec[n][k]);
        // both reproduce the normalized matrix rows they were derived from
        for (std::size_t n = 0; n <= depth; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(rat(rec[n][k]) == lq.b[n][k]);
    }
}

TEST_CASE("tree rejects non-integer rules")
{
    rat_matrix p = {{rat(1, 2)}};
    CHECK_THROWS_AS(tree_levels(p, 2), std::domain_error);
    CHECK_THROWS_AS(tree_vector_recurrence(p, 2), std::domain_error);
}

TEST_CASE("weighted path table equals the falling factorial table")
{
    for (auto [ai, bi] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, 3}}) {
        rat a(ai), b(bi);
        const std::size_t N = 12;
        rat_matrix sg = lattice_sigma(a, b, N);
        exp_riordan C = c_matrix(a, b, N);
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t k = 0; k <= N; ++k)
                CHECK(sg[n][k] == C.b[n][k]);
    }
}

TEST_CASE("path table reconstructs the polynomials through the first kind")
{
    for (auto [ai, bi] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, 3}}) {
        rat a(ai), b(bi);
        for (unsigned n = 0; n <= 10; ++n) {
            poly_x viaSigma = hn_from_sigma(a, b, n);
            poly_x direct = hn_poly(a, b, n);
            direct.c.resize(viaSigma.c.size(), rat(0));
            CHECK(viaSigma.c == direct.c);
        }
    }
}
