#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "surfgw/pt.hpp"

using namespace surfgw;

namespace {

PLaurent randomWindow(std::mt19937& rng, long lo, long len) {
    std::uniform_int_distribution<long> coefD(-5, 5);
    std::vector<Rat> c;
    for (long i = 0; i < len; ++i) c.push_back(Rat(coefD(rng)));
    return PLaurent(lo, std::move(c));
}

}  // namespace

TEST_CASE("window access") {
    PLaurent z(-1, {Rat(3), Rat(0), Rat(5)});
    CHECK(z.lo() == -1);
    CHECK(z.hi() == 2);
    CHECK(z.coeff(-1) == Rat(3));
    CHECK(z.coeff(1) == Rat(5));
    CHECK_THROWS_AS(z.coeff(2), MissingPrimitiveValue);
    CHECK_THROWS_AS(z.coeff(-2), MissingPrimitiveValue);
}

TEST_CASE("coefficient-level transform by hand") {
    // r = 2, all-ones primitive data on [0, 5), nu = 0 for both divisors.
    std::map<long, PLaurent> prim;
    prim[1] = PLaurent(0, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    prim[2] = PLaurent(0, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    PTContext ctx{2, {{1, 0}, {2, 0}}, SignConvention::CoefficientLevel};

    // ch3 = 0: every k | r contributes with sign +1
    CHECK(ptMcfCoefficient(0, ctx, prim) == Rat(2));
    // ch3 = 1: only k = 1
    CHECK(ptMcfCoefficient(1, ctx, prim) == Rat(1));
    // ch3 = 2: k = 1 gives +1, k = 2 gives (-1)^{(2-1)*1} = -1
    CHECK(ptMcfCoefficient(2, ctx, prim) == Rat(0));
    // ch3 = 4: k = 2 has ch3/k even, sign +1
    CHECK(ptMcfCoefficient(4, ctx, prim) == Rat(2));
}

TEST_CASE("nu exponent weighting") {
    std::map<long, PLaurent> prim;
    prim[1] = PLaurent(0, {Rat(1)});
    prim[3] = PLaurent(0, {Rat(1)});
    PTContext ctx{3, {{1, 5}, {3, -2}}, SignConvention::CoefficientLevel};
    // k = 1 always enters with weight 1^nu = 1
    CHECK(ptMcfCoefficient(0, ctx, prim) == Rat(1) + Rat(1, 9));
}

TEST_CASE("series-level transform windows") {
    std::map<long, PLaurent> prim;
    prim[1] = PLaurent(0, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    prim[2] = PLaurent(0, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    PLaurent out = ptMcfSeries(0, 2, prim);
    CHECK(out.lo() == 0);
    CHECK(out.hi() == 5);  // min(5, 2*4+1)
    CHECK(out.coeff(0) == Rat(2));
    CHECK(out.coeff(1) == Rat(1));
    CHECK(out.coeff(2) == Rat(0));
    CHECK(out.coeff(4) == Rat(2));

    // empty or non-overlapping windows are rejected
    std::map<long, PLaurent> bad;
    bad[1] = PLaurent(0, {Rat(1)});
    bad[2] = PLaurent(5, {Rat(1)});
    CHECK_THROWS_AS(ptMcfSeries(0, 2, bad), WindowMismatch);
    std::map<long, PLaurent> empty;
    empty[1] = PLaurent(0, {});
    CHECK_THROWS_AS(ptMcfSeries(0, 1, empty), WindowMismatch);

    std::map<long, PLaurent> missing;
    missing[1] = PLaurent(0, {Rat(1)});
    CHECK_THROWS_AS(ptMcfSeries(0, 2, missing), MissingPrimitiveValue);
}

TEST_CASE("the two sign conventions agree") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> loD(-3, 0), lenD(6, 10), eD(-2, 4);
    for (int trial = 0; trial < 100; ++trial) {
        for (long r : {1L, 2L, 3L, 4L, 6L}) {
            long e = eD(rng);
            std::map<long, PLaurent> prim;
            PTContext ctx;
            ctx.r = r;
            for (long k = 1; k <= r; ++k) {
                if (r % k != 0) continue;
                prim[k] = randomWindow(rng, loD(rng), lenD(rng));
                ctx.nuOf[k] = e;
            }
            PLaurent series = ptMcfSeries(e, r, prim);
            for (long n = series.lo(); n < series.hi(); ++n) {
                // the coefficient route only sums over k | gcd(r, n), but the
                // skipped k contribute exact zeros on the series side too
                CHECK(series.coeff(n) == ptMcfCoefficient(n, ctx, prim));
            }
        }
    }
}

TEST_CASE("negative ch3") {
    std::map<long, PLaurent> prim;
    prim[1] = PLaurent(-4, {Rat(2), Rat(3), Rat(4), Rat(5), Rat(6), Rat(7), Rat(8), Rat(9)});
    prim[2] = PLaurent(-2, {Rat(1), Rat(1), Rat(1), Rat(1)});
    PTContext ctx{2, {{1, 1}, {2, 1}}, SignConvention::CoefficientLevel};
    // ch3 = -2: k=1 gives prim1[-2] = 4; k=2 gives 2 * (-1)^{-1} * prim2[-1] = -2
    CHECK(ptMcfCoefficient(-2, ctx, prim) == Rat(2));
    PLaurent series = ptMcfSeries(1, 2, prim);
    CHECK(series.lo() == -4);
    CHECK(series.coeff(-2) == Rat(2));
}
