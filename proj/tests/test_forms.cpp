#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfgw/forms.hpp"

using namespace surfgw;

namespace {

// Independent divisor-power sum by direct enumeration.
long sigma(long n, long power) {
    long acc = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long p = 1;
        for (long i = 0; i < power; ++i) p *= d;
        acc += p;
    }
    return acc;
}

// Oracle for Delta/q: Euler product via the pentagonal number theorem,
// then the 24th power by naive polynomial multiplication. Plain integer
// arithmetic, independent of the series engine.
std::vector<long long> deltaOracle(long N) {
    std::vector<long long> euler(static_cast<size_t>(N), 0);
    for (long k = -N; k <= N; ++k) {
        long e = k * (3 * k - 1) / 2;
        if (e >= 0 && e < N) euler[static_cast<size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    std::vector<long long> acc(static_cast<size_t>(N), 0);
    acc[0] = 1;
    for (int rep = 0; rep < 24; ++rep) {
        std::vector<long long> next(static_cast<size_t>(N), 0);
        for (long i = 0; i < N; ++i) {
            if (acc[static_cast<size_t>(i)] == 0) continue;
            for (long j = 0; i + j < N; ++j)
                next[static_cast<size_t>(i + j)] +=
                    acc[static_cast<size_t>(i)] * euler[static_cast<size_t>(j)];
        }
        acc = next;
    }
    return acc;
}

}  // namespace

TEST_CASE("bernoulli numbers by the recurrence") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(6) == Rat(1, 42));
    CHECK(bernoulli(8) == Rat(-1, 30));
    CHECK(bernoulli(10) == Rat(5, 66));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    CHECK(bernoulli(3) == Rat(0));
}

TEST_CASE("eisenstein series") {
    QLaurent g2 = eisenstein(2, {4, 1});
    CHECK(g2.coeff(0) == Rat(-1, 24));
    CHECK(g2.coeff(1) == Rat(1));
    CHECK(g2.coeff(2) == Rat(3));
    CHECK(g2.coeff(3) == Rat(4));
    CHECK(g2.prec() == 4);

    CHECK(eisenstein(4, {1, 1}).coeff(0) == Rat(1, 240));  // -B_4/8

    for (long k2 = 2; k2 <= 12; k2 += 2) {
        QLaurent g = eisenstein(k2, {6, 1});
        CHECK(g.coeff(0) == -bernoulli(k2) / Rat(2 * k2));
        for (long n = 1; n < 6; ++n) CHECK(g.coeff(n) == Rat(sigma(n, k2 - 1)));
    }
}

TEST_CASE("discriminant form against the pentagonal oracle") {
    long N = 10;
    QLaurent d = delta({N + 1, 1});
    CHECK(d.val() == 1);
    CHECK(d.coeff(0) == Rat(0));
    CHECK(d.coeff(1) == Rat(1));
    CHECK(d.coeff(2) == Rat(-24));
    CHECK(d.coeff(3) == Rat(252));
    CHECK(d.coeff(4) == Rat(-1472));
    auto oracle = deltaOracle(N);
    for (long n = 0; n < N; ++n) CHECK(d.coeff(n + 1) == Rat(oracle[static_cast<size_t>(n)]));
}

TEST_CASE("theta expansion") {
    BiSeries th = theta({6, 9});
    CHECK(th.val() == 1);
    CHECK(th.coeff(1) == QLaurent(1));
    CHECK(isOddSeries(th));
    // coefficient of z^3 at q^0: -2 (-1/24) / 2! = 1/24
    CHECK(th.coeff(3).coeff(0) == Rat(1, 24));
    // theta(-z) = -theta(z): odd parity at every computed coefficient
    for (long n = th.val(); n < th.windowEnd(); ++n)
        if (n % 2 == 0) CHECK(th.coeff(n).isZero());
}

TEST_CASE("s series two constructions agree") {
    FormRequest req{8, 9};
    BiSeries logDeriv = sSeries(req, SMethod::LogDerivative);
    BiSeries divSum = sSeries(req, SMethod::DivisorSum);
    CHECK(agrees(logDeriv, divSum));
    CHECK(!logDeriv.isZero());
    CHECK(std::min(logDeriv.prec(), divSum.prec()) >= 8);

    CHECK(divSum.val() == 2);  // z-valuation 2: the z^0 part vanishes
    CHECK(isEvenSeries(divSum));
    CHECK(divSum.coeff(2).coeff(1) == Rat(1));
    CHECK(divSum.coeff(2).val() >= 1);  // S is O(q)
}

TEST_CASE("phi residues") {
    FormRequest req{6, 7};
    CHECK(phi(0, req).isZero());
    CHECK(phi(-1, req).isZero());
    CHECK(phi(-2, req).isZero());
    CHECK(agrees(phi(1, req), theta(req)));
    CHECK(!phi(2, req).isZero());
}

TEST_CASE("hodge ratio is O(q)") {
    FormRequest req{6, 9};
    BiSeries th = theta(req);
    BiSeries hodge = dq(dq(th)) * th.inverted();
    for (long z = hodge.val(); z < hodge.windowEnd(); ++z) {
        QLaurent row = hodge.coeff(z);
        if (!row.isZero()) CHECK(row.val() >= 1);
    }
}

TEST_CASE("phi2 by the defining ODE") {
    FormRequest req{6, 7};
    CHECK(agrees(phi2(1, 2, req), phi2(2, 1, req)));
    CHECK(phi2(0, 3, req).isZero());

    // residual: dq(phi2(1,1)) - R(1,1) = 0, R rebuilt from phi(1) = theta
    BiSeries p11 = phi2(1, 1, req);
    BiSeries th = theta(req);
    BiSeries rhs = phi2Rhs(th, th, 1, 1, req);
    CHECK(agrees(dq(p11), rhs));

    // O(q): q^0 row vanishes
    for (long z = p11.val(); z < p11.windowEnd(); ++z)
        CHECK(p11.coeff(z).coeff(0) == Rat(0));
}

TEST_CASE("phi2 with a negative index vanishes") {
    // The right-hand side contains phi_{-1} = 0 in both terms.
    FormRequest req{5, 5};
    CHECK(phi2(1, -1, req).isZero());
}

TEST_CASE("inconsistent ode is detected") {
    // A series with a nonzero q^0 term cannot be integrated.
    BiSeries bad = BiSeries::monomial(0, QLaurent(0, {Rat(1), Rat(2)}, 4), 3);
    CHECK_THROWS_AS(integrateDq(bad), InconsistentODE);
    BiSeries good = BiSeries::monomial(0, QLaurent(1, {Rat(6)}, 4), 3);
    CHECK(integrateDq(good).coeff(0).coeff(1) == Rat(6));
}
