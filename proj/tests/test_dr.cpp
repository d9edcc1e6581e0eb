#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "surfgw/drvertex.hpp"

using namespace surfgw;

namespace {

MukaiVector randomMukai(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    MukaiVector v;
    v.rank = Rat(d(rng));
    v.degree = Rat(d(rng));
    v.divisorPart = K3Class(Rat(d(rng)), Rat(d(rng)));
    return v;
}

MukaiVector scaledMukai(const MukaiVector& v, const Rat& c) {
    MukaiVector r;
    r.rank = v.rank * c;
    r.degree = v.degree * c;
    r.divisorPart = v.divisorPart.scaled(c);
    return r;
}

MukaiVector addMukai(const MukaiVector& v, const MukaiVector& w) {
    MukaiVector r;
    r.rank = v.rank + w.rank;
    r.degree = v.degree + w.degree;
    r.divisorPart = v.divisorPart + w.divisorPart;
    return r;
}

// Random three legs with indices summing to zero, unit-degree-0 gammas of
// random Mukai components.
DRQuery randomQuery(std::mt19937& rng) {
    std::uniform_int_distribution<long> aD(1, 3), hD(1, 3);
    long a1 = aD(rng), a2 = aD(rng);
    DRQuery q;
    q.h = hD(rng);
    q.zOrder = 5;
    q.legs = {{a1, randomMukai(rng), CohDegree::fromComplex(0)},
              {a2, randomMukai(rng), CohDegree::fromComplex(0)},
              {-a1 - a2, randomMukai(rng), CohDegree::fromComplex(0)}};
    return q;
}

}  // namespace

TEST_CASE("mukai pairing") {
    MukaiVector e{Rat(1), K3Class(), Rat(0)};
    MukaiVector p{Rat(0), K3Class(), Rat(1)};
    CHECK(mukaiPairing(e, p) == Rat(1));

    MukaiVector s{Rat(0), K3Class(Rat(1), Rat(0)), Rat(0)};
    CHECK(mukaiPairing(s, s) == Rat(2));  // -<s,s> = 2

    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        MukaiVector v = randomMukai(rng), w = randomMukai(rng), u = randomMukai(rng);
        CHECK(mukaiPairing(v, w) == mukaiPairing(w, v));
        CHECK(mukaiPairing(addMukai(v, u), w) == mukaiPairing(v, w) + mukaiPairing(u, w));
        CHECK(mukaiPairing(scaledMukai(v, Rat(5)), w) == Rat(5) * mukaiPairing(v, w));
    }
}

TEST_CASE("partitions into blocks of size at most two") {
    auto p1 = partitionsLe2(1);
    CHECK(p1.size() == 1);
    CHECK(p1[0].singletons == std::vector<long>{0});

    auto p2 = partitionsLe2(2);
    CHECK(p2.size() == 2);

    // count follows the involution recurrence I(n) = I(n-1) + (n-1) I(n-2)
    long prev2 = 1, prev1 = 1;  // I(0), I(1)
    CHECK(partitionsLe2(1).size() == 1);
    for (long n = 2; n <= 8; ++n) {
        long expected = prev1 + (n - 1) * prev2;
        CHECK(static_cast<long>(partitionsLe2(n).size()) == expected);
        prev2 = prev1;
        prev1 = expected;
    }

    // each partition covers {0..n-1} exactly once
    for (const auto& part : partitionsLe2(4)) {
        std::vector<long> seen = part.singletons;
        for (auto [i, j] : part.pairs) {
            seen.push_back(i);
            seen.push_back(j);
        }
        std::sort(seen.begin(), seen.end());
        CHECK(seen == std::vector<long>{0, 1, 2, 3});
    }
}

TEST_CASE("query validation") {
    MukaiVector g;
    g.rank = Rat(1);
    DRQuery empty;
    empty.legs.clear();
    CHECK_THROWS_AS(drRhs(empty), SeriesError);

    DRQuery unbalanced;
    unbalanced.legs = {{1, g, CohDegree::fromComplex(0)}, {2, g, CohDegree::fromComplex(0)}};
    CHECK_THROWS_AS(drRhs(unbalanced), SeriesError);

    DRQuery halfDeg;
    halfDeg.legs = {{1, g, CohDegree(1)}, {-1, g, CohDegree::fromComplex(0)}};
    CHECK_THROWS_AS(drRhs(halfDeg), NonIntegralPrefactor);
}

TEST_CASE("vanishing pairings give the zero series") {
    // gamma with rank = degree = divisor = 0 pairs to zero with everything
    MukaiVector zero;
    DRQuery q;
    q.h = 2;
    q.zOrder = 5;
    q.legs = {{2, zero, CohDegree::fromComplex(0)}, {-2, zero, CohDegree::fromComplex(0)}};
    CHECK(drRhs(q).zSeries.isZero());
}

TEST_CASE("negative-index legs force their terms to vanish") {
    // n=2, a=(1,-1): the singleton term carries phi_{-1} = 0 and the pair
    // term carries phi_{1,-1} = 0, so the whole series vanishes.
    std::mt19937 rng(5);
    MukaiVector g1 = randomMukai(rng), g2 = randomMukai(rng);
    DRQuery q;
    q.h = 1;
    q.zOrder = 6;
    q.legs = {{1, g1, CohDegree::fromComplex(0)}, {-1, g2, CohDegree::fromComplex(0)}};
    DRResult res = drRhs(q);
    CHECK(res.zSeries.isZero());
    for (const auto& entry : res.decoded) CHECK(entry.invariant == Rat(0));
}

TEST_CASE("leg permutation invariance") {
    std::mt19937 rng(6);
    for (int t = 0; t < 5; ++t) {
        DRQuery q = randomQuery(rng);
        DRResult base = drRhs(q);
        std::vector<size_t> order = {0, 1, 2};
        do {
            DRQuery perm = q;
            perm.legs = {q.legs[order[0]], q.legs[order[1]], q.legs[order[2]]};
            CHECK(agrees(drRhs(perm).zSeries, base.zSeries));
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("multilinearity in each gamma") {
    std::mt19937 rng(8);
    for (int t = 0; t < 5; ++t) {
        DRQuery q = randomQuery(rng);
        for (size_t i = 0; i < q.legs.size(); ++i) {
            DRQuery scaled = q;
            scaled.legs[i].gamma = scaledMukai(q.legs[i].gamma, Rat(3));
            CHECK(agrees(drRhs(scaled).zSeries, drRhs(q).zSeries.scaled(Rat(3))));

            MukaiVector extra = randomMukai(rng);
            DRQuery sum = q, other = q;
            other.legs[i].gamma = extra;
            sum.legs[i].gamma = addMukai(q.legs[i].gamma, extra);
            CHECK(agrees(drRhs(sum).zSeries, drRhs(q).zSeries + drRhs(other).zSeries));
        }
    }
}

TEST_CASE("decoder bookkeeping") {
    std::mt19937 rng(9);
    DRQuery q = randomQuery(rng);
    DRResult res = drRhs(q);
    long n = static_cast<long>(q.legs.size());
    for (const auto& entry : res.decoded) {
        long zExp = 2 * entry.g - 2 + n;
        Rat raw = res.zSeries.coeff(zExp);
        Rat expected = ((entry.g + n) % 2 == 0) ? raw : -raw;
        CHECK(entry.invariant == expected);
    }
}
