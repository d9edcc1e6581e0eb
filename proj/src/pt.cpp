#include "surfgw/pt.hpp"

#include <limits>
#include <numeric>

#include "surfgw/surface.hpp"

namespace surfgw {

namespace {

// gcd(r, ch3) with ch3 = 0 treated as divisible by everything.
long divisorBound(long r, long ch3) {
    if (ch3 == 0) return r;
    return std::gcd(r, ch3 < 0 ? -ch3 : ch3);
}

int mcSign(long k, long ch3OverK) {
    return ((k - 1) * ch3OverK) % 2 == 0 ? 1 : -1;
}

}  // namespace

Rat ptMcfCoefficient(long ch3, const PTContext& ctx,
                     const std::map<long, PLaurent>& primitive) {
    if (ctx.r < 1) throw SeriesError("ptMcfCoefficient: r must be >= 1");
    Rat acc(0);
    for (long k : divisors(divisorBound(ctx.r, ch3))) {
        auto nuIt = ctx.nuOf.find(k);
        if (nuIt == ctx.nuOf.end())
            throw SeriesError("ptMcfCoefficient: no nu exponent for k=" + std::to_string(k));
        auto primIt = primitive.find(k);
        if (primIt == primitive.end())
            throw MissingPrimitiveValue("ptMcfCoefficient: no primitive data for k=" +
                                        std::to_string(k));
        long c = ch3 / k;
        Rat term = Rat::intPow(k, nuIt->second) * primIt->second.coeff(c);
        if (mcSign(k, c) < 0) term = -term;
        acc += term;
    }
    return acc;
}

PLaurent ptMcfSeries(long e, long r, const std::map<long, PLaurent>& primitive) {
    if (r < 1) throw SeriesError("ptMcfSeries: r must be >= 1");
    std::vector<long> ks = divisors(r);
    long lo = std::numeric_limits<long>::min();
    long hi = std::numeric_limits<long>::max();
    for (long k : ks) {
        auto it = primitive.find(k);
        if (it == primitive.end())
            throw MissingPrimitiveValue("ptMcfSeries: no primitive data for k=" +
                                        std::to_string(k));
        const PLaurent& z = it->second;
        if (z.hi() <= z.lo()) throw WindowMismatch("ptMcfSeries: empty window for k=" +
                                                   std::to_string(k));
        // Z_k(p^k) is determined at exponent n iff n/k lies in the window
        // when k | n (and is an exact zero otherwise).
        lo = std::max(lo, k * z.lo());
        hi = std::min(hi, k * (z.hi() - 1) + 1);
    }
    if (hi <= lo) throw WindowMismatch("ptMcfSeries: scaled windows do not overlap");
    std::vector<Rat> out(static_cast<size_t>(hi - lo));
    for (long k : ks) {
        Rat weight = Rat::intPow(k, e);
        const PLaurent& z = primitive.at(k);
        for (long n = lo; n < hi; ++n) {
            if (n % k != 0) continue;
            long c = n / k;
            if (!z.inWindow(c)) continue;  // unreachable inside [lo, hi)
            // Z_k coefficient at p^c is (-1)^c <...>_c; the substituted
            // series contributes at p^n, and decoding multiplies by (-1)^n.
            Rat term = weight * z.coeff(c);
            long signPow = c + n;
            if (((signPow % 2) + 2) % 2 == 1) term = -term;
            out[static_cast<size_t>(n - lo)] += term;
        }
    }
    return PLaurent(lo, std::move(out));
}

} // namespace surfgw
