#include "surfgw/gw.hpp"

namespace surfgw {

BiSeries k3PointHodgeSeries(long mPoints, long zOrder, long qOrder) {
    if (mPoints < 0) throw SeriesError("k3PointHodgeSeries: mPoints must be >= 0");
    if (zOrder < 1 || qOrder < 1) throw SeriesError("k3PointHodgeSeries: orders must be >= 1");
    // Internal budgets: Theta^{-2} costs four z-orders of precision and S^m
    // only shifts valuations upward.
    long zi = zOrder + 4;
    long qi = qOrder + 2;
    FormRequest req{qi, zi};
    BiSeries th = theta(req);
    BiSeries thInv = th.inverted();
    QLaurent dInv = delta(req).inverted();
    BiSeries base = (thInv * thInv).scaled(dInv);
    BiSeries result = base;
    if (mPoints > 0) result = base * sSeries(req).pow(mPoints);
    return truncatedQ(result.truncated(zOrder), qOrder);
}

BiSeries abelianPointHodgeSeries(long mPoints, long zOrder, long qOrder) {
    if (mPoints < 0) throw SeriesError("abelianPointHodgeSeries: mPoints must be >= 0");
    if (mPoints == 0) return BiSeries::zero(zOrder);
    FormRequest req{qOrder, zOrder};
    BiSeries power = sSeries(req).pow(mPoints - 1).truncated(zOrder);
    return power.scaled(QLaurent(mPoints));
}

namespace {

Rat coefficientAt(const BiSeries& series, long zExp, long qExp) {
    QLaurent row = series.coeff(zExp);
    return row.coeff(qExp);
}

Rat primitiveAttempt(const PointHodgeQuery& q, long zOrder, long qOrder) {
    BiSeries series = q.kind == SurfaceKind::K3
                          ? k3PointHodgeSeries(q.mPoints, zOrder, qOrder)
                          : abelianPointHodgeSeries(q.mPoints, zOrder, qOrder);
    return coefficientAt(series, 2 * q.g - 2, q.h - 1);
}

}  // namespace

Rat primitivePointHodge(const PointHodgeQuery& query) {
    if (query.r != 1) throw SeriesError("primitivePointHodge: requires divisibility 1");
    if (query.g < 0) throw SeriesError("primitivePointHodge: genus must be >= 0");
    long zOrder = 2 * query.g + 2;
    long qOrder = std::max(1L, query.h + 2);
    try {
        return primitiveAttempt(query, zOrder, qOrder);
    } catch (const InsufficientPrecision&) {
        return primitiveAttempt(query, 2 * zOrder, 2 * qOrder);
    }
}

Rat mcfPointHodge(const PointHodgeQuery& query) {
    long classM = 2 * query.h - 2;
    Rat acc(0);
    for (long k : divisors(query.r)) {
        long kRatio = query.r / k;
        if (!isEffectivePrimitiveImage(query.kind, classM, kRatio)) continue;
        long M = kRatio * kRatio * classM;  // even by construction
        if (M % 2 != 0) throw SeriesError("mcfPointHodge: summand class is odd");
        PointHodgeQuery prim = query;
        prim.r = 1;
        prim.h = M / 2 + 1;
        long e = 2 * query.g - 3 + 2 * query.mPoints;
        acc += Rat::intPow(k, e) * primitivePointHodge(prim);
    }
    return acc;
}

Rat generalMcfTransform(long g, const std::vector<CohDegree>& insertionDegrees, long r,
                        const std::map<long, Rat>& primitiveValues,
                        std::optional<SurfaceKind> kind, std::optional<long> classM) {
    Rat e = mcfExponent(g, insertionDegrees);
    Rat acc(0);
    for (long k : divisors(r)) {
        if (kind && classM &&
            !isEffectivePrimitiveImage(*kind, *classM, r / k))
            continue;
        Rat weight(1);
        if (k > 1) {
            if (!e.isInteger())
                throw NonIntegralExponent("generalMcfTransform: exponent " + e.str() +
                                          " on surviving summand k=" + std::to_string(k));
            weight = Rat::intPow(k, e.toLong());
        }
        auto it = primitiveValues.find(k);
        if (it == primitiveValues.end())
            throw MissingPrimitiveValue("generalMcfTransform: no primitive value for k=" +
                                        std::to_string(k));
        acc += weight * it->second;
    }
    return acc;
}

} // namespace surfgw
