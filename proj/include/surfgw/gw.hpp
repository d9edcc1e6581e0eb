#ifndef SURFGW_GW_HPP
#define SURFGW_GW_HPP

#include <map>
#include <optional>
#include <vector>

#include "surfgw/forms.hpp"
#include "surfgw/surface.hpp"

namespace surfgw {

// Query for <tau_0(p)^m lambda_{g-m}>_{g, beta_{2h-2, r}}.
struct PointHodgeQuery {
    SurfaceKind kind = SurfaceKind::K3;
    long g = 0;        // genus, >= 0
    long mPoints = 0;  // number of point insertions, >= 0
    long h = 0;        // beta^2 = 2h - 2; any integer for K3
    long r = 1;        // divisibility, >= 1
};

// K3 primitive generating series
//   sum_{g,h} <tau_0(p)^m lambda_{g-m}> z^{2g-2} q^{h-1} = S^m / (Theta^2 Delta).
BiSeries k3PointHodgeSeries(long mPoints, long zOrder, long qOrder);

// Abelian primitive generating series: m S^{m-1} (the zero series for m=0).
BiSeries abelianPointHodgeSeries(long mPoints, long zOrder, long qOrder);

// Primitive invariant: coefficient of z^{2g-2} q^{h-1}. Requires r = 1.
// Truncation orders are chosen automatically; one doubling retry on
// InsufficientPrecision, then the error propagates.
Rat primitivePointHodge(const PointHodgeQuery& query);

// Imprimitive invariant by the multiple cover formula:
//   sum_{k|r} k^{2g-3+2m} <...>_{g, beta_{(r/k)^2 (2h-2), 1}},
// with non-effective summands contributing zero.
Rat mcfPointHodge(const PointHodgeQuery& query);

// Generic multiple cover transform with caller-supplied primitive values:
//   sum_{k|r} k^{mcfExponent(g, degrees)} * primitiveValues[k].
// If classM is supplied (together with kind), summands whose primitive
// image is non-effective are forced to zero before the values map is
// consulted. A fractional exponent on a surviving k >= 2 summand raises
// NonIntegralExponent.
Rat generalMcfTransform(long g, const std::vector<CohDegree>& insertionDegrees, long r,
                        const std::map<long, Rat>& primitiveValues,
                        std::optional<SurfaceKind> kind = std::nullopt,
                        std::optional<long> classM = std::nullopt);

} // namespace surfgw

#endif
