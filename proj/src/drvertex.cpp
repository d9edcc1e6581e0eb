#include "surfgw/drvertex.hpp"

#include "surfgw/forms.hpp"

namespace surfgw {

Rat mukaiPairing(const MukaiVector& v, const MukaiVector& w, const K3Gram& gram) {
    return v.rank * w.degree + w.rank * v.degree - k3Pairing(v.divisorPart, w.divisorPart, gram);
}

namespace {

void enumerate(long n, std::vector<long>& remaining, PairPartition& current,
               std::vector<PairPartition>& out) {
    if (remaining.empty()) {
        out.push_back(current);
        return;
    }
    long first = remaining.front();
    std::vector<long> rest(remaining.begin() + 1, remaining.end());

    current.singletons.push_back(first);
    enumerate(n, rest, current, out);
    current.singletons.pop_back();

    for (size_t i = 0; i < rest.size(); ++i) {
        std::vector<long> rest2;
        for (size_t j = 0; j < rest.size(); ++j)
            if (j != i) rest2.push_back(rest[j]);
        current.pairs.emplace_back(first, rest[i]);
        enumerate(n, rest2, current, out);
        current.pairs.pop_back();
    }
}

}  // namespace

std::vector<PairPartition> partitionsLe2(long n) {
    if (n < 1) throw SeriesError("partitionsLe2: n must be >= 1");
    std::vector<long> all;
    for (long i = 0; i < n; ++i) all.push_back(i);
    std::vector<PairPartition> out;
    PairPartition current;
    enumerate(n, all, current, out);
    return out;
}

DRResult drRhs(const DRQuery& query) {
    long n = static_cast<long>(query.legs.size());
    if (n == 0) throw SeriesError("drRhs: query needs at least one leg");
    long aSum = 0;
    for (const auto& leg : query.legs) {
        if (leg.a == 0) throw SeriesError("drRhs: leg with a = 0");
        aSum += leg.a;
    }
    if (aSum != 0) throw SeriesError("drRhs: leg indices must sum to zero");

    // Prefactor 1 / prod a_i^{deg(gamma_i)}; degrees must be integers on K3.
    Rat prefactor(1);
    for (const auto& leg : query.legs) {
        if (!leg.gammaDegree.isIntegral())
            throw NonIntegralPrefactor("drRhs: half-integral gamma degree on K3");
        prefactor *= Rat::intPow(leg.a, leg.gammaDegree.doubled / 2);
    }

    long zi = query.zOrder + 2 * n + 6;
    long qi = std::max(1L, query.h + 4);
    FormRequest req{qi, zi};

    BiSeries th = theta(req);
    BiSeries thInv = th.inverted();
    QLaurent dInv = delta(req).inverted();
    BiSeries base = (thInv * thInv).scaled(dInv);  // 1/(Theta^2 Delta)

    MukaiVector betaHat;
    betaHat.divisorPart = K3Class(Rat(1), Rat(query.h));  // s + h f, beta^2 = 2h-2

    BiSeries total = BiSeries::zero(zi);
    for (const auto& part : partitionsLe2(n)) {
        Rat scalar(1);
        for (long i : part.singletons)
            scalar *= mukaiPairing(query.legs[static_cast<size_t>(i)].gamma, betaHat, query.gram);
        for (const auto& [i, j] : part.pairs)
            scalar *= mukaiPairing(query.legs[static_cast<size_t>(i)].gamma,
                                   query.legs[static_cast<size_t>(j)].gamma, query.gram);
        if (scalar.isZero()) continue;

        BiSeries term = base;
        for (long i : part.singletons) {
            BiSeries p = phi(query.legs[static_cast<size_t>(i)].a, req);
            if (p.isZero()) {
                term = BiSeries::zero(term.prec());
                break;
            }
            term = term * p;
        }
        if (!term.isZero())
            for (const auto& [i, j] : part.pairs)
                term = term * phi2(query.legs[static_cast<size_t>(i)].a,
                                   query.legs[static_cast<size_t>(j)].a, req);
        total = total + term.scaled(QLaurent(scalar));
    }

    // Extract the q^{h-1} coefficient of every z-row.
    long zPrec = std::min(total.prec(), query.zOrder);
    long qExp = query.h - 1;
    std::vector<Rat> rows;
    long lo = total.isZero() ? zPrec : std::min(total.val(), zPrec);
    for (long zExp = lo; zExp < zPrec; ++zExp)
        rows.push_back(total.coeff(zExp).coeff(qExp) / prefactor);
    QLaurent zSeries(lo, std::move(rows), zPrec);

    DRResult result;
    result.zSeries = zSeries;
    long start = zSeries.isZero() ? zSeries.prec() : zSeries.val();
    for (long zExp = start; zExp < zSeries.prec(); ++zExp) {
        // zExp = 2g - 2 + n
        long twoG = zExp + 2 - n;
        if (twoG < 0 || twoG % 2 != 0) continue;
        long g = twoG / 2;
        Rat coeff = zSeries.coeff(zExp);
        Rat inv = ((g + n) % 2 == 0) ? coeff : -coeff;
        result.decoded.push_back({g, inv});
    }
    return result;
}

} // namespace surfgw
