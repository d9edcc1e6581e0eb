#ifndef SURFGW_DRVERTEX_HPP
#define SURFGW_DRVERTEX_HPP

#include <vector>

#include "surfgw/laurent.hpp"
#include "surfgw/surface.hpp"

namespace surfgw {

// Mukai vector (rank, divisor part, degree).
struct MukaiVector {
    Rat rank = Rat(0);
    K3Class divisorPart;
    Rat degree = Rat(0);
};

// Mukai pairing (v, w) = r1 n2 + r2 n1 - <D1, D2>.
Rat mukaiPairing(const MukaiVector& v, const MukaiVector& w, const K3Gram& gram = {});

struct MarkedLeg {
    long a = 0;           // nonzero ramification index
    MukaiVector gamma;
    CohDegree gammaDegree;  // complex degree of gamma as a cohomology class
};

struct DRQuery {
    std::vector<MarkedLeg> legs;  // nonempty, sum of a's is zero
    long h = 1;                   // beta^2 = 2h - 2, beta = s + h f primitive
    long zOrder = 5;
    K3Gram gram;
};

// A set partition of {0..n-1} into blocks of size 1 or 2: singletons plus
// disjoint pairs.
struct PairPartition {
    std::vector<long> singletons;
    std::vector<std::pair<long, long>> pairs;
};

// All set partitions of {0..n-1} with block size <= 2. The count is the
// involution number I(n): I(1)=1, I(2)=2, I(3)=4, I(4)=10, ...
std::vector<PairPartition> partitionsLe2(long n);

struct DREntry {
    long g;
    Rat invariant;  // decoded: series coefficient times (-1)^{g+n}
};

struct DRResult {
    QLaurent zSeries;             // raw z-series of the right-hand side
    std::vector<DREntry> decoded;  // zExp = 2g-2+n |-> (g, signed invariant)
};

// Right-hand side of the K3 rubber/double-ramification conjecture:
//   (prod a_i^{deg(gamma_i)})^{-1} Coeff_{q^{h-1}} [ sum over partitions of
//   (1/(Theta^2 Delta)) prod_singletons (gamma,beta) phi_a
//                       prod_pairs (gamma,gamma') phi_{a,a'} ].
// The evaluation is conjectural: it computes the conjectured closed form,
// not the rubber invariants themselves.
DRResult drRhs(const DRQuery& query);

} // namespace surfgw

#endif
