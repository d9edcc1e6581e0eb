#ifndef SURFGW_SURFACE_HPP
#define SURFGW_SURFACE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "surfgw/rat.hpp"

namespace surfgw {

enum class SurfaceKind { K3, Abelian };

// Deformation class beta_{m,r}: self-intersection r^2 m, divisibility r.
struct CurveClass {
    SurfaceKind kind = SurfaceKind::K3;
    long m = 0;  // even
    long r = 1;  // >= 1

    CurveClass() = default;
    CurveClass(SurfaceKind k, long mm, long rr) : kind(k), m(mm), r(rr) {
        if (m % 2 != 0) throw SeriesError("CurveClass: m must be even");
        if (r < 1) throw SeriesError("CurveClass: divisibility must be >= 1");
    }

    long selfIntersection() const { return r * r * m; }
    long divisibility() const { return r; }
};

// Complex cohomology degree, stored doubled so abelian half-integer
// degrees stay exact. Totals (partition degrees, exponent sums) may
// exceed the degree range of a single surface class, so only
// non-negativity is enforced here.
struct CohDegree {
    long doubled = 0;

    CohDegree() = default;
    explicit CohDegree(long d) : doubled(d) {
        if (d < 0) throw SeriesError("CohDegree: negative doubled degree");
    }
    static CohDegree fromComplex(long d) { return CohDegree(2 * d); }

    Rat complex() const { return Rat(doubled, 2); }
    bool isIntegral() const { return doubled % 2 == 0; }
};

// Element of the exterior algebra on dx1, dy1, dx2, dy2 with Rat
// coefficients, indexed by generator subset mask (bit i = generator i,
// order dx1, dy1, dx2, dy2). The point class is dx1^dy1^dx2^dy2.
class AbelianClass {
  public:
    AbelianClass() { c_.fill(Rat(0)); }

    static AbelianClass generator(int i);
    static AbelianClass unit();
    static AbelianClass point();  // mask 0b1111
    static AbelianClass f1() { return wedgeMask(0b0011); }
    static AbelianClass f2() { return wedgeMask(0b1100); }
    static AbelianClass wedgeMask(unsigned mask);

    const Rat& coeff(unsigned mask) const { return c_[mask]; }
    void setCoeff(unsigned mask, const Rat& v) { c_[mask] = v; }

    AbelianClass operator+(const AbelianClass& o) const;
    AbelianClass operator-(const AbelianClass& o) const;
    AbelianClass scaled(const Rat& s) const;
    // Wedge product with the usual Koszul sign.
    AbelianClass wedge(const AbelianClass& o) const;

    bool operator==(const AbelianClass& o) const { return c_ == o.c_; }

  private:
    std::array<Rat, 16> c_;
};

// Sign of merging two disjoint generator masks by wedge; 0 if they overlap.
int wedgeSign(unsigned a, unsigned b);

// Gram data for the transcendental lattice component of a K3 class.
// Pairings not listed default to zero; the pairing is symmetric.
class K3Gram {
  public:
    void set(const std::string& a, const std::string& b, const Rat& v);
    Rat pairing(const std::string& a, const std::string& b) const;

  private:
    std::map<std::pair<std::string, std::string>, Rat> g_;
};

// Degree-2 class on the elliptically fibered K3: combination of the
// section class s, the fiber class f, and an opaque transcendental part.
struct K3Class {
    Rat sCoeff = Rat(0);
    Rat fCoeff = Rat(0);
    std::map<std::string, Rat> transcendental;

    K3Class() = default;
    K3Class(Rat s, Rat f) : sCoeff(std::move(s)), fCoeff(std::move(f)) {}

    K3Class operator+(const K3Class& o) const;
    K3Class scaled(const Rat& v) const;
    bool operator==(const K3Class& o) const;
};

// Intersection pairing: <s,s> = -2, <s,f> = 1, <f,f> = 0, V orthogonal
// to span(s,f) with caller-supplied Gram data.
Rat k3Pairing(const K3Class& a, const K3Class& b, const K3Gram& gram = {});

// The class beta_{m,r} = r s + r(m/2+1) f.
K3Class k3BetaClass(long m, long r);

// Cohomology-weighted partition: weakly decreasing part sizes, each
// carrying the complex degree of its cohomology weight.
struct WeightedPartition {
    struct Part {
        long size = 1;
        CohDegree weightDegree;
    };
    std::vector<Part> parts;

    long total() const;   // n
    long length() const;  // ell
};

// All positive divisors of r, ascending.
std::vector<long> divisors(long r);

// Whether the primitive class beta_{(r/k)^2 m, 1} appearing in a multiple
// cover summand is effective. kRatio is r/k, the divisibility of beta/k.
// K3: effective iff m >= 0 or (m, kRatio) = (-2, 1).
// Abelian: effective iff m >= 0.
bool isEffectivePrimitiveImage(SurfaceKind kind, long m, long kRatio);

// The algebra map phi_r on the abelian surface E1 x E2:
// dx1 -> dx1, dy1 -> (1/r) dy1, dx2 -> dx2, dy2 -> r dy2.
AbelianClass phiRAbelian(const AbelianClass& c, long r);

// The isomorphism phi_{m,r} on the K3 model: determined by
// phi(beta_{m,r}) = s + (r^2 m/2 + 1) f, phi(f) = r f, identity on the
// transcendental component.
K3Class phiMrK3(const K3Class& c, long m, long r);

// deg(lambda) = n - ell + sum deg(delta_i), as a doubled degree.
CohDegree partitionDegree(const WeightedPartition& lambda);

// Multiple cover exponent 2g - 3 + sum_i deg_C(gamma_i), exact rational.
Rat mcfExponent(long g, const std::vector<CohDegree>& insertionDegrees);

struct PTDescendent {
    long a = 2;  // >= 2
    CohDegree degree;
};

// nu = deg(lambda) + sum_i (a_i - 2 + deg_C(gamma_i)) - 2n - 1.
// Throws NonIntegralExponent if the doubled-degree sum is odd.
long nuExponent(const CohDegree& partitionDeg, const std::vector<PTDescendent>& descendents,
                long n);

// Compact text forms: "(2:p)(1:1)" for weighted partitions (weights: "p"
// for the point class, "1" for the unit, or an explicit complex degree,
// possibly a half-integer like "1/2"); "s+3f" or "2s-f" for K3 classes.
WeightedPartition parseWeightedPartition(const std::string& text);
K3Class parseK3Class(const std::string& text);

} // namespace surfgw

#endif
