#ifndef SURFGW_PT_HPP
#define SURFGW_PT_HPP

#include <map>
#include <vector>

#include "surfgw/rat.hpp"

namespace surfgw {

// Laurent polynomial in p indexed by ch3, with an explicit window of
// valid exponents [lo, hi). Coefficients outside the window are unknown,
// not zero. Internal storage is the plain invariant <...>_{ch3}; the
// (-p)^{ch3} convention is applied only at (de)serialization.
class PLaurent {
  public:
    PLaurent() : lo_(0), hi_(0) {}
    PLaurent(long lo, std::vector<Rat> coeffs)
        : lo_(lo), hi_(lo + static_cast<long>(coeffs.size())), c_(std::move(coeffs)) {}

    long lo() const { return lo_; }
    long hi() const { return hi_; }
    bool inWindow(long ch3) const { return ch3 >= lo_ && ch3 < hi_; }

    const Rat& coeff(long ch3) const {
        if (!inWindow(ch3))
            throw MissingPrimitiveValue("PLaurent: ch3=" + std::to_string(ch3) +
                                        " outside window [" + std::to_string(lo_) + "," +
                                        std::to_string(hi_) + ")");
        return c_[static_cast<size_t>(ch3 - lo_)];
    }

    bool operator==(const PLaurent& o) const {
        return lo_ == o.lo_ && hi_ == o.hi_ && c_ == o.c_;
    }

  private:
    long lo_, hi_;
    std::vector<Rat> c_;
};

enum class SignConvention { CoefficientLevel, SeriesLevel };

struct PTContext {
    long r = 1;                   // divisibility of beta
    std::map<long, long> nuOf;    // exponent nu per divisor k
    SignConvention signConvention = SignConvention::CoefficientLevel;
};

// Coefficient-level multiple cover formula:
//   <...>_{ch3} = sum_{k | gcd(r, ch3)} (-1)^{(k-1) ch3/k} k^{nu(k)}
//                 primitive[k] at ch3/k,
// with ch3 = 0 divisible by every k (gcd(r, 0) = r).
Rat ptMcfCoefficient(long ch3, const PTContext& ctx,
                     const std::map<long, PLaurent>& primitive);

// Generating-series form with a fixed exponent e:
//   Z(p) = sum_{k|r} k^e Z_k(p^k),
// where Z_k carries the (-p)^{ch3} convention. Input and output are in
// the plain coefficient convention; the sign bookkeeping is internal.
// The output window is a contiguous range on which every summand is
// determined: the intersection of the scaled input windows.
PLaurent ptMcfSeries(long e, long r, const std::map<long, PLaurent>& primitive);

} // namespace surfgw

#endif
