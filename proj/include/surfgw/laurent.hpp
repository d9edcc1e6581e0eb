#ifndef SURFGW_LAURENT_HPP
#define SURFGW_LAURENT_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "surfgw/errors.hpp"
#include "surfgw/rat.hpp"

namespace surfgw {

// Sentinel precision for exactly known series (polynomials, constants).
inline constexpr long kExactPrec = 1L << 40;

inline long satPrec(long p) { return p >= kExactPrec ? kExactPrec : p; }

// p + d, saturating at kExactPrec (an exact operand never degrades precision).
inline long precShift(long p, long d) {
    if (p >= kExactPrec) return kExactPrec;
    return satPrec(p + d);
}

namespace detail {

// Dispatches to the coefficient ring's free isZero via argument-dependent
// lookup (the member Laurent::isZero would otherwise hide it).
template <class C>
bool coeffIsZero(const C& c) {
    return isZero(c);
}

}  // namespace detail

// Truncated Laurent series over a coefficient ring C, with an explicit
// precision: coefficients are asserted correct for all exponents < prec().
// Exponents below the stored window are known zeros; exponents at or beyond
// prec() are unknown and may never be read.
//
// The coefficient ring must provide: default ctor (zero), ctor from long,
// + - * unary-, ==, and the free functions isZero, invert, divByInt, agrees.
//
// Values are immutable after construction; all operations are pure.
template <class C>
class Laurent {
  public:
    // Exact zero.
    Laurent() : val_(kExactPrec), prec_(kExactPrec) {}

    // Exact constant.
    explicit Laurent(long n) : Laurent(C(n)) {}
    explicit Laurent(const C& c) : val_(0), prec_(kExactPrec) {
        c_.push_back(c);
        canonicalize();
    }

    Laurent(long valuation, std::vector<C> coeffs, long precision)
        : val_(valuation), prec_(satPrec(precision)), c_(std::move(coeffs)) {
        if (static_cast<long>(c_.size()) > prec_ - val_)
            c_.resize(static_cast<size_t>(std::max(0L, prec_ - val_)));
        canonicalize();
    }

    static Laurent zero(long precision) {
        Laurent r;
        r.prec_ = satPrec(precision);
        r.val_ = r.prec_;
        return r;
    }

    static Laurent one() { return Laurent(1); }

    static Laurent monomial(long exponent, const C& c, long precision = kExactPrec) {
        return Laurent(exponent, {c}, precision);
    }

    bool isZero() const { return c_.empty(); }
    // For the zero series the valuation equals the precision (nothing is
    // known to be nonzero anywhere below prec()).
    long val() const { return val_; }
    long prec() const { return prec_; }
    long windowEnd() const { return val_ + static_cast<long>(c_.size()); }
    const std::vector<C>& storedCoeffs() const { return c_; }

    const C& coeff(long n) const {
        if (n >= prec_)
            throw InsufficientPrecision("coeff at exponent " + std::to_string(n) +
                                        " >= precision " + std::to_string(prec_));
        if (n < val_ || n >= windowEnd()) return zeroCoeff();
        return c_[static_cast<size_t>(n - val_)];
    }

    Laurent operator-() const {
        Laurent r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        long p = std::min(a.prec_, b.prec_);
        // An exact zero has valuation kExactPrec; fold it out before the
        // window arithmetic below.
        if (a.isZero()) return b.truncated(p);
        if (b.isZero()) return a.truncated(p);
        long lo = std::min(a.val_, b.val_);
        long hi = std::min(p, std::max(a.windowEnd(), b.windowEnd()));
        if (hi <= lo) return zero(p);
        std::vector<C> c;
        c.reserve(static_cast<size_t>(hi - lo));
        for (long n = lo; n < hi; ++n) c.push_back(a.known(n) + b.known(n));
        return Laurent(lo, std::move(c), p);
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        long p = std::min(precShift(a.prec_, b.val_), precShift(b.prec_, a.val_));
        if (a.isZero() || b.isZero()) return zero(p);
        long lo = a.val_ + b.val_;
        long hi = std::min(p, a.windowEnd() + b.windowEnd() - 1);
        if (hi <= lo) return zero(p);
        std::vector<C> c(static_cast<size_t>(hi - lo));
        for (long i = a.val_; i < a.windowEnd(); ++i) {
            if (detail::coeffIsZero(a.c_[static_cast<size_t>(i - a.val_)])) continue;
            long jmax = std::min(b.windowEnd(), hi - i);
            for (long j = b.val_; j < jmax; ++j) {
                const C& bj = b.c_[static_cast<size_t>(j - b.val_)];
                if (detail::coeffIsZero(bj)) continue;
                c[static_cast<size_t>(i + j - lo)] =
                    c[static_cast<size_t>(i + j - lo)] +
                    a.c_[static_cast<size_t>(i - a.val_)] * bj;
            }
        }
        return Laurent(lo, std::move(c), p);
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.val_ == b.val_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }

    Laurent scaled(const C& s) const {
        if (detail::coeffIsZero(s)) return zero(prec_);
        Laurent r(*this);
        for (auto& c : r.c_) c = c * s;
        r.canonicalize();
        return r;
    }

    Laurent scalarDivInt(long n) const {
        Laurent r(*this);
        for (auto& c : r.c_) c = divByInt(c, n);
        return r;
    }

    // Two-sided inverse up to the propagated precision.
    // Writing *this = x^v u with u a unit power series known to order
    // prec - v, the inverse x^{-v} u^{-1} is correct below prec - 2v.
    // An exact input with more than one term has an unbounded expansion,
    // so a finite precCap is required in that case.
    Laurent inverted(long precCap = kExactPrec) const {
        if (isZero()) throw NotInvertible("inverse of zero series");
        const C& lead = c_.front();
        long pEff = std::min(prec_, precCap >= kExactPrec ? prec_ : satPrec(precCap + 2 * val_));
        if (c_.size() == 1) {
            long rp = pEff >= kExactPrec ? kExactPrec : pEff - 2 * val_;
            return monomial(-val_, invert(lead), rp);
        }
        if (pEff >= kExactPrec)
            throw SeriesError("inverted: unbounded expansion; supply a precision cap");
        long order = pEff - val_;  // number of u^{-1} coefficients
        long rp = pEff - 2 * val_;
        if (order <= 0) return zero(rp);
        std::vector<C> b(static_cast<size_t>(order));
        C lead_inv = invert(lead);
        b[0] = lead_inv;
        for (long n = 1; n < order; ++n) {
            C acc{};
            long imax = std::min(n, static_cast<long>(c_.size()) - 1);
            for (long i = 1; i <= imax; ++i)
                acc = acc + c_[static_cast<size_t>(i)] * b[static_cast<size_t>(n - i)];
            b[static_cast<size_t>(n)] = -(lead_inv * acc);
        }
        return Laurent(-val_, std::move(b), rp);
    }

    Laurent pow(long e, long invPrecCap = kExactPrec) const {
        if (e == 0) return one();
        if (e < 0) return inverted(invPrecCap).pow(-e);
        Laurent base(*this), acc;
        bool started = false;
        while (e > 0) {
            if (e & 1) {
                acc = started ? acc * base : base;
                started = true;
            }
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return acc;
    }

    // Formal derivative: coefficient n c_n moved to exponent n-1.
    Laurent derive() const {
        std::vector<C> c;
        c.reserve(c_.size());
        for (long n = val_; n < windowEnd(); ++n)
            c.push_back(C(n) * c_[static_cast<size_t>(n - val_)]);
        return Laurent(val_ - 1, std::move(c), precShift(prec_, -1));
    }

    // The operator x d/dx: coefficient at exponent n multiplied by n.
    Laurent mulByExponent() const {
        std::vector<C> c;
        c.reserve(c_.size());
        for (long n = val_; n < windowEnd(); ++n)
            c.push_back(C(n) * c_[static_cast<size_t>(n - val_)]);
        return Laurent(val_, std::move(c), prec_);
    }

    // Variable substitution x -> x^k.
    Laurent dilated(long k) const {
        if (k < 1) throw SeriesError("dilated: k must be >= 1");
        if (k == 1) return *this;
        long p = prec_ >= kExactPrec ? kExactPrec
                                     : k * prec_ - (k - 1) * std::max(0L, -val_);
        if (isZero()) return zero(p);
        std::vector<C> c(static_cast<size_t>((c_.size() - 1) * k + 1));
        for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
        return Laurent(k * val_, std::move(c), p);
    }

    // Multiplication by x^d.
    Laurent shifted(long d) const {
        if (isZero()) return zero(precShift(prec_, d));
        Laurent r(*this);
        r.val_ += d;
        r.prec_ = precShift(r.prec_, d);
        return r;
    }

    Laurent truncated(long p) const {
        p = satPrec(p);
        if (p >= prec_) return *this;
        Laurent r(*this);
        r.prec_ = p;
        if (r.windowEnd() > p)
            r.c_.resize(static_cast<size_t>(std::max(0L, p - r.val_)));
        r.canonicalize();
        return r;
    }

    // exp(*this) = sum_n (*this)^n / n!, requiring strictly positive
    // valuation so the sum terminates at the working precision.
    Laurent expSeries(long precCap = kExactPrec) const {
        long p = std::min(prec_, satPrec(precCap));
        if (!isZero() && val_ < 1)
            throw PositiveValuationRequired("expSeries: valuation " + std::to_string(val_));
        if (p >= kExactPrec && !isZero())
            throw SeriesError("expSeries: exact input needs a precision cap");
        Laurent acc = one().truncated(p);
        Laurent term = acc;
        for (long n = 1; ; ++n) {
            term = (term * *this).scalarDivInt(n).truncated(p);
            if (term.isZero()) break;
            acc = acc + term;
        }
        return acc;
    }

    template <class F>
    Laurent mapCoeffs(F&& f) const {
        Laurent r(*this);
        for (auto& c : r.c_) c = f(c);
        r.canonicalize();
        return r;
    }

  private:
    // Coefficient at n assuming n < prec (no bounds throw).
    const C& known(long n) const {
        if (n < val_ || n >= windowEnd()) return zeroCoeff();
        return c_[static_cast<size_t>(n - val_)];
    }

    static const C& zeroCoeff() {
        static const C z{};
        return z;
    }

    void canonicalize() {
        size_t lead = 0;
        while (lead < c_.size() && detail::coeffIsZero(c_[lead])) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = prec_;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
        while (!c_.empty() && detail::coeffIsZero(c_.back())) c_.pop_back();
    }

    long val_;
    long prec_;
    std::vector<C> c_;  // exponents val_ .. val_+size-1
};

template <class C>
bool isZero(const Laurent<C>& a) {
    return a.isZero();
}

template <class C>
Laurent<C> invert(const Laurent<C>& a) {
    return a.inverted();
}

template <class C>
Laurent<C> divByInt(const Laurent<C>& a, long n) {
    return a.scalarDivInt(n);
}

// Coefficientwise agreement on the shared-precision window.
template <class C>
bool agrees(const Laurent<C>& a, const Laurent<C>& b) {
    long limit = std::min(a.prec(), b.prec());
    long lo = std::min(a.isZero() ? limit : a.val(), b.isZero() ? limit : b.val());
    for (long n = lo; n < limit; ++n)
        if (!agrees(a.coeff(n), b.coeff(n))) return false;
    return true;
}

// q-Laurent series with exact rational coefficients.
using QLaurent = Laurent<Rat>;
// z-Laurent series of q-Laurent series ("z-outer, q-inner").
using BiSeries = Laurent<QLaurent>;
// Auxiliary x-series of bivariate coefficients, used for residues.
using XSeries = Laurent<BiSeries>;

// Common q-precision shared by the stored z-coefficients.
inline long qPrecision(const BiSeries& b) {
    long p = kExactPrec;
    for (const auto& c : b.storedCoeffs())
        if (!c.isZero()) p = std::min(p, c.prec());
    return p;
}

inline BiSeries truncatedQ(const BiSeries& b, long qPrec) {
    return b.mapCoeffs([qPrec](const QLaurent& c) { return c.truncated(qPrec); });
}

// All odd-exponent coefficients vanish.
template <class C>
bool isEvenSeries(const Laurent<C>& a) {
    for (long n = a.val(); n < a.windowEnd(); ++n)
        if ((n % 2 + 2) % 2 == 1 && !isZero(a.coeff(n))) return false;
    return true;
}

// All even-exponent coefficients vanish.
template <class C>
bool isOddSeries(const Laurent<C>& a) {
    for (long n = a.val(); n < a.windowEnd(); ++n)
        if (n % 2 == 0 && !isZero(a.coeff(n))) return false;
    return true;
}

// q d/dq on a q-series.
inline QLaurent dq(const QLaurent& a) { return a.mulByExponent(); }

// q d/dq on a bivariate series acts on every z-coefficient.
inline BiSeries dq(const BiSeries& a) {
    return a.mapCoeffs([](const QLaurent& c) { return c.mulByExponent(); });
}

// Formal z-derivative.
inline BiSeries dz(const BiSeries& a) { return a.derive(); }

} // namespace surfgw

#endif
