#ifndef SURFGW_RAT_HPP
#define SURFGW_RAT_HPP

#include <gmpxx.h>

#include <string>

#include "surfgw/errors.hpp"

namespace surfgw {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over GMP's mpq_class; all arithmetic is exact.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                                   // NOLINT(google-explicit-constructor)
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw SeriesError("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "num", "num/den" or "-num/den" in base 10.
    static Rat parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw ParseError("Rat: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw ParseError("Rat: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rat(v);
    }

    bool isZero() const { return sgn(v_) == 0; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Defined only for integer values that fit a long.
    long toLong() const {
        if (!isInteger()) throw SeriesError("Rat: not an integer: " + str());
        if (!v_.get_num().fits_slong_p()) throw SeriesError("Rat: integer too large for long");
        return v_.get_num().get_si();
    }

    std::string str() const {
        if (isInteger()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.isZero()) throw SeriesError("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    // k^e for integer e of either sign, as an exact rational.
    static Rat intPow(long k, long e) {
        if (k == 0) {
            if (e <= 0) throw SeriesError("Rat: 0^e with e <= 0");
            return Rat(0);
        }
        mpz_class base(k);
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (e >= 0) return Rat(mpq_class(p));
        mpq_class q(1, 1);
        q /= p;
        q.canonicalize();
        return Rat(q);
    }

    // v^e for integer e; negative e inverts.
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        bool inv = e < 0;
        unsigned long n = static_cast<unsigned long>(inv ? -e : e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), n);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), n);
        if (inv) {
            if (isZero()) throw SeriesError("Rat: 0^negative");
            std::swap(num, den);
        }
        mpq_class q(num, den);
        q.canonicalize();
        return Rat(q);
    }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

inline bool isZero(const Rat& r) { return r.isZero(); }

inline Rat invert(const Rat& r) {
    if (r.isZero()) throw NotInvertible("Rat: inverse of zero");
    return Rat(1) / r;
}

inline Rat divByInt(const Rat& r, long n) { return r / Rat(n); }

inline bool agrees(const Rat& a, const Rat& b) { return a == b; }

} // namespace surfgw

#endif
