#include "surfgw/surface.hpp"

#include <algorithm>
#include <cctype>

namespace surfgw {

int wedgeSign(unsigned a, unsigned b) {
    if (a & b) return 0;
    // Count inversions: pairs (i in a, j in b) with i > j.
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
        if (!(a & (1u << i))) continue;
        for (int j = 0; j < i; ++j)
            if (b & (1u << j)) ++inversions;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

AbelianClass AbelianClass::generator(int i) {
    AbelianClass c;
    c.c_[1u << i] = Rat(1);
    return c;
}

AbelianClass AbelianClass::unit() {
    AbelianClass c;
    c.c_[0] = Rat(1);
    return c;
}

AbelianClass AbelianClass::point() { return wedgeMask(0b1111); }

AbelianClass AbelianClass::wedgeMask(unsigned mask) {
    AbelianClass c;
    c.c_[mask] = Rat(1);
    return c;
}

AbelianClass AbelianClass::operator+(const AbelianClass& o) const {
    AbelianClass r;
    for (unsigned m = 0; m < 16; ++m) r.c_[m] = c_[m] + o.c_[m];
    return r;
}

AbelianClass AbelianClass::operator-(const AbelianClass& o) const {
    AbelianClass r;
    for (unsigned m = 0; m < 16; ++m) r.c_[m] = c_[m] - o.c_[m];
    return r;
}

AbelianClass AbelianClass::scaled(const Rat& s) const {
    AbelianClass r;
    for (unsigned m = 0; m < 16; ++m) r.c_[m] = c_[m] * s;
    return r;
}

AbelianClass AbelianClass::wedge(const AbelianClass& o) const {
    AbelianClass r;
    for (unsigned a = 0; a < 16; ++a) {
        if (c_[a].isZero()) continue;
        for (unsigned b = 0; b < 16; ++b) {
            if (o.c_[b].isZero()) continue;
            int s = wedgeSign(a, b);
            if (s == 0) continue;
            Rat term = c_[a] * o.c_[b];
            if (s < 0) term = -term;
            r.c_[a | b] += term;
        }
    }
    return r;
}

void K3Gram::set(const std::string& a, const std::string& b, const Rat& v) {
    g_[a <= b ? std::make_pair(a, b) : std::make_pair(b, a)] = v;
}

Rat K3Gram::pairing(const std::string& a, const std::string& b) const {
    auto it = g_.find(a <= b ? std::make_pair(a, b) : std::make_pair(b, a));
    return it == g_.end() ? Rat(0) : it->second;
}

K3Class K3Class::operator+(const K3Class& o) const {
    K3Class r(sCoeff + o.sCoeff, fCoeff + o.fCoeff);
    r.transcendental = transcendental;
    for (const auto& [label, v] : o.transcendental) {
        auto it = r.transcendental.find(label);
        if (it == r.transcendental.end())
            r.transcendental.emplace(label, v);
        else
            it->second += v;
    }
    return r;
}

K3Class K3Class::scaled(const Rat& v) const {
    K3Class r(sCoeff * v, fCoeff * v);
    for (const auto& [label, c] : transcendental) r.transcendental.emplace(label, c * v);
    return r;
}

bool K3Class::operator==(const K3Class& o) const {
    if (!(sCoeff == o.sCoeff && fCoeff == o.fCoeff)) return false;
    for (const auto& [label, v] : transcendental)
        if (!(v == (o.transcendental.count(label) ? o.transcendental.at(label) : Rat(0))))
            return false;
    for (const auto& [label, v] : o.transcendental)
        if (!transcendental.count(label) && !v.isZero()) return false;
    return true;
}

Rat k3Pairing(const K3Class& a, const K3Class& b, const K3Gram& gram) {
    Rat acc = Rat(-2) * a.sCoeff * b.sCoeff + a.sCoeff * b.fCoeff + a.fCoeff * b.sCoeff;
    for (const auto& [la, va] : a.transcendental)
        for (const auto& [lb, vb] : b.transcendental)
            acc += va * vb * gram.pairing(la, lb);
    return acc;
}

K3Class k3BetaClass(long m, long r) {
    if (m % 2 != 0) throw SeriesError("k3BetaClass: m must be even");
    return K3Class(Rat(r), Rat(r) * Rat(m / 2 + 1));
}

long WeightedPartition::total() const {
    long n = 0;
    for (const auto& p : parts) n += p.size;
    return n;
}

long WeightedPartition::length() const { return static_cast<long>(parts.size()); }

std::vector<long> divisors(long r) {
    if (r < 1) throw SeriesError("divisors: r must be >= 1");
    std::vector<long> d;
    for (long k = 1; k * k <= r; ++k) {
        if (r % k != 0) continue;
        d.push_back(k);
        if (k != r / k) d.push_back(r / k);
    }
    std::sort(d.begin(), d.end());
    return d;
}

bool isEffectivePrimitiveImage(SurfaceKind kind, long m, long kRatio) {
    if (m % 2 != 0) throw SeriesError("isEffectivePrimitiveImage: m must be even");
    if (kRatio < 1) throw SeriesError("isEffectivePrimitiveImage: kRatio must be >= 1");
    if (m >= 0) return true;
    if (kind == SurfaceKind::K3) return m == -2 && kRatio == 1;
    return false;
}

AbelianClass phiRAbelian(const AbelianClass& c, long r) {
    if (r < 1) throw SeriesError("phiRAbelian: r must be >= 1");
    // Generator scaling dy1 -> (1/r) dy1 (bit 1), dy2 -> r dy2 (bit 3);
    // a wedge monomial scales by the product over its generators.
    AbelianClass out;
    for (unsigned mask = 0; mask < 16; ++mask) {
        Rat v = c.coeff(mask);
        if (v.isZero()) continue;
        if (mask & 0b0010) v = v / Rat(r);
        if (mask & 0b1000) v = v * Rat(r);
        out.setCoeff(mask, v);
    }
    return out;
}

K3Class phiMrK3(const K3Class& c, long m, long r) {
    if (r < 1) throw SeriesError("phiMrK3: r must be >= 1");
    if (m % 2 != 0) throw SeriesError("phiMrK3: m must be even");
    // From phi(beta_{m,r}) = s + (r^2 m/2 + 1) f and phi(f) = r f:
    // phi(s) = (1/r) s + ((1 - r^2)/r) f.
    Rat phiS_s = Rat(1, r);
    Rat phiS_f = Rat(1 - r * r, r);
    K3Class out(c.sCoeff * phiS_s, c.sCoeff * phiS_f + c.fCoeff * Rat(r));
    out.transcendental = c.transcendental;
    return out;
}

CohDegree partitionDegree(const WeightedPartition& lambda) {
    long doubled = 2 * (lambda.total() - lambda.length());
    for (const auto& p : lambda.parts) doubled += p.weightDegree.doubled;
    return CohDegree(doubled);
}

Rat mcfExponent(long g, const std::vector<CohDegree>& insertionDegrees) {
    Rat e(2 * g - 3);
    for (const auto& d : insertionDegrees) e += d.complex();
    return e;
}

long nuExponent(const CohDegree& partitionDeg, const std::vector<PTDescendent>& descendents,
                long n) {
    if (n < 0) throw SeriesError("nuExponent: n must be >= 0");
    long doubled = partitionDeg.doubled;
    for (const auto& d : descendents) {
        if (d.a < 2) throw SeriesError("nuExponent: descendent index a must be >= 2");
        doubled += 2 * (d.a - 2) + d.degree.doubled;
    }
    if (doubled % 2 != 0)
        throw NonIntegralExponent("nuExponent: doubled-degree sum is odd");
    return doubled / 2 - 2 * n - 1;
}

namespace {

void skipSpace(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long parseLong(const std::string& s, size_t& i) {
    skipSpace(s, i);
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("expected integer at position " + std::to_string(start) + " in '" + s +
                         "'");
    return std::stol(s.substr(start, i - start));
}

}  // namespace

WeightedPartition parseWeightedPartition(const std::string& text) {
    WeightedPartition lambda;
    size_t i = 0;
    skipSpace(text, i);
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in partition '" + text + "'");
        ++i;
        long size = parseLong(text, i);
        if (size < 1) throw ParseError("part sizes must be positive in '" + text + "'");
        skipSpace(text, i);
        if (i >= text.size() || text[i] != ':')
            throw ParseError("expected ':' in partition '" + text + "'");
        ++i;
        skipSpace(text, i);
        CohDegree deg;
        if (i < text.size() && text[i] == 'p') {
            deg = CohDegree::fromComplex(2);
            ++i;
        } else {
            long num = parseLong(text, i);
            long den = 1;
            skipSpace(text, i);
            if (i < text.size() && text[i] == '/') {
                ++i;
                den = parseLong(text, i);
            }
            if (den != 1 && den != 2)
                throw ParseError("weight degree denominator must be 1 or 2 in '" + text + "'");
            // "1" as a weight means the unit class (degree 0); any other
            // number is read as an explicit complex degree.
            if (den == 1 && num == 1)
                deg = CohDegree(0);
            else
                deg = CohDegree(den == 1 ? 2 * num : num);
        }
        skipSpace(text, i);
        if (i >= text.size() || text[i] != ')')
            throw ParseError("expected ')' in partition '" + text + "'");
        ++i;
        skipSpace(text, i);
        lambda.parts.push_back({size, deg});
    }
    for (size_t j = 1; j < lambda.parts.size(); ++j)
        if (lambda.parts[j].size > lambda.parts[j - 1].size)
            throw ParseError("part sizes must be weakly decreasing in '" + text + "'");
    return lambda;
}

K3Class parseK3Class(const std::string& text) {
    K3Class out;
    size_t i = 0;
    skipSpace(text, i);
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in class '" + text + "'");
        }
        skipSpace(text, i);
        Rat coeff(1);
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
            long num = parseLong(text, i);
            long den = 1;
            if (i < text.size() && text[i] == '/') {
                ++i;
                den = parseLong(text, i);
            }
            coeff = Rat(num, den);
        }
        if (sign < 0) coeff = -coeff;
        skipSpace(text, i);
        if (i >= text.size() || (text[i] != 's' && text[i] != 'f'))
            throw ParseError("expected 's' or 'f' in class '" + text + "'");
        if (text[i] == 's')
            out.sCoeff += coeff;
        else
            out.fCoeff += coeff;
        ++i;
        skipSpace(text, i);
        first = false;
    }
    return out;
}

} // namespace surfgw
