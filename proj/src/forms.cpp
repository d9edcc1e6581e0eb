#include "surfgw/forms.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace surfgw {

namespace {

std::mutex g_bernoulliMutex;
std::vector<Rat> g_bernoulli;  // B_0, B_1, ...

Rat binomial(long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(mpq_class(b));
}

Rat factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(mpq_class(f));
}

template <class Key, class Value, class Fn>
Value memoized(const Key& key, Fn&& compute) {
    static std::map<Key, Value> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, std::move(v)).first->second;
}

}  // namespace

Rat bernoulli(long n) {
    if (n < 0) throw SeriesError("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(g_bernoulliMutex);
    if (g_bernoulli.empty()) g_bernoulli.push_back(Rat(1));
    // sum_{j=0}^{m} binom(m+1, j) B_j = 0
    while (static_cast<long>(g_bernoulli.size()) <= n) {
        long m = static_cast<long>(g_bernoulli.size());
        Rat acc(0);
        for (long j = 0; j < m; ++j) acc += binomial(m + 1, j) * g_bernoulli[j];
        g_bernoulli.push_back(-acc / binomial(m + 1, m));
    }
    return g_bernoulli[n];
}

QLaurent eisenstein(long k2, const FormRequest& req) {
    if (k2 < 2 || k2 % 2 != 0) throw SeriesError("eisenstein: weight must be even and >= 2");
    return memoized<std::pair<long, long>, QLaurent>({k2, req.qOrder}, [&] {
        long N = req.qOrder;
        std::vector<Rat> c(static_cast<size_t>(std::max(1L, N)));
        c[0] = -bernoulli(k2) / Rat(2 * k2);
        for (long d = 1; d < N; ++d) {
            Rat dp = Rat(d).pow(k2 - 1);
            for (long n = d; n < N; n += d) c[static_cast<size_t>(n)] += dp;
        }
        return QLaurent(0, std::move(c), N);
    });
}

QLaurent delta(const FormRequest& req) {
    return memoized<long, QLaurent>(req.qOrder, [&] {
        long N = req.qOrder;
        long p = std::max(1L, N - 1);
        QLaurent euler = QLaurent::one().truncated(p);
        for (long n = 1; n < p; ++n) {
            QLaurent factor = QLaurent::one() - QLaurent::monomial(n, Rat(1));
            euler = euler * factor;
        }
        return euler.pow(24).shifted(1);
    });
}

BiSeries theta(const FormRequest& req) {
    return memoized<std::pair<long, long>, BiSeries>({req.zOrder, req.qOrder}, [&] {
        long zp = std::max(1L, req.zOrder - 1);
        std::vector<QLaurent> c;
        for (long e = 2; e < zp; ++e) {
            if (e % 2 != 0) {
                c.emplace_back();
                continue;
            }
            Rat scale = Rat(-2) / factorial(e);
            c.push_back(eisenstein(e, req).scaled(scale));
        }
        BiSeries exponent = c.empty() ? BiSeries::zero(zp) : BiSeries(2, std::move(c), zp);
        return exponent.expSeries().shifted(1);
    });
}

BiSeries sSeries(const FormRequest& req, SMethod method) {
    if (method == SMethod::LogDerivative) {
        BiSeries th = theta({req.qOrder, req.zOrder + 1});
        return (-dq(th)) * th.inverted();
    }
    // Divisor sum: coefficient of z^{2j} q^n is sum_{d|n} (n/d) 2 d^{2j}/(2j)!
    long N = req.qOrder;
    std::vector<QLaurent> zc;
    for (long e = 2; e < req.zOrder; ++e) {
        if (e % 2 != 0) {
            zc.emplace_back();
            continue;
        }
        std::vector<Rat> qc(static_cast<size_t>(std::max(0L, N - 1)));
        for (long d = 1; d < N; ++d) {
            Rat term = Rat(2) * Rat(d).pow(e) / factorial(e);
            for (long n = d; n < N; n += d)
                qc[static_cast<size_t>(n - 1)] += Rat(n / d) * term;
        }
        zc.push_back(QLaurent(1, std::move(qc), N));
    }
    if (zc.empty()) return BiSeries::zero(req.zOrder);
    return BiSeries(2, std::move(zc), req.zOrder);
}

BiSeries phi(long m, const FormRequest& req) {
    return memoized<std::tuple<long, long, long>, BiSeries>(
        {m, req.zOrder, req.qOrder}, [&] {
            long absM = m < 0 ? -m : m;
            long P = 2 * absM + 2;  // internal x-order
            FormRequest inner{req.qOrder, req.zOrder + P};
            BiSeries th = theta(inner);

            // Theta(x): substitute z -> x; coefficients are z-constants.
            std::vector<BiSeries> bc;
            for (long j = 1; j < P; ++j) bc.emplace_back(th.coeff(j));
            XSeries thetaX(1, std::move(bc), P);

            // Theta(x+z) = sum_k dz^k(Theta)(z) x^k / k!.
            std::vector<BiSeries> ac;
            BiSeries t = th;
            ac.push_back(t);
            for (long k = 1; k < P; ++k) {
                t = dz(t).scalarDivInt(k);
                ac.push_back(t);
            }
            XSeries thetaXZ(0, std::move(ac), P);

            XSeries ratio = thetaXZ * thetaX.inverted();
            XSeries powered = ratio.pow(m);
            if (powered.prec() <= -1)
                throw InsufficientPrecision("phi: internal x-order too small for m=" +
                                            std::to_string(m));
            BiSeries res = powered.coeff(-1);
            return truncatedQ(res.truncated(req.zOrder), req.qOrder);
        });
}

BiSeries phi2Rhs(const BiSeries& phiM, const BiSeries& phiN, long m, long n,
                 const FormRequest& req) {
    long Z = req.zOrder + 6;
    BiSeries th = theta({req.qOrder, Z});
    BiSeries hodge = dq(dq(th)) * th.inverted();  // (Dq^2 Theta)/Theta, O(q)
    BiSeries first = (phiM * phiN * hodge).scaled(QLaurent(m * n));
    BiSeries second = dq(phiM) * dq(phiN);
    return first + second;
}

BiSeries integrateDq(const BiSeries& a) {
    return a.mapCoeffs([](const QLaurent& c) {
        std::vector<Rat> out;
        long lo = c.isZero() ? c.prec() : c.val();
        for (long k = lo; k < c.windowEnd(); ++k) {
            const Rat& v = c.coeff(k);
            if (k <= 0) {
                if (!v.isZero())
                    throw InconsistentODE("integrateDq: nonzero coefficient at q^" +
                                          std::to_string(k));
                out.push_back(Rat(0));
            } else {
                out.push_back(v / Rat(k));
            }
        }
        return QLaurent(lo, std::move(out), c.prec());
    });
}

BiSeries phi2(long m, long n, const FormRequest& req) {
    return memoized<std::tuple<long, long, long, long>, BiSeries>(
        {m, n, req.zOrder, req.qOrder}, [&] {
            FormRequest inner{req.qOrder, req.zOrder + 6};
            BiSeries pm = phi(m, inner);
            BiSeries pn = phi(n, inner);
            BiSeries rhs = phi2Rhs(pm, pn, m, n, req);
            // phi_{m,n} = O(q): the q^0 row of the right-hand side must vanish
            // identically, otherwise the ODE has no O(q) solution.
            return truncatedQ(integrateDq(rhs).truncated(req.zOrder), req.qOrder);
        });
}

} // namespace surfgw
