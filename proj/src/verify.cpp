#include "surfgw/verify.hpp"

#include <random>

#include "surfgw/forms.hpp"
#include "surfgw/gw.hpp"
#include "surfgw/pt.hpp"

namespace surfgw {

namespace {

bool sTwoFormulaAgreement() {
    FormRequest req{8, 9};
    return agrees(sSeries(req, SMethod::LogDerivative), sSeries(req, SMethod::DivisorSum));
}

bool phi1IsTheta() {
    FormRequest req{6, 7};
    return agrees(phi(1, req), theta(req)) && phi(0, req).isZero() && phi(-1, req).isZero();
}

bool odeResiduals() {
    FormRequest req{6, 7};
    for (long m = 1; m <= 2; ++m)
        for (long n = 1; n <= 2; ++n) {
            BiSeries p = phi2(m, n, req);
            BiSeries rhs = phi2Rhs(phi(m, req), phi(n, req), m, n, req);
            if (!agrees(dq(p), rhs.truncated(dq(p).prec()))) return false;
            for (long z = p.val(); z < p.windowEnd(); ++z)
                if (!p.coeff(z).coeff(0).isZero()) return false;
        }
    return true;
}

bool mcfIdentityR1() {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<long> gDist(0, 3), mDist(0, 2), hDist(0, 3);
    for (int i = 0; i < 10; ++i) {
        PointHodgeQuery q;
        q.kind = (i % 2 == 0) ? SurfaceKind::K3 : SurfaceKind::Abelian;
        q.g = gDist(rng);
        q.mPoints = mDist(rng);
        q.h = hDist(rng);
        q.r = 1;
        if (q.kind == SurfaceKind::Abelian && q.h < 1) q.h = 1;
        if (!(mcfPointHodge(q) == primitivePointHodge(q))) return false;
    }
    return true;
}

bool ptConventionCoherence() {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeffDist(-9, 9);
    for (long r : {1L, 2L, 3L, 4L}) {
        long e = 2;
        std::map<long, PLaurent> prim;
        for (long k : divisors(r)) {
            std::vector<Rat> c;
            for (int i = 0; i < 8; ++i) c.push_back(Rat(coeffDist(rng)));
            prim.emplace(k, PLaurent(0, std::move(c)));
        }
        PLaurent out = ptMcfSeries(e, r, prim);
        PTContext ctx;
        ctx.r = r;
        for (long k : divisors(r)) ctx.nuOf[k] = e;
        for (long n = out.lo(); n < out.hi(); ++n)
            if (!(out.coeff(n) == ptMcfCoefficient(n, ctx, prim))) return false;
    }
    return true;
}

}  // namespace

std::vector<VerifyResult> runVerifySuite() {
    return {
        {"s-two-formula-agreement", sTwoFormulaAgreement()},
        {"phi1-equals-theta", phi1IsTheta()},
        {"phi2-ode-residuals", odeResiduals()},
        {"mcf-r1-identity", mcfIdentityR1()},
        {"pt-convention-coherence", ptConventionCoherence()},
    };
}

} // namespace surfgw
