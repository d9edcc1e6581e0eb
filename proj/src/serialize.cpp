#include "surfgw/serialize.hpp"

namespace surfgw {

namespace {

nlohmann::json precToJson(long p) {
    if (p >= kExactPrec) return "exact";
    return p;
}

long precFromJson(const nlohmann::json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "exact")
            throw ParseError("series: bad precision '" + j.get<std::string>() + "'");
        return kExactPrec;
    }
    return j.get<long>();
}

}  // namespace

nlohmann::json toJson(const QLaurent& a, const std::string& variable) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long n = a.val(); n < a.windowEnd(); ++n) coeffs.push_back(a.coeff(n).str());
    return {{"variables", {variable}},
            {"valuation", a.isZero() ? 0 : a.val()},
            {"precision", precToJson(a.prec())},
            {"coefficients", coeffs}};
}

nlohmann::json toJson(const BiSeries& a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long n = a.val(); n < a.windowEnd(); ++n) {
        const QLaurent& row = a.coeff(n);
        coeffs.push_back({{"valuation", row.isZero() ? 0 : row.val()},
                          {"precision", precToJson(row.prec())},
                          {"coefficients", [&] {
                               nlohmann::json c = nlohmann::json::array();
                               for (long m = row.val(); m < row.windowEnd(); ++m)
                                   c.push_back(row.coeff(m).str());
                               return c;
                           }()}});
    }
    return {{"variables", {"z", "q"}},
            {"zValuation", a.isZero() ? 0 : a.val()},
            {"zPrecision", precToJson(a.prec())},
            {"qPrecision", precToJson(qPrecision(a))},
            {"coefficients", coeffs}};
}

nlohmann::json toJson(const PLaurent& a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long n = a.lo(); n < a.hi(); ++n) coeffs.push_back(a.coeff(n).str());
    return {{"variables", {"p"}}, {"lo", a.lo()}, {"hi", a.hi()}, {"coefficients", coeffs}};
}

namespace {

std::vector<Rat> ratsFromJson(const nlohmann::json& j) {
    std::vector<Rat> out;
    for (const auto& s : j) out.push_back(Rat::parse(s.get<std::string>()));
    return out;
}

QLaurent univariateFromJson(const nlohmann::json& j) {
    return QLaurent(j.at("valuation").get<long>(), ratsFromJson(j.at("coefficients")),
                    precFromJson(j.at("precision")));
}

}  // namespace

QLaurent qlaurentFromJson(const nlohmann::json& j) { return univariateFromJson(j); }

BiSeries biseriesFromJson(const nlohmann::json& j) {
    std::vector<QLaurent> rows;
    for (const auto& rj : j.at("coefficients")) rows.push_back(univariateFromJson(rj));
    return BiSeries(j.at("zValuation").get<long>(), std::move(rows),
                    precFromJson(j.at("zPrecision")));
}

PLaurent plaurentFromJson(const nlohmann::json& j) {
    long lo = j.at("lo").get<long>();
    std::vector<Rat> c = ratsFromJson(j.at("coefficients"));
    if (j.contains("hi") && j.at("hi").get<long>() != lo + static_cast<long>(c.size()))
        throw ParseError("PLaurent: window does not match coefficient count");
    return PLaurent(lo, std::move(c));
}

} // namespace surfgw
