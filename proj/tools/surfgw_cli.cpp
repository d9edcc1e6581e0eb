// surfgw command-line front end.
//
// Subcommands:
//   series       dump a modular / quasi-Jacobi form as an exact JSON series
//   invariant    primitive point-Hodge invariants (divisibility 1)
//   mcf          imprimitive invariants via the multiple cover formula
//   dr-vertex    conjectural K3 rubber/DR right-hand side from a JSON query
//   pt-transform stable-pairs multiple cover transform from a JSON dataset
//   verify       run the built-in identity suite
//
// Exit codes: 0 success, 2 usage error, 3 precision error, 4 math-contract
// error (non-integral exponents, missing primitive values, ...).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "surfgw/drvertex.hpp"
#include "surfgw/forms.hpp"
#include "surfgw/gw.hpp"
#include "surfgw/pt.hpp"
#include "surfgw/serialize.hpp"
#include "surfgw/surface.hpp"
#include "surfgw/verify.hpp"

namespace {

using nlohmann::json;
using namespace surfgw;

constexpr const char* kSchemaVersion = "surfgw/1";

SurfaceKind parseSurface(const std::string& s) {
    if (s == "k3") return SurfaceKind::K3;
    if (s == "abelian") return SurfaceKind::Abelian;
    throw ParseError("unknown surface '" + s + "' (expected k3 or abelian)");
}

void printSeries(const json& payload, const std::string& format) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    // CSV: one row per coefficient.
    const json& s = payload.at("series");
    if (s.at("variables").size() == 1) {
        std::cout << "exponent,value\n";
        long v = s.at("valuation").get<long>();
        for (size_t i = 0; i < s.at("coefficients").size(); ++i)
            std::cout << (v + static_cast<long>(i)) << ","
                      << s.at("coefficients")[i].get<std::string>() << "\n";
    } else {
        std::cout << "zExponent,qExponent,value\n";
        long zv = s.at("zValuation").get<long>();
        for (size_t i = 0; i < s.at("coefficients").size(); ++i) {
            const json& row = s.at("coefficients")[i];
            long qv = row.at("valuation").get<long>();
            for (size_t j = 0; j < row.at("coefficients").size(); ++j)
                std::cout << (zv + static_cast<long>(i)) << "," << (qv + static_cast<long>(j))
                          << "," << row.at("coefficients")[j].get<std::string>() << "\n";
        }
    }
}

json invariantQueryToJson(const PointHodgeQuery& q) {
    return {{"surface", q.kind == SurfaceKind::K3 ? "k3" : "abelian"},
            {"genus", q.g},
            {"points", q.mPoints},
            {"h", q.h},
            {"div", q.r}};
}

PointHodgeQuery invariantQueryFromJson(const json& j) {
    PointHodgeQuery q;
    q.kind = parseSurface(j.at("surface").get<std::string>());
    q.g = j.at("genus").get<long>();
    q.mPoints = j.at("points").get<long>();
    q.h = j.at("h").get<long>();
    q.r = j.value("div", 1L);
    return q;
}

int runSeries(const std::string& form, long m, long n, long k2, long qOrder, long zOrder,
              const std::string& method, const std::string& format) {
    FormRequest req{qOrder, zOrder};
    json payload = {{"schema", kSchemaVersion}, {"form", form}};
    if (form == "delta")
        payload["series"] = toJson(delta(req));
    else if (form == "eisenstein")
        payload["series"] = toJson(eisenstein(k2, req));
    else if (form == "theta")
        payload["series"] = toJson(theta(req));
    else if (form == "s")
        payload["series"] = toJson(sSeries(
            req, method == "divisor-sum" ? SMethod::DivisorSum : SMethod::LogDerivative));
    else if (form == "phi")
        payload["series"] = toJson(phi(m, req));
    else if (form == "phi2")
        payload["series"] = toJson(phi2(m, n, req));
    else
        throw ParseError("unknown form '" + form + "'");
    printSeries(payload, format);
    return 0;
}

int runPointHodge(const PointHodgeQuery& query, bool applyMcf, const std::string& batchFile,
                  const std::string& format) {
    std::vector<PointHodgeQuery> queries;
    if (!batchFile.empty()) {
        std::ifstream in(batchFile);
        if (!in) throw ParseError("cannot open batch file '" + batchFile + "'");
        json batch = json::parse(in);
        for (const auto& j : batch) queries.push_back(invariantQueryFromJson(j));
    } else {
        queries.push_back(query);
    }
    std::vector<Rat> values;
    for (const auto& q : queries)
        values.push_back(applyMcf ? mcfPointHodge(q) : primitivePointHodge(q));
    if (format == "csv") {
        std::cout << "surface,genus,points,h,div,value\n";
        for (size_t i = 0; i < queries.size(); ++i) {
            const auto& q = queries[i];
            std::cout << (q.kind == SurfaceKind::K3 ? "k3" : "abelian") << "," << q.g << ","
                      << q.mPoints << "," << q.h << "," << q.r << "," << values[i].str() << "\n";
        }
    } else if (queries.size() == 1 && batchFile.empty()) {
        std::cout << json{{"schema", kSchemaVersion},
                          {"query", invariantQueryToJson(queries[0])},
                          {"value", values[0].str()}}
                         .dump(2)
                  << "\n";
    } else {
        json out = json::array();
        for (size_t i = 0; i < queries.size(); ++i)
            out.push_back({{"query", invariantQueryToJson(queries[i])},
                           {"value", values[i].str()}});
        std::cout << json{{"schema", kSchemaVersion}, {"results", out}}.dump(2) << "\n";
    }
    return 0;
}

int runDrVertex(const std::string& queryFile, const std::string& format) {
    std::ifstream in(queryFile);
    if (!in) throw ParseError("cannot open query file '" + queryFile + "'");
    json j = json::parse(in);

    DRQuery query;
    query.h = j.at("beta").at("h").get<long>();
    query.zOrder = j.value("zOrder", 5L);
    for (const auto& legJson : j.at("legs")) {
        MarkedLeg leg;
        leg.a = legJson.at("a").get<long>();
        const json& g = legJson.at("gamma");
        leg.gamma.rank = Rat::parse(g.value("rank", std::string("0")));
        leg.gamma.degree = Rat::parse(g.value("degree", std::string("0")));
        leg.gamma.divisorPart.sCoeff = Rat::parse(g.value("s", std::string("0")));
        leg.gamma.divisorPart.fCoeff = Rat::parse(g.value("f", std::string("0")));
        if (g.contains("transcendental"))
            for (const auto& [label, v] : g.at("transcendental").items())
                leg.gamma.divisorPart.transcendental.emplace(label,
                                                             Rat::parse(v.get<std::string>()));
        leg.gammaDegree = CohDegree(legJson.at("gammaDegree").get<long>() * 2);
        query.legs.push_back(leg);
    }
    if (j.contains("gram"))
        for (const auto& entry : j.at("gram"))
            query.gram.set(entry.at(0).get<std::string>(), entry.at(1).get<std::string>(),
                           Rat::parse(entry.at(2).get<std::string>()));

    DRResult result = drRhs(query);
    json decoded = json::array();
    for (const auto& e : result.decoded)
        decoded.push_back({{"g", e.g}, {"invariant", e.invariant.str()}});
    json payload = {{"schema", kSchemaVersion},
                    {"status", "conjectural"},
                    {"partitionConvention", "set-partitions-of-leg-indices"},
                    {"series", toJson(result.zSeries, "z")},
                    {"decoded", decoded}};
    printSeries(payload, format == "csv" ? "json" : format);
    return 0;
}

int runPtTransform(const std::string& inputFile, const std::string& format) {
    std::ifstream in(inputFile);
    if (!in) throw ParseError("cannot open input file '" + inputFile + "'");
    json j = json::parse(in);

    long r = j.at("r").get<long>();
    std::map<long, PLaurent> primitive;
    for (const auto& [key, value] : j.at("primitive").items())
        primitive.emplace(std::stol(key), plaurentFromJson(value));

    std::string mode = j.value("mode", std::string("series"));
    if (mode == "series") {
        long e = j.at("nu").get<long>();
        PLaurent out = ptMcfSeries(e, r, primitive);
        if (format == "csv") {
            std::cout << "ch3,value\n";
            for (long n = out.lo(); n < out.hi(); ++n)
                std::cout << n << "," << out.coeff(n).str() << "\n";
        } else {
            std::cout << json{{"schema", kSchemaVersion}, {"result", toJson(out)}}.dump(2)
                      << "\n";
        }
    } else if (mode == "coefficient") {
        PTContext ctx;
        ctx.r = r;
        if (j.at("nu").is_object())
            for (const auto& [key, value] : j.at("nu").items())
                ctx.nuOf[std::stol(key)] = value.get<long>();
        else
            for (long k : divisors(r)) ctx.nuOf[k] = j.at("nu").get<long>();
        long ch3 = j.at("ch3").get<long>();
        Rat value = ptMcfCoefficient(ch3, ctx, primitive);
        if (format == "csv")
            std::cout << "ch3,value\n" << ch3 << "," << value.str() << "\n";
        else
            std::cout << json{{"schema", kSchemaVersion}, {"ch3", ch3}, {"value", value.str()}}
                             .dump(2)
                      << "\n";
    } else {
        throw ParseError("unknown pt-transform mode '" + mode + "'");
    }
    return 0;
}

int runVerify() {
    auto results = runVerifySuite();
    bool allPassed = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << "\n";
        allPassed = allPassed && r.passed;
    }
    return allPassed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for reduced Gromov-Witten and stable-pairs "
                 "invariants of K3 and abelian surfaces"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    // series
    auto* series = app.add_subcommand("series", "Dump a form as an exact series");
    std::string form, method = "log-derivative";
    long sm = 1, sn = 1, k2 = 2, qOrder = 8, zOrder = 7;
    series->add_option("form", form, "delta|eisenstein|theta|s|phi|phi2")->required();
    series->add_option("--q-order", qOrder, "q-exponent truncation order");
    series->add_option("--z-order", zOrder, "z-exponent truncation order");
    series->add_option("--m", sm, "index m (phi, phi2)");
    series->add_option("--n", sn, "index n (phi2)");
    series->add_option("--weight", k2, "weight 2k (eisenstein)");
    series->add_option("--method", method, "s-series construction")
        ->check(CLI::IsMember({"log-derivative", "divisor-sum"}));

    // invariant / mcf
    PointHodgeQuery query;
    std::string surface = "k3", batchFile;
    auto addQueryFlags = [&](CLI::App* cmd) {
        // --h would clash with the default -h help shorthand
        cmd->set_help_flag("--help", "Print help");
        cmd->add_option("--surface", surface, "k3|abelian")
            ->check(CLI::IsMember({"k3", "abelian"}));
        cmd->add_option("--genus", query.g, "genus g");
        cmd->add_option("--points", query.mPoints, "number of point insertions");
        cmd->add_option("--h", query.h, "beta^2 = 2h-2");
        cmd->add_option("--div", query.r, "divisibility r");
        cmd->add_option("--batch", batchFile, "JSON array of queries");
    };
    auto* invariant = app.add_subcommand("invariant", "Primitive point-Hodge invariant");
    invariant->require_subcommand(1);
    addQueryFlags(invariant->add_subcommand("point-hodge", "tau_0(p)^m lambda_{g-m} insertions"));
    auto* mcf = app.add_subcommand("mcf", "Multiple cover formula evaluation");
    mcf->require_subcommand(1);
    addQueryFlags(mcf->add_subcommand("point-hodge", "tau_0(p)^m lambda_{g-m} insertions"));

    // dr-vertex
    auto* dr = app.add_subcommand("dr-vertex", "Conjectural K3 rubber/DR evaluator");
    std::string drQueryFile;
    dr->add_option("--query", drQueryFile, "JSON query file")->required();

    // pt-transform
    auto* pt = app.add_subcommand("pt-transform", "Stable-pairs multiple cover transform");
    std::string ptInputFile;
    pt->add_option("--input", ptInputFile, "JSON input file")->required();

    auto* verify = app.add_subcommand("verify", "Run the built-in identity suite");
    (void)verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (series->parsed()) return runSeries(form, sm, sn, k2, qOrder, zOrder, method, format);
        query.kind = parseSurface(surface);
        if (invariant->parsed()) return runPointHodge(query, false, batchFile, format);
        if (mcf->parsed()) return runPointHodge(query, true, batchFile, format);
        if (dr->parsed()) return runDrVertex(drQueryFile, format);
        if (pt->parsed()) return runPtTransform(ptInputFile, format);
        if (verify->parsed()) return runVerify();
    } catch (const InsufficientPrecision& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SeriesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
