#include "hkc/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hkc::io {

Json toJson(const Rational& r) { return hkc::toString(r); }

Rational rationalFromJson(const Json& j)
{
    if (j.is_string())
        return parseRational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    throw std::invalid_argument("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

Json toJson(const bb::Lattice& l)
{
    Json gram = Json::array();
    for (const auto& row : l.gram()) {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(toJson(x));
        gram.push_back(r);
    }
    return Json{{"labels", l.labels()}, {"gram", gram}};
}

bb::Lattice latticeFromJson(const Json& j)
{
    if (!j.is_object() || !j.contains("gram") || !j.at("gram").is_array())
        throw std::invalid_argument("lattice JSON needs a \"gram\" array");
    RatMat gram;
    for (const auto& row : j.at("gram")) {
        if (!row.is_array())
            throw std::invalid_argument("Gram rows must be arrays");
        RatVec r;
        for (const auto& x : row)
            r.push_back(rationalFromJson(x));
        gram.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels"))
            labels.push_back(l.get<std::string>());
    return bb::Lattice(std::move(labels), std::move(gram));
}

Json toJson(const bb::Signature& s)
{
    return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json toJson(const bb::RankReport& r)
{
    return Json{
        {"k3_hilbert_square",
         {{"b2_K3", r.b2K3}, {"b2", r.b2HilbSquare}, {"dim_sym2_h2", r.sym2HilbSquare}, {"h4_equals_sym2_h2", true}}},
        {"generalized_kummer",
         {{"b1_A", r.b1Abelian},
          {"b2_A", r.b2Abelian},
          {"b2", r.b2Kummer},
          {"dim_sym2_h2", r.sym2Kummer},
          {"extra_unimodular_rank", r.kummerExtraRank},
          {"b4", r.b4Kummer}}},
        {"three_torsion_points", r.threeTorsionCount},
    };
}

Json toJson(const blowup::Verify30q& v)
{
    return Json{{"lhs", toJson(v.lhs)}, {"rhs", toJson(v.rhs)}, {"equal", v.equal}};
}

namespace {

Json integerJson(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Integer integerFromJson(const Json& j)
{
    Rational r = rationalFromJson(j);
    if (r.get_den() != 1)
        throw std::invalid_argument("ray coordinates must be integers");
    return r.get_num();
}

Json polyJson(const cones::LambdaPoly& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients())
        coeffs.push_back(toJson(c));
    return Json{{"expression", p.toString()}, {"coefficients", coeffs}, {"degree", p.degree()}};
}

} // namespace

Json toJson(const cones::Cone2& c)
{
    Json rays = Json::array();
    for (const auto& r : c.rays())
        rays.push_back(Json::array({integerJson(r.v()[0]), integerJson(r.v()[1])}));
    return Json{{"basis", {"g2", "c"}}, {"rays", rays}};
}

cones::Cone2 coneFromJson(const Json& j)
{
    if (!j.is_object() || !j.contains("rays") || !j.at("rays").is_array())
        throw std::invalid_argument("cone JSON needs a \"rays\" array");
    if (j.contains("basis") && j.at("basis") != Json::array({"g2", "c"}))
        throw std::invalid_argument("cone basis must be [\"g2\", \"c\"]");
    std::vector<cones::Vec2> rays;
    for (const auto& r : j.at("rays")) {
        if (!r.is_array() || r.size() != 2)
            throw std::invalid_argument("each ray must have two coordinates");
        rays.push_back({Rational(integerFromJson(r[0])), Rational(integerFromJson(r[1]))});
    }
    return cones::Cone2::fromVectors(rays);
}

cones::Pairing2 pairingFromJson(const Json& j)
{
    bb::Lattice l = latticeFromJson(j);
    if (l.rank() != 2)
        throw std::invalid_argument("pairing must be a 2x2 matrix");
    fano::Matrix2 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            m[i][k] = l.entry(i, k);
    return cones::Pairing2(m);
}

Json toJson(const cones::GapReport& r)
{
    Json endpoints = Json::array();
    for (const auto& e : r.endpoints) {
        endpoints.push_back(Json{
            {"lambda", toJson(e.lambda)},
            {"eff_rays", toJson(e.eff).at("rays")},
            {"dual_rays", toJson(e.dual).at("rays")},
            {"containment", cones::toString(e.verdict)},
            {"nef_strictly_exceeds_eff", e.nefStrictlyExceedsEff},
            {"probe_dot_c", toJson(e.probeDotC)},
            {"probe_dot_g2_minus_lambda_c", toJson(e.probeDotSecond)},
            {"probe_nef_against_eff", e.probeNefAgainstEff},
        });
    }
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{
            {"quantity", c.name},
            {"as_function_of_lambda", polyJson(c.value)},
            {"at_low", toJson(c.atLow)},
            {"at_high", toJson(c.atHigh)},
            {"requirement", c.strict ? "> 0" : ">= 0"},
            {"holds", c.holds},
        });
    }
    return Json{
        {"lambda_interval", {toJson(r.low), toJson(r.high)}},
        {"probe", {toJson(r.probe[0]), toJson(r.probe[1])}},
        {"endpoints", endpoints},
        {"witness_rays", toJson(r.witnesses).at("rays")},
        {"interval_checks", checks},
        {"all_checks_affine_in_lambda", r.allAffine},
        {"witnesses_nef_on_interval", r.witnessesNefOnInterval},
        {"eff_strictly_inside_witnesses_on_interval", r.effInsideWitnessesOnInterval},
        {"probe_nef_on_interval", r.probeNefOnInterval},
        {"strict_gap_on_interval", r.strictGapOnInterval},
        {"justification", r.justification},
    };
}

Json toJson(const fano::FanoClass2& x) { return Json::array({toJson(x.a), toJson(x.b)}); }

Json toJson(const catalog::CatalogEntry& e)
{
    Json cls;
    if (const auto* f = std::get_if<fano::FanoClass2>(&e.classExpr)) {
        cls = Json{{"basis", {"g2", "c"}}, {"coordinates", toJson(*f)}, {"expression", f->toString()}};
    } else if (const auto* v = std::get_if<RatVec>(&e.classExpr)) {
        Json coords = Json::array();
        for (const auto& x : *v)
            coords.push_back(toJson(x));
        cls = Json{{"coordinates", coords}};
    } else {
        cls = Json{{"symbol", std::get<catalog::SymbolicTag>(e.classExpr).tag}};
    }
    Json flags = Json::array();
    for (const auto& f : e.flags) {
        Json fj{{"flag", catalog::toString(f.flag)}, {"value", f.value}, {"provenance", f.provenance}};
        if (!f.genericity.empty())
            fj["genericity"] = f.genericity;
        flags.push_back(fj);
    }
    Json out{{"variety", e.variety}, {"object", e.object}, {"class", cls}, {"flags", flags}};
    if (!e.data.empty()) {
        Json data = Json::array();
        for (const auto& d : e.data)
            data.push_back(Json{{"name", d.name}, {"value", toJson(d.value)}, {"provenance", d.provenance}});
        out["data"] = data;
    }
    out["provenance"] = e.provenance;
    return out;
}

Json readJsonFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
}

Json jsonArgument(const std::string& arg)
{
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        try {
            return Json::parse(arg);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed inline JSON: ") + e.what());
        }
    }
    return readJsonFile(arg);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace hkc::io
