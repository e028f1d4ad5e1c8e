#include "hkc/report.hpp"

#include "hkc/catalog.hpp"
#include "hkc/cones.hpp"
#include "hkc/fano.hpp"

namespace hkc::report {

const std::map<std::string, std::string>& moduleVersions()
{
    static const std::map<std::string, std::string> versions{
        {"bb-lattice", "1.0.0"}, {"blowup-geometry", "1.0.0"}, {"catalog-cli", "1.0.0"}, {"chern-core", "1.0.0"},
        {"cones", "1.0.0"},      {"fano-lines", "1.0.0"},      {"grassmann", "1.0.0"},
    };
    return versions;
}

io::Json reportFanoLines()
{
    using io::Json;
    using io::toJson;
    const auto& m = fano::model();
    const auto& chern = m.chernClassesOfX();
    const auto& p = m.pairingMatrix();

    Json pairing = Json::array();
    for (const auto& row : p)
        pairing.push_back(Json::array({toJson(row[0]), toJson(row[1])}));

    const Rational low(1);
    const Rational high = makeRational(8, 5);
    cones::GapReport gap = cones::gapReport(cones::Pairing2(p), low, high);

    Json table = Json::array();
    bool allStrict = true;
    for (const auto& e : gap.endpoints) {
        table.push_back(Json{
            {"lambda", toJson(e.lambda)},
            {"c2_dot_c", toJson(e.probeDotC)},
            {"c2_dot_g2_minus_lambda_c", toJson(e.probeDotSecond)},
            {"positive", e.probeNefAgainstEff},
        });
        allStrict = allStrict && e.nefStrictlyExceedsEff;
    }

    Json entries = Json::array();
    for (const auto& e : catalog::listEntries("fano-lines"))
        entries.push_back(toJson(e));

    Json versions = Json::object();
    for (const auto& [name, v] : moduleVersions())
        versions[name] = v;

    return Json{
        {"report", "fano-lines"},
        {"inputs",
         {{"ambient", "Gr(2,6)"},
          {"zero_locus_of", "Sym^3 U^dual"},
          {"basis", {"g2", "c"}},
          {"lambda_endpoints", {toJson(low), toJson(high)}}}},
        {"fundamental_class", m.fundamentalClass().toString()},
        {"pairing_matrix", pairing},
        {"c1", toJson(chern.c1)},
        {"c2", toJson(chern.c2)},
        {"c2_ambient", chern.c2Ambient.toString()},
        {"c2_squared", toJson(m.pair(chern.c2, chern.c2))},
        {"nef_endpoint_table", table},
        {"nef_strictly_exceeds_eff", allStrict},
        {"gap_report", toJson(gap)},
        {"catalog", entries},
        {"module_versions", versions},
    };
}

} // namespace hkc::report
