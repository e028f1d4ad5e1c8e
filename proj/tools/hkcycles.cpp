// Command-line front end. Exit codes: 0 success, 2 parse/usage error,
// 3 internal invariant violation.

#include "hkc/blowup.hpp"
#include "hkc/catalog.hpp"
#include "hkc/cones.hpp"
#include "hkc/fano.hpp"
#include "hkc/json_io.hpp"
#include "hkc/lattice.hpp"
#include "hkc/report.hpp"
#include "hkc/schubert.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace hkc;
using io::Json;
using io::toJson;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    int k = 2;
    int n = 6;
    std::string gram;
    std::string x;
    std::string y;
    std::vector<std::string> lambda;
    std::string cone;
    std::string outer;
    std::string inner;
    std::string pairing;
    std::string variety = "fano-lines";
    std::vector<std::string> args;
};

void emit(const Options& o, const Json& j, const std::string& text)
{
    if (o.json)
        std::cout << io::dump(j);
    else
        std::cout << text << "\n";
}

std::string requireArg(const Options& o, std::size_t i, const char* what)
{
    if (o.args.size() <= i)
        throw std::invalid_argument(std::string("missing argument: ") + what);
    return o.args[i];
}

schubert::GrassmannianSpec grassmannian(const Options& o)
{
    schubert::GrassmannianSpec g{o.k, o.n};
    g.validate();
    return g;
}

bb::Lattice loadGram(const Options& o)
{
    if (o.gram.empty())
        throw std::invalid_argument("--gram is required");
    return io::latticeFromJson(io::readJsonFile(o.gram));
}

RatVec loadVector(const std::string& text, const char* name, std::size_t expected)
{
    if (text.empty())
        throw std::invalid_argument(std::string("--") + name + " is required");
    RatVec v = parseRationalList(text);
    if (v.size() != expected)
        throw std::invalid_argument(std::string("--") + name + " has " + std::to_string(v.size()) +
                                    " coordinates, expected " + std::to_string(expected) +
                                    " (lattice rank + delta)");
    return v;
}

cones::Pairing2 loadPairing(const Options& o)
{
    if (o.pairing.empty())
        return cones::Pairing2(fano::model().pairingMatrix());
    return io::pairingFromJson(io::jsonArgument(o.pairing));
}

Rational singleLambda(const Options& o)
{
    if (o.lambda.size() != 1)
        throw std::invalid_argument("expected exactly one --lambda");
    return parseRational(o.lambda[0]);
}

// schubert ------------------------------------------------------------------

void schubertMult(const Options& o)
{
    auto g = grassmannian(o);
    auto a = schubert::parseSchubertClass(requireArg(o, 0, "first class"), g);
    auto b = schubert::parseSchubertClass(requireArg(o, 1, "second class"), g);
    auto p = a * b;
    emit(o, Json{{"grassmannian", {{"k", g.k}, {"n", g.n}}}, {"product", p.toString()}}, p.toString());
}

void schubertIntegrate(const Options& o)
{
    auto g = grassmannian(o);
    auto a = schubert::parseSchubertClass(requireArg(o, 0, "class"), g);
    Rational v = schubert::integrate(a);
    emit(o, Json{{"grassmannian", {{"k", g.k}, {"n", g.n}}}, {"integral", toJson(v)}}, hkc::toString(v));
}

// fano ----------------------------------------------------------------------

void fanoInvariants(const Options& o)
{
    const auto& m = fano::model();
    const auto& p = m.pairingMatrix();
    const auto& ch = m.chernClassesOfX();
    Json j{
        {"fundamental_class", m.fundamentalClass().toString()},
        {"pairing_matrix", {{toJson(p[0][0]), toJson(p[0][1])}, {toJson(p[1][0]), toJson(p[1][1])}}},
        {"c1", toJson(ch.c1)},
        {"c2", toJson(ch.c2)},
        {"c2_ambient", ch.c2Ambient.toString()},
    };
    std::string text = "[X] = " + m.fundamentalClass().toString() + "\n" + "g2.g2 = " + hkc::toString(p[0][0]) +
                       ", g2.c = " + hkc::toString(p[0][1]) + ", c.c = " + hkc::toString(p[1][1]) + "\n" +
                       "c1 = " + hkc::toString(ch.c1) + "\n" + "c2 = " + ch.c2.toString();
    emit(o, j, text);
}

void fanoPair(const Options& o)
{
    auto x = fano::parseFanoClass2(requireArg(o, 0, "first class"));
    auto y = fano::parseFanoClass2(requireArg(o, 1, "second class"));
    Rational v = fano::model().pair(x, y);
    emit(o, Json{{"x", toJson(x)}, {"y", toJson(y)}, {"pairing", toJson(v)}}, hkc::toString(v));
}

// bb ------------------------------------------------------------------------

void bbSignature(const Options& o)
{
    auto l = loadGram(o);
    auto s = bb::signature(l);
    emit(o, Json{{"rank", l.rank()}, {"signature", toJson(s)}},
         "(" + std::to_string(s.positive) + ", " + std::to_string(s.negative) + ", " + std::to_string(s.zero) + ")");
}

void bbQpair(const Options& o)
{
    auto h2 = blowup::hilbertSquareH2(loadGram(o));
    std::size_t r = h2.k3Part.rank() + 1;
    RatVec x = loadVector(o.x, "x", r);
    RatVec y = loadVector(o.y, "y", r);
    Rational q = bb::qPair(h2, x, y);
    emit(o, Json{{"delta_square", toJson(h2.deltaSquare)}, {"q", toJson(q)}}, hkc::toString(q));
}

void bbRankChecks(const Options& o)
{
    auto r = bb::rankChecks();
    std::string text = "K3^[2]: b2 = " + std::to_string(r.b2HilbSquare) + ", dim Sym^2 H^2 = " +
                       std::to_string(r.sym2HilbSquare) + "\nKummer: b2 = " + std::to_string(r.b2Kummer) +
                       ", dim Sym^2 H^2 = " + std::to_string(r.sym2Kummer) + ", b4 = " + std::to_string(r.b4Kummer) +
                       "\n|A[3]| = " + std::to_string(r.threeTorsionCount);
    emit(o, toJson(r), text);
}

// blowup --------------------------------------------------------------------

void blowupVerify30q(const Options& o)
{
    auto l = loadGram(o);
    RatVec x = loadVector(o.x, "x", l.rank() + 1);
    RatVec y = loadVector(o.y, "y", l.rank() + 1);
    auto v = blowup::verify30q(l, x, y);
    emit(o, toJson(v),
         "lhs = " + hkc::toString(v.lhs) + "\nrhs = " + hkc::toString(v.rhs) + "\nequal = " + (v.equal ? "true" : "false"));
    if (!v.equal)
        throw InvariantViolation("c2.x.y != 30 q(x,y)");
}

void blowupDeltaSquare(const Options& o)
{
    Rational d = blowup::deriveDeltaSquare();
    emit(o, Json{{"delta_square", toJson(d)}}, hkc::toString(d));
}

// cone ----------------------------------------------------------------------

cones::Cone2 inputCone(const Options& o, const std::string& spec)
{
    if (!spec.empty())
        return io::coneFromJson(io::jsonArgument(spec));
    return cones::effectiveCone(singleLambda(o));
}

void coneDual(const Options& o)
{
    if (o.cone.empty() && o.lambda.empty())
        throw std::invalid_argument("give --cone or --lambda");
    auto c = inputCone(o, o.cone);
    auto d = cones::dualCone(c, loadPairing(o));
    Json j = toJson(d);
    std::string text;
    for (const auto& r : d.rays())
        text += (text.empty() ? "" : " ") + std::string("[") + r.v()[0].get_str() + "," + r.v()[1].get_str() + "]";
    emit(o, j, text);
}

void coneContains(const Options& o)
{
    if (o.outer.empty() || o.inner.empty())
        throw std::invalid_argument("--outer and --inner are required");
    auto outer = io::coneFromJson(io::jsonArgument(o.outer));
    auto inner = io::coneFromJson(io::jsonArgument(o.inner));
    auto verdict = cones::contains(outer, inner);
    emit(o, Json{{"containment", cones::toString(verdict)}, {"proper", cones::properlyContains(verdict)}},
         cones::toString(verdict));
}

void coneGapReport(const Options& o)
{
    Rational low(1);
    Rational high = makeRational(8, 5);
    if (o.lambda.size() == 1) {
        low = high = parseRational(o.lambda[0]);
    } else if (o.lambda.size() == 2) {
        low = parseRational(o.lambda[0]);
        high = parseRational(o.lambda[1]);
    } else if (!o.lambda.empty()) {
        throw std::invalid_argument("--lambda takes at most two values");
    }
    auto r = cones::gapReport(loadPairing(o), low, high);
    emit(o, toJson(r),
         std::string("strict gap on [") + hkc::toString(r.low) + ", " + hkc::toString(r.high) +
             "]: " + (r.strictGapOnInterval ? "true" : "false"));
}

// catalog / report / eval ---------------------------------------------------

void catalogList(const Options& o)
{
    std::string variety = o.args.empty() ? o.variety : o.args[0];
    Json entries = Json::array();
    std::string text;
    for (const auto& e : catalog::listEntries(variety)) {
        entries.push_back(toJson(e));
        text += (text.empty() ? "" : "\n") + e.object + "\t" + catalog::classExprToString(e.classExpr);
    }
    emit(o, Json{{"variety", variety}, {"entries", entries}}, text);
}

void catalogShow(const Options& o)
{
    std::string variety = o.args.size() >= 2 ? o.args[0] : o.variety;
    std::string object = o.args.size() >= 2 ? o.args[1] : requireArg(o, 0, "object name");
    const auto& e = catalog::findEntry(variety, object);
    // The entry is structured data; text mode prints the same JSON.
    std::cout << io::dump(toJson(e));
}

void reportFanoLines(const Options&)
{
    std::cout << io::dump(report::reportFanoLines());
}

void evalExpr(const Options& o)
{
    auto v = catalog::evaluate(requireArg(o, 0, "expression"), o.variety);
    Json j{{"expression", o.args[0]}};
    if (const auto* r = std::get_if<Rational>(&v))
        j["value"] = toJson(*r);
    else
        j["value"] = toJson(std::get<fano::FanoClass2>(v));
    emit(o, j, catalog::valueToString(v));
}

int run(int argc, char** argv)
{
    Options o;
    std::function<void(const Options&)> action;

    CLI::App app{"Exact intersection-theory computations on hyperkaehler fourfolds", "hkcycles"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit JSON instead of text");

    auto verb = [&](CLI::App* group, const std::string& name, const std::string& desc,
                    void (*fn)(const Options&)) {
        auto* sub = group->add_subcommand(name, desc);
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    auto positional = [&](CLI::App* sub, const std::string& names) {
        sub->add_option(names, o.args, "Positional arguments");
        return sub;
    };
    auto gridOpts = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "Subspace dimension")->capture_default_str();
        sub->add_option("--n", o.n, "Ambient dimension")->capture_default_str();
        return sub;
    };

    auto* schub = app.add_subcommand("schubert", "Schubert calculus on Gr(k,n)");
    schub->require_subcommand(1);
    positional(gridOpts(verb(schub, "mult", "Multiply two classes", schubertMult)), "classes");
    positional(gridOpts(verb(schub, "integrate", "Degree of a class", schubertIntegrate)), "class");

    auto* fano = app.add_subcommand("fano", "Variety of lines of a cubic fourfold");
    fano->require_subcommand(1);
    verb(fano, "invariants", "Intersection numbers and Chern classes", fanoInvariants);
    positional(verb(fano, "pair", "Pair two classes a*g2 + b*c", fanoPair), "classes");

    auto* bbg = app.add_subcommand("bb", "Beauville-Bogomolov lattices");
    bbg->require_subcommand(1);
    verb(bbg, "signature", "Signature of a Gram matrix", bbSignature)->add_option("--gram", o.gram, "Lattice JSON");
    auto* qp = verb(bbg, "qpair", "q(x,y) on H^2 plus delta", bbQpair);
    qp->add_option("--gram", o.gram, "Lattice JSON");
    qp->add_option("--x", o.x, "Comma-separated coordinates");
    qp->add_option("--y", o.y, "Comma-separated coordinates");
    verb(bbg, "rank-checks", "Betti number bookkeeping", bbRankChecks);

    auto* bl = app.add_subcommand("blowup", "Blow-up of S x S along the diagonal");
    bl->require_subcommand(1);
    auto* v30 = verb(bl, "verify30q", "Compare c2.x.y with 30 q(x,y)", blowupVerify30q);
    v30->add_option("--gram", o.gram, "Lattice JSON");
    v30->add_option("--x", o.x, "Comma-separated coordinates");
    v30->add_option("--y", o.y, "Comma-separated coordinates");
    verb(bl, "delta-square", "Derive q(delta,delta)", blowupDeltaSquare);

    auto* cone = app.add_subcommand("cone", "Cones in the (g2, c) plane");
    cone->require_subcommand(1);
    auto* cd = verb(cone, "dual", "Dual cone", coneDual);
    cd->add_option("--cone", o.cone, "Cone JSON (inline or path)");
    cd->add_option("--lambda", o.lambda, "Use Eff_lambda")->expected(1);
    cd->add_option("--pairing", o.pairing, "2x2 Gram JSON (default: fano pairing)");
    auto* cc = verb(cone, "contains", "Containment verdict", coneContains);
    cc->add_option("--outer", o.outer, "Cone JSON (inline or path)");
    cc->add_option("--inner", o.inner, "Cone JSON (inline or path)");
    auto* cg = verb(cone, "gap-report", "Nef/effective gap certificate", coneGapReport);
    cg->add_option("--lambda", o.lambda, "Interval endpoints (default 1 8/5)")->expected(1, 2);
    cg->add_option("--pairing", o.pairing, "2x2 Gram JSON (default: fano pairing)");

    auto* cat = app.add_subcommand("catalog", "Built-in registry");
    cat->require_subcommand(1);
    positional(verb(cat, "list", "Entries of a variety", catalogList), "name");
    positional(verb(cat, "show", "One entry", catalogShow), "names");

    auto* rep = app.add_subcommand("report", "Reproduction reports");
    rep->require_subcommand(1);
    verb(rep, "fano-lines", "Full report for the variety of lines", reportFanoLines);

    auto* ev = verb(&app, "eval", "Evaluate an expression", evalExpr);
    positional(ev, "expression");
    ev->add_option("--variety", o.variety, "Context")->capture_default_str();
    for (auto* c : {cat->get_subcommand("list"), cat->get_subcommand("show")})
        c->add_option("--variety", o.variety, "Context")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (!action) {
        std::cerr << "error: no command given\n";
        return kExitUsage;
    }
    action(o);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
