#include "invo/io.hpp"
#include "invo/resolution.hpp"
#include "invo/structure.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace invo {

namespace {

Json names(const std::vector<int>& idx, const std::vector<std::string>& vars)
{
    Json a = Json::array();
    for (int i : idx) a.push_back(vars[static_cast<std::size_t>(i)]);
    return a;
}

Json monomialJson(const ExponentVector& e, const std::vector<std::string>& vars) { return exponentStr(e, vars); }

Json monomialsJson(const MonomialSet& s, const std::vector<std::string>& vars)
{
    Json a = Json::array();
    for (const auto& e : s) a.push_back(monomialJson(e, vars));
    return a;
}

Json basisJson(const InvolutiveBasis& H, const std::vector<std::string>& vars)
{
    Json j;
    j["division"] = divisionName(H.division());
    j["size"] = H.size();
    j["degree"] = H.degree();
    Json gens = Json::array(), mult = Json::array(), cls = Json::array();
    for (std::size_t i = 0; i < H.size(); ++i) {
        gens.push_back(polyStr(H[i], vars));
        mult.push_back(names(H.assignment().multiplicativeVars(i), vars));
        cls.push_back(H[i].cls() + 1);
    }
    j["generators"] = gens;
    j["multiplicative"] = mult;
    j["classes"] = cls;
    return j;
}

Json matrixJson(const RationalMatrix& m)
{
    Json a = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(rationalStr(c));
        a.push_back(r);
    }
    return a;
}

Json changeJson(const CoordinateChange& c)
{
    Json j;
    j["identity"] = c.isIdentity();
    j["matrix"] = matrixJson(c.matrix());
    return j;
}

Json conesJson(const ConeDecomposition& d, const std::vector<std::string>& vars)
{
    Json a = Json::array();
    for (const auto& c : d.cones) {
        Json e;
        e["generator"] = monomialJson(c.generator, vars);
        e["multiplicative"] = names(c.multiplicative, vars);
        a.push_back(e);
    }
    return a;
}

Json hilbertJson(const HilbertData& h)
{
    Json j;
    j["numerator"] = h.numerator;
    j["denominator_exponent"] = h.denominatorExponent;
    Json poly = Json::array();
    for (const auto& c : h.hilbertPolynomial) poly.push_back(rationalStr(c));
    j["hilbert_polynomial"] = poly;
    j["dimension"] = h.dimension;
    j["multiplicity"] = h.multiplicity;
    j["regularity_index"] = h.regularityIndex;
    return j;
}

Json witnessJson(const ModuleElement& g, int variable, const std::vector<std::string>& vars)
{
    Json w;
    w["generator"] = polyStr(g, vars);
    w["variable"] = vars[static_cast<std::size_t>(variable)];
    return w;
}

struct Context {
    const ProblemSpec& spec;
    Report& report;
    OrderPtr order;
    const std::vector<std::string>& vars;
};

void requireIdeal(const Context& c, const std::string& what)
{
    if (c.spec.rank != 1 || c.spec.module) throw std::invalid_argument(what + " needs an ideal (rank 1)");
}

// Pommaret basis after the delta-regular coordinate search.
InvolutiveBasis regularBasis(Context& c)
{
    if (c.spec.generators.empty()) {
        c.report.results["coordinates"] = changeJson(CoordinateChange::identity(c.spec.nvars()));
        return InvolutiveBasis({}, DivisionKind::Pommaret, c.order, c.spec.rank);
    }
    RegularCoordinates rc = findDeltaRegularCoordinates(c.spec.generators, c.order, c.spec.limits);
    c.report.results["coordinates"] = changeJson(rc.change);
    if (!rc.change.isIdentity()) c.report.notices.push_back("results refer to the new coordinates x = A x~");
    return rc.basis;
}

// Minimal generators of the leading ideal in the given coordinates.
MonomialSet leadingIdeal(Context& c)
{
    requireIdeal(c, "a monomial computation");
    bool monomial = std::all_of(c.spec.generators.begin(), c.spec.generators.end(),
                                [](const ModuleElement& g) { return g.isMonomial(); });
    if (monomial) {
        MonomialSet s;
        for (const auto& g : c.spec.generators) s.push_back(g.leadExp());
        return minimalGenerators(s);
    }
    c.report.notices.push_back("non-monomial input: computed for the leading ideal");
    auto out = complete(c.spec.generators, DivisionKind::Janet, c.order, c.spec.limits);
    if (out.status != CompletionStatus::Basis) throw LimitExceeded("Janet completion did not finish");
    return minimalGenerators(leadExponents(out.basis));
}

void cmdComplete(Context& c)
{
    DivisionKind kind = c.spec.division.value_or(DivisionKind::Pommaret);
    auto out = complete(c.spec.generators, kind, c.order, c.spec.limits);
    Json& r = c.report.results;
    r["iterations"] = out.iterations;
    r["basis"] = basisJson(out.basis, c.vars);
    if (out.status == CompletionStatus::Diverged) {
        c.report.status = "diverged";
        if (out.witness) r["witness"] = witnessJson(out.basis[out.witness->generator], out.witness->variable, c.vars);
        c.report.notices.push_back("no finite Pommaret basis in these coordinates");
    } else if (out.status == CompletionStatus::LimitExceeded) {
        c.report.status = "cap-exceeded";
        c.report.notices.push_back("completion stopped at the configured cap; the basis is partial");
    }
}

void cmdDeltaCheck(Context& c)
{
    auto out = complete(c.spec.generators, DivisionKind::Janet, c.order, c.spec.limits);
    Json& r = c.report.results;
    r["janet_basis"] = basisJson(out.basis, c.vars);
    if (out.status != CompletionStatus::Basis) {
        c.report.status = "cap-exceeded";
        return;
    }
    auto w = detectDeltaSingularity(out.basis.generators());
    r["delta_regular"] = !w.has_value();
    if (w) {
        r["witness"] = witnessJson(out.basis[w->generator], w->variable, c.vars);
        c.report.status = "diverged";
    }
}

void cmdRegularCoords(Context& c)
{
    Json& r = c.report.results;
    if (c.spec.generators.empty()) {
        r["coordinates"] = changeJson(CoordinateChange::identity(c.spec.nvars()));
        return;
    }
    RegularCoordinates rc = findDeltaRegularCoordinates(c.spec.generators, c.order, c.spec.limits);
    r["coordinates"] = changeJson(rc.change);
    r["rounds"] = rc.rounds;
    r["escalated"] = rc.escalated;
    r["seed"] = c.spec.limits.seed;
    r["basis"] = basisJson(rc.basis, c.vars);
}

void cmdAnalyze(Context& c)
{
    requireIdeal(c, "analyze");
    InvolutiveBasis H = regularBasis(c);
    Json& r = c.report.results;
    int n = c.spec.nvars();
    r["basis"] = basisJson(H, c.vars);
    if (H.empty()) {
        r["dimension"] = n;
        r["depth_quotient"] = n;
        r["depth_ideal"] = nullptr;
        r["pd_quotient"] = 0;
        r["pd_ideal"] = nullptr;
        r["regularity"] = 0;
        r["cohen_macaulay"] = true;
        return;
    }
    StructureReport s = analyzeStructure(H);
    if (s.leadingIdealOnly) c.report.notices.push_back("inhomogeneous input: invariants of the leading ideal");
    r["dimension"] = s.dimension;
    r["depth_quotient"] = s.depthQuotient;
    r["depth_ideal"] = s.minClass;
    r["pd_quotient"] = s.projectiveDimension + 1;
    r["pd_ideal"] = s.projectiveDimension;
    r["regularity"] = s.regularity;
    r["satiety"] = s.satiety ? Json(*s.satiety) : Json(nullptr);
    r["cohen_macaulay"] = s.cohenMacaulay;
    r["regular_sequence"] = names(s.regularSequence, c.vars);
    r["independent_set"] = names(s.independentSet, c.vars);
    r["noether_dimension"] = s.noetherDimension;
    r["hilbert"] = hilbertJson(hilbertOfQuotient(leadExponents(H), n));
}

void cmdDecompose(Context& c)
{
    requireIdeal(c, "decompose");
    InvolutiveBasis H = regularBasis(c);
    int n = c.spec.nvars();
    MonomialSet leads = minimalGenerators(leadExponents(H));
    Json& r = c.report.results;
    r["leading_ideal"] = monomialsJson(leads, c.vars);
    MonomialSet janet = leadExponents(monomialJanetBasis(leads, n));
    r["janet_complementary"] = conesJson(janetComplementaryDecomposition(janet, n), c.vars);
    r["janet_ideal"] = conesJson(janetIdealDecomposition(janet, n), c.vars);
    if (!leads.empty()) {
        auto p = pommaretComplementaryDecomposition(leads, n);
        r["pommaret_complementary"] = conesJson(p.full, c.vars);
        r["rees"] = conesJson(p.rees, c.vars);
    }
    r["hilbert"] = hilbertJson(hilbertOfQuotient(leads, n));
}

void cmdStandardPairs(Context& c)
{
    MonomialSet leads = leadingIdeal(c);
    int n = c.spec.nvars();
    auto comp = janetComplementaryDecomposition(leadExponents(monomialJanetBasis(leads, n)), n);
    auto sp = standardPairs(comp);
    Json& r = c.report.results;
    Json pairs = Json::array();
    for (const auto& p : sp.pairs) {
        Json e;
        e["monomial"] = monomialJson(p.nu, c.vars);
        e["free"] = names(p.free, c.vars);
        pairs.push_back(e);
    }
    r["pairs"] = pairs;
    Json irr = Json::array();
    for (const auto& s : sp.irredundant) irr.push_back(monomialsJson(s, c.vars));
    r["irreducible_components"] = irr;
    Json primes = Json::array();
    for (const auto& p : sp.associatedPrimes) primes.push_back(names(p, c.vars));
    r["associated_primes"] = primes;
}

void cmdPrimary(Context& c)
{
    MonomialSet leads = leadingIdeal(c);
    auto d = primaryDecomposition(leads, c.spec.nvars());
    Json& r = c.report.results;
    Json comps = Json::array();
    for (const auto& q : d.components) {
        Json e;
        e["k"] = q.k;
        e["generators"] = monomialsJson(q.generators, c.vars);
        e["prime"] = names(q.prime, c.vars);
        e["exponents"] = q.exponents;
        comps.push_back(e);
    }
    r["components"] = comps;
    Json chain = Json::array();
    for (const auto& s : d.sequentialChain) chain.push_back(monomialsJson(s, c.vars));
    r["sequential_chain"] = chain;
}

Json resolutionJson(const FreeResolution& res, const std::vector<std::string>& vars)
{
    Json j;
    j["ranks"] = res.ranks();
    j["length"] = res.length();
    j["graded"] = res.graded;
    j["minimal"] = res.minimal;
    Json levels = Json::array();
    for (int i = 0; i <= res.length(); ++i) {
        const auto& L = res.levels[static_cast<std::size_t>(i)];
        Json l;
        Json labels = Json::array();
        for (const auto& lab : L.labels) labels.push_back(labelStr(lab));
        l["labels"] = labels;
        l["degrees"] = L.degrees;
        if (i > 0) {
            Json cols = Json::array();
            for (const auto& col : L.differential) {
                Json c = Json::array();
                for (const auto& p : col) c.push_back(polyStr(p, vars));
                cols.push_back(c);
            }
            l["differential"] = cols;
        }
        levels.push_back(l);
    }
    j["levels"] = levels;
    return j;
}

void cmdResolve(Context& c)
{
    InvolutiveBasis H = regularBasis(c);
    Json& r = c.report.results;
    r["basis"] = basisJson(H, c.vars);
    FreeResolution res = freeResolution(H);
    auto counts = classCounts(res.syzygyBases.front());
    r["class_counts"] = std::vector<int>(counts.begin() + 1, counts.end());
    r["predicted_ranks"] = predictedRanks(counts, c.spec.nvars());
    r["projective_dimension"] = projectiveDimension(H);
    r["resolution"] = resolutionJson(res, c.vars);
    if (res.graded && !H.empty()) {
        int top = H.degree() + 1;
        auto ex = checkExactness(res, top);
        r["exact_through_degree"] = top;
        r["exact"] = ex.exact;
    }
}

Json bettiJson(const BettiTable& b)
{
    Json j;
    Json entries = Json::array();
    for (const auto& [pos, v] : b.entries) entries.push_back(Json::array({pos.first, pos.second, v}));
    j["entries"] = entries;
    Json ext = Json::array();
    for (const auto& p : b.extremal()) ext.push_back(Json::array({p.first, p.second, b.at(p.first, p.second)}));
    j["extremal"] = ext;
    j["regularity"] = b.regularity();
    return j;
}

void cmdBetti(Context& c)
{
    InvolutiveBasis H = regularBasis(c);
    FreeResolution res = freeResolution(H);
    MinimizationResult m = minimize(res);
    Json& r = c.report.results;
    r["pommaret_ranks"] = res.ranks();
    if (m.skipped) {
        c.report.notices.push_back(m.notice);
        return;
    }
    r["minimal_ranks"] = m.resolution.ranks();
    r["changed"] = m.changed;
    r["betti"] = bettiJson(m.betti);
    Json ext = Json::array();
    for (const auto& [pos, v] : m.extremalFromBasis) ext.push_back(Json::array({pos.first, pos.second, v}));
    r["extremal_from_basis"] = ext;
    r["projective_dimension"] = m.resolution.length();
}

void cmdRegularity(Context& c)
{
    Json& r = c.report.results;
    if (c.spec.generators.empty()) {
        r["regularity"] = 0;
        return;
    }
    RegularityResult reg = castelnuovoMumford(c.spec.generators, c.order, c.spec.limits);
    r["regularity"] = reg.regularity;
    r["coordinates"] = changeJson(reg.change);
    r["basis"] = basisJson(reg.basis, c.vars);
    Json pos = Json::array();
    for (const auto& p : reg.positions) pos.push_back(Json::array({p.first, p.second}));
    r["positions"] = pos;
    if (!reg.notice.empty()) c.report.notices.push_back(reg.notice);
}

void cmdSaturate(Context& c)
{
    requireIdeal(c, "saturate");
    InvolutiveBasis H = regularBasis(c);
    Json& r = c.report.results;
    if (H.empty()) {
        r["basis"] = basisJson(H, c.vars);
        r["satiety"] = nullptr;
        return;
    }
    SaturationData s = saturate(H);
    r["basis"] = basisJson(s.basis, c.vars);
    r["satiety"] = s.satiety ? Json(*s.satiety) : Json(nullptr);
}

void cmdTrung(Context& c)
{
    requireIdeal(c, "trung");
    InvolutiveBasis H = regularBasis(c);
    TrungData t = trungInvariants(minimalGenerators(leadExponents(H)), c.spec.nvars());
    Json& r = c.report.results;
    r["c"] = t.c;
    r["regularity"] = t.regularity;
    r["depth_ideal"] = t.depthIdeal;
    r["depth_quotient"] = t.depthQuotient;
    r["vanish_below_depth_quotient"] = t.vanishBelowDepthQuotient;
    r["vanish_below_depth_ideal"] = t.vanishBelowDepthIdeal;
}

} // namespace

ExitCode Report::exitCode() const
{
    if (status == "diverged") return ExitCode::Diverged;
    if (status == "cap-exceeded") return ExitCode::CapExceeded;
    if (status == "error") return ExitCode::InputError;
    return ExitCode::Ok;
}

const std::vector<std::string>& commandNames()
{
    static const std::vector<std::string> n{"complete", "delta-check", "regular-coords", "analyze",
                                            "decompose", "standard-pairs", "primary", "resolve",
                                            "betti", "regularity", "saturate", "trung"};
    return n;
}

Report run(const std::string& command, ProblemSpec spec, const RunOptions& options)
{
    if (std::find(commandNames().begin(), commandNames().end(), command) == commandNames().end())
        throw std::invalid_argument("unknown command '" + command + "'");
    if (options.division) spec.division = options.division;
    if (options.order && *options.order != spec.order) {
        spec.order = *options.order;
        OrderPtr o = spec.termOrder();
        for (auto& g : spec.generators) g = g.reordered(o);
    }
    if (options.degCap) spec.limits.degCap = *options.degCap;
    if (options.iterCap) spec.limits.iterCap = *options.iterCap;
    if (options.seed) spec.limits.seed = *options.seed;

    Report report;
    report.command = command;
    report.problem = spec;
    for (const auto& w : spec.warnings) report.notices.push_back(w);
    Context c{spec, report, spec.termOrder(), spec.vars};
    auto start = std::chrono::steady_clock::now();
    try {
        if (command == "complete") cmdComplete(c);
        else if (command == "delta-check") cmdDeltaCheck(c);
        else if (command == "regular-coords") cmdRegularCoords(c);
        else if (command == "analyze") cmdAnalyze(c);
        else if (command == "decompose") cmdDecompose(c);
        else if (command == "standard-pairs") cmdStandardPairs(c);
        else if (command == "primary") cmdPrimary(c);
        else if (command == "resolve") cmdResolve(c);
        else if (command == "betti") cmdBetti(c);
        else if (command == "regularity") cmdRegularity(c);
        else if (command == "saturate") cmdSaturate(c);
        else cmdTrung(c);
    } catch (const LimitExceeded& e) {
        report.status = "cap-exceeded";
        report.notices.push_back(e.what());
    } catch (const NotQuasiStable& e) {
        report.status = "diverged";
        report.notices.push_back(e.what());
        if (e.witness.generator < e.janetBasis.size()) {
            Json w;
            w["generator"] = exponentStr(e.janetBasis[e.witness.generator], spec.vars);
            w["variable"] = spec.vars[static_cast<std::size_t>(e.witness.variable)];
            report.results["witness"] = w;
        }
    } catch (const InfiniteTrungInvariant& e) {
        report.status = "diverged";
        report.notices.push_back(e.what());
    } catch (const std::invalid_argument& e) {
        report.status = "error";
        report.notices.push_back(e.what());
    } catch (const std::domain_error& e) {
        report.status = "error";
        report.notices.push_back(e.what());
    }
    if (options.timing)
        report.timingMs = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace invo
