#include "invo/structure.hpp"

#include <algorithm>

namespace invo {

SaturationData saturate(const InvolutiveBasis& pommaretBasis)
{
    const InvolutiveBasis& H = pommaretBasis;
    if (H.division() != DivisionKind::Pommaret) throw std::invalid_argument("a Pommaret basis is required");
    if (H.rank() != 1) throw std::invalid_argument("saturation needs an ideal");
    if (!H.isHomogeneous()) throw std::invalid_argument("saturation needs a homogeneous ideal");
    if (!H.ringOrder()->classRespecting()) throw std::invalid_argument("saturation needs a class respecting order");

    SaturationData r;
    std::vector<ModuleElement> gens;
    for (const auto& h : H.generators()) {
        if (h.leadExp().cls() != 0) {
            gens.push_back(h);
            continue;
        }
        r.satiety = std::max(r.satiety.value_or(0), h.degree());
        int a = h.leadExp()[0];
        std::vector<Entry> entries;
        for (const auto& e : h.terms()) {
            if (e.term.exp[0] < a) throw std::logic_error("leading term does not have minimal x_1-degree");
            Entry t = e;
            t.term.exp[0] -= a;
            entries.push_back(std::move(t));
        }
        gens.push_back(ModuleElement::fromEntries(H.order(), 1, std::move(entries)));
    }
    gens = involutiveHeadAutoreduce(std::move(gens), DivisionKind::Pommaret, H.order());
    r.basis = InvolutiveBasis(std::move(gens), DivisionKind::Pommaret, H.order(), 1);
    return r;
}

namespace {

// Generators of I restricted to k[x_{j+1}, ..., x_n]: those not involving
// x_1..x_j, with the first j entries removed.
MonomialSet eliminate(const MonomialSet& gens, int j)
{
    MonomialSet out;
    for (const auto& g : gens) {
        bool keep = true;
        for (int i = 0; i < j; ++i)
            if (g[i] != 0) keep = false;
        if (!keep) continue;
        ExponentVector e(g.size() - j);
        for (int i = j; i < g.size(); ++i) e[i - j] = g[i];
        out.push_back(e);
    }
    return out;
}

// sup{q : HF_a(q) != HF_b(q)}, or nullopt if the difference never vanishes.
std::optional<int> lastDifference(const HilbertData& a, const HilbertData& b, bool& infinite)
{
    infinite = a.hilbertPolynomial != b.hilbertPolynomial;
    if (infinite) return std::nullopt;
    int bound = std::max(a.regularityIndex, b.regularityIndex);
    for (int q = bound; q >= 0; --q)
        if (a.value(q) != b.value(q)) return q;
    return std::nullopt;
}

} // namespace

std::vector<int> trungInvariantsDirect(const MonomialSet& gens, int nvars)
{
    MonomialSet I = minimalGenerators(gens);
    if (I.empty()) throw std::invalid_argument("trung invariants need a nonzero ideal");
    int D = hilbertOfQuotient(I, nvars).dimension;
    std::vector<int> c;
    for (int j = 0; j <= D; ++j) {
        int m = nvars - j;
        MonomialSet Ij = minimalGenerators(eliminate(I, j));
        HilbertData hI = hilbertOfQuotient(Ij, m);
        bool infinite = false;
        std::optional<int> sup;
        if (j < D) {
            MonomialSet sat = minimalGenerators(colonVariablePower(Ij, 0));
            sup = lastDifference(hI, hilbertOfQuotient(sat, m), infinite);
        } else {
            sup = lastDifference(hI, HilbertData{}, infinite);
        }
        if (infinite)
            throw InfiniteTrungInvariant("some c_j infinite (j = " + std::to_string(j) + ")", j);
        c.push_back(sup ? *sup + 1 : 0);
    }
    return c;
}

TrungData trungInvariants(const MonomialSet& gens, int nvars)
{
    TrungData r;
    r.c = trungInvariantsDirect(gens, nvars);
    int D = static_cast<int>(r.c.size()) - 1;

    InvolutiveBasis H = monomialPommaretBasis(minimalGenerators(gens), nvars);
    MonomialSet leads = leadExponents(H);
    std::vector<int> byClass(r.c.size(), 0);
    for (const auto& l : leads) {
        int j = std::min(l.cls(), D);
        if (j >= 0) byClass[static_cast<std::size_t>(j)] = std::max(byClass[static_cast<std::size_t>(j)], l.degree());
    }
    if (byClass != r.c) throw std::logic_error("trung invariants disagree with the Pommaret basis");

    r.regularity = 0;
    for (int v : r.c) r.regularity = std::max(r.regularity, v);
    DepthData dep = depth(leads, nvars);
    r.depthIdeal = dep.minClass;
    r.depthQuotient = dep.depthQuotient;
    for (int j = 0; j <= D; ++j) {
        if (r.c[static_cast<std::size_t>(j)] == 0) continue;
        if (j < r.depthQuotient) r.vanishBelowDepthQuotient = false;
        if (j < r.depthIdeal) r.vanishBelowDepthIdeal = false;
    }
    return r;
}

int monomialRegularity(const MonomialSet& gens, int nvars)
{
    return std::max(0, monomialPommaretBasis(minimalGenerators(gens), nvars).degree());
}

RegularityBounds regularityBounds(const MonomialSet& gens, int nvars)
{
    MonomialSet I = minimalGenerators(gens);
    if (I.empty()) throw std::invalid_argument("regularity bounds need a nonzero ideal");
    InvolutiveBasis H = monomialPommaretBasis(I, nvars);

    RegularityBounds r;
    ExponentVector lambda(nvars);
    int d = nvars;
    for (const auto& m : I) {
        lambda = lambda.lcm(m);
        d = std::min(d, m.cls() + 1);
        r.lowerBound = std::max(r.lowerBound, m.degree());
    }
    r.lcmBound = lambda.degree() + d - nvars;
    r.degreeBound = (nvars - d + 1) * (r.lowerBound - 1) + 1;
    r.regularity = std::max(0, H.degree());
    for (const auto& l : leadExponents(H)) {
        if (l.degree() == r.regularity && (r.maximalElement.size() == 0 || r.maximalElement < l))
            r.maximalElement = l;
    }
    if (r.regularity > r.lcmBound || r.regularity > r.degreeBound || r.regularity < r.lowerBound)
        throw std::logic_error("regularity violates its bounds");
    return r;
}

} // namespace invo
