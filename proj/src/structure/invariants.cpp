#include "invo/structure.hpp"

#include <algorithm>

namespace invo {

namespace {

bool containsOne(const MonomialSet& leads)
{
    return std::any_of(leads.begin(), leads.end(), [](const ExponentVector& e) { return e.isZero(); });
}

int maxDegree(const MonomialSet& leads)
{
    int q = 0;
    for (const auto& l : leads) q = std::max(q, l.degree());
    return q;
}

// Monomials of degree s in the variables x_{i+1}, ..., x_n.
std::vector<ExponentVector> tailMonomials(int nvars, int i, int s)
{
    std::vector<ExponentVector> out;
    for (const auto& m : monomialsOfDegree(nvars - i, s)) {
        ExponentVector e(nvars);
        for (int j = 0; j < m.size(); ++j) e[i + j] = m[j];
        out.push_back(std::move(e));
    }
    return out;
}

// <H, x_1, ..., x_i>_q = P_q for the leading terms H.
bool fillsDegree(const MonomialSet& leads, int nvars, int i, int q)
{
    for (const auto& m : tailMonomials(nvars, i, q))
        if (!inMonomialIdeal(leads, m)) return false;
    return true;
}

} // namespace

DimensionData krullDimension(const MonomialSet& pommaretLeads, int nvars)
{
    DimensionData r;
    if (containsOne(pommaretLeads)) {
        r.dimension = -1;
        return r;
    }
    r.dimension = nvars;
    if (!pommaretLeads.empty()) {
        int q = maxDegree(pommaretLeads);
        for (int i = 0; i <= nvars; ++i) {
            if (fillsDegree(pommaretLeads, nvars, i, q)) {
                r.dimension = i;
                break;
            }
        }
    }
    for (int i = 0; i < r.dimension; ++i) r.independentSet.push_back(i);
    return r;
}

DepthData depth(const MonomialSet& pommaretLeads, int nvars)
{
    DepthData r;
    r.minClass = nvars + 1;
    for (const auto& l : pommaretLeads) r.minClass = std::min(r.minClass, l.cls() + 1);
    for (int i = 0; i < std::min(r.minClass, nvars); ++i) r.regularSequence.push_back(i);
    r.depthQuotient = r.minClass - 1;
    return r;
}

CohenMacaulayData cohenMacaulay(const MonomialSet& pommaretLeads, int nvars)
{
    CohenMacaulayData r;
    DimensionData dim = krullDimension(pommaretLeads, nvars);
    r.noetherDimension = std::max(dim.dimension, 0);
    if (dim.dimension < 0) {
        r.cohenMacaulay = true;
        r.hironaka = ConeDecomposition{nvars, ConeFlavor::Hironaka, {}};
        return r;
    }
    int d = depth(pommaretLeads, nvars).depthQuotient;
    int q = maxDegree(pommaretLeads);
    r.cohenMacaulay = pommaretLeads.empty() || fillsDegree(pommaretLeads, nvars, d, q);

    // Standard monomials in x_{D+1}, ..., x_n; all have degree below q.
    int D = dim.dimension;
    for (int s = 0; s <= q; ++s)
        for (auto& m : tailMonomials(nvars, D, s))
            if (!inMonomialIdeal(pommaretLeads, m)) r.noetherGenerators.push_back(m);

    if (r.cohenMacaulay) {
        ConeDecomposition h{nvars, ConeFlavor::Hironaka, {}};
        std::vector<int> free;
        for (int i = 0; i < d; ++i) free.push_back(i);
        for (const auto& m : r.noetherGenerators) h.cones.push_back({m, free});
        r.hironaka = std::move(h);
    }
    return r;
}

StructureReport analyzeStructure(const InvolutiveBasis& pommaretBasis)
{
    const InvolutiveBasis& H = pommaretBasis;
    if (H.division() != DivisionKind::Pommaret) throw std::invalid_argument("a Pommaret basis is required");
    if (H.rank() != 1) throw std::invalid_argument("structure analysis needs an ideal");
    if (!H.isMonomial() && !H.ringOrder()->classRespecting())
        throw std::invalid_argument("structure analysis needs a class respecting order");
    int n = H.nvars();
    MonomialSet leads = leadExponents(H);

    StructureReport r;
    r.leadingIdealOnly = !H.isHomogeneous();
    DimensionData dim = krullDimension(leads, n);
    DepthData dep = depth(leads, n);
    CohenMacaulayData cm = cohenMacaulay(leads, n);
    r.dimension = dim.dimension;
    r.independentSet = dim.independentSet;
    r.minClass = dep.minClass;
    r.depthQuotient = dep.depthQuotient;
    r.regularSequence = dep.regularSequence;
    r.projectiveDimension = H.empty() ? 0 : n - dep.minClass;
    r.regularity = std::max(0, H.degree());
    r.cohenMacaulay = cm.cohenMacaulay;
    r.noetherDimension = cm.noetherDimension;
    if (!r.leadingIdealOnly && H.ringOrder()->classRespecting()) r.satiety = saturate(H).satiety;
    return r;
}

} // namespace invo
