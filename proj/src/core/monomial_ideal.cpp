#include "invo/monomial_ideal.hpp"

#include <algorithm>

namespace invo {

MonomialSet minimalGenerators(MonomialSet gens)
{
    std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialSet out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool inMonomialIdeal(const MonomialSet& gens, const ExponentVector& m)
{
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

bool monomialIdealContains(const MonomialSet& big, const MonomialSet& small)
{
    for (const auto& g : small)
        if (!inMonomialIdeal(big, g)) return false;
    return true;
}

bool sameMonomialIdeal(const MonomialSet& a, const MonomialSet& b)
{
    return monomialIdealContains(a, b) && monomialIdealContains(b, a);
}

MonomialSet colonVariablePower(const MonomialSet& gens, int k)
{
    MonomialSet out = gens;
    for (auto& g : out) g[k] = 0;
    return minimalGenerators(std::move(out));
}

MonomialSet colonMonomial(const MonomialSet& gens, const ExponentVector& m)
{
    MonomialSet out;
    for (const auto& g : gens) {
        ExponentVector q = g;
        for (int i = 0; i < q.size(); ++i) q[i] = std::max(0, g[i] - m[i]);
        out.push_back(q);
    }
    return minimalGenerators(std::move(out));
}

MonomialSet idealSum(const MonomialSet& a, const MonomialSet& b)
{
    MonomialSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return minimalGenerators(std::move(out));
}

MonomialSet idealProduct(const MonomialSet& a, const MonomialSet& b)
{
    MonomialSet out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + y);
    return minimalGenerators(std::move(out));
}

MonomialSet idealIntersection(const MonomialSet& a, const MonomialSet& b)
{
    MonomialSet out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x.lcm(y));
    return minimalGenerators(std::move(out));
}

MonomialSet idealQuotient(const MonomialSet& a, const MonomialSet& b)
{
    if (b.empty()) return {};
    MonomialSet acc;
    bool first = true;
    for (const auto& m : minimalGenerators(b)) {
        MonomialSet q = colonMonomial(a, m);
        acc = first ? q : idealIntersection(acc, q);
        first = false;
    }
    return acc;
}

long long complementCount(const MonomialSet& gens, int nvars, int d)
{
    long long c = 0;
    for (const auto& m : monomialsOfDegree(nvars, d))
        if (!inMonomialIdeal(gens, m)) ++c;
    return c;
}

} // namespace invo
