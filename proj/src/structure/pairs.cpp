#include "invo/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace invo {

bool pairPrecedes(const StandardPair& a, const StandardPair& b)
{
    if (!a.nu.divides(b.nu)) return false;
    std::vector<bool> inA(static_cast<std::size_t>(a.nu.size()), false), inB(inA);
    for (int i : a.free) inA[static_cast<std::size_t>(i)] = true;
    for (int i : b.free) inB[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < a.nu.size(); ++i) {
        bool needed = b.nu[i] > a.nu[i] || inB[static_cast<std::size_t>(i)];
        if (needed && !inA[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

namespace {

bool pairLess(const StandardPair& a, const StandardPair& b)
{
    if (a.free != b.free) return a.free < b.free;
    return a.nu < b.nu;
}

MonomialSet irreducibleOf(const StandardPair& p)
{
    int n = p.nu.size();
    std::vector<bool> free(static_cast<std::size_t>(n), false);
    for (int i : p.free) free[static_cast<std::size_t>(i)] = true;
    MonomialSet g;
    for (int i = 0; i < n; ++i) {
        if (free[static_cast<std::size_t>(i)]) continue;
        ExponentVector e(n);
        e[i] = p.nu[i] + 1;
        g.push_back(e);
    }
    return g;
}

} // namespace

StandardPairData standardPairs(const ConeDecomposition& complement)
{
    std::vector<StandardPair> admissible;
    for (const auto& c : complement.cones) {
        StandardPair p{c.generator, c.multiplicative};
        for (int i : p.free) p.nu[i] = 0;
        admissible.push_back(std::move(p));
    }
    std::sort(admissible.begin(), admissible.end(), pairLess);
    admissible.erase(std::unique(admissible.begin(), admissible.end()), admissible.end());

    StandardPairData r;
    for (const auto& p : admissible) {
        bool minimal = std::none_of(admissible.begin(), admissible.end(),
                                    [&](const StandardPair& o) { return !(o == p) && pairPrecedes(o, p); });
        if (minimal) r.pairs.push_back(p);
    }

    std::set<std::vector<int>> primes;
    std::map<std::vector<int>, std::vector<const StandardPair*>> byFree;
    for (const auto& p : r.pairs) {
        r.irreducible.push_back(irreducibleOf(p));
        byFree[p.free].push_back(&p);
        std::vector<int> prime;
        for (int i = 0, j = 0; i < p.nu.size(); ++i) {
            if (j < static_cast<int>(p.free.size()) && p.free[static_cast<std::size_t>(j)] == i) {
                ++j;
                continue;
            }
            prime.push_back(i);
        }
        primes.insert(prime);
    }
    for (const auto& [free, group] : byFree) {
        for (const auto* p : group) {
            bool maximal = std::none_of(group.begin(), group.end(), [&](const StandardPair* o) {
                return o != p && p->nu.divides(o->nu) && o->nu != p->nu;
            });
            if (maximal) r.irredundant.push_back(irreducibleOf(*p));
        }
    }
    r.associatedPrimes.assign(primes.begin(), primes.end());
    return r;
}

PrimaryDecompositionData primaryDecomposition(const MonomialSet& gens, int nvars)
{
    MonomialSet I = minimalGenerators(gens);
    InvolutiveBasis basis = monomialPommaretBasis(I, nvars);
    PrimaryDecompositionData r;
    auto isUnit = [](const MonomialSet& s) { return s.size() == 1 && s[0].isZero(); };

    MonomialSet cur = I;
    r.sequentialChain.push_back(cur);
    while (!cur.empty() && !isUnit(cur)) {
        int c = nvars;
        for (const auto& m : cur) c = std::min(c, m.cls());
        cur = minimalGenerators(colonVariablePower(cur, c));
        r.sequentialChain.push_back(cur);
    }
    if (isUnit(I)) return r;

    int D = krullDimension(leadExponents(basis), nvars).dimension;
    int d = nvars;
    for (const auto& m : I) d = std::min(d, m.cls());
    // d is now depth P/I: minimal class (1-based) minus one.
    std::vector<int> s(static_cast<std::size_t>(nvars + 1), 0); // s[k] for 1-based k
    for (int k = 1; k <= D; ++k)
        for (const auto& m : I) s[static_cast<std::size_t>(k)] = std::max(s[static_cast<std::size_t>(k)], m[k - 1]);
    auto colon = [&](int k) { return k == 0 ? I : minimalGenerators(colonVariablePower(I, k - 1)); };

    for (int k = d; k <= D; ++k) {
        MonomialSet here = colon(k);
        if (k < D && sameMonomialIdeal(here, colon(k + 1))) continue;
        PrimaryComponent comp;
        comp.k = k;
        MonomialSet g = here;
        for (int j = k + 1; j <= D; ++j) {
            ExponentVector p(nvars);
            p[j - 1] = s[static_cast<std::size_t>(j)];
            g.push_back(p);
            comp.exponents.push_back(s[static_cast<std::size_t>(j)]);
        }
        comp.generators = minimalGenerators(g);
        for (int i = k; i < nvars; ++i) comp.prime.push_back(i);
        r.components.push_back(std::move(comp));
    }
    return r;
}

} // namespace invo
