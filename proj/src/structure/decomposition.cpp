#include "invo/structure.hpp"

#include <algorithm>
#include <map>

namespace invo {

std::string coneFlavorName(ConeFlavor f)
{
    switch (f) {
    case ConeFlavor::Complementary: return "complementary";
    case ConeFlavor::Rees: return "rees";
    case ConeFlavor::Stanley: return "stanley";
    case ConeFlavor::Hironaka: return "hironaka";
    case ConeFlavor::IdealSide: return "ideal-side";
    }
    return "complementary";
}

bool Cone::contains(const ExponentVector& m) const
{
    if (!generator.divides(m)) return false;
    std::vector<bool> free(static_cast<std::size_t>(m.size()), false);
    for (int i : multiplicative) free[static_cast<std::size_t>(i)] = true;
    for (int i = 0; i < m.size(); ++i)
        if (!free[static_cast<std::size_t>(i)] && m[i] != generator[i]) return false;
    return true;
}

namespace {

// Monomials of degree s in a cone of dimension k with generator of degree q.
long long coneCount(int k, int q, int s)
{
    if (s < q) return 0;
    if (k == 0) return s == q ? 1 : 0;
    // binom(s - q + k - 1, k - 1)
    long long r = 1;
    int top = s - q + k - 1;
    for (int i = 1; i <= k - 1; ++i) r = r * (top - (k - 1) + i) / i;
    return r;
}

void janetComplement(const std::vector<const ExponentVector*>& group, int k, ExponentVector& prefix,
                     std::vector<int>& multAbove, std::vector<Cone>& out)
{
    if (k < 0) return;
    std::map<int, std::vector<const ExponentVector*>> byValue;
    for (const auto* g : group) byValue[(*g)[k]].push_back(g);
    int qmax = byValue.rbegin()->first;
    for (int q = 0; q < qmax; ++q) {
        if (byValue.count(q)) continue;
        Cone c{prefix, {}};
        c.generator[k] = q;
        for (int i = 0; i < k; ++i) c.multiplicative.push_back(i);
        c.multiplicative.insert(c.multiplicative.end(), multAbove.begin(), multAbove.end());
        std::sort(c.multiplicative.begin(), c.multiplicative.end());
        out.push_back(std::move(c));
    }
    for (auto& [q, sub] : byValue) {
        prefix[k] = q;
        bool mult = q == qmax;
        if (mult) multAbove.push_back(k);
        janetComplement(sub, k - 1, prefix, multAbove, out);
        if (mult) multAbove.pop_back();
    }
    prefix[k] = 0;
}

std::vector<int> prefixSet(int k)
{
    std::vector<int> v;
    for (int i = 0; i < k; ++i) v.push_back(i);
    return v;
}

} // namespace

long long ConeDecomposition::count(int s) const
{
    long long total = 0;
    for (const auto& c : cones) total += coneCount(c.dimension(), c.generator.degree(), s);
    return total;
}

ConeDecomposition janetComplementaryDecomposition(const MonomialSet& janetSet, int nvars)
{
    ConeDecomposition d;
    d.nvars = nvars;
    d.flavor = ConeFlavor::Complementary;
    if (janetSet.empty()) {
        d.cones.push_back({ExponentVector(nvars), prefixSet(nvars)});
        return d;
    }
    std::vector<const ExponentVector*> all;
    for (const auto& e : janetSet) all.push_back(&e);
    ExponentVector prefix(nvars);
    std::vector<int> above;
    janetComplement(all, nvars - 1, prefix, above, d.cones);
    return d;
}

ConeDecomposition janetIdealDecomposition(const MonomialSet& janetSet, int nvars)
{
    ConeDecomposition d;
    d.nvars = nvars;
    d.flavor = ConeFlavor::IdealSide;
    auto a = assignMultiplicative(DivisionKind::Janet, janetSet);
    for (std::size_t i = 0; i < janetSet.size(); ++i) d.cones.push_back({janetSet[i], a.multiplicativeVars(i)});
    return d;
}

PommaretDecomposition pommaretComplementaryDecomposition(const MonomialSet& gens, int nvars, int q)
{
    MonomialSet minimal = minimalGenerators(gens);
    InvolutiveBasis basis = monomialPommaretBasis(minimal, nvars);
    MonomialSet leads = leadExponents(basis);
    int deg = std::max(0, basis.degree());
    if (q < 0) q = deg;
    if (q < deg) throw std::invalid_argument("degree below the degree of the Pommaret basis");

    PommaretDecomposition r;
    r.degree = q;
    r.full.nvars = r.rees.nvars = nvars;
    r.full.flavor = ConeFlavor::Complementary;
    r.rees.flavor = ConeFlavor::Rees;
    for (int s = 0; s <= q; ++s) {
        for (auto& m : monomialsOfDegree(nvars, s)) {
            if (inMonomialIdeal(minimal, m)) continue;
            if (s < q) {
                r.full.cones.push_back({m, {}});
                r.below.push_back(m);
            } else {
                r.full.cones.push_back({m, prefixSet(m.cls() + 1)});
                r.top.push_back(m);
            }
        }
    }

    int d = nvars + 1;
    for (const auto& l : leads) d = std::min(d, l.cls() + 1);
    if (d <= 1) {
        r.rees.cones = r.full.cones;
        return r;
    }
    for (const auto& m : r.top) {
        int k = m.cls() + 1;
        if (k < d - 1) continue;
        ExponentVector g = m;
        if (k < d) g[k - 1] = 0;
        r.rees.cones.push_back({g, prefixSet(k)});
    }
    return r;
}

long long HilbertData::value(int s) const
{
    long long v = 0;
    for (auto [q, k] : cones) v += coneCount(k, q, s);
    return v;
}

Rational HilbertData::polynomialValue(int s) const
{
    Rational v = 0, p = 1;
    for (const auto& c : hilbertPolynomial) {
        v += c * p;
        p *= s;
    }
    return v;
}

HilbertData hilbert(const ConeDecomposition& decomposition)
{
    HilbertData h;
    int n = decomposition.nvars;
    int maxq = 0;
    for (const auto& c : decomposition.cones) {
        h.cones.emplace_back(c.generator.degree(), c.dimension());
        maxq = std::max(maxq, c.generator.degree());
    }
    std::sort(h.cones.begin(), h.cones.end());

    // sum lambda^q (1 - lambda)^(n - k) over (1 - lambda)^n
    std::vector<long long> num(static_cast<std::size_t>(maxq + n + 1), 0);
    for (auto [q, k] : h.cones) {
        long long b = 1;
        int e = n - k;
        for (int i = 0; i <= e; ++i) {
            num[static_cast<std::size_t>(q + i)] += (i % 2 ? -b : b);
            b = b * (e - i) / (i + 1);
        }
    }
    int den = n;
    auto atOne = [&] {
        long long s = 0;
        for (auto c : num) s += c;
        return s;
    };
    bool zero = std::all_of(num.begin(), num.end(), [](long long c) { return c == 0; });
    if (zero) {
        num.clear();
        den = 0;
    } else {
        while (den > 0 && atOne() == 0) {
            // num = (1 - lambda) * quotient
            std::vector<long long> quo(num.size(), 0);
            long long acc = 0;
            for (std::size_t i = 0; i < num.size(); ++i) {
                acc += num[i];
                quo[i] = acc;
            }
            num = std::move(quo);
            --den;
        }
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    h.numerator = num;
    h.denominatorExponent = den;

    h.dimension = -1;
    for (auto [q, k] : h.cones) h.dimension = std::max(h.dimension, k);
    h.multiplicity = 0;
    for (auto [q, k] : h.cones)
        if (k == h.dimension) ++h.multiplicity;

    // binom(s - q + k - 1, k - 1) = prod_{i=1}^{k-1} (s - q + i) / (k - 1)!
    std::vector<Rational> hp;
    for (auto [q, k] : h.cones) {
        if (k == 0) continue;
        std::vector<Rational> p{Rational(1)};
        Rational fact = 1;
        for (int i = 1; i <= k - 1; ++i) {
            std::vector<Rational> next(p.size() + 1, Rational(0));
            for (std::size_t j = 0; j < p.size(); ++j) {
                next[j] += p[j] * (i - q);
                next[j + 1] += p[j];
            }
            p = std::move(next);
            fact *= i;
        }
        if (hp.size() < p.size()) hp.resize(p.size(), Rational(0));
        for (std::size_t j = 0; j < p.size(); ++j) hp[j] += p[j] / fact;
    }
    while (!hp.empty() && hp.back() == 0) hp.pop_back();
    h.hilbertPolynomial = hp;

    int s0 = maxq + 1;
    while (s0 > 0 && Rational(static_cast<long>(h.value(s0 - 1))) == h.polynomialValue(s0 - 1)) --s0;
    h.regularityIndex = s0;
    return h;
}

HilbertData hilbertOfQuotient(const MonomialSet& gens, int nvars)
{
    InvolutiveBasis jb = monomialJanetBasis(minimalGenerators(gens), nvars);
    return hilbert(janetComplementaryDecomposition(leadExponents(jb), nvars));
}

} // namespace invo
