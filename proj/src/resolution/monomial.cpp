#include "invo/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace invo {

namespace {

void requireMonomialPommaret(const InvolutiveBasis& H)
{
    if (H.division() != DivisionKind::Pommaret) throw std::invalid_argument("a Pommaret basis is required");
    if (!H.isMonomial()) throw std::invalid_argument("a monomial basis is required");
}

std::vector<int> without(const std::vector<int>& k, std::size_t j)
{
    std::vector<int> r;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (i != j) r.push_back(k[i]);
    return r;
}

} // namespace

DeltaFunction monomialDelta(const InvolutiveBasis& H)
{
    requireMonomialPommaret(H);
    int n = H.nvars();
    const auto& a = H.assignment();
    DeltaFunction d;
    for (std::size_t i = 0; i < H.size(); ++i) {
        const Term& lt = H[i].leadTerm();
        d.classes.push_back(lt.exp.cls());
        std::vector<int> row;
        std::vector<ExponentVector> trow;
        for (int k = 0; k < n; ++k) {
            if (a.isMultiplicative(i, k)) {
                row.push_back(static_cast<int>(i));
                trow.push_back(ExponentVector::unit(n, k));
                continue;
            }
            Term t = lt;
            t.exp[k] += 1;
            auto b = a.divisor(t, *H.order());
            if (!b) throw std::invalid_argument("basis is not involutive");
            row.push_back(static_cast<int>(*b));
            trow.push_back(t.exp - H[*b].leadExp());
        }
        d.delta.push_back(std::move(row));
        d.t.push_back(std::move(trow));
    }
    return d;
}

std::vector<LabeledTerm> monomialDifferential(const DeltaFunction& d, const SyzygyLabel& label)
{
    std::vector<LabeledTerm> out;
    const auto& k = label.indices;
    int alpha = label.generator;
    int i = static_cast<int>(k.size());
    if (i == 0 || k[0] <= d.classes[static_cast<std::size_t>(alpha)]) return out;
    int n = static_cast<int>(d.delta[static_cast<std::size_t>(alpha)].size());
    for (int j = 0; j < i; ++j) {
        Rational sign = ((i - 1 - j) % 2) ? -1 : 1;
        auto rest = without(k, static_cast<std::size_t>(j));
        int kj = k[static_cast<std::size_t>(j)];
        out.push_back({sign, ExponentVector::unit(n, kj), {alpha, rest}});
        int beta = d.delta[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(kj)];
        if (rest.empty() || d.classes[static_cast<std::size_t>(beta)] < rest.front())
            out.push_back({-sign, d.t[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(kj)], {beta, rest}});
    }
    return out;
}

std::vector<LabeledTerm> koszulDifferential(const DeltaFunction& d, const SyzygyLabel& label)
{
    std::vector<LabeledTerm> out;
    const auto& k = label.indices;
    int alpha = label.generator;
    int i = static_cast<int>(k.size());
    int n = static_cast<int>(d.delta[static_cast<std::size_t>(alpha)].size());
    for (int j = 0; j < i; ++j) {
        int kj = k[static_cast<std::size_t>(j)];
        if (kj <= d.classes[static_cast<std::size_t>(alpha)]) continue; // x_k w - x_k w
        Rational sign = ((i - 1 - j) % 2) ? -1 : 1;
        auto rest = without(k, static_cast<std::size_t>(j));
        out.push_back({sign, ExponentVector::unit(n, kj), {alpha, rest}});
        int beta = d.delta[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(kj)];
        out.push_back({-sign, d.t[static_cast<std::size_t>(alpha)][static_cast<std::size_t>(kj)], {beta, rest}});
    }
    return out;
}

GammaFunction monomialProduct(const InvolutiveBasis& H)
{
    requireMonomialPommaret(H);
    if (H.rank() != 1) throw std::invalid_argument("the product needs an ideal");
    const auto& a = H.assignment();
    GammaFunction g;
    for (std::size_t x = 0; x < H.size(); ++x) {
        std::vector<int> row;
        std::vector<ExponentVector> mrow;
        for (std::size_t y = 0; y < H.size(); ++y) {
            Term t{H[x].leadExp() + H[y].leadExp(), 0};
            auto c = a.divisor(t, *H.order());
            if (!c) throw std::invalid_argument("basis is not involutive");
            row.push_back(static_cast<int>(*c));
            mrow.push_back(t.exp - H[*c].leadExp());
        }
        g.gamma.push_back(std::move(row));
        g.m.push_back(std::move(mrow));
    }

    DeltaFunction d = monomialDelta(H);
    std::size_t p = H.size();
    int n = H.nvars();
    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y) {
            auto xy = static_cast<std::size_t>(g.gamma[x][y]);
            if (d.classes[xy] < std::max(d.classes[x], d.classes[y]))
                throw std::logic_error("product lands in a generator of lower class");
            for (std::size_t z = 0; z < p; ++z) {
                auto yz = static_cast<std::size_t>(g.gamma[y][z]);
                if (g.gamma[xy][z] != g.gamma[x][yz] || g.m[x][y] + g.m[xy][z] != g.m[y][z] + g.m[yz][x])
                    throw std::logic_error("product tables are not associative");
            }
            for (int k = 0; k < n; ++k) {
                auto dk = static_cast<std::size_t>(d.delta[x][static_cast<std::size_t>(k)]);
                auto gk = static_cast<std::size_t>(d.delta[xy][static_cast<std::size_t>(k)]);
                if (g.gamma[dk][y] != static_cast<int>(gk) ||
                    d.t[x][static_cast<std::size_t>(k)] + g.m[dk][y] != d.t[xy][static_cast<std::size_t>(k)] + g.m[x][y])
                    throw std::logic_error("product does not commute with the multiplication by x_k");
            }
        }
    return g;
}

std::vector<Poly> productRepresentation(const InvolutiveBasis& H, std::size_t alpha, std::size_t beta)
{
    if (H.rank() != 1) throw std::invalid_argument("the product needs an ideal");
    NormalForm nf = involutiveNormalForm(multiply(H[alpha], H[beta]), H);
    if (!nf.remainder.isZero()) throw std::invalid_argument("basis is not involutive");
    return nf.representation;
}

ProductTable::ProductTable(const InvolutiveBasis& H) : ring_(H.ringOrder())
{
    for (std::size_t a = 0; a < H.size(); ++a) {
        std::vector<std::vector<Poly>> row;
        for (std::size_t b = 0; b < H.size(); ++b) row.push_back(productRepresentation(H, a, b));
        table_.push_back(std::move(row));
    }
}

std::vector<Poly> ProductTable::multiply(const std::vector<Poly>& a, const std::vector<Poly>& b) const
{
    std::vector<Poly> out(table_.size(), Poly(ring_, 1));
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x].isZero()) continue;
        for (std::size_t y = 0; y < b.size(); ++y) {
            if (b[y].isZero()) continue;
            Poly c = invo::multiply(a[x], b[y]);
            for (std::size_t z = 0; z < out.size(); ++z)
                if (!table_[x][y][z].isZero()) out[z] += invo::multiply(c, table_[x][y][z]);
        }
    }
    return out;
}

StabilityData stability(const std::vector<Term>& gens, int nvars)
{
    std::map<int, MonomialSet> byComp;
    for (const auto& t : gens) byComp[t.comp].push_back(t.exp);
    StabilityData r;
    r.exchange = true;
    r.minimalIsPommaret = true;
    for (auto& [comp, set] : byComp) {
        MonomialSet minimal = minimalGenerators(set);
        if (!isInvolutiveMonomialSet(DivisionKind::Pommaret, minimal)) r.minimalIsPommaret = false;
        for (const auto& nu : minimal) {
            int k = nu.cls();
            if (nu[k] == 0) continue; // the unit
            for (int j = k + 1; j < nvars; ++j) {
                ExponentVector e = nu;
                e[k] -= 1;
                e[j] += 1;
                if (!inMonomialIdeal(minimal, e)) {
                    if (r.exchange) r.witness = std::make_pair(Term{nu, comp}, j);
                    r.exchange = false;
                }
            }
        }
    }
    if (r.exchange != r.minimalIsPommaret)
        throw std::logic_error("stability criteria disagree");
    r.stable = r.exchange;
    return r;
}

bool isStable(const MonomialSet& gens, int nvars)
{
    std::vector<Term> t;
    for (const auto& g : gens) t.push_back({g, 0});
    return stability(t, nvars).stable;
}

} // namespace invo
