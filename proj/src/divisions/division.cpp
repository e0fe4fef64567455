#include "invo/division.hpp"

#include <algorithm>
#include <stdexcept>

namespace invo {

std::string divisionName(DivisionKind k)
{
    switch (k) {
    case DivisionKind::Pommaret: return "pommaret";
    case DivisionKind::Janet: return "janet";
    case DivisionKind::Thomas: return "thomas";
    }
    return "?";
}

DivisionKind parseDivisionKind(const std::string& name)
{
    if (name == "pommaret") return DivisionKind::Pommaret;
    if (name == "janet") return DivisionKind::Janet;
    if (name == "thomas") return DivisionKind::Thomas;
    throw std::invalid_argument("unknown division '" + name + "'");
}

MultiplicativeAssignment::MultiplicativeAssignment(DivisionKind kind, std::vector<Term> terms)
    : kind_(kind), terms_(std::move(terms))
{
    nvars_ = terms_.empty() ? 0 : terms_.front().exp.size();
    const int n = nvars_;
    mult_.assign(terms_.size(), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (std::size_t g = 0; g < terms_.size(); ++g) {
        const Term& nu = terms_[g];
        auto& m = mult_[g];
        switch (kind_) {
        case DivisionKind::Pommaret: {
            int c = nu.exp.cls();
            for (int i = 0; i <= c; ++i) m[static_cast<std::size_t>(i)] = true;
            break;
        }
        case DivisionKind::Thomas: {
            for (int i = 0; i < n; ++i) {
                int mx = 0;
                for (const auto& mu : terms_)
                    if (mu.comp == nu.comp) mx = std::max(mx, mu.exp[i]);
                m[static_cast<std::size_t>(i)] = nu.exp[i] == mx;
            }
            break;
        }
        case DivisionKind::Janet: {
            for (int k = n - 1; k >= 0; --k) {
                int mx = 0;
                for (const auto& mu : terms_) {
                    if (mu.comp != nu.comp) continue;
                    bool sameTail = true;
                    for (int j = k + 1; j < n; ++j)
                        if (mu.exp[j] != nu.exp[j]) {
                            sameTail = false;
                            break;
                        }
                    if (sameTail) mx = std::max(mx, mu.exp[k]);
                }
                m[static_cast<std::size_t>(k)] = nu.exp[k] == mx;
            }
            break;
        }
        }
    }
}

std::vector<int> MultiplicativeAssignment::multiplicativeVars(std::size_t gen) const
{
    std::vector<int> v;
    for (int i = 0; i < nvars_; ++i)
        if (mult_[gen][static_cast<std::size_t>(i)]) v.push_back(i);
    return v;
}

std::vector<int> MultiplicativeAssignment::nonMultiplicativeVars(std::size_t gen) const
{
    std::vector<int> v;
    for (int i = 0; i < nvars_; ++i)
        if (!mult_[gen][static_cast<std::size_t>(i)]) v.push_back(i);
    return v;
}

int MultiplicativeAssignment::count(std::size_t gen) const
{
    int c = 0;
    for (bool b : mult_[gen]) c += b ? 1 : 0;
    return c;
}

bool MultiplicativeAssignment::divides(std::size_t gen, const Term& t) const
{
    const Term& g = terms_[gen];
    if (g.comp != t.comp) return false;
    for (int i = 0; i < nvars_; ++i) {
        int d = t.exp[i] - g.exp[i];
        if (d < 0) return false;
        if (d > 0 && !mult_[gen][static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

std::optional<std::size_t> MultiplicativeAssignment::divisor(const Term& t, const TermOrder& order) const
{
    std::optional<std::size_t> best;
    for (std::size_t g = 0; g < terms_.size(); ++g) {
        if (!divides(g, t)) continue;
        if (!best || order.compareExp(terms_[g].exp, terms_[*best].exp) > 0) best = g;
    }
    return best;
}

MultiplicativeAssignment assignMultiplicative(DivisionKind kind, const std::vector<Term>& terms)
{
    return MultiplicativeAssignment(kind, terms);
}

MultiplicativeAssignment assignMultiplicative(DivisionKind kind, const std::vector<ExponentVector>& exps)
{
    std::vector<Term> terms;
    terms.reserve(exps.size());
    for (const auto& e : exps) terms.push_back(Term{e, 0});
    return MultiplicativeAssignment(kind, std::move(terms));
}

int involutiveSize(const MultiplicativeAssignment& a)
{
    int s = 0;
    for (std::size_t g = 0; g < a.size(); ++g) s += a.count(g);
    return s;
}

std::optional<InvolutionFailure> involutionFailure(DivisionKind kind, const std::vector<Term>& terms,
                                                   const TermOrder& order)
{
    MultiplicativeAssignment a(kind, terms);
    for (std::size_t g = 0; g < terms.size(); ++g) {
        for (int j : a.nonMultiplicativeVars(g)) {
            Term t = terms[g];
            t.exp[j] += 1;
            if (!a.divisor(t, order)) return InvolutionFailure{g, j};
        }
    }
    return std::nullopt;
}

bool isInvolutiveMonomialSet(DivisionKind kind, const std::vector<ExponentVector>& exps)
{
    if (exps.empty()) return true;
    auto order = TermOrder::make(OrderKind::DegRevLex, exps.front().size());
    std::vector<Term> terms;
    for (const auto& e : exps) terms.push_back(Term{e, 0});
    return !involutionFailure(kind, terms, *order);
}

} // namespace invo
