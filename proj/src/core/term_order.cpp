#include "invo/term_order.hpp"

#include <stdexcept>

namespace invo {

std::string orderName(OrderKind k)
{
    switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    }
    return "?";
}

OrderKind parseOrderKind(const std::string& name)
{
    if (name == "lex") return OrderKind::Lex;
    if (name == "deglex") return OrderKind::DegLex;
    if (name == "degrevlex") return OrderKind::DegRevLex;
    throw std::invalid_argument("unknown term order '" + name + "'");
}

OrderPtr TermOrder::make(OrderKind kind, int nvars)
{
    return OrderPtr(new TermOrder(kind, nvars));
}

OrderPtr TermOrder::schreyer(OrderPtr inner, std::vector<Term> leads)
{
    auto* o = new TermOrder(inner->kind(), inner->nvars());
    o->inner_ = std::move(inner);
    o->leads_ = std::move(leads);
    return OrderPtr(o);
}

namespace {

// last nonvanishing entry of a-b positive => a greater
int lexCmp(const ExponentVector& a, const ExponentVector& b)
{
    for (int i = a.size() - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

// first nonvanishing entry of a-b negative => a greater
int revlexCmp(const ExponentVector& a, const ExponentVector& b)
{
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int TermOrder::compareExp(const ExponentVector& a, const ExponentVector& b) const
{
    switch (kind_) {
    case OrderKind::Lex: return lexCmp(a, b);
    case OrderKind::DegLex: {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        return lexCmp(a, b);
    }
    case OrderKind::DegRevLex: {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        return revlexCmp(a, b);
    }
    }
    return 0;
}

int TermOrder::compare(const Term& a, const Term& b) const
{
    if (!inner_) {
        int c = compareExp(a.exp, b.exp);
        if (c != 0) return c;
        if (a.comp == b.comp) return 0;
        return a.comp < b.comp ? 1 : -1;
    }
    const Term& la = leads_[static_cast<std::size_t>(a.comp)];
    const Term& lb = leads_[static_cast<std::size_t>(b.comp)];
    int c = inner_->compare(Term{a.exp + la.exp, la.comp}, Term{b.exp + lb.exp, lb.comp});
    if (c != 0) return c;
    if (a.comp == b.comp) return compareExp(a.exp, b.exp);
    return a.comp < b.comp ? 1 : -1;
}

} // namespace invo
