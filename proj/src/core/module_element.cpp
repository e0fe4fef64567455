#include "invo/module_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace invo {

ModuleElement ModuleElement::term(OrderPtr order, int rank, Term t, Rational c)
{
    ModuleElement f(std::move(order), rank);
    if (c != 0) f.terms_.push_back({std::move(t), std::move(c)});
    return f;
}

ModuleElement ModuleElement::constant(OrderPtr order, Rational c)
{
    int n = order->nvars();
    return term(std::move(order), 1, Term{ExponentVector(n), 0}, std::move(c));
}

ModuleElement ModuleElement::fromEntries(OrderPtr order, int rank, std::vector<Entry> entries)
{
    ModuleElement f(std::move(order), rank);
    const TermOrder& ord = *f.order_;
    std::sort(entries.begin(), entries.end(),
              [&](const Entry& a, const Entry& b) { return ord.compare(a.term, b.term) > 0; });
    for (auto& e : entries) {
        if (!f.terms_.empty() && f.terms_.back().term == e.term) {
            f.terms_.back().coef += e.coef;
            if (f.terms_.back().coef == 0) f.terms_.pop_back();
        } else if (e.coef != 0) {
            f.terms_.push_back(std::move(e));
        }
    }
    return f;
}

const Term& ModuleElement::leadTerm() const
{
    if (terms_.empty()) throw std::logic_error("no leading term");
    return terms_.front().term;
}

const Rational& ModuleElement::leadCoef() const
{
    if (terms_.empty()) throw std::logic_error("no leading term");
    return terms_.front().coef;
}

int ModuleElement::degree() const
{
    int d = -1;
    for (const auto& e : terms_) d = std::max(d, e.term.exp.degree());
    return d;
}

bool ModuleElement::isHomogeneous() const
{
    if (terms_.empty()) return true;
    int d = terms_.front().term.exp.degree();
    for (const auto& e : terms_)
        if (e.term.exp.degree() != d) return false;
    return true;
}

Rational ModuleElement::coefficient(const Term& t) const
{
    for (const auto& e : terms_)
        if (e.term == t) return e.coef;
    return 0;
}

namespace {

// Merge a and sign*b, both descending.
std::vector<Entry> mergeTerms(const TermOrder& ord, const std::vector<Entry>& a, const std::vector<Entry>& b,
                              const Rational& c, const ExponentVector* shift)
{
    std::vector<Entry> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Term tb;
    auto shiftedTerm = [&](std::size_t k) -> const Term& {
        if (!shift) return b[k].term;
        tb.exp = b[k].term.exp + *shift;
        tb.comp = b[k].term.comp;
        return tb;
    };
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        const Term& t = shiftedTerm(j);
        int cmp = i == a.size() ? -1 : ord.compare(a[i].term, t);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({t, c * b[j].coef});
            ++j;
        } else {
            Rational s = a[i].coef + c * b[j].coef;
            if (s != 0) out.push_back({a[i].term, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

ModuleElement& ModuleElement::operator+=(const ModuleElement& o)
{
    if (o.terms_.empty()) return *this;
    if (!order_) {
        *this = o;
        return *this;
    }
    terms_ = mergeTerms(*order_, terms_, o.terms_, Rational(1), nullptr);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o)
{
    if (o.terms_.empty()) return *this;
    if (!order_) {
        *this = -o;
        return *this;
    }
    terms_ = mergeTerms(*order_, terms_, o.terms_, Rational(-1), nullptr);
    return *this;
}

ModuleElement ModuleElement::operator-() const
{
    ModuleElement r = *this;
    for (auto& e : r.terms_) e.coef = -e.coef;
    return r;
}

ModuleElement ModuleElement::scaled(const Rational& c) const
{
    ModuleElement r(order_, rank_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& e : r.terms_) e.coef *= c;
    return r;
}

ModuleElement ModuleElement::shifted(const Rational& c, const ExponentVector& m) const
{
    ModuleElement r(order_, rank_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& e : terms_) r.terms_.push_back({Term{e.term.exp + m, e.term.comp}, e.coef * c});
    return r;
}

void ModuleElement::addShifted(const Rational& c, const ExponentVector& m, const ModuleElement& g)
{
    if (c == 0 || g.terms_.empty()) return;
    if (!order_) {
        *this = g.shifted(c, m);
        return;
    }
    terms_ = mergeTerms(*order_, terms_, g.terms_, c, &m);
}

ModuleElement ModuleElement::monic() const
{
    if (terms_.empty()) return *this;
    Rational inv = 1 / terms_.front().coef;
    return scaled(inv);
}

Entry ModuleElement::takeLead()
{
    if (terms_.empty()) throw std::logic_error("no leading term");
    Entry e = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return e;
}

ModuleElement ModuleElement::reordered(OrderPtr order) const
{
    return fromEntries(std::move(order), rank_, terms_);
}

bool operator==(const ModuleElement& a, const ModuleElement& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].term != b.terms_[i].term || a.terms_[i].coef != b.terms_[i].coef) return false;
    }
    return true;
}

ModuleElement multiply(const Poly& p, const ModuleElement& f)
{
    ModuleElement r(f.order(), f.rank());
    for (const auto& e : p.terms()) r.addShifted(e.coef, e.term.exp, f);
    return r;
}

ModuleElement linearCombine(const std::vector<Combination>& parts, const OrderPtr& order, int rank)
{
    ModuleElement r(order, rank);
    for (const auto& p : parts) {
        if (p.element->rank() != rank) throw std::invalid_argument("rank mismatch in linear combination");
        r.addShifted(p.coef, p.mult, *p.element);
    }
    return r;
}

std::string rationalStr(const Rational& c)
{
    return c.get_str();
}

std::string exponentStr(const ExponentVector& e, const std::vector<std::string>& vars)
{
    std::string s;
    for (int i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[static_cast<std::size_t>(i)];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

namespace {

std::string componentStr(const std::vector<const Entry*>& entries, const std::vector<std::string>& vars)
{
    if (entries.empty()) return "0";
    std::string s;
    bool first = true;
    for (const Entry* e : entries) {
        Rational c = e->coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string mono = exponentStr(e->term.exp, vars);
        if (mono == "1") {
            s += rationalStr(c);
        } else if (c == 1) {
            s += mono;
        } else {
            s += rationalStr(c) + "*" + mono;
        }
    }
    return s;
}

} // namespace

std::string polyStr(const ModuleElement& f, const std::vector<std::string>& vars)
{
    if (f.rank() <= 1) {
        std::vector<const Entry*> all;
        for (const auto& e : f.terms()) all.push_back(&e);
        return componentStr(all, vars);
    }
    std::vector<std::vector<const Entry*>> comps(static_cast<std::size_t>(f.rank()));
    for (const auto& e : f.terms()) comps[static_cast<std::size_t>(e.term.comp)].push_back(&e);
    std::string s = "(";
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (k) s += ", ";
        s += componentStr(comps[k], vars);
    }
    return s + ")";
}

} // namespace invo
