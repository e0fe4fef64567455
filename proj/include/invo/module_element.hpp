#pragma once

#include "invo/exponent.hpp"
#include "invo/term_order.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace invo {

using Rational = mpq_class;

struct Entry {
    Term term;
    Rational coef;
};

// Finite Q-linear combination of terms of P^m.  Terms are kept strictly
// descending under the attached order with no zero coefficients, so the
// leading term is always the front entry.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(OrderPtr order, int rank) : order_(std::move(order)), rank_(rank) {}

    static ModuleElement term(OrderPtr order, int rank, Term t, Rational c = 1);
    static ModuleElement constant(OrderPtr order, Rational c);
    // Sorts and combines an arbitrary list of entries.
    static ModuleElement fromEntries(OrderPtr order, int rank, std::vector<Entry> entries);

    const OrderPtr& order() const { return order_; }
    int rank() const { return rank_; }
    int nvars() const { return order_->nvars(); }

    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Entry>& terms() const { return terms_; }

    const Term& leadTerm() const;
    const ExponentVector& leadExp() const { return leadTerm().exp; }
    const Rational& leadCoef() const;
    int leadComp() const { return leadTerm().comp; }
    int cls() const { return leadExp().cls(); }

    int degree() const;
    bool isHomogeneous() const;
    bool isMonomial() const { return terms_.size() == 1; }
    Rational coefficient(const Term& t) const;

    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    ModuleElement operator-() const;
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

    ModuleElement scaled(const Rational& c) const;
    ModuleElement shifted(const Rational& c, const ExponentVector& m) const;
    // this += c * x^m * g
    void addShifted(const Rational& c, const ExponentVector& m, const ModuleElement& g);
    ModuleElement monic() const;

    // Remove and return the leading entry.
    Entry takeLead();
    // Append an entry smaller than every present term.
    void appendTrailing(Entry e) { terms_.push_back(std::move(e)); }

    // Same element sorted under another order on the same free module.
    ModuleElement reordered(OrderPtr order) const;

    friend bool operator==(const ModuleElement& a, const ModuleElement& b);
    friend bool operator!=(const ModuleElement& a, const ModuleElement& b) { return !(a == b); }

private:
    OrderPtr order_;
    int rank_ = 1;
    std::vector<Entry> terms_;
};

using Poly = ModuleElement;

// p * f for a polynomial p (rank 1) and a module element f.
ModuleElement multiply(const Poly& p, const ModuleElement& f);

struct Combination {
    Rational coef;
    ExponentVector mult;
    const ModuleElement* element;
};

// Sum of coef * x^mult * element.
ModuleElement linearCombine(const std::vector<Combination>& parts, const OrderPtr& order, int rank);

std::string rationalStr(const Rational& c);
std::string exponentStr(const ExponentVector& e, const std::vector<std::string>& vars);
std::string polyStr(const ModuleElement& f, const std::vector<std::string>& vars);

} // namespace invo
