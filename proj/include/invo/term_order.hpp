#pragma once

#include "invo/exponent.hpp"

#include <memory>
#include <string>
#include <vector>

namespace invo {

enum class OrderKind { Lex, DegLex, DegRevLex };

std::string orderName(OrderKind k);
OrderKind parseOrderKind(const std::string& name);

class TermOrder;
using OrderPtr = std::shared_ptr<const TermOrder>;

// Term order on a free module P^m.  Without a Schreyer reference the module
// extension is term over position with the lower component index greater.
// A Schreyer order compares s e_a and t e_b through s*leads[a] and t*leads[b]
// in the inner order; on ties the lower index wins.
class TermOrder {
public:
    static OrderPtr make(OrderKind kind, int nvars);
    static OrderPtr schreyer(OrderPtr inner, std::vector<Term> leads);

    OrderKind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    bool isSchreyer() const { return inner_ != nullptr; }
    const OrderPtr& inner() const { return inner_; }
    const std::vector<Term>& leads() const { return leads_; }
    bool classRespecting() const { return kind_ == OrderKind::DegRevLex; }

    // Sign of the comparison: >0 if a is greater.
    int compareExp(const ExponentVector& a, const ExponentVector& b) const;
    int compare(const Term& a, const Term& b) const;

    bool less(const Term& a, const Term& b) const { return compare(a, b) < 0; }

private:
    TermOrder(OrderKind k, int n) : kind_(k), nvars_(n) {}

    OrderKind kind_;
    int nvars_;
    OrderPtr inner_;
    std::vector<Term> leads_;
};

} // namespace invo
