#pragma once

#include "invo/exponent.hpp"
#include "invo/term_order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace invo {

enum class DivisionKind { Pommaret, Janet, Thomas };

std::string divisionName(DivisionKind k);
DivisionKind parseDivisionKind(const std::string& name);

// Multiplicative variables for each term of a finite set.  Janet and Thomas
// are computed relative to the terms sharing the same component.
class MultiplicativeAssignment {
public:
    MultiplicativeAssignment() = default;
    MultiplicativeAssignment(DivisionKind kind, std::vector<Term> terms);

    DivisionKind kind() const { return kind_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    int nvars() const { return nvars_; }

    bool isMultiplicative(std::size_t gen, int var) const { return mult_[gen][static_cast<std::size_t>(var)]; }
    const std::vector<bool>& multiplicative(std::size_t gen) const { return mult_[gen]; }
    std::vector<int> multiplicativeVars(std::size_t gen) const;
    std::vector<int> nonMultiplicativeVars(std::size_t gen) const;
    int count(std::size_t gen) const;

    // Does terms()[gen] involutively divide t?
    bool divides(std::size_t gen, const Term& t) const;
    // Involutive divisor of t; ties go to the greatest exponent under order.
    std::optional<std::size_t> divisor(const Term& t, const TermOrder& order) const;

private:
    DivisionKind kind_ = DivisionKind::Pommaret;
    int nvars_ = 0;
    std::vector<Term> terms_;
    std::vector<std::vector<bool>> mult_;
};

MultiplicativeAssignment assignMultiplicative(DivisionKind kind, const std::vector<Term>& terms);
MultiplicativeAssignment assignMultiplicative(DivisionKind kind, const std::vector<ExponentVector>& exps);

// Total number of multiplicative variables.
int involutiveSize(const MultiplicativeAssignment& a);

struct InvolutionFailure {
    std::size_t generator;
    int variable;
};

// Every non-multiplicative product must have an involutive divisor in the set.
std::optional<InvolutionFailure> involutionFailure(DivisionKind kind, const std::vector<Term>& terms,
                                                   const TermOrder& order);
bool isInvolutiveMonomialSet(DivisionKind kind, const std::vector<ExponentVector>& exps);

} // namespace invo
