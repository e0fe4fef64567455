#pragma once

#include "invo/coordinate_change.hpp"
#include "invo/division.hpp"
#include "invo/module_element.hpp"
#include "invo/monomial_ideal.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invo {

// Ordered generators together with the multiplicative variables of their
// leading terms.
class InvolutiveBasis {
public:
    InvolutiveBasis() = default;
    InvolutiveBasis(std::vector<ModuleElement> gens, DivisionKind kind, OrderPtr order, int rank);

    const std::vector<ModuleElement>& generators() const { return gens_; }
    const ModuleElement& operator[](std::size_t i) const { return gens_[i]; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    DivisionKind division() const { return kind_; }
    const OrderPtr& order() const { return order_; }
    // Order used for polynomial coefficients (rank 1, no Schreyer part).
    const OrderPtr& ringOrder() const { return ringOrder_; }
    int rank() const { return rank_; }
    int nvars() const { return order_->nvars(); }
    const MultiplicativeAssignment& assignment() const { return assignment_; }
    bool strong() const { return strong_; }
    void setStrong(bool s) { strong_ = s; }

    std::vector<Term> leadTerms() const;
    int degree() const; // max degree of a generator, -1 if empty
    bool isMonomial() const;
    bool isHomogeneous() const;

private:
    std::vector<ModuleElement> gens_;
    DivisionKind kind_ = DivisionKind::Pommaret;
    OrderPtr order_;
    OrderPtr ringOrder_;
    int rank_ = 1;
    MultiplicativeAssignment assignment_;
    bool strong_ = true;
};

OrderPtr ringOrderOf(const OrderPtr& order);

struct NormalForm {
    ModuleElement remainder;
    std::vector<Poly> representation; // coefficient of each generator
};

// Full involutive reduction: every term of the remainder is involutively
// irreducible and f = sum P_h h + remainder with P_h in k[X(h)].
NormalForm involutiveNormalForm(const ModuleElement& f, const InvolutiveBasis& basis);

std::vector<ModuleElement> involutiveHeadAutoreduce(std::vector<ModuleElement> set, DivisionKind kind,
                                                    const OrderPtr& order);

struct DeltaWitness {
    std::size_t generator;
    int variable;
};

// A variable that is Janet but not Pommaret multiplicative for some element.
std::optional<DeltaWitness> detectDeltaSingularity(const std::vector<Term>& leads);
std::optional<DeltaWitness> detectDeltaSingularity(const std::vector<ModuleElement>& set);

struct Limits {
    int iterCap = -1;  // -1: 10 * (input degree) + 50 adjunctions
    int degCap = -1;   // -1: no cap on the degree of adjoined leading terms
    int elementaryRounds = -1; // -1: 5 n^2
    int escalations = 8;
    std::uint64_t seed = 1;

    static Limits fromEnvironment(); // reads INVO_ITERCAP / INVO_DEGCAP / INVO_SEED
};

enum class CompletionStatus { Basis, Diverged, LimitExceeded };

struct CompletionOutcome {
    CompletionStatus status = CompletionStatus::Basis;
    InvolutiveBasis basis; // partial basis unless status == Basis
    std::optional<DeltaWitness> witness;
    int iterations = 0;
};

// Involutive completion.  autoreduceKind selects the division used for head
// autoreductions (the Janet completion with Pommaret autoreduction uses
// Pommaret here).
CompletionOutcome complete(const std::vector<ModuleElement>& gens, DivisionKind kind, const OrderPtr& order,
                           const Limits& limits = {});
CompletionOutcome complete(const std::vector<ModuleElement>& gens, DivisionKind kind, DivisionKind autoreduceKind,
                           const OrderPtr& order, const Limits& limits);

class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RegularCoordinates {
    CoordinateChange change = CoordinateChange::identity(0);
    InvolutiveBasis basis;
    int rounds = 0;
    bool escalated = false;
};

// Search for coordinates in which a finite Pommaret basis exists; the basis
// is expressed in the new coordinates.  Throws LimitExceeded.
RegularCoordinates findDeltaRegularCoordinates(const std::vector<ModuleElement>& gens, const OrderPtr& order,
                                               const Limits& limits = {});

struct JanetPommaretResult {
    InvolutiveBasis basis;
    bool isPommaret = false;
};

JanetPommaretResult janetPommaretCompletion(const std::vector<ModuleElement>& gens, const OrderPtr& order,
                                            const Limits& limits = {});

struct QuasiStability {
    bool quasiStable = true;
    int failingIndex = -1; // first k with I:x_k^oo not inside I:x_{k+1}^oo
    std::vector<MonomialSet> chain;
};

QuasiStability quasiStability(const MonomialSet& gens, int nvars);

class NotQuasiStable : public std::invalid_argument {
public:
    NotQuasiStable(const std::string& what, DeltaWitness w) : std::invalid_argument(what), witness(w) {}
    DeltaWitness witness; // refers to the Pommaret autoreduced Janet basis of the ideal
    MonomialSet janetBasis;
};

// Pommaret basis of a quasi-stable monomial ideal; throws NotQuasiStable otherwise.
InvolutiveBasis monomialPommaretBasis(const MonomialSet& gens, int nvars, const Limits& limits = {});
InvolutiveBasis monomialJanetBasis(const MonomialSet& gens, int nvars, const Limits& limits = {});

// Strong Pommaret basis of I : x_k^oo from a monomial Pommaret basis of I.
InvolutiveBasis colonBasis(const InvolutiveBasis& pommaretBasis, int k);

std::vector<ModuleElement> monomialElements(const MonomialSet& gens, const OrderPtr& order);
MonomialSet leadExponents(const InvolutiveBasis& basis);

} // namespace invo
