#pragma once

#include "invo/completion.hpp"
#include "invo/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace invo {

// Permutation p such that generators p[0], p[1], ... form an L-ordering:
// every edge of the L-graph goes from an earlier to a later generator.  For
// the Pommaret division this is the class-then-lex rule.
std::vector<std::size_t> lOrdering(const InvolutiveBasis& basis);
InvolutiveBasis lOrdered(const InvolutiveBasis& basis);

// Edges (from, to) of the L-graph: x_k * lt(h_from) is involutively divisible
// by lt(h_to) for a non-multiplicative x_k.
std::vector<std::pair<std::size_t, std::size_t>> lGraph(const InvolutiveBasis& basis);

// Generator w_alpha (x) v_k of the complex: alpha indexes the Pommaret basis
// and k lists 0-based variables in increasing order.
struct SyzygyLabel {
    int generator = 0;
    std::vector<int> indices;
    friend bool operator==(const SyzygyLabel&, const SyzygyLabel&) = default;
    friend auto operator<=>(const SyzygyLabel&, const SyzygyLabel&) = default;
};

std::string labelStr(const SyzygyLabel& l);

struct SyzygyGenerator {
    std::size_t source = 0; // generator of the previous level
    int variable = 0;       // the non-multiplicative variable x_k
    ModuleElement element;  // x_k e_source - sum P_beta e_beta
};

struct SyzygyBasis {
    OrderPtr order; // Schreyer order on the free module of the previous level
    std::vector<SyzygyGenerator> syzygies;
    InvolutiveBasis basis; // the same elements, L-ordered, as an involutive basis
};

// One syzygy per generator and non-multiplicative variable, read off the
// involutive standard representation of x_k h_alpha.  The basis must already
// be L-ordered.  Leading terms are checked to be x_k e_alpha.
SyzygyBasis syzygyBasis(const InvolutiveBasis& ordered);

struct ResolutionLevel {
    std::vector<SyzygyLabel> labels;
    std::vector<int> degrees;
    // differential[c][r]: coefficient of generator r of the previous level in
    // the image of generator c.  Empty at level 0.
    std::vector<std::vector<Poly>> differential;
    int rank() const { return static_cast<int>(labels.size()); }
};

struct FreeResolution {
    int nvars = 0;
    int rank = 1;                           // of the free module containing the module
    OrderPtr ringOrder;                     // order used for polynomial entries
    std::vector<ModuleElement> augmentation; // image of each level-0 generator
    std::vector<ResolutionLevel> levels;
    // Pommaret bases of H and of the syzygy modules, one per level; dropped by
    // minimisation.
    std::vector<InvolutiveBasis> syzygyBases;
    bool graded = false;
    bool minimal = false;

    int length() const { return static_cast<int>(levels.size()) - 1; }
    std::vector<int> ranks() const;
};

// Iterated involutive Schreyer resolution of the module with Pommaret basis H.
FreeResolution freeResolution(const InvolutiveBasis& pommaretBasis);

// r_i = sum_k binom(n-k, i) beta_k^(0), with beta indexed by 1-based class.
std::vector<long long> predictedRanks(const std::vector<int>& classCounts, int nvars);
// beta_k^(i) = sum_{j<k} beta_j^(i-1) for i = 0..n; entry [i][k] with 1-based k.
std::vector<std::vector<long long>> classCountTable(const std::vector<int>& classCounts, int nvars);
// beta_k^(0) of a basis, index 1..n (index 0 unused).
std::vector<int> classCounts(const InvolutiveBasis& basis);

// Image of a combination of level-i generators (i >= 1) as a combination of
// level-(i-1) generators.
std::vector<Poly> applyDifferential(const FreeResolution& res, int level, const std::vector<Poly>& coords);
// Image of a combination of level-0 generators in the module.
ModuleElement applyAugmentation(const FreeResolution& res, const std::vector<Poly>& coords);

// Composition of consecutive maps vanishes at every level.
bool differentialsCompose(const FreeResolution& res);

struct ExactnessReport {
    bool exact = true;
    int failingLevel = -1;
    int failingDegree = -1;
    // dim_Q of each free module in each degree, [degree][level]
    std::vector<std::vector<long long>> dimensions;
    std::vector<long long> moduleDimensions; // dim M_s
};

// Degreewise linear algebra: ker = im at every level for all degrees up to
// maxDegree, epsilon onto M, last map injective.  Needs a graded resolution.
ExactnessReport checkExactness(const FreeResolution& res, int maxDegree);

// Monomial Pommaret bases ------------------------------------------------------

struct DeltaFunction {
    // x_k h_alpha = t[alpha][k] * h_{delta[alpha][k]}; for multiplicative k
    // this is alpha itself with t = x_k.
    std::vector<std::vector<int>> delta;
    std::vector<std::vector<ExponentVector>> t;
    std::vector<int> classes;
};

DeltaFunction monomialDelta(const InvolutiveBasis& pommaretBasis);

struct LabeledTerm {
    Rational coef;
    ExponentVector mult;
    SyzygyLabel label;
};

// delta(w_alpha (x) v_k) from Delta alone; terms outside the subcomplex S
// (first index not above the class of the generator) are dropped, and the
// result is empty when k_1 <= cls h_alpha.
std::vector<LabeledTerm> monomialDifferential(const DeltaFunction& d, const SyzygyLabel& label);
// The same formula on the whole complex C = W (x) Lambda V, nothing dropped.
std::vector<LabeledTerm> koszulDifferential(const DeltaFunction& d, const SyzygyLabel& label);

struct GammaFunction {
    // h_alpha h_beta = m[alpha][beta] * h_{gamma[alpha][beta]}
    std::vector<std::vector<int>> gamma;
    std::vector<std::vector<ExponentVector>> m;
};

GammaFunction monomialProduct(const InvolutiveBasis& pommaretBasis);

// Coefficients P_gamma of the involutive standard representation of
// h_alpha * h_beta, i.e. w_alpha x w_beta = sum P_gamma w_gamma.
std::vector<Poly> productRepresentation(const InvolutiveBasis& pommaretBasis, std::size_t alpha, std::size_t beta);

// P-linear extension of the product to W = P^p; elements are coordinate
// vectors.
class ProductTable {
public:
    explicit ProductTable(const InvolutiveBasis& pommaretBasis);
    std::vector<Poly> multiply(const std::vector<Poly>& a, const std::vector<Poly>& b) const;
    const std::vector<Poly>& basisProduct(std::size_t alpha, std::size_t beta) const
    {
        return table_[alpha][beta];
    }
    std::size_t size() const { return table_.size(); }

private:
    OrderPtr ring_;
    std::vector<std::vector<std::vector<Poly>>> table_;
};

// Stability ------------------------------------------------------------------

struct StabilityData {
    bool stable = false;
    bool exchange = false;        // nu - 1_k + 1_j in the module for all generators
    bool minimalIsPommaret = false;
    std::optional<std::pair<Term, int>> witness; // generator and j with the exchange failing
};

StabilityData stability(const std::vector<Term>& gens, int nvars);
bool isStable(const MonomialSet& gens, int nvars);

// Minimisation -----------------------------------------------------------------

struct BettiTable {
    std::map<std::pair<int, int>, int> entries; // (i, j) -> beta_{i,i+j}
    int at(int i, int j) const;
    int regularity() const; // max j with a nonzero entry, -1 if empty
    std::vector<std::pair<int, int>> extremal() const;
};

BettiTable bettiTable(const FreeResolution& res);

struct MinimizationResult {
    FreeResolution resolution;
    BettiTable betti;
    bool changed = false;
    bool skipped = false; // inhomogeneous input
    std::string notice;
    // positions (i, j) and values read off the Pommaret basis
    std::vector<std::pair<std::pair<int, int>, int>> extremalFromBasis;
};

MinimizationResult minimize(const FreeResolution& res);

// Extremal Betti numbers from the degrees and classes of a Pommaret basis.
std::vector<std::pair<std::pair<int, int>, int>> extremalBettiFromBasis(const InvolutiveBasis& pommaretBasis);

// pd M = n - d for the minimal class d of the Pommaret basis.
int projectiveDimension(const InvolutiveBasis& pommaretBasis);

// Regularity -------------------------------------------------------------------

struct RegularityResult {
    int regularity = 0;
    InvolutiveBasis basis;
    CoordinateChange change = CoordinateChange::identity(0);
    bool leadingIdealOnly = false;
    std::string notice;
    // positions (i, i + reg) of the maximal degree in the minimal resolution
    std::vector<std::pair<int, int>> positions;
};

RegularityResult castelnuovoMumford(const std::vector<Poly>& gens, const OrderPtr& order, const Limits& limits = {});

// (<I, y_1..y_{j-1}> : y_j)_q = <I, y_1..y_{j-1}>_q for all j and
// <I, y_1..y_d>_q = P_q.  Returns false if some generator exceeds degree q.
bool bayerStillmanCheck(const std::vector<Poly>& gens, int q, const std::vector<Poly>& forms,
                        std::optional<int> knownRegularity = {});

// Pommaret basis of I_{>=q} built from a homogeneous Pommaret basis of degree <= q.
InvolutiveBasis truncatedBasis(const InvolutiveBasis& pommaretBasis, int q);

struct LinearResolutionResult {
    bool linear = false;
    int regularity = 0;
    FreeResolution resolution; // of the truncation I_{>=q}
};

LinearResolutionResult linearResolutionCheck(const std::vector<Poly>& gens, int q, const OrderPtr& order,
                                             const Limits& limits = {});

} // namespace invo
