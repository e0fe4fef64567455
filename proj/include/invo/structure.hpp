#pragma once

#include "invo/completion.hpp"
#include "invo/exponent.hpp"
#include "invo/monomial_ideal.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invo {

enum class ConeFlavor { Complementary, Rees, Stanley, Hironaka, IdealSide };

std::string coneFlavorName(ConeFlavor f);

// x^generator * k[x_i : i in multiplicative]; indices sorted, 0-based.
struct Cone {
    ExponentVector generator;
    std::vector<int> multiplicative;

    int dimension() const { return static_cast<int>(multiplicative.size()); }
    bool contains(const ExponentVector& m) const;
    friend bool operator==(const Cone&, const Cone&) = default;
};

struct ConeDecomposition {
    int nvars = 0;
    ConeFlavor flavor = ConeFlavor::Complementary;
    std::vector<Cone> cones;

    // Number of monomials of degree s covered by the cones.
    long long count(int s) const;
};

// Complement of the Janet span of a finite monomial set, built by recursion
// over the values taken by the last variables.  For a Janet basis this is a
// disjoint decomposition of the standard monomials.
ConeDecomposition janetComplementaryDecomposition(const MonomialSet& janetSet, int nvars);

// The Janet cones of the set itself (ideal side).
ConeDecomposition janetIdealDecomposition(const MonomialSet& janetSet, int nvars);

struct PommaretDecomposition {
    int degree = 0;
    MonomialSet below; // standard monomials of degree < degree, zero dimensional cones
    MonomialSet top;   // standard monomials of degree == degree, Pommaret cones
    ConeDecomposition full;
    ConeDecomposition rees; // refined so that the minimal cone dimension is depth
};

// Generators of a monomial ideal; the Pommaret basis is computed internally
// (throws NotQuasiStable).  q < 0 means the degree of the Pommaret basis.
PommaretDecomposition pommaretComplementaryDecomposition(const MonomialSet& gens, int nvars, int q = -1);

struct HilbertData {
    std::vector<long long> numerator; // in lambda, over (1 - lambda)^denominatorExponent, reduced
    int denominatorExponent = 0;
    std::vector<Rational> hilbertPolynomial; // coefficients of s^0, s^1, ...; empty for the zero polynomial
    int dimension = -1; // -1 for the zero module
    long long multiplicity = 0;
    int regularityIndex = 0; // smallest s0 with HF(s) = HP(s) for all s >= s0
    std::vector<std::pair<int, int>> cones; // (q_t, k_t)

    long long value(int s) const;
    Rational polynomialValue(int s) const;
};

HilbertData hilbert(const ConeDecomposition& decomposition);

// Hilbert data of P / I for a monomial ideal, via a Janet decomposition.
HilbertData hilbertOfQuotient(const MonomialSet& gens, int nvars);

struct DimensionData {
    int dimension = 0;
    std::vector<int> independentSet; // x_1..x_D
};

// From the leading exponents of a Pommaret basis.
DimensionData krullDimension(const MonomialSet& pommaretLeads, int nvars);

struct DepthData {
    int minClass = 0;                 // d, 1-based
    std::vector<int> regularSequence; // x_1..x_d for the ideal
    int depthQuotient = 0;            // d - 1
};

DepthData depth(const MonomialSet& pommaretLeads, int nvars);

struct CohenMacaulayData {
    bool cohenMacaulay = false;
    std::optional<ConeDecomposition> hironaka;
    int noetherDimension = 0;             // A is finite over k[x_1..x_D]
    MonomialSet noetherGenerators;        // module generators of A over that ring
};

CohenMacaulayData cohenMacaulay(const MonomialSet& pommaretLeads, int nvars);

struct StandardPair {
    ExponentVector nu;
    std::vector<int> free; // N_nu

    friend bool operator==(const StandardPair&, const StandardPair&) = default;
};

struct StandardPairData {
    std::vector<StandardPair> pairs;
    std::vector<MonomialSet> irreducible;  // one per pair
    std::vector<MonomialSet> irredundant;
    std::vector<std::vector<int>> associatedPrimes; // variable indices, sorted
};

// (nu, N) <= (mu, M): the cone of (mu, M) lies in the cone of (nu, N).
bool pairPrecedes(const StandardPair& a, const StandardPair& b);

StandardPairData standardPairs(const ConeDecomposition& complement);

struct PrimaryComponent {
    int k = 0;                 // q_k, 0 <= k <= D
    MonomialSet generators;    // minimal
    std::vector<int> prime;    // <x_{k+1}, ..., x_n> as 0-based indices
    std::vector<int> exponents; // s_{k+1}, ..., s_D
};

struct PrimaryDecompositionData {
    std::vector<PrimaryComponent> components;
    std::vector<MonomialSet> sequentialChain; // I = I_0, I_1, ..., P
};

// Throws NotQuasiStable.
PrimaryDecompositionData primaryDecomposition(const MonomialSet& gens, int nvars);

struct SaturationData {
    InvolutiveBasis basis;       // Pommaret basis of I^sat
    std::optional<int> satiety;  // empty if I is saturated
};

// Homogeneous Pommaret basis for a class respecting order.
SaturationData saturate(const InvolutiveBasis& pommaretBasis);

class InfiniteTrungInvariant : public std::domain_error {
public:
    InfiniteTrungInvariant(const std::string& what, int j) : std::domain_error(what), index(j) {}
    int index;
};

struct TrungData {
    std::vector<int> c; // c_0 .. c_D
    int regularity = 0;
    int depthIdeal = 0;    // depth I, 1-based minimal class
    int depthQuotient = 0; // depth P/I
    bool vanishBelowDepthQuotient = true; // c_j = 0 for j < depth P/I
    bool vanishBelowDepthIdeal = true;    // c_j = 0 for j < depth I
};

// Numbers c_j from their definition (Hilbert functions of elimination ideals
// and their saturations); cross-checked against the Pommaret basis classes.
TrungData trungInvariants(const MonomialSet& gens, int nvars);

// Values from the definition only; throws InfiniteTrungInvariant.
std::vector<int> trungInvariantsDirect(const MonomialSet& gens, int nvars);

struct RegularityBounds {
    int lcmBound = 0;       // |lambda| + d - n
    int degreeBound = 0;    // (n - d + 1)(q - 1) + 1
    int lowerBound = 0;     // q
    int regularity = 0;     // degree of the Pommaret basis
    ExponentVector maximalElement; // a basis element of maximal degree
};

// Quasi-stable monomial ideals; throws NotQuasiStable.
RegularityBounds regularityBounds(const MonomialSet& gens, int nvars);

// Regularity of a quasi-stable monomial ideal from its Pommaret basis.
int monomialRegularity(const MonomialSet& gens, int nvars);

struct StructureReport {
    int dimension = 0;
    int depthQuotient = 0;
    int minClass = 0;
    int projectiveDimension = 0; // of P/I
    int regularity = 0;          // of I
    std::optional<int> satiety;  // empty if saturated or not homogeneous
    bool cohenMacaulay = false;
    std::vector<int> regularSequence;
    std::vector<int> independentSet;
    int noetherDimension = 0;
    bool leadingIdealOnly = false; // inhomogeneous input: invariants of lt I
};

StructureReport analyzeStructure(const InvolutiveBasis& pommaretBasis);

} // namespace invo
