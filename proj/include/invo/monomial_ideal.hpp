#pragma once

#include "invo/exponent.hpp"

#include <vector>

namespace invo {

// Monomial ideals given by generating exponent sets (rank 1).
using MonomialSet = std::vector<ExponentVector>;

// Minimal generators, sorted with std::less on the exponent storage.
MonomialSet minimalGenerators(MonomialSet gens);
bool inMonomialIdeal(const MonomialSet& gens, const ExponentVector& m);
bool sameMonomialIdeal(const MonomialSet& a, const MonomialSet& b);
bool monomialIdealContains(const MonomialSet& big, const MonomialSet& small);

// I : x_k^oo, obtained by setting x_k = 1 in every generator.
MonomialSet colonVariablePower(const MonomialSet& gens, int k);
// I : x^m
MonomialSet colonMonomial(const MonomialSet& gens, const ExponentVector& m);

MonomialSet idealSum(const MonomialSet& a, const MonomialSet& b);
MonomialSet idealProduct(const MonomialSet& a, const MonomialSet& b);
MonomialSet idealIntersection(const MonomialSet& a, const MonomialSet& b);
// I : J for monomial J
MonomialSet idealQuotient(const MonomialSet& a, const MonomialSet& b);

// Number of monomials of degree d outside the ideal.
long long complementCount(const MonomialSet& gens, int nvars, int d);

} // namespace invo
