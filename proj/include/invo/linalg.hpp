#pragma once

#include "invo/module_element.hpp"

#include <map>
#include <utility>
#include <vector>

namespace invo {

using SparseVec = std::vector<std::pair<int, Rational>>; // sorted by column

// Incrementally built row echelon form over Q.
class EchelonBasis {
public:
    // Returns true if v was independent of the rows seen so far.
    bool insert(SparseVec v);
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<int, SparseVec> rows_; // pivot column -> row with leading 1
};

// Column indexing of the monomials of one degree.
class DegreeSpace {
public:
    DegreeSpace(int nvars, int degree);
    int nvars() const { return n_; }
    int degree() const { return d_; }
    int dim() const { return static_cast<int>(monos_.size()); }
    const std::vector<ExponentVector>& monomials() const { return monos_; }
    int index(const ExponentVector& e) const;
    // Coefficient vector of the degree-d part of a polynomial (rank 1).
    SparseVec coords(const Poly& f) const;

private:
    int n_, d_;
    std::vector<ExponentVector> monos_;
    std::map<ExponentVector, int> index_;
};

// Vector space spanned by the degree-d elements of the ideal generated by
// homogeneous polynomials gens.
EchelonBasis idealDegreePart(const std::vector<Poly>& gens, const DegreeSpace& space);

} // namespace invo
