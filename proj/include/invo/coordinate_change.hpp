#pragma once

#include "invo/module_element.hpp"

#include <vector>

namespace invo {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Linear change x = A x~, i.e. x_i is replaced by sum_j A_ij x~_j.
class CoordinateChange {
public:
    explicit CoordinateChange(RationalMatrix a); // throws on singular input
    static CoordinateChange identity(int n);
    // x_k = x~_k + a x~_l, all other variables unchanged
    static CoordinateChange elementary(int n, int k, int l, const Rational& a);
    static CoordinateChange permutation(const std::vector<int>& perm); // x_i = x~_perm[i]

    int size() const { return static_cast<int>(a_.size()); }
    const RationalMatrix& matrix() const { return a_; }
    const RationalMatrix& inverseMatrix() const { return inv_; }
    bool isIdentity() const;

    CoordinateChange inverse() const;
    // First this, then other: x = A x~, x~ = B x^ gives x = (AB) x^.
    CoordinateChange then(const CoordinateChange& other) const;

    ModuleElement apply(const ModuleElement& f) const;

private:
    CoordinateChange(RationalMatrix a, RationalMatrix inv) : a_(std::move(a)), inv_(std::move(inv)) {}

    RationalMatrix a_;
    RationalMatrix inv_;
};

// Exact inverse by Gauss-Jordan elimination; throws std::invalid_argument if singular.
RationalMatrix invertMatrix(const RationalMatrix& a);

} // namespace invo
