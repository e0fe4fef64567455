#include "invo/coordinate_change.hpp"

#include <stdexcept>

namespace invo {

RationalMatrix invertMatrix(const RationalMatrix& a)
{
    std::size_t n = a.size();
    RationalMatrix m = a;
    RationalMatrix inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("matrix is not square");
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("singular coordinate change");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = 1 / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

CoordinateChange::CoordinateChange(RationalMatrix a) : a_(std::move(a))
{
    inv_ = invertMatrix(a_);
}

CoordinateChange CoordinateChange::identity(int n)
{
    RationalMatrix a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] = 1;
    return CoordinateChange(a, a);
}

CoordinateChange CoordinateChange::elementary(int n, int k, int l, const Rational& c)
{
    if (k == l) throw std::invalid_argument("elementary change needs distinct variables");
    auto id = identity(n);
    RationalMatrix a = id.a_, inv = id.a_;
    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = c;
    inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = -c;
    return CoordinateChange(std::move(a), std::move(inv));
}

CoordinateChange CoordinateChange::permutation(const std::vector<int>& perm)
{
    std::size_t n = perm.size();
    RationalMatrix a(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][static_cast<std::size_t>(perm[i])] = 1;
    return CoordinateChange(a);
}

bool CoordinateChange::isIdentity() const
{
    for (std::size_t i = 0; i < a_.size(); ++i)
        for (std::size_t j = 0; j < a_.size(); ++j)
            if (a_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

CoordinateChange CoordinateChange::inverse() const
{
    return CoordinateChange(inv_, a_);
}

namespace {

RationalMatrix matMul(const RationalMatrix& a, const RationalMatrix& b)
{
    std::size_t n = a.size();
    RationalMatrix c(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

} // namespace

CoordinateChange CoordinateChange::then(const CoordinateChange& other) const
{
    return CoordinateChange(matMul(a_, other.a_), matMul(other.inv_, inv_));
}

ModuleElement CoordinateChange::apply(const ModuleElement& f) const
{
    const OrderPtr& ord = f.order();
    int n = size();
    if (ord->nvars() != n) throw std::invalid_argument("coordinate change size mismatch");
    // image of each variable as a polynomial in the new coordinates
    std::vector<Poly> image;
    for (int i = 0; i < n; ++i) {
        std::vector<Entry> entries;
        for (int j = 0; j < n; ++j) {
            const Rational& c = a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != 0) entries.push_back({Term{ExponentVector::unit(n, j), 0}, c});
        }
        image.push_back(Poly::fromEntries(ord, 1, std::move(entries)));
    }
    // cached powers of the images
    std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n));
    auto power = [&](int i, int e) -> const Poly& {
        auto& p = powers[static_cast<std::size_t>(i)];
        if (p.empty()) p.push_back(Poly::constant(ord, 1));
        while (static_cast<int>(p.size()) <= e) p.push_back(multiply(p.back(), image[static_cast<std::size_t>(i)]));
        return p[static_cast<std::size_t>(e)];
    };
    ModuleElement result(ord, f.rank());
    for (const auto& e : f.terms()) {
        Poly prod = Poly::constant(ord, e.coef);
        for (int i = 0; i < n; ++i)
            if (e.term.exp[i] > 0) prod = multiply(power(i, e.term.exp[i]), prod);
        std::vector<Entry> entries;
        for (const auto& pe : prod.terms()) entries.push_back({Term{pe.term.exp, e.term.comp}, pe.coef});
        result += ModuleElement::fromEntries(ord, f.rank(), std::move(entries));
    }
    return result;
}

} // namespace invo
