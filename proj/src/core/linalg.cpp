#include "invo/linalg.hpp"

#include <stdexcept>

namespace invo {

namespace {

// a += c * b
void axpy(SparseVec& a, const Rational& c, const SparseVec& b)
{
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rational s = a[i].second + c * b[j].second;
            if (s != 0) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

} // namespace

SparseVec EchelonBasis::reduce(SparseVec v) const
{
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = rows_.find(v[pos].first);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        Rational c = -v[pos].second;
        axpy(v, c, it->second);
    }
    return v;
}

bool EchelonBasis::insert(SparseVec v)
{
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational inv = 1 / v.front().second;
    for (auto& e : v) e.second *= inv;
    int pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

DegreeSpace::DegreeSpace(int nvars, int degree) : n_(nvars), d_(degree)
{
    if (degree >= 0) monos_ = monomialsOfDegree(nvars, degree);
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<int>(i));
}

int DegreeSpace::index(const ExponentVector& e) const
{
    auto it = index_.find(e);
    if (it == index_.end()) throw std::out_of_range("monomial not of the space degree");
    return it->second;
}

SparseVec DegreeSpace::coords(const Poly& f) const
{
    std::map<int, Rational> acc;
    for (const auto& e : f.terms()) {
        if (e.term.exp.degree() != d_) continue;
        acc[index(e.term.exp)] += e.coef;
    }
    SparseVec v;
    for (auto& [k, c] : acc)
        if (c != 0) v.emplace_back(k, c);
    return v;
}

EchelonBasis idealDegreePart(const std::vector<Poly>& gens, const DegreeSpace& space)
{
    EchelonBasis basis;
    for (const auto& g : gens) {
        if (g.isZero()) continue;
        int dg = g.degree();
        if (dg > space.degree()) continue;
        for (const auto& m : monomialsOfDegree(space.nvars(), space.degree() - dg)) {
            basis.insert(space.coords(g.shifted(1, m)));
        }
    }
    return basis;
}

} // namespace invo
