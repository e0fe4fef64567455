#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace invo {

// Multi index (mu_1, ..., mu_n).  Variables are indexed from 0 internally;
// index 0 is the smallest variable x_1.
class ExponentVector {
public:
    using Storage = boost::container::small_vector<int32_t, 6>;

    ExponentVector() = default;
    explicit ExponentVector(int n) : e_(static_cast<std::size_t>(n), 0) {}
    ExponentVector(std::initializer_list<int32_t> init) : e_(init.begin(), init.end()) {}
    explicit ExponentVector(const std::vector<int>& v) : e_(v.begin(), v.end()) {}

    static ExponentVector unit(int n, int k)
    {
        ExponentVector u(n);
        u.e_[static_cast<std::size_t>(k)] = 1;
        return u;
    }

    int size() const { return static_cast<int>(e_.size()); }
    int32_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    int32_t& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }

    int degree() const
    {
        int d = 0;
        for (auto v : e_) d += v;
        return d;
    }

    // Index of the first nonvanishing entry; n-1 for the zero vector.
    int cls() const
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != 0) return static_cast<int>(i);
        return size() - 1;
    }

    bool isZero() const
    {
        for (auto v : e_)
            if (v != 0) return false;
        return true;
    }

    bool divides(const ExponentVector& o) const
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    ExponentVector& operator+=(const ExponentVector& o)
    {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    ExponentVector& operator-=(const ExponentVector& o)
    {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

    ExponentVector lcm(const ExponentVector& o) const
    {
        ExponentVector r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
        return r;
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) { return !(a == b); }
    // Plain lexicographic comparison on the storage; only used for containers.
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) { return a.e_ < b.e_; }

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto v : e_) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }

    std::vector<int> toVector() const { return {e_.begin(), e_.end()}; }
    std::string str() const;

private:
    Storage e_;
};

struct ExponentHash {
    std::size_t operator()(const ExponentVector& e) const { return e.hash(); }
};

// All exponent vectors of total degree d in n variables, in a fixed order.
std::vector<ExponentVector> monomialsOfDegree(int n, int d);

// Term x^mu e_comp of a free module (comp is 0-based).
struct Term {
    ExponentVector exp;
    int comp = 0;

    friend bool operator==(const Term& a, const Term& b) { return a.comp == b.comp && a.exp == b.exp; }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b)
    {
        if (a.comp != b.comp) return a.comp < b.comp;
        return a.exp < b.exp;
    }
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.exp.hash() * 31u + static_cast<std::size_t>(t.comp); }
};

} // namespace invo
