#include "invo/division.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

using namespace invo;

namespace {

ExponentVector ev(std::initializer_list<int32_t> l) { return ExponentVector(l); }

std::vector<int> vars(const MultiplicativeAssignment& a, std::size_t g) { return a.multiplicativeVars(g); }

// Janet variables by recursive splitting of the set along x_n, x_{n-1}, ...
std::vector<std::set<int>> janetOracle(const std::vector<ExponentVector>& set)
{
    const int n = set.front().size();
    std::vector<std::set<int>> out(set.size());
    std::function<void(const std::vector<std::size_t>&, int)> split = [&](const std::vector<std::size_t>& idx, int k) {
        if (k < 0) return;
        int mx = 0;
        for (auto i : idx) mx = std::max(mx, set[i][k]);
        std::map<int, std::vector<std::size_t>> groups;
        for (auto i : idx) {
            if (set[i][k] == mx) out[i].insert(k);
            groups[set[i][k]].push_back(i);
        }
        for (auto& [d, g] : groups) split(g, k - 1);
    };
    std::vector<std::size_t> all(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) all[i] = i;
    split(all, n - 1);
    return out;
}

std::vector<ExponentVector> randomSet(std::mt19937& rng, int n, int maxDeg, int count)
{
    std::uniform_int_distribution<int> deg(1, maxDeg), var(0, n - 1);
    std::set<ExponentVector> s;
    while (static_cast<int>(s.size()) < count) {
        ExponentVector e(n);
        int d = deg(rng);
        for (int i = 0; i < d; ++i) e[var(rng)] += 1;
        s.insert(e);
    }
    return {s.begin(), s.end()};
}

// Drops every element Pommaret divisible by another one.
std::vector<ExponentVector> pommaretAutoreduce(std::vector<ExponentVector> s)
{
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool red = false;
        for (std::size_t j = 0; j < s.size() && !red; ++j) {
            if (i == j || !s[j].divides(s[i])) continue;
            ExponentVector d = s[i] - s[j];
            red = d.isZero() ? j < i : [&] {
                for (int k = s[j].cls() + 1; k < d.size(); ++k)
                    if (d[k] != 0) return false;
                return true;
            }();
        }
        if (!red) out.push_back(s[i]);
    }
    return out;
}

} // namespace

TEST_CASE("janet and pommaret on small sets")
{
    std::vector<ExponentVector> s{ev({0, 0, 2}), ev({1, 0, 1}), ev({0, 1, 1})};
    auto j = assignMultiplicative(DivisionKind::Janet, s);
    CHECK(vars(j, 0) == std::vector<int>{0, 1, 2});
    CHECK(vars(j, 1) == std::vector<int>{0});
    CHECK(vars(j, 2) == std::vector<int>{0, 1});
    CHECK(involutiveSize(j) == 6);
    auto p = assignMultiplicative(DivisionKind::Pommaret, s);
    CHECK(involutiveSize(p) == 6);
    for (std::size_t g = 0; g < 3; ++g) CHECK(vars(p, g) == vars(j, g));

    auto xy = assignMultiplicative(DivisionKind::Pommaret, std::vector<ExponentVector>{ev({1, 1})});
    CHECK(vars(xy, 0) == std::vector<int>{0});
    auto xyJ = assignMultiplicative(DivisionKind::Janet, std::vector<ExponentVector>{ev({1, 1})});
    CHECK(vars(xyJ, 0) == std::vector<int>{0, 1});
    CHECK(involutiveSize(assignMultiplicative(DivisionKind::Janet, std::vector<ExponentVector>{})) == 0);
}

TEST_CASE("janet assignment in four variables")
{
    std::vector<ExponentVector> s{ev({0, 0, 0, 2}), ev({0, 1, 0, 1}), ev({1, 0, 1, 1}), ev({2, 0, 3, 0})};
    auto j = assignMultiplicative(DivisionKind::Janet, s);
    auto o = janetOracle(s);
    for (std::size_t g = 0; g < s.size(); ++g) {
        auto v = vars(j, g);
        CHECK(std::set<int>(v.begin(), v.end()) == o[g]);
    }
}

TEST_CASE("thomas assignment uses coordinate maxima")
{
    std::vector<ExponentVector> s{ev({2, 0}), ev({1, 1}), ev({0, 2})};
    auto t = assignMultiplicative(DivisionKind::Thomas, s);
    CHECK(vars(t, 0) == std::vector<int>{0});
    CHECK(vars(t, 1).empty());
    CHECK(vars(t, 2) == std::vector<int>{1});
}

TEST_CASE("involutive divisors")
{
    auto o = TermOrder::make(OrderKind::DegRevLex, 2);
    auto p = assignMultiplicative(DivisionKind::Pommaret, std::vector<ExponentVector>{ev({0, 2}), ev({1, 1})});
    CHECK(p.divisor(Term{ev({1, 2}), 0}, *o) == std::size_t(0));
    CHECK(p.divisor(Term{ev({1, 1}), 0}, *o) == std::size_t(1));
    auto q = assignMultiplicative(DivisionKind::Pommaret, std::vector<ExponentVector>{ev({1, 1})});
    CHECK_FALSE(q.divisor(Term{ev({1, 2}), 0}, *o));
    // weak set: x and x^2 both Pommaret divide x^3, the larger exponent wins
    auto w = assignMultiplicative(DivisionKind::Pommaret, std::vector<ExponentVector>{ev({1, 0}), ev({2, 0})});
    CHECK(w.divisor(Term{ev({3, 0}), 0}, *o) == std::size_t(1));
    // components must agree
    auto m = assignMultiplicative(DivisionKind::Janet, std::vector<Term>{{ev({0, 1}), 1}});
    CHECK_FALSE(m.divisor(Term{ev({0, 1}), 0}, *o));
    CHECK(m.divisor(Term{ev({3, 1}), 1}, *o));
}

TEST_CASE("involution test")
{
    CHECK(isInvolutiveMonomialSet(DivisionKind::Pommaret, {ev({2, 0}), ev({2, 1}), ev({0, 2})}));
    auto o = TermOrder::make(OrderKind::DegRevLex, 2);
    auto f = involutionFailure(DivisionKind::Pommaret, {Term{ev({1, 1}), 0}}, *o);
    REQUIRE(f);
    CHECK(f->generator == 0);
    CHECK(f->variable == 1);
    for (auto k : {DivisionKind::Pommaret, DivisionKind::Janet, DivisionKind::Thomas})
        CHECK(isInvolutiveMonomialSet(k, {}));
}

TEST_CASE("random sets: janet oracle, pommaret inside janet, pommaret class rule")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 4;
        auto s = randomSet(rng, n, 5, 1 + trial % 6);
        auto j = assignMultiplicative(DivisionKind::Janet, s);
        auto o = janetOracle(s);
        for (std::size_t g = 0; g < s.size(); ++g) {
            auto v = vars(j, g);
            CHECK(std::set<int>(v.begin(), v.end()) == o[g]);
        }
        auto red = pommaretAutoreduce(s);
        auto jr = assignMultiplicative(DivisionKind::Janet, red);
        auto pr = assignMultiplicative(DivisionKind::Pommaret, red);
        for (std::size_t g = 0; g < red.size(); ++g) {
            CHECK(pr.count(g) == red[g].cls() + 1);
            for (int v : pr.multiplicativeVars(g)) CHECK(jr.isMultiplicative(g, v));
        }
    }
}

TEST_CASE("janet cones of a set are disjoint")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 3;
        auto s = randomSet(rng, n, 4, 2 + trial % 5);
        auto j = assignMultiplicative(DivisionKind::Janet, s);
        int top = 0;
        for (auto& e : s) top = std::max(top, e.degree());
        for (int d = 0; d <= top + 3; ++d)
            for (const auto& m : monomialsOfDegree(n, d)) {
                int hits = 0;
                for (std::size_t g = 0; g < s.size(); ++g) hits += j.divides(g, Term{m, 0}) ? 1 : 0;
                CHECK(hits <= 1);
            }
    }
}

TEST_CASE("names")
{
    CHECK(parseDivisionKind("janet") == DivisionKind::Janet);
    CHECK(divisionName(DivisionKind::Thomas) == "thomas");
    CHECK_THROWS(parseDivisionKind("foo"));
}
