#include "invo/resolution.hpp"
#include "invo/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace invo {

std::string labelStr(const SyzygyLabel& l)
{
    std::string s = "w" + std::to_string(l.generator + 1);
    if (l.indices.empty()) return s;
    s += "*v";
    for (std::size_t i = 0; i < l.indices.size(); ++i) s += (i ? "^v" : "") + std::to_string(l.indices[i] + 1);
    return s;
}

std::vector<std::pair<std::size_t, std::size_t>> lGraph(const InvolutiveBasis& basis)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const auto& a = basis.assignment();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (int k : a.nonMultiplicativeVars(i)) {
            Term t = basis[i].leadTerm();
            t.exp[k] += 1;
            auto d = a.divisor(t, *basis.order());
            if (!d) throw std::invalid_argument("basis is not involutive: no involutive divisor of a prolongation");
            edges.emplace_back(i, *d);
        }
    }
    return edges;
}

namespace {

// last nonvanishing entry of a - b negative => a first
int lexCmp(const ExponentVector& a, const ExponentVector& b)
{
    for (int i = a.size() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Poly zeroPoly(const OrderPtr& ring) { return Poly(ring, 1); }

// Split an element of P^r into its r coordinates.
std::vector<Poly> coordinates(const ModuleElement& f, int rank, const OrderPtr& ring)
{
    std::vector<std::vector<Entry>> parts(static_cast<std::size_t>(rank));
    for (const auto& e : f.terms()) parts[static_cast<std::size_t>(e.term.comp)].push_back({Term{e.term.exp, 0}, e.coef});
    std::vector<Poly> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(ModuleElement::fromEntries(ring, 1, std::move(p)));
    return out;
}

} // namespace

std::vector<std::size_t> lOrdering(const InvolutiveBasis& basis)
{
    std::size_t p = basis.size();
    auto edges = lGraph(basis);
    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0);

    if (basis.division() == DivisionKind::Pommaret) {
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
            const Term& a = basis[x].leadTerm();
            const Term& b = basis[y].leadTerm();
            if (a.exp.cls() != b.exp.cls()) return a.exp.cls() < b.exp.cls();
            int c = lexCmp(a.exp, b.exp);
            if (c != 0) return c < 0;
            return a.comp < b.comp;
        });
        std::vector<std::size_t> pos(p);
        for (std::size_t i = 0; i < p; ++i) pos[perm[i]] = i;
        for (auto [from, to] : edges)
            if (pos[from] >= pos[to]) throw std::logic_error("class-then-lex order is not a P-ordering");
        return perm;
    }

    // Kahn's algorithm, smallest index first.
    std::vector<std::vector<std::size_t>> out(p);
    std::vector<int> indeg(p, 0);
    for (auto [from, to] : edges) {
        if (from == to) throw std::logic_error("L-graph has a loop");
        out[from].push_back(to);
        ++indeg[to];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < p; ++i)
        if (indeg[i] == 0) ready.push(i);
    perm.clear();
    while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        perm.push_back(v);
        for (auto w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (perm.size() != p) throw std::logic_error("L-graph has a cycle");
    return perm;
}

InvolutiveBasis lOrdered(const InvolutiveBasis& basis)
{
    std::vector<ModuleElement> gens;
    for (auto i : lOrdering(basis)) gens.push_back(basis[i]);
    InvolutiveBasis b(std::move(gens), basis.division(), basis.order(), basis.rank());
    b.setStrong(basis.strong());
    return b;
}

SyzygyBasis syzygyBasis(const InvolutiveBasis& ordered)
{
    SyzygyBasis r;
    int p = static_cast<int>(ordered.size());
    int n = ordered.nvars();
    r.order = TermOrder::schreyer(ordered.order(), ordered.leadTerms());
    const auto& a = ordered.assignment();
    for (int i = 0; i < p; ++i) {
        for (int k : a.nonMultiplicativeVars(static_cast<std::size_t>(i))) {
            ModuleElement f = ordered[static_cast<std::size_t>(i)].shifted(1, ExponentVector::unit(n, k));
            NormalForm nf = involutiveNormalForm(f, ordered);
            if (!nf.remainder.isZero()) throw std::invalid_argument("basis is not involutive");
            std::vector<Entry> entries{{Term{ExponentVector::unit(n, k), i}, 1}};
            for (int b = 0; b < p; ++b)
                for (const auto& e : nf.representation[static_cast<std::size_t>(b)].terms())
                    entries.push_back({Term{e.term.exp, b}, -e.coef});
            ModuleElement s = ModuleElement::fromEntries(r.order, p, std::move(entries));
            if (s.isZero() || s.leadTerm() != Term{ExponentVector::unit(n, k), i})
                throw std::logic_error("syzygy leading term is not x_k e_alpha; basis is not L-ordered");
            r.syzygies.push_back({static_cast<std::size_t>(i), k, std::move(s)});
        }
    }
    std::vector<ModuleElement> elems;
    for (const auto& s : r.syzygies) elems.push_back(s.element);
    InvolutiveBasis raw(std::move(elems), ordered.division(), r.order, p);
    auto perm = lOrdering(raw);
    std::vector<SyzygyGenerator> sorted;
    std::vector<ModuleElement> gens;
    for (auto i : perm) {
        sorted.push_back(r.syzygies[i]);
        gens.push_back(r.syzygies[i].element);
    }
    r.syzygies = std::move(sorted);
    r.basis = InvolutiveBasis(std::move(gens), ordered.division(), r.order, p);
    return r;
}

std::vector<int> classCounts(const InvolutiveBasis& basis)
{
    std::vector<int> c(static_cast<std::size_t>(basis.nvars() + 1), 0);
    for (const auto& g : basis.generators()) ++c[static_cast<std::size_t>(g.leadExp().cls() + 1)];
    return c;
}

std::vector<std::vector<long long>> classCountTable(const std::vector<int>& counts, int nvars)
{
    std::vector<std::vector<long long>> t(static_cast<std::size_t>(nvars + 1),
                                          std::vector<long long>(static_cast<std::size_t>(nvars + 1), 0));
    for (int k = 1; k <= nvars; ++k) t[0][static_cast<std::size_t>(k)] = counts[static_cast<std::size_t>(k)];
    for (int i = 1; i <= nvars; ++i)
        for (int k = 1; k <= nvars; ++k)
            for (int j = 1; j < k; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] += t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    return t;
}

std::vector<long long> predictedRanks(const std::vector<int>& counts, int nvars)
{
    int d = nvars + 1;
    for (int k = nvars; k >= 1; --k)
        if (counts[static_cast<std::size_t>(k)] > 0) d = k;
    if (d > nvars) return {0};
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> r;
    for (int i = 0; i <= nvars - d; ++i) {
        long long s = 0;
        for (int k = 1; k <= nvars - i; ++k) s += binom(nvars - k, i) * counts[static_cast<std::size_t>(k)];
        r.push_back(s);
    }
    return r;
}

std::vector<int> FreeResolution::ranks() const
{
    std::vector<int> r;
    for (const auto& l : levels) r.push_back(l.rank());
    return r;
}

FreeResolution freeResolution(const InvolutiveBasis& pommaretBasis)
{
    if (pommaretBasis.division() != DivisionKind::Pommaret)
        throw std::invalid_argument("free resolutions are built from Pommaret bases");
    InvolutiveBasis cur = lOrdered(pommaretBasis);
    FreeResolution res;
    res.nvars = cur.nvars();
    res.rank = cur.rank();
    res.ringOrder = cur.ringOrder();
    res.augmentation = cur.generators();
    res.graded = cur.isHomogeneous();

    ResolutionLevel top;
    for (std::size_t a = 0; a < cur.size(); ++a) {
        top.labels.push_back({static_cast<int>(a), {}});
        top.degrees.push_back(cur[a].leadExp().degree());
    }
    res.levels.push_back(std::move(top));
    res.syzygyBases.push_back(cur);

    while (true) {
        SyzygyBasis sb = syzygyBasis(cur);
        if (sb.syzygies.empty()) break;
        const ResolutionLevel& prev = res.levels.back();
        ResolutionLevel next;
        for (const auto& s : sb.syzygies) {
            SyzygyLabel l = prev.labels[s.source];
            l.indices.push_back(s.variable);
            next.labels.push_back(std::move(l));
            next.degrees.push_back(prev.degrees[s.source] + 1);
            next.differential.push_back(coordinates(s.element, prev.rank(), res.ringOrder));
        }
        res.levels.push_back(std::move(next));
        cur = sb.basis;
        res.syzygyBases.push_back(cur);
    }

    auto predicted = predictedRanks(classCounts(res.syzygyBases[0]), res.nvars);
    std::vector<long long> actual;
    for (const auto& l : res.levels) actual.push_back(l.rank());
    if (actual != predicted) throw std::logic_error("resolution ranks differ from the class count formula");
    if (!differentialsCompose(res)) throw std::logic_error("consecutive differentials do not compose to zero");
    return res;
}

std::vector<Poly> applyDifferential(const FreeResolution& res, int level, const std::vector<Poly>& coords)
{
    const auto& L = res.levels[static_cast<std::size_t>(level)];
    int rows = res.levels[static_cast<std::size_t>(level - 1)].rank();
    std::vector<Poly> out(static_cast<std::size_t>(rows), zeroPoly(res.ringOrder));
    for (std::size_t c = 0; c < coords.size(); ++c) {
        if (coords[c].isZero()) continue;
        for (int r = 0; r < rows; ++r)
            out[static_cast<std::size_t>(r)] += multiply(coords[c], L.differential[c][static_cast<std::size_t>(r)]);
    }
    return out;
}

ModuleElement applyAugmentation(const FreeResolution& res, const std::vector<Poly>& coords)
{
    OrderPtr order = res.augmentation.empty() ? res.ringOrder : res.augmentation.front().order();
    ModuleElement out(order, res.rank);
    for (std::size_t a = 0; a < coords.size(); ++a)
        if (!coords[a].isZero()) out += multiply(coords[a], res.augmentation[a]);
    return out;
}

bool differentialsCompose(const FreeResolution& res)
{
    for (int i = 1; i <= res.length(); ++i) {
        for (const auto& col : res.levels[static_cast<std::size_t>(i)].differential) {
            if (i == 1) {
                if (!applyAugmentation(res, col).isZero()) return false;
            } else {
                for (const auto& p : applyDifferential(res, i - 1, col))
                    if (!p.isZero()) return false;
            }
        }
    }
    return true;
}

namespace {

// Rank of a set of vectors whose coordinates are keyed by arbitrary terms.
class KeyedRank {
public:
    void insert(const std::vector<std::pair<Term, Rational>>& v)
    {
        SparseVec s;
        for (const auto& [t, c] : v) {
            auto [it, fresh] = index_.emplace(t, static_cast<int>(index_.size()));
            s.emplace_back(it->second, c);
        }
        std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        echelon_.insert(std::move(s));
    }
    long long rank() const { return echelon_.rank(); }

private:
    std::map<Term, int> index_;
    EchelonBasis echelon_;
};

void addTerms(std::vector<std::pair<Term, Rational>>& v, const Poly& p, const ExponentVector& mu, int comp)
{
    for (const auto& e : p.terms()) v.push_back({Term{e.term.exp + mu, comp}, e.coef});
}

} // namespace

ExactnessReport checkExactness(const FreeResolution& res, int maxDegree)
{
    if (!res.graded) throw std::invalid_argument("exactness is checked degreewise and needs a graded resolution");
    ExactnessReport rep;
    int n = res.nvars;
    int L = res.length();
    for (int s = 0; s <= maxDegree; ++s) {
        std::vector<long long> dims(static_cast<std::size_t>(L + 1), 0);
        std::vector<long long> ranks(static_cast<std::size_t>(L + 2), 0); // ranks[i]: map out of level i
        for (int i = 0; i <= L; ++i) {
            const auto& lev = res.levels[static_cast<std::size_t>(i)];
            KeyedRank kr;
            for (int c = 0; c < lev.rank(); ++c) {
                int e = s - lev.degrees[static_cast<std::size_t>(c)];
                if (e < 0) continue;
                for (const auto& mu : monomialsOfDegree(n, e)) {
                    ++dims[static_cast<std::size_t>(i)];
                    std::vector<std::pair<Term, Rational>> v;
                    if (i == 0) {
                        for (const auto& t : res.augmentation[static_cast<std::size_t>(c)].terms())
                            v.push_back({Term{t.term.exp + mu, t.term.comp}, t.coef});
                    } else {
                        const auto& col = lev.differential[static_cast<std::size_t>(c)];
                        for (std::size_t r = 0; r < col.size(); ++r) addTerms(v, col[r], mu, static_cast<int>(r));
                    }
                    kr.insert(v);
                }
            }
            ranks[static_cast<std::size_t>(i)] = kr.rank();
        }
        rep.dimensions.push_back(dims);
        rep.moduleDimensions.push_back(ranks[0]);
        for (int i = 0; i <= L && rep.exact; ++i) {
            if (dims[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i)] != ranks[static_cast<std::size_t>(i + 1)]) {
                rep.exact = false;
                rep.failingLevel = i;
                rep.failingDegree = s;
            }
        }
    }
    return rep;
}

} // namespace invo
