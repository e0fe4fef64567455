#include "invo/completion.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>

namespace invo {

OrderPtr ringOrderOf(const OrderPtr& order)
{
    OrderPtr o = order;
    while (o->isSchreyer()) o = o->inner();
    return o;
}

namespace {

std::vector<Term> leadsOf(const std::vector<ModuleElement>& gens)
{
    std::vector<Term> t;
    t.reserve(gens.size());
    for (const auto& g : gens) t.push_back(g.leadTerm());
    return t;
}

} // namespace

InvolutiveBasis::InvolutiveBasis(std::vector<ModuleElement> gens, DivisionKind kind, OrderPtr order, int rank)
    : gens_(std::move(gens)), kind_(kind), order_(std::move(order)), rank_(rank)
{
    ringOrder_ = ringOrderOf(order_);
    assignment_ = MultiplicativeAssignment(kind_, leadsOf(gens_));
}

std::vector<Term> InvolutiveBasis::leadTerms() const
{
    return leadsOf(gens_);
}

int InvolutiveBasis::degree() const
{
    int d = -1;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool InvolutiveBasis::isMonomial() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const ModuleElement& g) { return g.isMonomial(); });
}

bool InvolutiveBasis::isHomogeneous() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const ModuleElement& g) { return g.isHomogeneous(); });
}

NormalForm involutiveNormalForm(const ModuleElement& f, const InvolutiveBasis& basis)
{
    NormalForm nf{ModuleElement(f.order(), f.rank()), {}};
    nf.representation.assign(basis.size(), Poly(basis.ringOrder(), 1));
    const auto& a = basis.assignment();
    const TermOrder& ro = *basis.ringOrder();
    ModuleElement h = f;
    while (!h.isZero()) {
        const Term& lt = h.leadTerm();
        auto d = a.divisor(lt, ro);
        if (!d) {
            nf.remainder.appendTrailing(h.takeLead());
            continue;
        }
        const ModuleElement& g = basis[*d];
        Rational c = h.leadCoef() / g.leadCoef();
        ExponentVector q = lt.exp - g.leadExp();
        nf.representation[*d] += Poly::term(basis.ringOrder(), 1, Term{q, 0}, c);
        h.addShifted(-c, q, g);
    }
    return nf;
}

namespace {

struct Item {
    ModuleElement f;
    std::uint64_t id;
};

// Returns true if an element was reduced or removed.
bool autoreduceItems(std::vector<Item>& items, DivisionKind kind, std::uint64_t& nextId)
{
    bool changed = false;
    std::erase_if(items, [](const Item& it) { return it.f.isZero(); });
    for (;;) {
        std::vector<Term> leads;
        for (const auto& it : items) leads.push_back(it.f.leadTerm());
        MultiplicativeAssignment a(kind, leads);
        bool found = false;
        for (std::size_t i = 0; i < items.size() && !found; ++i) {
            for (std::size_t j = 0; j < items.size(); ++j) {
                if (i == j || !a.divides(j, leads[i])) continue;
                if (leads[j] == leads[i] && j > i) continue;
                ModuleElement& f = items[i].f;
                const ModuleElement& g = items[j].f;
                f.addShifted(-(f.leadCoef() / g.leadCoef()), leads[i].exp - leads[j].exp, g);
                if (f.isZero()) {
                    items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
                } else {
                    f = f.monic();
                    items[i].id = nextId++;
                }
                changed = true;
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return changed;
}

std::vector<ModuleElement> elementsOf(const std::vector<Item>& items)
{
    std::vector<ModuleElement> v;
    v.reserve(items.size());
    for (const auto& it : items) v.push_back(it.f);
    return v;
}

} // namespace

std::vector<ModuleElement> involutiveHeadAutoreduce(std::vector<ModuleElement> set, DivisionKind kind,
                                                    const OrderPtr& /*order*/)
{
    std::uint64_t next = 0;
    std::vector<Item> items;
    for (auto& f : set) items.push_back({f.isZero() ? f : f.monic(), next++});
    autoreduceItems(items, kind, next);
    return elementsOf(items);
}

std::optional<DeltaWitness> detectDeltaSingularity(const std::vector<Term>& leads)
{
    MultiplicativeAssignment jan(DivisionKind::Janet, leads);
    MultiplicativeAssignment pom(DivisionKind::Pommaret, leads);
    if (involutiveSize(jan) <= involutiveSize(pom)) return std::nullopt;
    for (std::size_t g = 0; g < leads.size(); ++g)
        for (int v = 0; v < jan.nvars(); ++v)
            if (jan.isMultiplicative(g, v) && !pom.isMultiplicative(g, v)) return DeltaWitness{g, v};
    return std::nullopt;
}

std::optional<DeltaWitness> detectDeltaSingularity(const std::vector<ModuleElement>& set)
{
    return detectDeltaSingularity(leadsOf(set));
}

Limits Limits::fromEnvironment()
{
    Limits l;
    if (const char* s = std::getenv("INVO_ITERCAP")) l.iterCap = std::stoi(s);
    if (const char* s = std::getenv("INVO_DEGCAP")) l.degCap = std::stoi(s);
    if (const char* s = std::getenv("INVO_SEED")) l.seed = std::stoull(s);
    return l;
}

namespace {

constexpr int kUnbounded = -2;

int effectiveIterCap(const Limits& limits, const std::vector<ModuleElement>& gens)
{
    if (limits.iterCap >= 0) return limits.iterCap;
    if (limits.iterCap == kUnbounded) return -1;
    int d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return 10 * d + 50;
}

struct Product {
    Term lead;
    std::size_t gen;
    int var;
};

CompletionOutcome completeImpl(const std::vector<ModuleElement>& gens, DivisionKind kind, DivisionKind autoKind,
                               const OrderPtr& order, const Limits& limits, bool checkDelta)
{
    int rank = 1;
    for (const auto& g : gens) rank = std::max(rank, g.rank());
    const TermOrder& ord = *order;
    const int iterCap = effectiveIterCap(limits, gens);

    std::uint64_t nextId = 0;
    std::vector<Item> items;
    for (const auto& g : gens)
        if (!g.isZero()) items.push_back({g.monic(), nextId++});
    autoreduceItems(items, autoKind, nextId);

    CompletionOutcome out;
    auto finish = [&](CompletionStatus st) {
        out.status = st;
        out.basis = InvolutiveBasis(elementsOf(items), kind, order, rank);
        return out;
    };
    if (checkDelta) {
        if (auto w = detectDeltaSingularity(elementsOf(items))) {
            out.witness = w;
            return finish(CompletionStatus::Diverged);
        }
    }

    std::set<std::pair<std::uint64_t, int>> zeroCache;

    for (;;) {
        InvolutiveBasis basis(elementsOf(items), kind, order, rank);
        const auto& a = basis.assignment();

        std::vector<Product> prods;
        for (std::size_t g = 0; g < items.size(); ++g) {
            for (int j : a.nonMultiplicativeVars(g)) {
                if (zeroCache.count({items[g].id, j})) continue;
                Term t = items[g].f.leadTerm();
                t.exp[j] += 1;
                prods.push_back({std::move(t), g, j});
            }
        }
        std::stable_sort(prods.begin(), prods.end(),
                         [&](const Product& p, const Product& q) { return ord.compare(p.lead, q.lead) < 0; });

        std::optional<ModuleElement> adjoin;
        for (const auto& p : prods) {
            ModuleElement xh = items[p.gen].f.shifted(1, ExponentVector::unit(basis.nvars(), p.var));
            NormalForm nf = involutiveNormalForm(xh, basis);
            if (nf.remainder.isZero()) {
                zeroCache.insert({items[p.gen].id, p.var});
                continue;
            }
            adjoin = nf.remainder.monic();
            break;
        }
        if (!adjoin) return finish(CompletionStatus::Basis);

        if (iterCap >= 0 && out.iterations >= iterCap) return finish(CompletionStatus::LimitExceeded);
        if (limits.degCap >= 0 && adjoin->leadExp().degree() > limits.degCap)
            return finish(CompletionStatus::LimitExceeded);

        std::vector<std::vector<bool>> before;
        for (std::size_t g = 0; g < items.size(); ++g) before.push_back(a.multiplicative(g));
        std::vector<std::uint64_t> beforeIds;
        for (const auto& it : items) beforeIds.push_back(it.id);

        items.push_back({std::move(*adjoin), nextId++});
        ++out.iterations;
        bool changed = autoreduceItems(items, autoKind, nextId);

        // A cached zero normal form may rely on a multiplicative variable that
        // has just been lost.
        bool lost = false;
        if (!changed) {
            MultiplicativeAssignment now(kind, leadsOf(elementsOf(items)));
            for (std::size_t g = 0; g < beforeIds.size() && !lost; ++g) {
                for (int v = 0; v < now.nvars(); ++v)
                    if (before[g][static_cast<std::size_t>(v)] && !now.isMultiplicative(g, v)) {
                        lost = true;
                        break;
                    }
            }
        }
        if (changed || lost) zeroCache.clear();

        if (checkDelta) {
            if (auto w = detectDeltaSingularity(elementsOf(items))) {
                out.witness = w;
                return finish(CompletionStatus::Diverged);
            }
        }
    }
}

} // namespace

CompletionOutcome complete(const std::vector<ModuleElement>& gens, DivisionKind kind, const OrderPtr& order,
                           const Limits& limits)
{
    return complete(gens, kind, kind, order, limits);
}

CompletionOutcome complete(const std::vector<ModuleElement>& gens, DivisionKind kind, DivisionKind autoreduceKind,
                           const OrderPtr& order, const Limits& limits)
{
    return completeImpl(gens, kind, autoreduceKind, order, limits, kind == DivisionKind::Pommaret);
}

namespace {

Rational parameter(int t)
{
    // 1, -1, 2, -2, ...
    int m = t / 2 + 1;
    return t % 2 == 0 ? Rational(m) : Rational(-m);
}

CoordinateChange randomUnipotent(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-3, 3);
    RationalMatrix a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dist(rng);
    }
    return CoordinateChange(std::move(a));
}

std::vector<ModuleElement> applyChange(const CoordinateChange& c, const std::vector<ModuleElement>& gens)
{
    std::vector<ModuleElement> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(c.apply(g));
    return out;
}

} // namespace

RegularCoordinates findDeltaRegularCoordinates(const std::vector<ModuleElement>& gens, const OrderPtr& order,
                                               const Limits& limits)
{
    if (!ringOrderOf(order)->classRespecting())
        throw std::invalid_argument("delta-regular coordinates need a class respecting order (degrevlex)");
    const int n = order->nvars();
    const int roundsPerStage = limits.elementaryRounds >= 0 ? limits.elementaryRounds : 5 * n * n;
    std::mt19937_64 rng(limits.seed);

    RegularCoordinates res;
    CoordinateChange total = CoordinateChange::identity(n);
    std::vector<ModuleElement> current = gens;
    for (int stage = 0; stage <= limits.escalations; ++stage) {
        if (stage > 0) {
            total = randomUnipotent(n, rng);
            current = applyChange(total, gens);
            res.escalated = true;
        }
        std::map<std::pair<int, int>, int> tries;
        for (int r = 0; r <= roundsPerStage; ++r) {
            CompletionOutcome o = complete(current, DivisionKind::Pommaret, order, limits);
            ++res.rounds;
            if (o.status == CompletionStatus::Basis) {
                res.change = total;
                res.basis = std::move(o.basis);
                return res;
            }
            if (o.status == CompletionStatus::LimitExceeded || r == roundsPerStage) break;
            const auto& w = *o.witness;
            int k = o.basis[w.generator].cls();
            int l = w.variable;
            CoordinateChange step = CoordinateChange::elementary(n, k, l, parameter(tries[{k, l}]++));
            total = total.then(step);
            current = applyChange(step, o.basis.generators());
        }
    }
    throw LimitExceeded("no delta-regular coordinates found within the configured limits");
}

JanetPommaretResult janetPommaretCompletion(const std::vector<ModuleElement>& gens, const OrderPtr& order,
                                            const Limits& limits)
{
    Limits l = limits;
    if (l.iterCap < 0) l.iterCap = kUnbounded;
    l.degCap = -1;
    CompletionOutcome o = completeImpl(gens, DivisionKind::Janet, DivisionKind::Pommaret, order, l, false);
    JanetPommaretResult r;
    r.basis = std::move(o.basis);
    r.isPommaret = !involutionFailure(DivisionKind::Pommaret, r.basis.leadTerms(), *ringOrderOf(order));
    return r;
}

QuasiStability quasiStability(const MonomialSet& gens, int nvars)
{
    QuasiStability q;
    for (int k = 0; k < nvars; ++k) q.chain.push_back(minimalGenerators(colonVariablePower(gens, k)));
    for (int k = 0; k + 1 < nvars; ++k) {
        if (!monomialIdealContains(q.chain[static_cast<std::size_t>(k + 1)], q.chain[static_cast<std::size_t>(k)])) {
            q.quasiStable = false;
            q.failingIndex = k;
            break;
        }
    }
    return q;
}

std::vector<ModuleElement> monomialElements(const MonomialSet& gens, const OrderPtr& order)
{
    std::vector<ModuleElement> v;
    v.reserve(gens.size());
    for (const auto& e : gens) v.push_back(ModuleElement::term(order, 1, Term{e, 0}));
    return v;
}

MonomialSet leadExponents(const InvolutiveBasis& basis)
{
    MonomialSet s;
    for (const auto& g : basis.generators()) s.push_back(g.leadExp());
    return s;
}

namespace {

Limits unboundedFrom(const Limits& limits)
{
    Limits l = limits;
    if (l.iterCap < 0) l.iterCap = kUnbounded;
    return l;
}

void checkCap(const CompletionOutcome& o)
{
    if (o.status == CompletionStatus::LimitExceeded) throw LimitExceeded("monomial completion hit the configured cap");
}

} // namespace

InvolutiveBasis monomialPommaretBasis(const MonomialSet& gens, int nvars, const Limits& limits)
{
    auto order = TermOrder::make(OrderKind::DegRevLex, nvars);
    MonomialSet mins = minimalGenerators(gens);
    if (!quasiStability(mins, nvars).quasiStable) {
        JanetPommaretResult jp = janetPommaretCompletion(monomialElements(mins, order), order);
        auto w = detectDeltaSingularity(jp.basis.generators());
        DeltaWitness wit = w ? *w : DeltaWitness{0, nvars - 1};
        NotQuasiStable err("monomial ideal is not quasi-stable", wit);
        err.janetBasis = leadExponents(jp.basis);
        throw err;
    }
    // Quasi-stability guarantees termination; the size check only matters
    // for deciding divergence.
    CompletionOutcome o = completeImpl(monomialElements(mins, order), DivisionKind::Pommaret, DivisionKind::Pommaret,
                                       order, unboundedFrom(limits), false);
    checkCap(o);
    return o.basis;
}

InvolutiveBasis monomialJanetBasis(const MonomialSet& gens, int nvars, const Limits& limits)
{
    auto order = TermOrder::make(OrderKind::DegRevLex, nvars);
    CompletionOutcome o = completeImpl(monomialElements(minimalGenerators(gens), order), DivisionKind::Janet,
                                       DivisionKind::Janet, order, unboundedFrom(limits), false);
    checkCap(o);
    return o.basis;
}

InvolutiveBasis colonBasis(const InvolutiveBasis& pommaretBasis, int k)
{
    const int n = pommaretBasis.nvars();
    if (k < 0 || k >= n) throw std::out_of_range("variable index out of range");
    std::vector<ModuleElement> gens;
    for (const auto& h : pommaretBasis.generators()) {
        int c = h.cls();
        if (c < k) continue;
        if (c == k) {
            ExponentVector e = h.leadExp();
            e[k] = 0;
            gens.push_back(ModuleElement::term(pommaretBasis.order(), h.rank(), Term{e, h.leadComp()}));
        } else {
            gens.push_back(h);
        }
    }
    gens = involutiveHeadAutoreduce(std::move(gens), DivisionKind::Pommaret, pommaretBasis.order());
    return InvolutiveBasis(std::move(gens), DivisionKind::Pommaret, pommaretBasis.order(), pommaretBasis.rank());
}

} // namespace invo
