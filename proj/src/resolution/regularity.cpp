#include "invo/resolution.hpp"
#include "invo/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace invo {

namespace {

bool allHomogeneous(const std::vector<Poly>& gens)
{
    return std::all_of(gens.begin(), gens.end(), [](const Poly& g) { return g.isHomogeneous(); });
}

} // namespace

RegularityResult castelnuovoMumford(const std::vector<Poly>& gens, const OrderPtr& order, const Limits& limits)
{
    if (order->kind() != OrderKind::DegRevLex || order->isSchreyer())
        throw std::invalid_argument("regularity is read off a degrevlex Pommaret basis");
    RegularCoordinates rc = findDeltaRegularCoordinates(gens, order, limits);
    RegularityResult r;
    r.basis = rc.basis;
    r.change = rc.change;
    r.leadingIdealOnly = !allHomogeneous(gens);
    int n = order->nvars();
    if (r.leadingIdealOnly) {
        r.notice = "inhomogeneous input: regularity of the leading ideal";
        for (const auto& h : r.basis.generators()) r.regularity = std::max(r.regularity, h.leadExp().degree());
        return r;
    }
    r.regularity = std::max(0, r.basis.degree());
    std::set<std::pair<int, int>> pos;
    for (const auto& h : r.basis.generators())
        if (h.degree() == r.regularity) pos.insert({n - 1 - h.leadExp().cls(), r.regularity});
    r.positions.assign(pos.begin(), pos.end());
    return r;
}

bool bayerStillmanCheck(const std::vector<Poly>& gens, int q, const std::vector<Poly>& forms,
                        std::optional<int> knownRegularity)
{
    if (gens.empty() && forms.empty()) throw std::invalid_argument("no polynomials given");
    const OrderPtr& order = gens.empty() ? forms.front().order() : gens.front().order();
    int n = order->nvars();
    if (!allHomogeneous(gens)) throw std::invalid_argument("the criterion needs homogeneous generators");
    for (const auto& y : forms)
        if (y.isZero() || !y.isHomogeneous() || y.degree() != 1) throw std::invalid_argument("forms must be linear");
    for (const auto& g : gens)
        if (g.degree() > q) return false;

    DegreeSpace Pq(n, q), Pq1(n, q + 1);
    std::vector<Poly> J = gens;
    bool ok = true;
    for (const auto& y : forms) {
        EchelonBasis Jq = idealDegreePart(J, Pq);
        EchelonBasis Jq1 = idealDegreePart(J, Pq1);
        // (J : y)_q is the kernel of f -> y f mod J_{q+1}
        EchelonBasis images;
        for (const auto& m : Pq.monomials())
            images.insert(Jq1.reduce(Pq1.coords(multiply(y, ModuleElement::term(order, 1, Term{m, 0})))));
        if (Pq.dim() - images.rank() != Jq.rank()) {
            ok = false;
            break;
        }
        J.push_back(y);
    }
    if (ok) ok = idealDegreePart(J, Pq).rank() == Pq.dim();
    if (ok && knownRegularity && *knownRegularity > q)
        throw std::logic_error("criterion holds above the known regularity");
    return ok;
}

InvolutiveBasis truncatedBasis(const InvolutiveBasis& H, int q)
{
    if (H.division() != DivisionKind::Pommaret) throw std::invalid_argument("a Pommaret basis is required");
    if (!H.isHomogeneous()) throw std::invalid_argument("truncation needs a homogeneous basis");
    if (q < H.degree()) throw std::invalid_argument("truncation degree below the basis degree");
    std::vector<ModuleElement> out;
    for (const auto& h : H.generators()) {
        int c = h.leadExp().cls();
        int n = H.nvars();
        for (const auto& mu : monomialsOfDegree(c + 1, q - h.degree())) {
            ExponentVector e(n);
            for (int i = 0; i <= c; ++i) e[i] = mu[i];
            out.push_back(h.shifted(1, e));
        }
    }
    return InvolutiveBasis(std::move(out), DivisionKind::Pommaret, H.order(), H.rank());
}

LinearResolutionResult linearResolutionCheck(const std::vector<Poly>& gens, int q, const OrderPtr& order,
                                             const Limits& limits)
{
    if (!allHomogeneous(gens)) throw std::invalid_argument("linear resolutions need homogeneous input");
    RegularityResult reg = castelnuovoMumford(gens, order, limits);
    LinearResolutionResult r;
    r.regularity = reg.regularity;
    const InvolutiveBasis& H = reg.basis;
    InvolutiveBasis T;
    if (q >= H.degree()) {
        T = truncatedBasis(H, q);
    } else {
        // generators of I_{>=q}: degree-q multiples of low generators and the rest
        std::vector<ModuleElement> g;
        int n = H.nvars();
        for (const auto& h : H.generators()) {
            if (h.degree() >= q) {
                g.push_back(h);
                continue;
            }
            for (const auto& m : monomialsOfDegree(n, q - h.degree())) g.push_back(h.shifted(1, m));
        }
        auto out = complete(g, DivisionKind::Pommaret, H.order(), limits);
        if (out.status != CompletionStatus::Basis) throw LimitExceeded("completion of the truncated ideal did not finish");
        T = out.basis;
    }
    r.resolution = freeResolution(T);
    r.linear = true;
    for (const auto& h : T.generators())
        if (h.degree() != q) r.linear = false;
    for (int i = 1; i <= r.resolution.length(); ++i)
        for (const auto& col : r.resolution.levels[static_cast<std::size_t>(i)].differential)
            for (const auto& p : col)
                if (!p.isZero() && (!p.isHomogeneous() || p.degree() != 1)) r.linear = false;
    if (r.linear != (q >= r.regularity)) throw std::logic_error("linearity of the truncation disagrees with the regularity");
    return r;
}

} // namespace invo
