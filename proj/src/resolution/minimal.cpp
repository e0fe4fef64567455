#include "invo/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace invo {

int BettiTable::at(int i, int j) const
{
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const
{
    int r = -1;
    for (const auto& [pos, v] : entries)
        if (v > 0) r = std::max(r, pos.second);
    return r;
}

std::vector<std::pair<int, int>> BettiTable::extremal() const
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [pos, v] : entries) {
        if (v <= 0) continue;
        bool corner = true;
        for (const auto& [q, w] : entries)
            if (w > 0 && q != pos && q.first >= pos.first && q.second >= pos.second) corner = false;
        if (corner) out.push_back(pos);
    }
    return out;
}

BettiTable bettiTable(const FreeResolution& res)
{
    BettiTable b;
    for (int i = 0; i <= res.length(); ++i)
        for (int d : res.levels[static_cast<std::size_t>(i)].degrees) ++b.entries[{i, d - i}];
    return b;
}

std::vector<std::pair<std::pair<int, int>, int>> extremalBettiFromBasis(const InvolutiveBasis& H)
{
    if (!H.isHomogeneous()) throw std::invalid_argument("extremal Betti numbers need a homogeneous basis");
    int n = H.nvars();
    std::vector<std::pair<std::pair<int, int>, int>> out;
    int limit = n + 1; // 1-based classes strictly below this
    while (true) {
        int q = -1;
        for (const auto& h : H.generators())
            if (h.leadExp().cls() + 1 < limit) q = std::max(q, h.degree());
        if (q < 0) break;
        int c = limit;
        for (const auto& h : H.generators())
            if (h.leadExp().cls() + 1 < limit && h.degree() == q) c = std::min(c, h.leadExp().cls() + 1);
        int count = 0;
        for (const auto& h : H.generators())
            if (h.leadExp().cls() + 1 == c && h.degree() == q) ++count;
        out.push_back({{n - c, q}, count});
        limit = c;
    }
    return out;
}

int projectiveDimension(const InvolutiveBasis& H)
{
    if (H.empty()) return 0;
    int d = H.nvars();
    for (const auto& h : H.generators()) d = std::min(d, h.leadExp().cls() + 1);
    return H.nvars() - d;
}

namespace {

bool isUnitEntry(const Poly& p) { return !p.isZero() && p.leadExp().degree() == 0; }

} // namespace

MinimizationResult minimize(const FreeResolution& res)
{
    MinimizationResult out;
    out.resolution = res;
    if (!res.graded) {
        out.skipped = true;
        out.notice = "inhomogeneous input: minimisation skipped, ranks only";
        out.betti = bettiTable(res);
        return out;
    }
    FreeResolution& R = out.resolution;
    auto& levels = R.levels;

    for (int i = R.length(); i >= 1; --i) {
        while (true) {
            auto& cur = levels[static_cast<std::size_t>(i)];
            auto& prev = levels[static_cast<std::size_t>(i - 1)];
            int pr = -1, pc = -1;
            for (int c = 0; c < cur.rank(); ++c) {
                for (int r = 0; r < prev.rank(); ++r) {
                    if (!isUnitEntry(cur.differential[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)])) continue;
                    bool better = pr < 0 || prev.degrees[static_cast<std::size_t>(r)] < prev.degrees[static_cast<std::size_t>(pr)] ||
                                  (prev.degrees[static_cast<std::size_t>(r)] == prev.degrees[static_cast<std::size_t>(pr)] &&
                                   (r < pr || (r == pr && c < pc)));
                    if (better) {
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (pr < 0) break;
            out.changed = true;
            auto ur = static_cast<std::size_t>(pr);
            auto uc = static_cast<std::size_t>(pc);
            const std::vector<Poly> pivotCol = cur.differential[uc];
            Rational a = pivotCol[ur].leadCoef();
            for (std::size_t c = 0; c < cur.differential.size(); ++c) {
                if (c == uc) continue;
                Poly f = cur.differential[c][ur];
                if (f.isZero()) continue;
                f = f.scaled(1 / a);
                for (std::size_t r = 0; r < pivotCol.size(); ++r)
                    if (!pivotCol[r].isZero()) cur.differential[c][r] -= multiply(f, pivotCol[r]);
            }
            cur.labels.erase(cur.labels.begin() + pc);
            cur.degrees.erase(cur.degrees.begin() + pc);
            cur.differential.erase(cur.differential.begin() + pc);
            for (auto& col : cur.differential) col.erase(col.begin() + pr);
            prev.labels.erase(prev.labels.begin() + pr);
            prev.degrees.erase(prev.degrees.begin() + pr);
            if (i - 1 >= 1)
                prev.differential.erase(prev.differential.begin() + pr);
            else
                R.augmentation.erase(R.augmentation.begin() + pr);
            if (i + 1 <= R.length())
                for (auto& col : levels[static_cast<std::size_t>(i + 1)].differential) col.erase(col.begin() + pc);
        }
    }
    while (levels.size() > 1 && levels.back().rank() == 0) levels.pop_back();
    R.minimal = true;
    out.betti = bettiTable(R);

    if (!res.syzygyBases.empty()) {
        const InvolutiveBasis& H = res.syzygyBases.front();
        if (H.isMonomial()) {
            bool stable = stability(H.leadTerms(), H.nvars()).stable;
            if (out.changed == stable) throw std::logic_error("minimisation disagrees with stability");
        }
        if (H.isMonomial() || H.ringOrder()->classRespecting()) {
            out.extremalFromBasis = extremalBettiFromBasis(H);
            std::vector<std::pair<std::pair<int, int>, int>> fromTable;
            for (auto pos : out.betti.extremal()) fromTable.push_back({pos, out.betti.at(pos.first, pos.second)});
            auto sorted = out.extremalFromBasis;
            std::sort(sorted.begin(), sorted.end());
            std::sort(fromTable.begin(), fromTable.end());
            if (sorted != fromTable) throw std::logic_error("extremal Betti numbers disagree with the Pommaret basis");
        }
    }
    R.syzygyBases.clear();
    return out;
}

} // namespace invo
