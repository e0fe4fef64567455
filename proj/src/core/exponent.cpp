#include "invo/exponent.hpp"

namespace invo {

std::string ExponentVector::str() const
{
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string((*this)[i]);
    }
    return s + "]";
}

namespace {

void fill(int n, int pos, int left, ExponentVector& cur, std::vector<ExponentVector>& out)
{
    if (pos == n - 1) {
        cur[pos] = left;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int v = left; v >= 0; --v) {
        cur[pos] = v;
        fill(n, pos + 1, left - v, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<ExponentVector> monomialsOfDegree(int n, int d)
{
    std::vector<ExponentVector> out;
    if (n == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    ExponentVector cur(n);
    fill(n, 0, d, cur, out);
    return out;
}

} // namespace invo
