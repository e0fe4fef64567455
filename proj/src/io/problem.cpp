#include "invo/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace invo {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> splitList(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

bool validName(const std::string& v)
{
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) return false;
    return std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int parseInt(const std::string& s, int line, int col)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line, col);
    }
}

} // namespace

OrderPtr ProblemSpec::termOrder() const { return TermOrder::make(order, nvars()); }

ProblemSpec parseProblem(const std::string& text)
{
    ProblemSpec spec;
    spec.limits = Limits::fromEnvironment();
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    bool inGenerators = false;
    bool sawRing = false, sawGenerators = false;
    struct Pending {
        std::string text;
        int line;
        int column;
    };
    std::vector<Pending> pending;

    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = raw.substr(0, raw.find('#'));
        if (trim(line).empty()) continue;
        auto colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
        bool isKey = colon != std::string::npos && !key.empty() &&
                     std::all_of(key.begin(), key.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == ' '; });
        if (!isKey) {
            if (!inGenerators) throw ParseError("expected 'key: value'", lineNo, 1);
            auto first = line.find_first_not_of(" \t");
            pending.push_back({trim(line), lineNo, static_cast<int>(first)});
            continue;
        }
        inGenerators = false;
        std::string value = trim(line.substr(colon + 1));
        int vcol = static_cast<int>(line.find_first_not_of(" \t", colon + 1)) + 1;
        if (key == "ring") {
            spec.vars = splitList(value);
            std::set<std::string> seen;
            for (const auto& v : spec.vars) {
                if (!validName(v)) throw ParseError("invalid variable name '" + v + "'", lineNo, vcol);
                if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'", lineNo, vcol);
            }
            if (spec.vars.empty()) throw ParseError("no variables", lineNo, vcol);
            sawRing = true;
        } else if (key == "order") {
            try {
                spec.order = parseOrderKind(value);
            } catch (const std::exception&) {
                throw ParseError("unknown order '" + value + "'", lineNo, vcol);
            }
        } else if (key == "division") {
            try {
                spec.division = parseDivisionKind(value);
            } catch (const std::exception&) {
                throw ParseError("unknown division '" + value + "'", lineNo, vcol);
            }
        } else if (key == "analyses") {
            spec.analyses = splitList(value);
            for (const auto& a : spec.analyses)
                if (std::find(commandNames().begin(), commandNames().end(), a) == commandNames().end())
                    throw ParseError("unknown analysis '" + a + "'", lineNo, vcol);
        } else if (key == "degcap") {
            spec.limits.degCap = parseInt(value, lineNo, vcol);
        } else if (key == "itercap") {
            spec.limits.iterCap = parseInt(value, lineNo, vcol);
        } else if (key == "seed") {
            try {
                std::size_t used = 0;
                if (value.empty() || value[0] == '-') throw std::invalid_argument(value);
                spec.limits.seed = std::stoull(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw ParseError("expected a seed, got '" + value + "'", lineNo, vcol);
            }
        } else if (key == "ideal") {
            spec.rank = 1;
            spec.module = false;
            inGenerators = sawGenerators = true;
            if (!value.empty()) pending.push_back({value, lineNo, vcol - 1});
        } else if (key.rfind("module rank", 0) == 0) {
            spec.rank = parseInt(trim(key.substr(11)), lineNo, 13);
            if (spec.rank < 1) throw ParseError("module rank must be positive", lineNo, 13);
            spec.module = true;
            inGenerators = sawGenerators = true;
            if (!value.empty()) pending.push_back({value, lineNo, vcol - 1});
        } else {
            throw ParseError("unknown key '" + key + "'", lineNo, 1);
        }
    }
    if (!sawRing) throw ParseError("missing 'ring:' line", lineNo, 1);
    if (!sawGenerators) throw ParseError("missing 'ideal:' or 'module rank m:' section", lineNo, 1);

    OrderPtr order = spec.termOrder();
    for (const auto& p : pending) {
        ModuleElement f = parseElement(p.text, spec.vars, order, spec.module ? spec.rank : 1, p.line, p.column);
        if (f.isZero()) {
            spec.warnings.push_back("line " + std::to_string(p.line) + ": zero generator ignored");
            continue;
        }
        spec.generators.push_back(std::move(f));
    }
    return spec;
}

std::string emitProblem(const ProblemSpec& spec)
{
    std::ostringstream out;
    out << "ring: ";
    for (std::size_t i = 0; i < spec.vars.size(); ++i) out << (i ? ", " : "") << spec.vars[i];
    out << "\norder: " << orderName(spec.order) << "\n";
    if (spec.division) out << "division: " << divisionName(*spec.division) << "\n";
    if (!spec.analyses.empty()) {
        out << "analyses: ";
        for (std::size_t i = 0; i < spec.analyses.size(); ++i) out << (i ? ", " : "") << spec.analyses[i];
        out << "\n";
    }
    if (spec.limits.degCap >= 0) out << "degcap: " << spec.limits.degCap << "\n";
    if (spec.limits.iterCap >= 0) out << "itercap: " << spec.limits.iterCap << "\n";
    out << "seed: " << spec.limits.seed << "\n";
    if (spec.module)
        out << "module rank " << spec.rank << ":\n";
    else
        out << "ideal:\n";
    for (const auto& g : spec.generators) out << "  " << polyStr(g, spec.vars) << "\n";
    return out.str();
}

} // namespace invo
