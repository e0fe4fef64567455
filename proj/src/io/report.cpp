#include "invo/io.hpp"

#include <sstream>
#include <stdexcept>

namespace invo {

namespace {

Json problemJson(const ProblemSpec& p)
{
    Json j;
    j["ring"] = p.vars;
    j["order"] = orderName(p.order);
    j["rank"] = p.rank;
    j["module"] = p.module;
    j["division"] = p.division ? Json(divisionName(*p.division)) : Json(nullptr);
    Json gens = Json::array();
    for (const auto& g : p.generators) gens.push_back(polyStr(g, p.vars));
    j["generators"] = gens;
    j["analyses"] = p.analyses;
    Json limits;
    limits["degcap"] = p.limits.degCap;
    limits["itercap"] = p.limits.iterCap;
    limits["seed"] = p.limits.seed;
    j["limits"] = limits;
    j["warnings"] = p.warnings;
    return j;
}

ProblemSpec problemFromJson(const Json& j)
{
    ProblemSpec p;
    p.vars = j.at("ring").get<std::vector<std::string>>();
    p.order = parseOrderKind(j.at("order").get<std::string>());
    p.rank = j.at("rank").get<int>();
    p.module = j.at("module").get<bool>();
    if (!j.at("division").is_null()) p.division = parseDivisionKind(j.at("division").get<std::string>());
    OrderPtr o = p.termOrder();
    int line = 0;
    for (const auto& g : j.at("generators")) p.generators.push_back(parseElement(g.get<std::string>(), p.vars, o, p.rank, ++line));
    p.analyses = j.at("analyses").get<std::vector<std::string>>();
    const Json& l = j.at("limits");
    p.limits.degCap = l.at("degcap").get<int>();
    p.limits.iterCap = l.at("itercap").get<int>();
    p.limits.seed = l.at("seed").get<std::uint64_t>();
    p.warnings = j.at("warnings").get<std::vector<std::string>>();
    return p;
}

std::string scalar(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

bool isScalarArray(const Json& v)
{
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_object() || (e.is_array() && !isScalarArray(e))) return false;
    return true;
}

std::string inlineArray(const Json& v)
{
    std::string s = "[";
    bool first = true;
    for (const auto& e : v) {
        s += first ? "" : ", ";
        s += e.is_array() ? inlineArray(e) : scalar(e);
        first = false;
    }
    return s + "]";
}

void renderBasis(std::ostream& out, const Json& b, const std::string& indent)
{
    out << indent << b.value("division", "") << " basis, " << b.value("size", 0) << " elements, degree "
        << b.value("degree", 0) << "\n";
    const Json& gens = b.at("generators");
    std::size_t width = 9;
    for (const auto& g : gens) width = std::max(width, g.get<std::string>().size());
    out << indent << "  " << "generator" << std::string(width - 9 + 2, ' ') << "class  multiplicative\n";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string g = gens[i].get<std::string>();
        std::string cls = b.contains("classes") ? scalar(b["classes"][i]) : "";
        out << indent << "  " << g << std::string(width - g.size() + 2, ' ') << cls
            << std::string(cls.size() < 7 ? 7 - cls.size() : 1, ' ') << inlineArray(b["multiplicative"][i]) << "\n";
    }
}

void renderBetti(std::ostream& out, const Json& b, const std::string& indent)
{
    int maxI = 0, maxJ = 0, minJ = 1 << 30;
    for (const auto& e : b.at("entries")) {
        maxI = std::max(maxI, e[0].get<int>());
        maxJ = std::max(maxJ, e[1].get<int>());
        minJ = std::min(minJ, e[1].get<int>());
    }
    out << indent << "Betti table (row j, column i: beta_{i,i+j})\n" << indent << "      ";
    for (int i = 0; i <= maxI; ++i) out << std::string(6 - std::to_string(i).size(), ' ') << i;
    out << "\n";
    for (int j = minJ; j <= maxJ && minJ <= maxJ; ++j) {
        out << indent << std::string(4 - std::min<std::size_t>(4, std::to_string(j).size()), ' ') << j << ": ";
        for (int i = 0; i <= maxI; ++i) {
            std::string v = "-";
            for (const auto& e : b.at("entries"))
                if (e[0].get<int>() == i && e[1].get<int>() == j) v = std::to_string(e[2].get<int>());
            out << std::string(6 - v.size(), ' ') << v;
        }
        out << "\n";
    }
    out << indent << "extremal: " << inlineArray(b.at("extremal")) << "\n";
    out << indent << "regularity: " << scalar(b.at("regularity")) << "\n";
}

void render(std::ostream& out, const Json& v, const std::string& indent)
{
    for (auto it = v.begin(); it != v.end(); ++it) {
        const Json& x = it.value();
        const std::string& k = it.key();
        if (x.is_object() && x.contains("generators") && x.contains("multiplicative")) {
            out << indent << k << ":\n";
            renderBasis(out, x, indent + "  ");
        } else if (k == "betti" && x.is_object()) {
            renderBetti(out, x, indent);
        } else if (x.is_object()) {
            out << indent << k << ":\n";
            render(out, x, indent + "  ");
        } else if (x.is_array() && !isScalarArray(x)) {
            out << indent << k << ":\n";
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i].is_object()) {
                    out << indent << "  [" << i << "]\n";
                    render(out, x[i], indent + "    ");
                } else {
                    out << indent << "  " << (x[i].is_array() ? inlineArray(x[i]) : scalar(x[i])) << "\n";
                }
            }
        } else if (x.is_array()) {
            out << indent << k << ": " << inlineArray(x) << "\n";
        } else {
            out << indent << k << ": " << scalar(x) << "\n";
        }
    }
}

} // namespace

Json toJson(const Report& r)
{
    Json j;
    j["schema"] = r.schema;
    j["command"] = r.command;
    j["problem"] = problemJson(r.problem);
    j["status"] = r.status;
    j["exit_code"] = static_cast<int>(r.exitCode());
    j["notices"] = r.notices;
    j["results"] = r.results;
    if (r.timingMs) j["timing_ms"] = *r.timingMs;
    return j;
}

Report reportFromJson(const Json& j)
{
    if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported report schema");
    Report r;
    r.command = j.at("command").get<std::string>();
    r.problem = problemFromJson(j.at("problem"));
    r.status = j.at("status").get<std::string>();
    r.notices = j.at("notices").get<std::vector<std::string>>();
    r.results = j.at("results");
    if (j.contains("timing_ms")) r.timingMs = j.at("timing_ms").get<long long>();
    return r;
}

std::string emitJson(const Report& r) { return toJson(r).dump(2) + "\n"; }

std::string emitText(const Report& r)
{
    std::ostringstream out;
    const ProblemSpec& p = r.problem;
    out << "command: " << r.command << "\n";
    out << "ring: ";
    for (std::size_t i = 0; i < p.vars.size(); ++i) out << (i ? ", " : "") << p.vars[i];
    out << "  (x_1 = " << p.vars.front() << " is the smallest variable)\n";
    out << "order: " << orderName(p.order) << "\n";
    if (p.module) out << "module rank " << p.rank << "\n";
    out << "generators:\n";
    for (const auto& g : p.generators) out << "  " << polyStr(g, p.vars) << "\n";
    out << "seed: " << p.limits.seed << "\n";
    out << "status: " << r.status << "\n";
    for (const auto& n : r.notices) out << "note: " << n << "\n";
    render(out, r.results, "");
    if (r.timingMs) out << "time: " << *r.timingMs << " ms\n";
    return out.str();
}

} // namespace invo
