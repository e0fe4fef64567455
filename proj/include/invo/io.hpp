#pragma once

#include "invo/completion.hpp"
#include "invo/parse.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace invo {

using Json = nlohmann::ordered_json;

// Contents of a problem file.  Variables are listed from smallest to
// largest: the first name is x_1.
struct ProblemSpec {
    std::vector<std::string> vars;
    OrderKind order = OrderKind::DegRevLex;
    int rank = 1;
    bool module = false; // written as "module rank m:"
    std::vector<ModuleElement> generators;
    std::vector<std::string> analyses;
    std::optional<DivisionKind> division;
    Limits limits;
    std::vector<std::string> warnings;

    int nvars() const { return static_cast<int>(vars.size()); }
    OrderPtr termOrder() const;
};

// Format, one key per line, '#' starts a comment:
//   ring: x, y, z
//   order: degrevlex
//   ideal:              (or: module rank 2:)
//     <one generator per line>
// Optional keys: division, analyses, degcap, itercap, seed.
// Limits start from the INVO_* environment variables.  Zero generators are
// dropped with a warning.
ProblemSpec parseProblem(const std::string& text);
std::string emitProblem(const ProblemSpec& spec);

enum class ExitCode { Ok = 0, InputError = 1, Diverged = 2, CapExceeded = 3 };

struct Report {
    int schema = 1;
    std::string command;
    ProblemSpec problem;
    std::string status = "ok"; // ok | diverged | cap-exceeded | error
    Json results = Json::object();
    std::vector<std::string> notices;
    std::optional<long long> timingMs; // only when requested; breaks byte equality

    ExitCode exitCode() const;
};

const std::vector<std::string>& commandNames();

struct RunOptions {
    std::optional<DivisionKind> division;
    std::optional<OrderKind> order;
    std::optional<int> degCap;
    std::optional<int> iterCap;
    std::optional<std::uint64_t> seed;
    bool timing = false;
};

// Throws std::invalid_argument for an unknown command.
Report run(const std::string& command, ProblemSpec spec, const RunOptions& options = {});

Json toJson(const Report& r);
Report reportFromJson(const Json& j);
std::string emitJson(const Report& r);
std::string emitText(const Report& r);

} // namespace invo
