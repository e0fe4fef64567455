// involute: command line driver for involutive bases and their invariants.
//
//   involute <command> [options] problem-file...
//
// A file name "-" reads the problem from standard input.  Several files are
// processed as independent jobs; their reports are printed in input order.

#include "invo/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

namespace {

struct Job {
    std::string output;
    int code = 0;
    std::optional<invo::Json> json;
};

std::string readAll(const std::string& path)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

Job runFile(const std::string& command, const std::string& path, const std::string& text, const invo::RunOptions& opts,
            bool json)
{
    Job job;
    try {
        invo::ProblemSpec spec = invo::parseProblem(text);
        invo::Report report = invo::run(command, std::move(spec), opts);
        job.code = static_cast<int>(report.exitCode());
        if (json)
            job.json = invo::toJson(report);
        else
            job.output = invo::emitText(report);
        if (report.status == "error")
            for (const auto& n : report.notices) std::cerr << path << ": " << n << "\n";
    } catch (const invo::ParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        job.code = static_cast<int>(invo::ExitCode::InputError);
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        job.code = static_cast<int>(invo::ExitCode::InputError);
    }
    return job;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Involutive bases, resolutions and invariants over Q"};
    app.require_subcommand(1);

    std::string division, order, format = "json";
    std::optional<int> degcap, itercap;
    std::optional<std::uint64_t> seed;
    bool timing = false;
    std::vector<std::string> files;

    app.add_option("--division", division, "pommaret, janet or thomas")
        ->check(CLI::IsMember({"pommaret", "janet", "thomas"}));
    app.add_option("--order", order, "lex, deglex or degrevlex")->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
    app.add_option("--degcap", degcap, "cap on the degree of adjoined leading terms (env INVO_DEGCAP)");
    app.add_option("--itercap", itercap, "cap on completion steps (env INVO_ITERCAP)");
    app.add_option("--seed", seed, "seed of the coordinate search (env INVO_SEED)");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timing", timing, "add wall-clock time to the report");
    app.fallthrough();

    const std::map<std::string, std::string> help{
        {"complete", "involutive completion (default division: pommaret)"},
        {"delta-check", "is the Janet basis free of delta-singularity witnesses?"},
        {"regular-coords", "search for coordinates with a finite Pommaret basis"},
        {"analyze", "dimension, depth, pd, regularity, Cohen-Macaulay test, Hilbert series"},
        {"decompose", "Janet, Pommaret and Rees decompositions of the leading ideal"},
        {"standard-pairs", "standard pairs, irreducible components, associated primes"},
        {"primary", "primary decomposition of a quasi-stable monomial ideal"},
        {"resolve", "free resolution from the Pommaret basis"},
        {"betti", "minimised resolution: graded Betti numbers and extremal ones"},
        {"regularity", "Castelnuovo-Mumford regularity"},
        {"saturate", "saturation and satiety"},
        {"trung", "Trung's invariants c_j"},
    };
    for (const auto& name : invo::commandNames()) {
        auto it = help.find(name);
        auto* sub = app.add_subcommand(name, it == help.end() ? "" : it->second);
        sub->add_option("files", files, "problem files")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    std::string command = app.get_subcommands().front()->get_name();

    invo::RunOptions opts;
    if (!division.empty()) opts.division = invo::parseDivisionKind(division);
    if (!order.empty()) opts.order = invo::parseOrderKind(order);
    opts.degCap = degcap;
    opts.iterCap = itercap;
    opts.seed = seed;
    opts.timing = timing;
    bool json = format == "json";

    std::vector<std::string> texts;
    for (const auto& f : files) {
        try {
            texts.push_back(readAll(f));
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
    }
    std::vector<std::future<Job>> jobs;
    for (std::size_t i = 0; i < files.size(); ++i)
        jobs.push_back(std::async(std::launch::async, runFile, command, files[i], texts[i], opts, json));

    int code = 0;
    invo::Json all = invo::Json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        Job job = jobs[i].get();
        code = std::max(code, job.code);
        if (json && job.json) {
            all.push_back(*job.json);
        } else if (!json) {
            if (files.size() > 1) std::cout << "== " << files[i] << "\n";
            std::cout << job.output;
        }
    }
    if (json) {
        if (files.size() == 1 && !all.empty())
            std::cout << all.front().dump(2) << "\n";
        else if (files.size() > 1)
            std::cout << all.dump(2) << "\n";
    }
    return code;
}
