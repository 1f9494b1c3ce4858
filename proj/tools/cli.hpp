#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "xlap/verify.hpp"

namespace xlap::cli {

enum Exit { ok = 0, failed = 1, config_error = 2, eval_error = 3 };

struct GridSpec {
    verify::Grid grid;
    std::string text;  // as given, echoed in the report
    bool operator==(const GridSpec&) const;
};

struct RunConfig {
    std::string command;
    std::string fn;
    verify::FnParams params;
    std::optional<GridSpec> grid;
    std::vector<cplx> points;
    std::string suite = "all";
    std::optional<double> tol;
    std::optional<int> samples;
    std::string kind;
    double x = 5.0;
    std::string precision = "standard";
    std::int64_t sieve_bound = 1000000;
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "json";
    int jobs = 1;
    bool timing = false;
    // set only when the flag was given; identity runners keep their own defaults otherwise
    bool beta_set = false, w_set = false, p_set = false;
    bool operator==(const RunConfig&) const;
};

// "start:stop:count" or "log:start:stop:count"; start/stop accept "pi".
GridSpec parse_grid(const std::string& text);
// "1.5", "-2i", "0.25+0.1i", "1-3e-2i"
cplx parse_complex(const std::string& text);

nlohmann::json to_json(const RunConfig& c);
RunConfig config_from_json(const nlohmann::json& j);

// Runs a parsed config. Data go to c.out (stdout when empty), diagnostics to err.
int run(const RunConfig& c, std::ostream& out, std::ostream& err);
// Parses argv and runs; parse errors give exit code 2.
int main_args(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace xlap::cli
