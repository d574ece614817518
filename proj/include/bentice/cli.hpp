#pragma once

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bentice::cli {

enum Exit { ok = 0, internal = 1, verification_failed = 2, input_error = 3, cap_exceeded = 4 };

struct RunConfig {
    std::string verb;
    std::string check;  // verify target
    std::string family;
    std::string lambda;
    std::string mu;
    std::string type;
    std::string scheme;
    std::string variant;
    std::string emit = "json";
    std::optional<int> n;
    int max_n = 0, max_cols = 0;
    int workers = 1;
    uint64_t seed = 1;
    nlohmann::json to_json() const;
};

// Parses argv-style arguments (without the program name), runs, writes the report to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bentice::cli
