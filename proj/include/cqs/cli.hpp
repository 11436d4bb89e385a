#pragma once

// Request/report plumbing shared by the command-line tool and its tests.
// The implementation lives in src/cli.cpp (library cqs_report).

#include <string>
#include <vector>

#include "cfrac.hpp"

namespace cqs::cli {

enum ExitCode : int { ok = 0, invalid_input = 2, inconsistent = 3, unsupported = 4 };

struct RunRequest {
    std::string subcommand;
    Int n = 0;
    Int q = 0;
    std::string format = "json";  // json, text or dot
    Int min_n = 2;                // batch range
    Int max_n = 0;
};

struct RunResult {
    int exit_code = ok;
    std::string output;  // the report, or empty on failure
    std::string error;   // one-line diagnostic
};

const std::vector<std::string>& subcommands();

// Never throws; failures are mapped onto exit codes.
RunResult run(const RunRequest& req);

} // namespace cqs::cli
