#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wildmass::cli {

enum ExitCode { exit_ok = 0, exit_identity_failed = 1, exit_config_error = 2, exit_exhausted = 3 };

struct RunConfig {
    /* partitions | mass | mckay-check | duality | conductor | padic | verify */
    std::string command;
    /* padic: enumerate | serre-check | bhargava | per-partition | hilb */
    std::string subcommand;
    std::string group = "Sn:3";
    std::string rep = "sigma";
    std::string counting = "weight";
    int sign = +1;
    long q_class = 1;
    /* polynomial JSON for mckay-check; defaults to the Hilbert count for S_n */
    std::optional<std::string> expected;
    long p = 2;
    int n = 2;
    int e = 2;
    int f = 1;
    int j = 1;
    std::optional<int> parts;
    std::optional<std::string> filtration;
    std::optional<std::string> partition;
    std::string suite;
    std::uint64_t seed = 20240611;
    int cases = 200;
    std::optional<std::string> cache_dir;
    bool slow = false;
    unsigned threads = 0;
    /* json | table */
    std::string format = "json";
};

struct RunResult {
    int exit_code = exit_ok;
    nlohmann::json report;
};

RunResult run(RunConfig const& config);
std::string render(RunResult const& result, std::string const& format);

/* Parses arguments (CACHE_DIR from the environment unless --cache-dir is
 * given), runs, and prints the report.  Returns the exit status. */
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wildmass::cli
