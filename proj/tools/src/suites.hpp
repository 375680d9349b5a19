#pragma once

// Verification suites run by `verify --suite ...`.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wildmass/padic/etale.hpp"

namespace wildmass::cli {

struct CheckResult {
    std::string name;
    bool ok = false;
    nlohmann::json detail;
};

std::vector<CheckResult> tame_mckay_suite();
std::vector<CheckResult> wild_mass_suite(padic::EtaleOptions const& options);
/* randomized comparison properties, `cases` samples per property */
std::vector<CheckResult> comparisons_suite(std::uint64_t seed, int cases);

}  // namespace wildmass::cli
