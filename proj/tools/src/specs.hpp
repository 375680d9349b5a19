#pragma once

// Textual group and representation specifications accepted on the command
// line.
//
//   group: Sn:N | Cyclic:L | a zoo name (S3, D4, Q8, ...) | JSON | @file
//     JSON is a list of generators, each a list of 1-based images, or an
//     object {"generators": [...]}.
//   rep:   sigma | 2sigma | regular | trivial | sign | JSON | @file
//     JSON kinds: {"kind": "permutation", "images": [[...], ...]},
//     {"kind": "diagonal", "characters": [["1/3", ...], ...]},
//     {"kind": "sum", "parts": [...]}, {"kind": "dual", "of": ...},
//     and the named reps as {"kind": "sigma"} etc.

#include <string>

#include <json.hpp>

#include "wildmass/reps.hpp"

namespace wildmass::cli {

GroupModel parse_group_spec(std::string const& spec);
TameRep parse_rep_spec(GroupModel const& model, std::string const& spec);
TameRep rep_from_json(GroupModel const& model, nlohmann::json const& j);

/* "2,1,1" */
Partition parse_partition(std::string const& text);

}  // namespace wildmass::cli
