#include "specs.hpp"

#include <fstream>
#include <sstream>

#include "wildmass/errors.hpp"
#include "wildmass/rep_zoo.hpp"

namespace wildmass::cli {

namespace {

using nlohmann::json;

std::string slurp_if_file(std::string const& spec)
{
    if (spec.empty() || spec[0] != '@')
        return spec;
    std::ifstream in(spec.substr(1));
    if (!in)
        throw domain_error("cannot read " + spec.substr(1));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json parse_json(std::string const& text, char const* what)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw domain_error(std::string("malformed ") + what + " specification");
    return j;
}

long parse_positive(std::string const& text, char const* what)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used != text.size() || v < 1)
        throw domain_error(std::string("bad ") + what + ": " + text);
    return v;
}

std::vector<Permutation> permutations_from_json(json const& list)
{
    if (!list.is_array() || list.empty())
        throw domain_error("expected a non-empty list of permutations");
    std::vector<Permutation> out;
    for (auto const& images : list) {
        try {
            out.push_back(Permutation::from_one_based(images.get<std::vector<int>>()));
        } catch (json::exception const&) {
            throw domain_error("a permutation must be a list of integers");
        }
    }
    return out;
}

}  // namespace

GroupModel parse_group_spec(std::string const& raw)
{
    std::string spec = slurp_if_file(raw);
    if (spec.rfind("Sn:", 0) == 0)
        return GroupModel::symmetric(static_cast<int>(parse_positive(spec.substr(3), "degree")));
    if (spec.rfind("Cyclic:", 0) == 0)
        return GroupModel::from_group(FiniteGroup::cyclic(static_cast<int>(parse_positive(spec.substr(7), "order"))));
    if (!spec.empty() && (spec[0] == '[' || spec[0] == '{')) {
        json j = parse_json(spec, "group");
        if (j.is_object())
            j = j.value("generators", json());
        return GroupModel::from_group(FiniteGroup(permutations_from_json(j)));
    }
    for (auto& z : small_group_zoo())
        if (z.name == spec)
            return z.model;
    throw domain_error("unknown group: " + spec);
}

TameRep rep_from_json(GroupModel const& model, json const& j)
{
    if (j.is_string())
        return parse_rep_spec(model, j.get<std::string>());
    if (!j.is_object() || !j.contains("kind"))
        throw domain_error("a representation needs a \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "permutation")
        return permutation_rep(model, permutations_from_json(j.value("images", json())));
    if (kind == "diagonal") {
        std::vector<std::vector<Rat>> chars;
        for (auto const& row : j.value("characters", json::array())) {
            std::vector<Rat> values;
            for (auto const& v : row)
                values.push_back(parse_rat(v.is_string() ? v.get<std::string>() : v.dump()));
            chars.push_back(std::move(values));
        }
        if (chars.empty())
            throw domain_error("diagonal representation without characters");
        return diagonal_rep(model, chars);
    }
    if (kind == "sum") {
        auto parts = j.value("parts", json::array());
        if (parts.empty())
            throw domain_error("empty direct sum");
        TameRep acc = rep_from_json(model, parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            acc = direct_sum(acc, rep_from_json(model, parts[i]));
        return acc;
    }
    if (kind == "dual")
        return dual(rep_from_json(model, j.value("of", json())));
    return parse_rep_spec(model, kind);
}

TameRep parse_rep_spec(GroupModel const& model, std::string const& raw)
{
    std::string spec = slurp_if_file(raw);
    if (spec == "sigma")
        return defining_rep(model);
    if (spec == "2sigma") {
        auto s = defining_rep(model);
        return direct_sum(s, s);
    }
    if (spec == "regular")
        return regular_rep(model);
    if (spec == "trivial")
        return trivial_rep(model, 1);
    if (spec == "sign")
        return sign_rep(model);
    if (!spec.empty() && spec[0] == '{')
        return rep_from_json(model, parse_json(spec, "representation"));
    throw domain_error("unknown representation: " + spec);
}

Partition parse_partition(std::string const& text)
{
    Partition pt;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        pt.parts.push_back(static_cast<int>(parse_positive(item, "part")));
    return pt;
}

}  // namespace wildmass::cli
