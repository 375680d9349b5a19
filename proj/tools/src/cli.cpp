#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "specs.hpp"
#include "suites.hpp"
#include "wildmass/errors.hpp"
#include "wildmass/masses.hpp"
#include "wildmass/padic/etale.hpp"
#include "wildmass/partitions.hpp"

namespace wildmass::cli {

namespace {

using nlohmann::json;

json poly_json(MassPoly const& m)
{
    return json::parse(m.to_json());
}

json partition_json(Partition const& pt)
{
    return json(pt.parts);
}

json identity_report(Rat const& lhs, Rat const& rhs, bool ok)
{
    return json{{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}, {"ok", ok}};
}

json algebra_json(padic::EtaleAlgebra const& alg)
{
    return json{{"label", alg.label},         {"a", alg.a},
                {"t", alg.t},                 {"w2sigma", alg.w2sigma},
                {"partition", partition_json(alg.partition)}, {"aut", alg.aut_count.get_str()}};
}

json extension_json(padic::LocalFieldExt const& x)
{
    return json{{"label", x.label}, {"d", x.d}, {"aut", x.aut_count}, {"coeffs", x.defining.coeffs},
                {"precision", x.precision}};
}

struct Context {
    RunConfig const& config;
    std::optional<padic::ExtensionCache> cache;
    padic::EtaleOptions etale;

    explicit Context(RunConfig const& c) : config(c)
    {
        if (c.cache_dir && !c.cache_dir->empty())
            cache.emplace(*c.cache_dir);
        etale.slow = c.slow;
        etale.enumeration.threads = c.threads;
        if (c.slow)
            etale.enumeration.budget = padic::slow_budget;
        etale.cache = cache ? &*cache : nullptr;
    }
};

RunResult finish(json report, bool ok)
{
    report["ok"] = ok;
    return {ok ? exit_ok : exit_identity_failed, std::move(report)};
}

RunResult cmd_partitions(Context const& ctx, json report)
{
    int n = ctx.config.n;
    if (n < 1)
        throw domain_error("n must be positive");
    json parts = json::array();
    for (auto const& pt : enumerate_partitions(n))
        parts.push_back(partition_json(pt));
    json into = json::array();
    for (int r = 1; r <= n; ++r)
        into.push_back({{"parts", r}, {"count", count_partitions_into_parts(n, r).get_str()}});
    report["n"] = n;
    if (ctx.config.parts) {
        int r = *ctx.config.parts;
        if (r < 0)
            throw domain_error("parts must be nonnegative");
        json only = json::array();
        for (auto const& pt : enumerate_partitions(n))
            if (pt.length() == r)
                only.push_back(partition_json(pt));
        report["parts"] = r;
        report["partitions"] = only;
        report["count"] = count_partitions_into_parts(n, r).get_str();
        return finish(std::move(report), true);
    }
    report["partitions"] = parts;
    report["count"] = partition_count(n).get_str();
    report["into_parts"] = into;
    report["bhargava_rhs"] = bhargava_rhs(n).to_string();
    report["hilbert_origin_count"] = hilbert_origin_count(n).to_string();
    return finish(std::move(report), true);
}

CountingChoice counting_choice(RunConfig const& c)
{
    if (c.sign != 1 && c.sign != -1)
        throw domain_error("sign must be +1 or -1");
    return {parse_counting(c.counting), c.sign};
}

json breakdown_json(std::vector<ClassContribution> const& classes)
{
    json out = json::array();
    for (auto const& cc : classes)
        out.push_back({{"class", cc.label}, {"value", to_string(cc.value)}});
    return out;
}

RunResult cmd_mass(Context const& ctx, json report)
{
    auto const& c = ctx.config;
    auto model = parse_group_spec(c.group);
    auto rep = parse_rep_spec(model, c.rep);
    auto choice = counting_choice(c);
    auto m = tame_mass(rep, choice, c.q_class);
    report["group"] = c.group;
    report["rep"] = c.rep;
    report["counting"] = to_string(choice.kind);
    report["sign"] = choice.sign;
    report["q_class"] = c.q_class;
    report["group_order"] = model.table->group_order().get_str();
    report["mass"] = m.to_string();
    report["mass_terms"] = poly_json(m);
    report["classes"] = breakdown_json(tame_mass_breakdown(rep, choice, c.q_class));
    return finish(std::move(report), true);
}

RunResult cmd_mckay(Context const& ctx, json report)
{
    auto const& c = ctx.config;
    auto model = parse_group_spec(c.group);
    auto rep = parse_rep_spec(model, c.rep);
    MassPoly expected;
    if (c.expected) {
        expected = MassPoly::from_json(*c.expected);
    } else if (c.group.rfind("Sn:", 0) == 0 && c.rep == "2sigma") {
        expected = hilbert_origin_count(model.table->permutation_degree());
    } else {
        throw domain_error("--expected is required unless the group is Sn:N with rep 2sigma");
    }
    auto r = mckay_tame_check(rep, c.q_class, expected);
    report["group"] = c.group;
    report["rep"] = c.rep;
    report["q_class"] = c.q_class;
    report["computed"] = r.computed.to_string();
    report["expected"] = r.expected.to_string();
    report["difference"] = r.difference.to_string();
    report["classes"] = breakdown_json(r.classes);
    return finish(std::move(report), r.ok);
}

RunResult cmd_duality(Context const& ctx, json report)
{
    int n = ctx.config.n;
    if (n < 1)
        throw domain_error("n must be positive");
    auto h = hilbert_origin_count(n);
    auto b = bhargava_rhs(n);
    bool ok = duality_check(h, b);
    report["n"] = n;
    report["hilbert_origin_count"] = h.to_string();
    report["bhargava_rhs"] = b.to_string();
    report["inverted"] = h.invert_q().to_string();
    if (n <= 8) {
        auto sigma = defining_rep(GroupModel::symmetric(n));
        auto w = tame_mass(direct_sum(sigma, sigma), {Counting::weight, +1}, 1);
        auto a = tame_mass(sigma, {Counting::artin, -1}, 1);
        bool masses_ok = duality_check(w, a);
        report["mass_weight_2sigma"] = w.to_string();
        report["mass_artin_sigma"] = a.to_string();
        report["masses_ok"] = masses_ok;
        ok = ok && masses_ok;
    }
    return finish(std::move(report), ok);
}

RunResult cmd_conductor(Context const& ctx, json report)
{
    auto const& c = ctx.config;
    if (c.filtration) {
        json j = json::parse(*c.filtration, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw domain_error("filtration must be a JSON array of [ram_index, codim] pairs");
        std::vector<RamStep> steps;
        for (auto const& step : j) {
            if (!step.is_array() || step.size() != 2 || !step[0].is_number_integer() || !step[1].is_number_integer())
                throw domain_error("filtration must be a JSON array of [ram_index, codim] pairs");
            steps.push_back({step[0].get<long>(), step[1].get<int>()});
        }
        auto cond = conductors_from_filtration(RamFiltration(c.n, steps));
        report["n"] = c.n;
        report["artin"] = to_string(cond.artin);
        report["swan"] = to_string(cond.swan);
        report["tame"] = cond.tame;
        return finish(std::move(report), true);
    }
    auto inv = wild_cyclic_jordan(c.n, static_cast<int>(c.p), c.j);
    report["p"] = c.p;
    report["n"] = c.n;
    report["j"] = c.j;
    report["artin"] = inv.artin;
    report["tame"] = inv.tame;
    report["swan"] = inv.artin - inv.tame;
    report["weight"] = inv.weight;
    if (inv.doubled) {
        report["two_t_minus_a"] = inv.doubled->first;
        report["weight_doubled"] = inv.doubled->second;
    }
    return finish(std::move(report), true);
}

RunResult cmd_padic(Context const& ctx, json report)
{
    using namespace padic;
    auto const& c = ctx.config;
    report["subcommand"] = c.subcommand;
    report["p"] = c.p;
    if (c.subcommand == "enumerate" || c.subcommand == "serre-check") {
        auto opts = ctx.etale.enumeration;
        auto exts = enumerate_extensions_cached(c.p, c.f, c.e, opts, ctx.etale.cache);
        report["f"] = c.f;
        report["e"] = c.e;
        json list = json::array();
        for (auto const& x : exts)
            list.push_back(extension_json(x));
        report["extensions"] = list;
        report["count"] = exts.size();
        if (c.subcommand == "enumerate")
            return finish(std::move(report), true);
        auto chk = serre_mass_check(exts, c.p, c.f, c.e);
        report.update(identity_report(chk.lhs, chk.rhs, chk.ok));
        return finish(std::move(report), chk.ok);
    }
    report["n"] = c.n;
    auto algs = enumerate_etale_algebras(c.p, c.n, ctx.etale);
    json list = json::array();
    for (auto const& alg : algs)
        list.push_back(algebra_json(alg));
    report["algebras"] = list;
    if (c.subcommand == "bhargava" || c.subcommand == "hilb") {
        auto chk = c.subcommand == "bhargava" ? bhargava_check(algs, c.p, c.n) : wild_hilb_mass(algs, c.p, c.n);
        report.update(identity_report(chk.lhs, chk.rhs, chk.ok));
        return finish(std::move(report), chk.ok);
    }
    if (c.subcommand == "per-partition") {
        std::vector<Partition> pts;
        if (c.partition)
            pts.push_back(parse_partition(*c.partition));
        else
            pts = enumerate_partitions(c.n);
        bool ok = true;
        json rows = json::array();
        for (auto const& pt : pts) {
            auto chk = per_partition_mass(algs, c.p, c.n, pt);
            json row = identity_report(chk.lhs, chk.rhs, chk.ok);
            row["partition"] = partition_json(pt);
            rows.push_back(row);
            ok = ok && chk.ok;
        }
        report["partitions"] = rows;
        return finish(std::move(report), ok);
    }
    throw domain_error("unknown padic subcommand: " + c.subcommand);
}

RunResult cmd_verify(Context const& ctx, json report)
{
    auto const& c = ctx.config;
    std::vector<CheckResult> checks;
    bool known = false;
    if (c.suite == "tame-mckay" || c.suite == "all") {
        known = true;
        auto part = tame_mckay_suite();
        checks.insert(checks.end(), part.begin(), part.end());
    }
    if (c.suite == "wild-mass" || c.suite == "all") {
        known = true;
        auto part = wild_mass_suite(ctx.etale);
        checks.insert(checks.end(), part.begin(), part.end());
    }
    if (c.suite == "comparisons" || c.suite == "all") {
        known = true;
        if (c.cases < 1)
            throw domain_error("cases must be positive");
        auto part = comparisons_suite(c.seed, c.cases);
        checks.insert(checks.end(), part.begin(), part.end());
    }
    if (!known)
        throw domain_error("unknown suite: " + c.suite);
    bool ok = true;
    json rows = json::array();
    for (auto const& chk : checks) {
        rows.push_back({{"name", chk.name}, {"ok", chk.ok}, {"detail", chk.detail}});
        ok = ok && chk.ok;
    }
    report["suite"] = c.suite;
    report["checks"] = rows;
    return finish(std::move(report), ok);
}

RunResult failure(json report, int code, char const* kind, std::string const& message)
{
    report["ok"] = false;
    report["error"] = {{"kind", kind}, {"message", message}};
    return {code, std::move(report)};
}

std::string scalar_text(json const& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

RunResult run(RunConfig const& config)
{
    json report{{"schema", 1}, {"command", config.command}};
    try {
        Context ctx(config);
        if (config.command == "partitions")
            return cmd_partitions(ctx, report);
        if (config.command == "mass")
            return cmd_mass(ctx, report);
        if (config.command == "mckay-check")
            return cmd_mckay(ctx, report);
        if (config.command == "duality")
            return cmd_duality(ctx, report);
        if (config.command == "conductor")
            return cmd_conductor(ctx, report);
        if (config.command == "padic")
            return cmd_padic(ctx, report);
        if (config.command == "verify")
            return cmd_verify(ctx, report);
        return failure(report, exit_config_error, "config", "unknown command: " + config.command);
    } catch (resource_error const& e) {
        return failure(report, exit_exhausted, "exhausted", e.what());
    } catch (corrupt_cache const& e) {
        return failure(report, exit_config_error, "corrupt_cache", e.what());
    } catch (error const& e) {
        return failure(report, exit_config_error, "config", e.what());
    } catch (std::invalid_argument const& e) {
        return failure(report, exit_config_error, "config", e.what());
    } catch (json::exception const& e) {
        return failure(report, exit_config_error, "config", e.what());
    }
}

std::string render(RunResult const& result, std::string const& format)
{
    if (format == "json")
        return result.report.dump(2) + "\n";
    std::ostringstream out;
    for (auto const& [key, value] : result.report.items()) {
        if (!value.is_array()) {
            out << key << ": " << scalar_text(value) << "\n";
            continue;
        }
        out << key << ":\n";
        for (auto const& row : value) {
            out << " ";
            if (row.is_object())
                for (auto const& [k, v] : row.items())
                    out << " " << k << "=" << scalar_text(v);
            else
                out << " " << scalar_text(row);
            out << "\n";
        }
    }
    return out.str();
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    if (char const* env = std::getenv("CACHE_DIR"))
        config.cache_dir = env;

    CLI::App app{"tame representation masses, p-adic mass identities and their checks"};
    app.require_subcommand(1);
    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir, "directory for cached extension lists (overrides CACHE_DIR)");
    app.add_option("--format", config.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--slow", config.slow, "allow long enumerations");
    app.add_option("--threads", config.threads, "enumeration threads (0: all cores)");

    auto* partitions = app.add_subcommand("partitions", "partitions of n and the two generating polynomials");
    partitions->add_option("--n", config.n)->required();
    partitions->add_option("--parts", config.parts, "report only partitions into this many parts");

    auto group_rep = [&](CLI::App* sub) {
        sub->add_option("--group", config.group, "Sn:N, Cyclic:L, a zoo name, JSON or @file");
        sub->add_option("--rep", config.rep, "sigma, 2sigma, regular, trivial, sign, JSON or @file");
        sub->add_option("--q-class,--q", config.q_class, "residue class of q modulo the group exponent");
    };
    auto* mass = app.add_subcommand("mass", "tame total mass as a polynomial in q");
    group_rep(mass);
    mass->add_option("--counting", config.counting, "artin, swan, tame, v or weight");
    mass->add_option("--sign", config.sign, "+1 or -1");

    auto* mckay = app.add_subcommand("mckay-check", "compare the weight mass with an expected polynomial");
    group_rep(mckay);
    mckay->add_option("--expected", config.expected, "polynomial as {\"r\":..,\"terms\":[[num,den,cnum,cden],...]}");

    auto* duality = app.add_subcommand("duality", "q -> 1/q duality of the two generating polynomials");
    duality->add_option("--n", config.n)->required();

    auto* conductor = app.add_subcommand("conductor", "Z/p acting by a Jordan block with break j");
    conductor->add_option("--p", config.p);
    conductor->add_option("--n", config.n, "dimension");
    conductor->add_option("--j", config.j, "ramification break");
    conductor->add_option("--filtration", config.filtration, "JSON [[ram_index, codim], ...] for i = 0, 1, ...");

    auto* padic = app.add_subcommand("padic", "p-adic enumerations and mass identities");
    padic->require_subcommand(1);
    auto base_opts = [&](CLI::App* sub) {
        sub->add_option("--p", config.p)->required();
        sub->add_option("--f", config.f, "residue degree of the base");
        sub->add_option("--e", config.e)->required();
    };
    auto alg_opts = [&](CLI::App* sub) {
        sub->add_option("--p", config.p)->required();
        sub->add_option("--n", config.n)->required();
    };
    base_opts(padic->add_subcommand("enumerate", "totally ramified extensions of degree e"));
    base_opts(padic->add_subcommand("serre-check", "Serre's mass formula"));
    alg_opts(padic->add_subcommand("bhargava", "Bhargava's mass formula over etale algebras"));
    auto* per_partition = padic->add_subcommand("per-partition", "masses by ramification partition");
    alg_opts(per_partition);
    per_partition->add_option("--partition", config.partition, "comma separated parts; all when omitted");
    alg_opts(padic->add_subcommand("hilb", "Hilbert scheme point count as a mass"));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", config.suite)->required()->check(
        CLI::IsMember({"tame-mckay", "wild-mass", "comparisons", "all"}));
    verify->add_option("--seed", config.seed);
    verify->add_option("--cases", config.cases, "random cases per property");

    for (auto* sub : {partitions, mass, mckay, duality, conductor, padic, verify}) {
        sub->fallthrough();
        for (auto* inner : sub->get_subcommands([](CLI::App*) { return true; }))
            inner->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        app.exit(e, out, err);
        return exit_config_error;
    }

    if (!cache_dir.empty())
        config.cache_dir = cache_dir;
    for (auto* sub : app.get_subcommands()) {
        config.command = sub->get_name();
        for (auto* inner : sub->get_subcommands())
            config.subcommand = inner->get_name();
    }
    auto result = run(config);
    out << render(result, config.format);
    if (result.report.contains("error"))
        err << "error: " << result.report["error"]["message"].get<std::string>() << "\n";
    return result.exit_code;
}

}  // namespace wildmass::cli
