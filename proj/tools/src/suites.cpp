#include "suites.hpp"

#include "wildmass/masses.hpp"
#include "wildmass/partitions.hpp"
#include "wildmass/rep_zoo.hpp"

namespace wildmass::cli {

namespace {

using nlohmann::json;

json identity_detail(MassPoly const& lhs, MassPoly const& rhs)
{
    return json{{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
}

json identity_detail(Rat const& lhs, Rat const& rhs)
{
    return json{{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
}

template <class Check>
CheckResult mass_result(std::string name, Check const& c)
{
    return {std::move(name), c.ok, identity_detail(c.lhs, c.rhs)};
}

/* Counts per-property failures over random samples. */
struct PropertyTally {
    std::string name;
    int cases = 0;
    int failures = 0;
    json first_failure;

    void record(bool ok, json const& where)
    {
        ++cases;
        if (!ok && failures++ == 0)
            first_failure = where;
    }

    CheckResult result() const
    {
        json d{{"cases", cases}, {"failures", failures}};
        if (failures)
            d["first_failure"] = first_failure;
        return {name, failures == 0 && cases > 0, d};
    }
};

}  // namespace

std::vector<CheckResult> tame_mckay_suite()
{
    std::vector<CheckResult> out;
    CountingChoice weight{Counting::weight, +1};
    CountingChoice artin_neg{Counting::artin, -1};
    for (int n = 1; n <= 8; ++n) {
        auto model = GroupModel::symmetric(n);
        auto sigma = defining_rep(model);
        auto m = tame_mass(direct_sum(sigma, sigma), weight, 1);
        auto h = hilbert_origin_count(n);
        out.push_back({"hilbert S" + std::to_string(n), m == h, identity_detail(m, h)});
        auto b = tame_mass(sigma, artin_neg, 1);
        auto r = bhargava_rhs(n);
        out.push_back({"bhargava S" + std::to_string(n), b == r, identity_detail(b, r)});
    }
    auto c3 = GroupModel::from_group(FiniteGroup::cyclic(3));
    auto reg = regular_rep(c3);
    MassPoly two_q_plus_one = MassPoly::constant(1);
    two_q_plus_one += MassPoly::monomial(2, 1);
    auto m1 = tame_mass(reg, weight, 1);
    auto m2 = tame_mass(reg, weight, 2);
    out.push_back({"C3 regular q=1 mod 3", m1 == two_q_plus_one, identity_detail(m1, two_q_plus_one)});
    out.push_back({"C3 regular q=2 mod 3", m2 == MassPoly::constant(1), identity_detail(m2, MassPoly::constant(1))});
    for (int n = 1; n <= 20; ++n) {
        auto h = hilbert_origin_count(n);
        auto b = bhargava_rhs(n);
        out.push_back({"duality n=" + std::to_string(n), duality_check(h, b), identity_detail(h.invert_q(), b)});
    }
    return out;
}

std::vector<CheckResult> wild_mass_suite(padic::EtaleOptions const& options)
{
    using namespace padic;
    std::vector<CheckResult> out;
    std::vector<std::array<int, 3>> serre_cases{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {3, 1, 3}, {5, 1, 2}, {2, 2, 2}};
    if (options.slow)
        serre_cases.push_back({2, 1, 4});
    EnumerationOptions eo = options.enumeration;
    if (options.slow)
        eo.budget = std::max(eo.budget, slow_budget);
    for (auto [p, f, e] : serre_cases) {
        auto exts = enumerate_extensions_cached(p, f, e, eo, options.cache);
        auto c = serre_mass_check(exts, p, f, e);
        auto r = mass_result("serre p=" + std::to_string(p) + " f=" + std::to_string(f) + " e=" + std::to_string(e), c);
        r.detail["extensions"] = exts.size();
        out.push_back(std::move(r));
    }
    std::vector<std::pair<int, int>> pn{{2, 2}, {3, 2}, {2, 3}, {3, 3}};
    for (auto [p, n] : pn) {
        auto algs = enumerate_etale_algebras(p, n, options);
        std::string tag = " p=" + std::to_string(p) + " n=" + std::to_string(n);
        out.push_back(mass_result("bhargava" + tag, bhargava_check(algs, p, n)));
        out.push_back(mass_result("hilbert" + tag, wild_hilb_mass(algs, p, n)));
    }
    for (int p : {2, 3})
        for (int n = 1; n <= 3; ++n) {
            auto algs = enumerate_etale_algebras(p, n, options);
            for (auto const& pt : enumerate_partitions(n)) {
                std::string name = "partition p=" + std::to_string(p) + " (";
                for (std::size_t i = 0; i < pt.parts.size(); ++i)
                    name += (i ? "," : "") + std::to_string(pt.parts[i]);
                out.push_back(mass_result(name + ")", per_partition_mass(algs, p, n, pt)));
            }
        }
    // p = 5 does not divide 3!, so the tame pipeline applies
    auto sigma = defining_rep(GroupModel::symmetric(3));
    Rat tame = tame_mass(direct_sum(sigma, sigma), {Counting::weight, +1}, 5).eval_at(5);
    auto wild = wild_hilb_mass(5, 3, options);
    out.push_back({"tame consistency p=5 n=3", wild.ok && wild.lhs == tame, identity_detail(wild.lhs, tame)});
    return out;
}

std::vector<CheckResult> comparisons_suite(std::uint64_t seed, int cases)
{
    RepSampler sampler(seed);
    auto zoo = small_group_zoo();
    std::uniform_int_distribution<std::size_t> pick(0, zoo.size() - 1);

    PropertyTally weight{"w = tbar - v", 0, 0, {}};
    PropertyTally balanced{"balanced: w = v = a/2", 0, 0, {}};
    PropertyTally self_dual_sum{"w(tau + dual) = a(tau)", 0, 0, {}};
    PropertyTally perm_v{"permutation: v = a/2", 0, 0, {}};
    PropertyTally perm_doubled{"permutation: w(2 tau) = t(tau)", 0, 0, {}};
    PropertyTally additive{"a additive", 0, 0, {}};
    PropertyTally dual_inv{"a dual-invariant", 0, 0, {}};

    int balanced_seen = 0;
    for (int i = 0; i < cases || balanced_seen < cases; ++i) {
        auto const& g = zoo[pick(sampler.engine())];
        auto rho = sampler.general(g.model);
        auto rho2 = sampler.general(g.model);
        auto perm = sampler.permutation(g.model);
        auto sum = direct_sum(rho, rho2);
        auto rho_dual = dual(rho);
        auto rho_pair = direct_sum(rho, rho_dual);
        auto perm2 = direct_sum(perm, perm);
        bool is_bal = is_balanced(rho);
        bool ok_w = true, ok_b = true, ok_sd = true, ok_pv = true, ok_pd = true, ok_add = true, ok_dual = true;
        for (std::size_t c = 0; c < rho.table().size(); ++c) {
            Rat a = artin_tame(rho, c);
            Rat w = age_weight(rho, c);
            Rat v = v_tame(rho, c);
            ok_w = ok_w && w == Rat(artin_tame(rho, c)) - v;
            if (is_bal)
                ok_b = ok_b && w == v && v == a / 2;
            ok_sd = ok_sd && age_weight(rho_pair, c) == a;
            ok_pv = ok_pv && v_tame(perm, c) == Rat(artin_tame(perm, c)) / 2;
            ok_pd = ok_pd && age_weight(perm2, c) == artin_tame(perm, c);
            ok_add = ok_add && artin_tame(sum, c) == artin_tame(rho, c) + artin_tame(rho2, c);
            ok_dual = ok_dual && artin_tame(rho_dual, c) == artin_tame(rho, c);
        }
        json where{{"group", g.name}, {"sample", i}};
        if (i < cases) {
            weight.record(ok_w, where);
            self_dual_sum.record(ok_sd, where);
            perm_v.record(ok_pv, where);
            perm_doubled.record(ok_pd, where);
            additive.record(ok_add, where);
            dual_inv.record(ok_dual, where);
        }
        if (is_bal && balanced_seen < cases) {
            ++balanced_seen;
            balanced.record(ok_b, where);
        }
        if (i > 100 * cases)
            break;
    }

    std::vector<CheckResult> out;
    for (auto* t : {&weight, &balanced, &self_dual_sum, &perm_v, &perm_doubled, &additive, &dual_inv})
        out.push_back(t->result());

    // Z/p on a Jordan block: conductor values and the doubled comparison
    PropertyTally jordan{"Jordan block conductors", 0, 0, {}};
    PropertyTally doubled{"2t - a = w(2 tau) exactly when p = 2", 0, 0, {}};
    for (int p : {2, 3, 5, 7})
        for (int n = 2; n <= p; ++n)
            for (int j = 1; j <= 10; ++j) {
                if (j % p == 0)
                    continue;
                auto inv = wild_cyclic_jordan(n, p, j);
                int w = 0;
                for (int a = 1; a < n; ++a)
                    w -= j * a / p;
                json where{{"p", p}, {"n", n}, {"j", j}};
                jordan.record(inv.artin == (j + 1) * (n - 1) && inv.tame == n - 1 && inv.weight == w, where);
                if (n == 2) {
                    bool equal = inv.doubled->first == inv.doubled->second;
                    doubled.record(p == 2 ? equal : (equal == (j == 1)), where);
                }
            }
    out.push_back(jordan.result());
    out.push_back(doubled.result());
    return out;
}

}  // namespace wildmass::cli
