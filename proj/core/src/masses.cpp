#include "wildmass/masses.hpp"

#include <numeric>

#include "wildmass/errors.hpp"

namespace wildmass {

namespace {

long reduce_q(ClassTable const& table, long q)
{
    long e = table.exponent();
    long r = q % e;
    if (r < 0)
        r += e;
    if (std::gcd(r == 0 ? e : r, e) != 1 && e != 1)
        throw not_tame("q = " + std::to_string(q) + " is not prime to the group order");
    return r;
}

MassPoly empty_mass(ClassTable const& table)
{
    auto const& order = table.group_order();
    return MassPoly(order.fits_slong_p() ? order.get_si() : table.exponent());
}

}  // namespace

std::string to_string(Counting c)
{
    switch (c) {
    case Counting::artin: return "artin";
    case Counting::swan: return "swan";
    case Counting::tame_part: return "tame";
    case Counting::v: return "v";
    case Counting::weight: return "weight";
    }
    return "?";
}

Counting parse_counting(std::string const& name)
{
    if (name == "artin" || name == "a")
        return Counting::artin;
    if (name == "swan" || name == "s")
        return Counting::swan;
    if (name == "tame" || name == "t" || name == "tame_part")
        return Counting::tame_part;
    if (name == "v")
        return Counting::v;
    if (name == "weight" || name == "w")
        return Counting::weight;
    throw domain_error("unknown counting function '" + name + "'");
}

Rat counting_value(TameRep const& rep, std::size_t c, Counting kind)
{
    switch (kind) {
    case Counting::artin:
    case Counting::tame_part: return Rat(artin_tame(rep, c));
    case Counting::swan: return Rat(0);
    case Counting::v: return v_tame(rep, c);
    case Counting::weight: return age_weight(rep, c);
    }
    return Rat(0);
}

std::vector<ClassContribution> tame_mass_breakdown(TameRep const& rep, CountingChoice choice, long q_class)
{
    if (choice.sign != 1 && choice.sign != -1)
        throw domain_error("sign must be +1 or -1");
    auto const& table = rep.table();
    long q = reduce_q(table, q_class);
    std::vector<ClassContribution> out;
    for (std::size_t c : table.frobenius_stable(q))
        out.push_back({c, table.label(c), counting_value(rep, c, choice.kind)});
    return out;
}

MassPoly tame_mass(TameRep const& rep, CountingChoice choice, long q_class)
{
    MassPoly m = empty_mass(rep.table());
    for (auto const& term : tame_mass_breakdown(rep, choice, q_class))
        m.add_term(1, term.value * choice.sign);
    return m;
}

MassPoly tame_mass_pair_sum(TameRep const& rep, CountingChoice choice, long q_class)
{
    auto const& g = rep.model().elements();
    auto const& table = rep.table();
    long q = reduce_q(table, q_class);
    MassPoly m = empty_mass(table);
    Rat weight(1, static_cast<unsigned long>(g.order()));
    weight.canonicalize();
    for (std::size_t x = 0; x < g.order(); ++x) {
        Permutation const target = g.element(x).pow(q);
        Rat exponent = counting_value(rep, g.class_of(x), choice.kind) * choice.sign;
        for (std::size_t h = 0; h < g.order(); ++h)
            if (g.element(h) * g.element(x) * g.element(g.inverse(h)) == target)
                m.add_term(weight, exponent);
    }
    return m;
}

MckayReport mckay_tame_check(TameRep const& rep, long q_class, MassPoly const& expected)
{
    if (has_pseudo_reflection(rep))
        throw pseudo_reflection("representation contains a pseudo-reflection");
    MckayReport report;
    CountingChoice choice{Counting::weight, +1};
    report.classes = tame_mass_breakdown(rep, choice, q_class);
    report.computed = tame_mass(rep, choice, q_class);
    report.expected = expected;
    report.difference = report.computed - expected;
    report.ok = report.difference.is_zero();
    return report;
}

bool duality_check(MassPoly const& m1, MassPoly const& m2)
{
    return m1 == m2.invert_q();
}

}  // namespace wildmass
