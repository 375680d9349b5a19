#pragma once

// Total masses of tame representations of the absolute Galois group of a
// local field with residue cardinality q, computed from the tame quotient
// <a, b | b a b^-1 = a^q>: the mass is a sum over the Frobenius-stable
// classes C_{G,q}.

#include <string>
#include <vector>

#include "wildmass/qlaurent.hpp"
#include "wildmass/reps.hpp"

namespace wildmass {

enum class Counting { artin, swan, tame_part, v, weight };

std::string to_string(Counting c);
/* "artin", "swan", "tame", "v", "weight"; throws domain_error */
Counting parse_counting(std::string const& name);

struct CountingChoice {
    Counting kind = Counting::weight;
    /* +1 sums q^{c}, -1 sums q^{-c} */
    int sign = +1;
};

/* value of the counting function on class c (swan is zero: tame) */
Rat counting_value(TameRep const& rep, std::size_t c, Counting kind);

/* Throws not_tame unless gcd(q_class, |G|) = 1. */
MassPoly tame_mass(TameRep const& rep, CountingChoice choice, long q_class);

/* (1/|G|) * sum over pairs with h g h^-1 = g^q of q^{sign c(g)}, by brute
 * force over the explicit group. */
MassPoly tame_mass_pair_sum(TameRep const& rep, CountingChoice choice, long q_class);

struct ClassContribution {
    std::size_t cls;
    std::string label;
    Rat value;
};

std::vector<ClassContribution> tame_mass_breakdown(TameRep const& rep, CountingChoice choice, long q_class);

struct MckayReport {
    bool ok = false;
    MassPoly computed;
    MassPoly expected;
    MassPoly difference;  // computed - expected
    std::vector<ClassContribution> classes;
};

/* Compares the weight mass with `expected`.  Throws pseudo_reflection if
 * the representation contains one. */
MckayReport mckay_tame_check(TameRep const& rep, long q_class, MassPoly const& expected);

/* m1 == invert_q(m2) */
bool duality_check(MassPoly const& m1, MassPoly const& m2);

}  // namespace wildmass
