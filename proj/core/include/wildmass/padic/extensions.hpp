#pragma once

// Enumeration of the totally ramified extensions of degree e of an
// unramified extension K/Q_p, up to K-isomorphism, with discriminant
// exponents and automorphism counts.
//
// Candidates are Eisenstein polynomials whose coefficients a_i range over
// residues mod p^{k_i}, where k_i = floor((2d - i)/e) + 1 for discriminant
// exponent d.  Any Eisenstein polynomial with exponent d is then within
// Newton distance of a candidate (v(g~(pi)) > 2 v(g~'(pi)) = 2d), so the
// candidate list meets every isomorphism class.  Classes are separated by
// root counting: L ~ L' iff the defining polynomial of L' has a root in L.

#include <cstdint>
#include <string>
#include <vector>

#include "wildmass/padic/ramified.hpp"
#include "wildmass/qlaurent.hpp"

namespace wildmass::padic {

struct LocalFieldExt {
    long p = 2;
    int f = 1;
    int e = 1;
    /* v_K(d_{L/K}) */
    int d = 0;
    /* #Aut(L/K) */
    int aut_count = 1;
    EisensteinPoly defining;
    /* coefficients were enumerated mod p^precision */
    int precision = 1;
    std::string label;

    long q() const;
};

struct EnumerationOptions {
    /* digits added to every coefficient range */
    int extra_digits = 0;
    /* every coefficient mod p^B, B = starting_precision(p, e), instead of
     * the per-coefficient ranges */
    bool uniform_precision = false;
    /* also enumerate with one more digit and require the same inventory */
    bool verify_stability = false;
    /* maximal number of coefficient tuples scanned for one (p, f, e, d) */
    std::uint64_t budget = 100'000;
    /* 0: hardware concurrency */
    unsigned threads = 0;
};

/* budget used when slow runs are requested */
inline constexpr std::uint64_t slow_budget = 20'000'000;

/* e - 1 + e v_p(e) */
int max_disc_exponent(long p, int e);
/* ceil(2 d_max / e) + 2 */
int starting_precision(long p, int e);
/* floor((2d - i)/e) + 1 */
int krasner_digits(int d, int e, int i);

/* Eisenstein polynomials with exponent exactly d in the candidate ranges,
 * sorted. Throws budget_exceeded. */
std::vector<EisensteinPoly> eisenstein_candidates(long p, int f, int e, int d, EnumerationOptions const& options = {});

/* Classes sorted by (d, minimal representative).  Throws budget_exceeded
 * or precision_exhausted. */
std::vector<LocalFieldExt> enumerate_extensions(long p, int f, int e, EnumerationOptions const& options = {});
std::vector<LocalFieldExt> enumerate_extensions(UnramifiedRing const& base, int e,
                                                EnumerationOptions const& options = {});

/* Roots of g in L (g over the same base). */
int panayi_root_count(BasePoly const& g, LocalFieldExt const& field);
bool isomorphic(LocalFieldExt const& a, LocalFieldExt const& b);

/* v(disc) of the defining polynomial by resultant, raising the precision
 * until it is determined. */
int disc_exponent_by_resultant(EisensteinPoly const& g);

struct IdentityCheck {
    Rat lhs;
    Rat rhs;
    bool ok = false;
};

/* sum (1/aut) q^{-d} against q^{1-e} */
IdentityCheck serre_mass_check(std::vector<LocalFieldExt> const& extensions, long p, int f, int e);

}  // namespace wildmass::padic
