#pragma once

// Fields and etale algebras of small degree over Q_p, and the mass
// identities summed over them.

#include <string>
#include <vector>

#include "wildmass/padic/cache.hpp"
#include "wildmass/padic/extensions.hpp"
#include "wildmass/partitions.hpp"
#include "wildmass/qlaurent.hpp"

namespace wildmass::padic {

/* A field of degree f e over Q_p: a totally ramified extension of the
 * unramified extension of degree f. */
struct PadicField {
    long p = 2;
    int f = 1;
    LocalFieldExt ext;
    /* #Aut over Q_p */
    int aut_count = 1;
    std::string label;

    int e() const { return ext.e; }
    int degree() const { return f * ext.e; }
    /* v_p(d_{L/Q_p}) */
    int disc_exponent() const { return f * ext.d; }
};

struct EtaleOptions {
    /* lifts the default candidate budget */
    bool slow = false;
    EnumerationOptions enumeration;
    ExtensionCache const* cache = nullptr;
};

/* Isomorphism classes of fields of degree m over Q_p, sorted by
 * (discriminant exponent, f, defining polynomial). */
std::vector<PadicField> enumerate_fields(long p, int m, EtaleOptions const& options = {});

struct EtaleFactor {
    PadicField field;
    int multiplicity = 1;
};

struct EtaleAlgebra {
    std::vector<EtaleFactor> factors;
    int n = 0;
    /* v_p(d_{E/Q_p}) */
    int a = 0;
    /* n - sum f_i */
    int t = 0;
    int w2sigma = 0;
    Partition partition;
    BigInt aut_count = 1;
    std::string label;
};

std::vector<EtaleAlgebra> enumerate_etale_algebras(long p, int n, EtaleOptions const& options = {});

struct MassCheck {
    Rat lhs;
    Rat rhs;
    bool ok = false;
};

/* sum (1/aut) p^{-a} against sum_{k<n} P(n, n-k) p^{-k} */
MassCheck bhargava_check(long p, int n, EtaleOptions const& options = {});
MassCheck bhargava_check(std::vector<EtaleAlgebra> const& algebras, long p, int n);
/* algebras of the given ramification partition against p^{-(n - parts)} */
MassCheck per_partition_mass(std::vector<EtaleAlgebra> const& algebras, long p, int n, Partition const& pt);
MassCheck per_partition_mass(long p, int n, Partition const& pt, EtaleOptions const& options = {});
/* sum (1/aut) p^{2t - a} against the Hilbert scheme point count */
MassCheck wild_hilb_mass(std::vector<EtaleAlgebra> const& algebras, long p, int n);
MassCheck wild_hilb_mass(long p, int n, EtaleOptions const& options = {});

/* v_p of the discriminant of the minimal polynomial of zeta + pi over
 * Z_p, which generates the ring of integers of the field. */
int absolute_disc_valuation(PadicField const& field);

}  // namespace wildmass::padic
