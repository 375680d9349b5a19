#pragma once

// W(F_q) / p^N: the valuation ring of the unramified extension of Q_p of
// degree f, truncated at precision N.  Elements are coordinate vectors in
// the basis 1, z, ..., z^{f-1}, where z is a root of a fixed monic lift of
// an irreducible polynomial over F_p.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wildmass::padic {

inline constexpr int max_residue_degree = 6;

bool is_prime(long p);

/* monic polynomials over F_p, coefficients low -> high */
bool is_irreducible_mod_p(std::vector<long> const& poly, long p);
/* least monic irreducible of degree f, ordered by sum a_i p^i */
std::vector<long> least_irreducible(long p, int f);

class UnramifiedRing {
  public:
    struct Element {
        std::array<std::int64_t, max_residue_degree> c{};
        friend bool operator==(Element const&, Element const&) = default;
        friend auto operator<=>(Element const&, Element const&) = default;
    };

    /* Throws domain_error for bad (p, f) and precision_exhausted when p^N
     * does not fit the word size. */
    UnramifiedRing(long p, int f, int precision);

    long p() const { return p_; }
    int f() const { return f_; }
    int precision() const { return n_; }
    std::int64_t modulus() const { return modulus_; }
    /* residue field cardinality */
    long q() const { return q_; }
    std::vector<long> const& defining_poly() const { return defining_; }

    UnramifiedRing with_precision(int precision) const { return UnramifiedRing(p_, f_, precision); }

    Element zero() const { return {}; }
    Element one() const { return from_int(1); }
    Element from_int(std::int64_t x) const;
    Element from_coords(std::span<std::int64_t const> coords) const;
    Element generator() const;

    Element add(Element const& a, Element const& b) const;
    Element sub(Element const& a, Element const& b) const;
    Element neg(Element const& a) const;
    Element mul(Element const& a, Element const& b) const;
    Element scale(Element const& a, std::int64_t k) const;
    Element pow(Element a, std::uint64_t k) const;

    bool is_zero(Element const& a) const;
    /* v_p; returns precision() for zero */
    int valuation(Element const& a) const;
    /* a / p^k, coordinatewise; a must be divisible */
    Element div_p_pow(Element const& a, int k) const;
    /* a^-1 for a unit; throws domain_error otherwise */
    Element inverse(Element const& a) const;
    /* coordinates reduced mod p */
    Element residue(Element const& a) const;
    /* the i-th element of F_q (base-p digits of i), as a lift */
    Element residue_element(long index) const;

    /* lift of the p-power Frobenius */
    Element frobenius(Element const& a) const;

  private:
    std::int64_t reduce(__int128 x) const;

    long p_;
    int f_;
    int n_;
    long q_ = 1;
    std::int64_t modulus_ = 1;
    std::vector<long> defining_;
    Element frob_z_{};
};

inline UnramifiedRing build_unramified(long p, int f, int precision)
{
    return UnramifiedRing(p, f, precision);
}

using ZqPoly = std::vector<UnramifiedRing::Element>;

/* v(disc g) for monic g via the Sylvester resultant of g and g'.  Empty
 * when the resultant vanishes at the ring's precision (Indeterminate). */
std::optional<int> poly_disc_valuation(UnramifiedRing const& ring, ZqPoly const& g);

/* Determinant valuation of a square matrix over the ring by elimination
 * with minimal-valuation pivots; empty if it is zero at this precision. */
std::optional<int> det_valuation(UnramifiedRing const& ring, std::vector<std::vector<UnramifiedRing::Element>> m);

}  // namespace wildmass::padic
