#pragma once

// Totally ramified extensions L = K(pi) of an unramified base K, given by
// an Eisenstein polynomial, and root counting in O_L.

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "wildmass/padic/zq.hpp"

namespace wildmass::padic {

inline constexpr int max_ramification = 8;

/* Polynomial over the base with exact integer coordinates, low -> high;
 * each coefficient holds up to f coordinates. */
using BasePoly = std::vector<std::vector<std::int64_t>>;

struct EisensteinPoly {
    long p = 2;
    int f = 1;
    /* a_0 .. a_{e-1} of the monic x^e + ... + a_0 */
    std::vector<std::vector<std::int64_t>> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()); }
    BasePoly as_base_poly() const;

    friend bool operator==(EisensteinPoly const&, EisensteinPoly const&) = default;
    friend auto operator<=>(EisensteinPoly const&, EisensteinPoly const&) = default;
};

/* Throws domain_error unless v(a_i) >= 1 and v(a_0) = 1. */
void validate_eisenstein(EisensteinPoly const& g);

/* v_K(disc g) = min_{1<=i<=e} (e v(i a_i) + i - 1), a_e = 1 */
int ore_disc_exponent(EisensteinPoly const& g);

ZqPoly to_ring_poly(UnramifiedRing const& ring, BasePoly const& g);

/* O_L / p^N with basis z^j pi^i. */
class RamifiedRing {
  public:
    using Base = UnramifiedRing;
    using Element = std::array<Base::Element, max_ramification>;

    RamifiedRing(Base base, EisensteinPoly const& g);

    Base const& base() const { return base_; }
    int e() const { return e_; }
    /* precision in p-digits */
    int precision() const { return base_.precision(); }

    Element zero() const { return {}; }
    Element embed(Base::Element const& a) const;
    Element uniformizer() const;

    Element add(Element const& a, Element const& b) const;
    Element sub(Element const& a, Element const& b) const;
    Element mul(Element const& a, Element const& b) const;
    Element mul_base(Element const& a, Base::Element const& k) const;
    Element mul_pi(Element const& a) const;

    /* v_L in units of pi; e * precision() for zero */
    int valuation(Element const& a) const;
    /* u * a / pi^v for some unit u, v <= valuation(a); the result is
     * known to precision() minus ceil(v / e) digits */
    Element div_pi_pow(Element const& a, int v) const;
    /* image in the residue field F_q */
    Base::Element residue(Element const& a) const;

  private:
    Base base_;
    int e_;
    std::array<Base::Element, max_ramification> neg_a_{};  // pi^e = sum neg_a_[i] pi^i
};

/* Number of roots of poly in O_L.  Throws precision_exhausted when the
 * ring's precision cannot separate them. */
int count_roots(RamifiedRing const& field, ZqPoly const& poly, bool stop_at_first = false);

/* Same, rebuilding the field at doubled precision until the count is
 * determined.  `start` is the first precision tried. */
int count_roots_adaptive(EisensteinPoly const& field_poly, BasePoly const& poly, int start,
                         bool stop_at_first = false);

}  // namespace wildmass::padic
