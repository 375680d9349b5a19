#pragma once

// Exact rationals and sparse Laurent polynomials in a formal variable q
// whose exponents live in (1/r)Z.  Every mass the library produces is
// one of these, evaluated at the residue cardinality when a number is
// wanted.

#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wildmass {

using BigInt = mpz_class;
using Rat = mpq_class;

/* Parse "a" or "a/b" into a canonical rational. Throws domain_error. */
Rat parse_rat(std::string_view text);
std::string to_string(Rat const& x);

/* floor(x) and x - floor(x) */
BigInt floor_rat(Rat const& x);
Rat frac_part(Rat const& x);

class MassPoly {
  public:
    using term_map = std::map<Rat, Rat>;

    MassPoly() = default;
    explicit MassPoly(long grading_denominator);

    static MassPoly constant(Rat const& c);
    static MassPoly monomial(Rat const& coeff, Rat const& exponent);

    /* r: every stored exponent has a denominator dividing it */
    long grading() const { return r_; }
    term_map const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coefficient(Rat const& exponent) const;

    /* Adds c*q^exponent in place; drops the term if it cancels. */
    void add_term(Rat const& coeff, Rat const& exponent);

    MassPoly& operator+=(MassPoly const& other);
    MassPoly& operator-=(MassPoly const& other);
    MassPoly& operator*=(MassPoly const& other);
    MassPoly operator-() const;

    friend MassPoly operator+(MassPoly a, MassPoly const& b) { return a += b; }
    friend MassPoly operator-(MassPoly a, MassPoly const& b) { return a -= b; }
    friend MassPoly operator*(MassPoly a, MassPoly const& b) { return a *= b; }

    /* Equality ignores the declared grading: two polynomials are equal
     * when their term maps agree. */
    friend bool operator==(MassPoly const& a, MassPoly const& b) { return a.terms_ == b.terms_; }

    /* q -> q^{-1} */
    MassPoly invert_q() const;

    /* Exact value at q = q0 > 0.  Throws non_rational_power when a
     * fractional exponent has no rational value at q0. */
    Rat eval_at(Rat const& q0) const;

    /* Human-readable, ascending exponents: "1 + 2q + q^(1/2)". */
    std::string to_string() const;

    /* {"r": int, "terms": [[num, den, coeff_num, coeff_den], ...]} */
    std::string to_json() const;
    static MassPoly from_json(std::string_view text);

  private:
    long r_ = 1;
    term_map terms_;
};

inline MassPoly add(MassPoly const& a, MassPoly const& b) { return a + b; }
inline MassPoly mul(MassPoly const& a, MassPoly const& b) { return a * b; }
inline MassPoly invert_q(MassPoly const& a) { return a.invert_q(); }
inline Rat eval_at(MassPoly const& a, Rat const& q0) { return a.eval_at(q0); }

}  // namespace wildmass
