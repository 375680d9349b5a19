#include "wildmass/qlaurent.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "wildmass/errors.hpp"

namespace wildmass {

namespace {

long lcm_long(long a, long b)
{
    return std::lcm(a, b);
}

long den_as_long(Rat const& x)
{
    if (!x.get_den().fits_slong_p())
        throw domain_error("exponent denominator too large");
    return x.get_den().get_si();
}

/* Exact integer k-th root, or false. */
bool exact_root(BigInt const& x, unsigned long k, BigInt& root)
{
    if (x < 0)
        return false;
    return mpz_root(root.get_mpz_t(), x.get_mpz_t(), k) != 0;
}

Rat pow_rat(Rat const& base, long e)
{
    Rat result = 1;
    Rat b = base;
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), k);
    result = invert ? Rat(den, num) : Rat(num, den);
    result.canonicalize();
    return result;
}

nlohmann::json int_json(BigInt const& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

BigInt int_from_json(nlohmann::json const& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<long>());
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw domain_error("expected an integer in MassPoly JSON");
}

}  // namespace

Rat parse_rat(std::string_view text)
{
    std::string s(text);
    Rat x;
    if (s.empty() || x.set_str(s, 10) != 0)
        throw domain_error("not a rational number: '" + s + "'");
    if (x.get_den() == 0)
        throw domain_error("zero denominator: '" + s + "'");
    x.canonicalize();
    return x;
}

std::string to_string(Rat const& x)
{
    return x.get_str();
}

BigInt floor_rat(Rat const& x)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rat frac_part(Rat const& x)
{
    Rat f = x - Rat(floor_rat(x));
    f.canonicalize();
    return f;
}

MassPoly::MassPoly(long grading_denominator) : r_(grading_denominator)
{
    if (r_ <= 0)
        throw domain_error("grading denominator must be positive");
}

MassPoly MassPoly::constant(Rat const& c)
{
    MassPoly m;
    m.add_term(c, 0);
    return m;
}

MassPoly MassPoly::monomial(Rat const& coeff, Rat const& exponent)
{
    MassPoly m;
    m.add_term(coeff, exponent);
    return m;
}

Rat MassPoly::coefficient(Rat const& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MassPoly::add_term(Rat const& coeff, Rat const& exponent)
{
    if (coeff == 0)
        return;
    Rat e = exponent;
    e.canonicalize();
    r_ = lcm_long(r_, den_as_long(e));
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MassPoly& MassPoly::operator+=(MassPoly const& other)
{
    r_ = lcm_long(r_, other.r_);
    for (auto const& [e, c] : other.terms_)
        add_term(c, e);
    return *this;
}

MassPoly& MassPoly::operator-=(MassPoly const& other)
{
    r_ = lcm_long(r_, other.r_);
    for (auto const& [e, c] : other.terms_)
        add_term(-c, e);
    return *this;
}

MassPoly& MassPoly::operator*=(MassPoly const& other)
{
    MassPoly out(lcm_long(r_, other.r_));
    for (auto const& [ea, ca] : terms_)
        for (auto const& [eb, cb] : other.terms_)
            out.add_term(ca * cb, ea + eb);
    *this = std::move(out);
    return *this;
}

MassPoly MassPoly::operator-() const
{
    MassPoly out(r_);
    for (auto const& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

MassPoly MassPoly::invert_q() const
{
    MassPoly out(r_);
    for (auto const& [e, c] : terms_)
        out.terms_.emplace(-e, c);
    return out;
}

Rat MassPoly::eval_at(Rat const& q0) const
{
    if (q0 <= 0)
        throw domain_error("eval_at requires q0 > 0");
    Rat total = 0;
    for (auto const& [e, c] : terms_) {
        long den = den_as_long(e);
        BigInt num_root, den_root;
        if (!exact_root(q0.get_num(), static_cast<unsigned long>(den), num_root) ||
            !exact_root(q0.get_den(), static_cast<unsigned long>(den), den_root))
            throw non_rational_power("q0 = " + q0.get_str() + " has no rational " +
                                     std::to_string(den) + "-th root");
        if (!e.get_num().fits_slong_p())
            throw domain_error("exponent numerator too large");
        Rat base(num_root, den_root);
        base.canonicalize();
        total += c * pow_rat(base, e.get_num().get_si());
    }
    return total;
}

std::string MassPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto const& [e, c] : terms_) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str();
        out << "q";
        if (e != 1) {
            if (e.get_den() == 1)
                out << "^" << e.get_str();
            else
                out << "^(" << e.get_str() << ")";
        }
    }
    return out.str();
}

std::string MassPoly::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto const& [e, c] : terms_)
        terms.push_back({int_json(e.get_num()), int_json(e.get_den()),
                         int_json(c.get_num()), int_json(c.get_den())});
    nlohmann::json doc;
    doc["r"] = r_;
    doc["terms"] = std::move(terms);
    return doc.dump();
}

MassPoly MassPoly::from_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
        throw domain_error(std::string("MassPoly JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("terms"))
        throw domain_error("MassPoly JSON must be an object with \"terms\"");
    MassPoly m(doc.value("r", 1L));
    for (auto const& t : doc.at("terms")) {
        if (!t.is_array() || t.size() != 4)
            throw domain_error("MassPoly term must be [num, den, coeff_num, coeff_den]");
        BigInt en = int_from_json(t[0]), ed = int_from_json(t[1]);
        BigInt cn = int_from_json(t[2]), cd = int_from_json(t[3]);
        if (ed == 0 || cd == 0)
            throw domain_error("zero denominator in MassPoly JSON");
        Rat e(en, ed), c(cn, cd);
        e.canonicalize();
        c.canonicalize();
        m.add_term(c, e);
    }
    return m;
}

}  // namespace wildmass
