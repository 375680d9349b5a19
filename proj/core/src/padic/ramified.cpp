#include "wildmass/padic/ramified.hpp"

#include <algorithm>
#include <limits>

#include "wildmass/errors.hpp"

namespace wildmass::padic {

namespace {

int vp_int(std::int64_t x, long p)
{
    if (x == 0)
        return std::numeric_limits<int>::max() / 4;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

int vp_coords(std::vector<std::int64_t> const& c, long p)
{
    int v = std::numeric_limits<int>::max() / 4;
    for (auto x : c)
        v = std::min(v, vp_int(x, p));
    return v;
}

}  // namespace

BasePoly EisensteinPoly::as_base_poly() const
{
    BasePoly out = coeffs;
    out.push_back({1});
    return out;
}

void validate_eisenstein(EisensteinPoly const& g)
{
    if (g.degree() < 1 || g.degree() > max_ramification)
        throw domain_error("Eisenstein degree out of range");
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
        if (static_cast<int>(g.coeffs[i].size()) > g.f)
            throw domain_error("coefficient has more than f coordinates");
        int v = vp_coords(g.coeffs[i], g.p);
        if (v < 1)
            throw domain_error("Eisenstein coefficients must be divisible by p");
        if (i == 0 && v != 1)
            throw domain_error("Eisenstein constant term must have valuation exactly 1");
    }
}

int ore_disc_exponent(EisensteinPoly const& g)
{
    int e = g.degree();
    int best = e * vp_int(e, g.p) + e - 1;
    for (int i = 1; i < e; ++i) {
        int v = vp_coords(g.coeffs[i], g.p);
        if (v >= std::numeric_limits<int>::max() / 8)
            continue;
        best = std::min(best, e * (vp_int(i, g.p) + v) + i - 1);
    }
    return best;
}

ZqPoly to_ring_poly(UnramifiedRing const& ring, BasePoly const& g)
{
    ZqPoly out;
    for (auto const& c : g)
        out.push_back(ring.from_coords(c));
    return out;
}

RamifiedRing::RamifiedRing(Base base, EisensteinPoly const& g) : base_(std::move(base)), e_(g.degree())
{
    validate_eisenstein(g);
    if (g.p != base_.p() || g.f != base_.f())
        throw domain_error("Eisenstein polynomial over a different base");
    for (int i = 0; i < e_; ++i)
        neg_a_[i] = base_.neg(base_.from_coords(g.coeffs[i]));
}

RamifiedRing::Element RamifiedRing::embed(Base::Element const& a) const
{
    Element r{};
    r[0] = a;
    return r;
}

RamifiedRing::Element RamifiedRing::uniformizer() const
{
    if (e_ == 1)
        return embed(neg_a_[0]);
    Element r{};
    r[1] = base_.one();
    return r;
}

RamifiedRing::Element RamifiedRing::add(Element const& a, Element const& b) const
{
    Element r;
    for (int i = 0; i < e_; ++i)
        r[i] = base_.add(a[i], b[i]);
    return r;
}

RamifiedRing::Element RamifiedRing::sub(Element const& a, Element const& b) const
{
    Element r;
    for (int i = 0; i < e_; ++i)
        r[i] = base_.sub(a[i], b[i]);
    return r;
}

RamifiedRing::Element RamifiedRing::mul(Element const& a, Element const& b) const
{
    std::array<Base::Element, 2 * max_ramification> t{};
    for (int i = 0; i < e_; ++i) {
        if (base_.is_zero(a[i]))
            continue;
        for (int j = 0; j < e_; ++j)
            t[i + j] = base_.add(t[i + j], base_.mul(a[i], b[j]));
    }
    for (int k = 2 * e_ - 2; k >= e_; --k) {
        if (base_.is_zero(t[k]))
            continue;
        for (int i = 0; i < e_; ++i)
            t[k - e_ + i] = base_.add(t[k - e_ + i], base_.mul(t[k], neg_a_[i]));
        t[k] = base_.zero();
    }
    Element r{};
    std::copy(t.begin(), t.begin() + e_, r.begin());
    return r;
}

RamifiedRing::Element RamifiedRing::mul_base(Element const& a, Base::Element const& k) const
{
    Element r{};
    for (int i = 0; i < e_; ++i)
        r[i] = base_.mul(a[i], k);
    return r;
}

RamifiedRing::Element RamifiedRing::mul_pi(Element const& a) const
{
    if (e_ == 1)
        return mul_base(a, neg_a_[0]);
    Element r{};
    for (int i = e_ - 1; i > 0; --i)
        r[i] = a[i - 1];
    auto const top = a[e_ - 1];
    if (!base_.is_zero(top))
        for (int i = 0; i < e_; ++i)
            r[i] = base_.add(r[i], base_.mul(top, neg_a_[i]));
    return r;
}

int RamifiedRing::valuation(Element const& a) const
{
    int v = e_ * precision();
    for (int i = 0; i < e_; ++i) {
        int vi = base_.valuation(a[i]);
        if (vi < precision())
            v = std::min(v, e_ * vi + i);
    }
    return v;
}

RamifiedRing::Element RamifiedRing::div_pi_pow(Element const& a, int v) const
{
    if (v == 0)
        return a;
    int k = (v + e_ - 1) / e_;
    Element y = a;
    for (int i = 0; i < k * e_ - v; ++i)
        y = mul_pi(y);
    // v_L(y) >= k e forces every coordinate to be divisible by p^k
    for (int i = 0; i < e_; ++i)
        y[i] = base_.div_p_pow(y[i], k);
    return y;
}

UnramifiedRing::Element RamifiedRing::residue(Element const& a) const
{
    return base_.residue(a[0]);
}

namespace {

using LPoly = std::vector<RamifiedRing::Element>;

/* Horner over the residue field: value and derivative at beta */
std::pair<UnramifiedRing::Element, UnramifiedRing::Element> eval_residue(
    UnramifiedRing const& base, std::vector<UnramifiedRing::Element> const& coeffs, UnramifiedRing::Element const& beta)
{
    auto value = base.zero(), deriv = base.zero();
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        deriv = base.residue(base.add(base.mul(deriv, beta), value));
        value = base.residue(base.add(base.mul(value, beta), coeffs[i]));
    }
    return {value, deriv};
}

int count_rec(RamifiedRing const& field, LPoly a, int digits, bool stop_at_first)
{
    int const e = field.e();
    auto const& base = field.base();
    if (digits <= 0)
        throw precision_exhausted("root counting ran out of p-adic precision");
    int const cap = e * digits;
    int content = cap;
    for (auto const& c : a)
        content = std::min(content, field.valuation(c));
    if (content >= cap)
        throw precision_exhausted("polynomial vanishes at the working precision");
    if (content > 0) {
        for (auto& c : a)
            c = field.div_pi_pow(c, content);
        digits -= (content + e - 1) / e;
        if (digits <= 0)
            throw precision_exhausted("root counting ran out of p-adic precision");
    }

    std::vector<UnramifiedRing::Element> reduced;
    for (auto const& c : a)
        reduced.push_back(field.residue(c));
    while (!reduced.empty() && base.is_zero(reduced.back()))
        reduced.pop_back();
    if (reduced.size() <= 1)
        return 0;

    int count = 0;
    for (long idx = 0; idx < base.q(); ++idx) {
        auto const beta = base.residue_element(idx);
        auto [value, deriv] = eval_residue(base, reduced, beta);
        if (!base.is_zero(value))
            continue;
        if (!base.is_zero(deriv)) {
            ++count;  // simple root: Hensel lifts it uniquely
        } else {
            // roots congruent to beta: substitute x -> beta + pi x
            LPoly shifted = a;
            int n = static_cast<int>(shifted.size()) - 1;
            for (int i = 0; i < n; ++i)
                for (int j = n - 1; j >= i; --j)
                    shifted[j] = field.add(shifted[j], field.mul_base(shifted[j + 1], beta));
            for (int i = 1; i <= n; ++i)
                for (int k = 0; k < i; ++k)
                    shifted[i] = field.mul_pi(shifted[i]);
            count += count_rec(field, std::move(shifted), digits, stop_at_first);
        }
        if (stop_at_first && count > 0)
            return count;
    }
    return count;
}

}  // namespace

int count_roots(RamifiedRing const& field, ZqPoly const& poly, bool stop_at_first)
{
    LPoly a;
    for (auto const& c : poly)
        a.push_back(field.embed(c));
    return count_rec(field, std::move(a), field.precision(), stop_at_first);
}

int count_roots_adaptive(EisensteinPoly const& field_poly, BasePoly const& poly, int start, bool stop_at_first)
{
    for (int n = std::max(start, 1);; n *= 2) {
        std::optional<UnramifiedRing> base;
        try {
            base.emplace(field_poly.p, field_poly.f, n);
        } catch (precision_exhausted const&) {
            throw precision_exhausted("root count undetermined at every representable precision");
        }
        RamifiedRing field(*base, field_poly);
        try {
            return count_roots(field, to_ring_poly(*base, poly), stop_at_first);
        } catch (precision_exhausted const&) {
            continue;
        }
    }
}

}  // namespace wildmass::padic
